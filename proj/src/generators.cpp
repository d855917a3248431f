#include "schreier/generators.hpp"

#include <string>

namespace schreier {

namespace {

std::string power_name(std::size_t i) {
    if (i == 0) return "1";
    if (i == 1) return "t";
    return "t^" + std::to_string(i);
}

std::vector<std::string> power_names(std::size_t order) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < order; ++i) names.push_back(power_name(i));
    return names;
}

} // namespace

MonoidPtr cyclic_group(std::size_t k) { return cyclic_monoid(0, k); }

MonoidPtr cyclic_monoid(std::size_t k, std::size_t n) {
    if (n == 0) throw Error(ErrorKind::Shape, "cyclic monoid needs period >= 1");
    const std::size_t order = k + n;
    check_size(order, "cyclic monoid");
    std::vector<Elem> table(order * order);
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) {
            const std::size_t s = i + j;
            table[i * order + j] = Elem(s < order ? s : k + (s - k) % n);
        }
    }
    return make_monoid_flat(order, std::move(table), 0, power_names(order));
}

MonoidPtr klein4() {
    return make_monoid({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, 0, {"1", "x", "y", "xy"});
}

MonoidPtr q8() {
    // index = 2*u + s: u in {1,i,j,k}, s = 1 for a minus sign
    static constexpr int unit_mul[4][4][2] = {
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
        {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
        {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
        {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
    };
    std::vector<Elem> table(64);
    for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
            const auto& r = unit_mul[x / 2][y / 2];
            table[x * 8 + y] = Elem(2 * r[0] + ((x % 2) ^ (y % 2) ^ r[1]));
        }
    }
    return make_monoid_flat(8, std::move(table), 0, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

MonoidPtr truncated_add(std::size_t k) {
    const std::size_t order = k + 1;
    check_size(order, "truncated addition");
    std::vector<Elem> table(order * order);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < order; ++i) {
        names.push_back(std::to_string(i));
        for (std::size_t j = 0; j < order; ++j) table[i * order + j] = Elem(std::min(i + j, k));
    }
    return make_monoid_flat(order, std::move(table), 0, std::move(names));
}

MonoidPtr full_transformation(std::size_t n) {
    if (n == 0 || n > 3) throw Error(ErrorKind::Shape, "full transformation monoid supported for 1 <= n <= 3");
    std::size_t order = 1;
    for (std::size_t i = 0; i < n; ++i) order *= n;
    // f encoded as sum f(i) n^i; name lists the images.
    auto image = [&](std::size_t f, std::size_t i) {
        for (std::size_t s = 0; s < i; ++s) f /= n;
        return f % n;
    };
    std::vector<Elem> table(order * order);
    std::vector<std::string> names;
    Elem identity = 0;
    for (std::size_t f = 0; f < order; ++f) {
        std::string name = "[";
        bool is_id = true;
        for (std::size_t i = 0; i < n; ++i) {
            name += std::to_string(image(f, i));
            is_id = is_id && image(f, i) == i;
        }
        names.push_back(name + "]");
        if (is_id) identity = Elem(f);
        for (std::size_t g = 0; g < order; ++g) {
            std::size_t h = 0, scale = 1;
            for (std::size_t i = 0; i < n; ++i, scale *= n) h += image(g, image(f, i)) * scale;
            table[f * order + g] = Elem(h);
        }
    }
    return make_monoid_flat(order, std::move(table), identity, std::move(names));
}

MonoidPtr semilattice2() { return make_monoid({{0, 1}, {1, 1}}, 0, {"1", "e"}); }

MonoidHom cyclic_reduction(std::size_t k, std::size_t n) {
    auto src = cyclic_monoid(k, n);
    std::vector<Elem> map(src->order());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = Elem(i % n);
    return MonoidHom(src, cyclic_group(n), std::move(map));
}

} // namespace schreier
