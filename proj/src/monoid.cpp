#include "schreier/monoid.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <set>
#include <sstream>
#include <tuple>

namespace schreier {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Shape: return "ShapeError";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::BadIdentity: return "BadIdentity";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::Composability: return "ComposabilityError";
    case ErrorKind::Triangle: return "TriangleError";
    case ErrorKind::NotPrefibration: return "NotPrefibration";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::InvalidLaxHom: return "InvalidLaxHom";
    case ErrorKind::InvalidCell: return "InvalidCell";
    case ErrorKind::NotAnAction: return "NotAnAction";
    case ErrorKind::InvalidCleavage: return "InvalidCleavage";
    case ErrorKind::NotKernelPreserving: return "NotKernelPreserving";
    case ErrorKind::NotCartesian: return "NotCartesian";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotRegularSchreier: return "NotRegularSchreier";
    case ErrorKind::Parse: return "ParseError";
    }
    return "Error";
}

namespace {

std::atomic<std::size_t> g_size_limit{4096};

} // namespace

std::size_t size_limit() { return g_size_limit.load(); }

void set_size_limit(std::size_t bound) { g_size_limit.store(bound); }

void check_size(std::size_t requested, const char* what) {
    const auto bound = size_limit();
    if (requested > bound) {
        std::ostringstream os;
        os << what << ": order " << requested << " exceeds size limit " << bound;
        throw SizeLimitError(requested, bound, os.str());
    }
}

std::string FiniteMonoid::name(Elem x) const {
    if (!names_.empty()) return names_[x];
    return std::to_string(x);
}

MonoidPtr make_monoid(const std::vector<std::vector<Elem>>& table, Elem identity,
                      std::vector<std::string> names) {
    const std::size_t n = table.size();
    std::vector<Elem> flat;
    flat.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        if (table[r].size() != n) {
            throw Error(ErrorKind::Shape, "table row " + std::to_string(r) + " has length " +
                                              std::to_string(table[r].size()) + ", expected " +
                                              std::to_string(n));
        }
        flat.insert(flat.end(), table[r].begin(), table[r].end());
    }
    return make_monoid_flat(n, std::move(flat), identity, std::move(names));
}

MonoidPtr make_monoid_flat(std::size_t n, std::vector<Elem> table, Elem identity,
                           std::vector<std::string> names) {
    if (n == 0) throw Error(ErrorKind::Shape, "monoid must have at least one element");
    check_size(n, "make_monoid");
    if (table.size() != n * n) throw Error(ErrorKind::Shape, "table is not square");
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] >= n) {
            throw Error(ErrorKind::Shape, "table entry (" + std::to_string(i / n) + "," +
                                              std::to_string(i % n) + ") out of range");
        }
    }
    if (identity >= n) throw Error(ErrorKind::Shape, "identity index out of range");
    if (!names.empty()) {
        if (names.size() != n) throw Error(ErrorKind::Shape, "names length differs from order");
        std::set<std::string> distinct(names.begin(), names.end());
        if (distinct.size() != n) throw Error(ErrorKind::Shape, "names are not distinct");
    }

    auto at = [&](Elem x, Elem y) { return table[std::size_t(x) * n + y]; };
    for (Elem x = 0; x < n; ++x) {
        if (at(identity, x) != x || at(x, identity) != x) {
            throw Error(ErrorKind::BadIdentity,
                        "identity " + std::to_string(identity) + " fails on x=" + std::to_string(x));
        }
    }
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            const Elem xy = at(x, y);
            for (Elem z = 0; z < n; ++z) {
                if (at(xy, z) != at(x, at(y, z))) {
                    std::ostringstream os;
                    os << "associativity fails at (x,y,z)=(" << x << "," << y << "," << z << ")";
                    throw Error(ErrorKind::NotAssociative, os.str());
                }
            }
        }
    }

    auto m = std::shared_ptr<FiniteMonoid>(new FiniteMonoid());
    m->order_ = n;
    m->identity_ = identity;
    m->table_ = std::move(table);
    m->names_ = std::move(names);
    m->inverse_.assign(n, kNoElem);
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            if (m->mul(x, y) == identity && m->mul(y, x) == identity) {
                m->inverse_[x] = y;
                m->units_.push_back(x);
                break;
            }
        }
    }
    m->commutative_ = true;
    for (Elem x = 0; x < n && m->commutative_; ++x) {
        for (Elem y = x + 1; y < n; ++y) {
            if (m->mul(x, y) != m->mul(y, x)) {
                m->commutative_ = false;
                break;
            }
        }
    }
    return m;
}

bool same_monoid(const MonoidPtr& a, const MonoidPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

std::optional<std::string> audit_hom(const FiniteMonoid& source, const FiniteMonoid& target,
                                     std::span<const Elem> map) {
    if (map.size() != source.order()) {
        return "map has length " + std::to_string(map.size()) + ", expected " +
               std::to_string(source.order());
    }
    for (Elem x = 0; x < map.size(); ++x) {
        if (map[x] >= target.order()) return "image of " + std::to_string(x) + " out of range";
    }
    if (map[source.identity()] != target.identity()) return "identity not preserved";
    for (Elem x = 0; x < source.order(); ++x) {
        for (Elem y = 0; y < source.order(); ++y) {
            if (map[source.mul(x, y)] != target.mul(map[x], map[y])) {
                return "product not preserved at (x,y)=(" + std::to_string(x) + "," +
                       std::to_string(y) + ")";
            }
        }
    }
    return std::nullopt;
}

MonoidHom::MonoidHom(MonoidPtr source, MonoidPtr target, std::vector<Elem> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (!source_ || !target_) throw Error(ErrorKind::Shape, "homomorphism needs source and target");
    if (auto failure = audit_hom(*source_, *target_, map_)) {
        const bool shape = map_.size() != source_->order() ||
                           std::any_of(map_.begin(), map_.end(),
                                       [&](Elem v) { return v >= target_->order(); });
        throw Error(shape ? ErrorKind::Shape : ErrorKind::NotHomomorphism, *failure);
    }
}

bool MonoidHom::is_injective() const {
    std::vector<char> seen(target_->order(), 0);
    for (Elem v : map_) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool MonoidHom::is_surjective() const {
    std::vector<char> seen(target_->order(), 0);
    for (Elem v : map_) seen[v] = 1;
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

MonoidHom identity_hom(const MonoidPtr& m) {
    std::vector<Elem> map(m->order());
    for (Elem x = 0; x < map.size(); ++x) map[x] = x;
    return MonoidHom(m, m, std::move(map));
}

MonoidHom trivial_hom(const MonoidPtr& source, const MonoidPtr& target) {
    return MonoidHom(source, target, std::vector<Elem>(source->order(), target->identity()));
}

MonoidHom compose(const MonoidHom& g, const MonoidHom& f) {
    if (!same_monoid(f.target(), g.source())) {
        throw Error(ErrorKind::Composability, "target of the inner map differs from source of the outer map");
    }
    std::vector<Elem> map(f.source()->order());
    for (Elem x = 0; x < map.size(); ++x) map[x] = g(f(x));
    return MonoidHom(f.source(), g.target(), std::move(map));
}

bool Submonoid::contains(Elem x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

MaterializedSubmonoid materialize(const Submonoid& sub) {
    const auto& parent = *sub.parent;
    MaterializedSubmonoid out;
    out.to_parent = sub.elements;
    out.from_parent.assign(parent.order(), kNoElem);
    for (Elem i = 0; i < sub.elements.size(); ++i) out.from_parent[sub.elements[i]] = i;
    const std::size_t k = sub.elements.size();
    std::vector<Elem> table(k * k);
    for (Elem i = 0; i < k; ++i) {
        for (Elem j = 0; j < k; ++j) {
            const Elem p = parent.mul(sub.elements[i], sub.elements[j]);
            if (out.from_parent[p] == kNoElem) {
                throw Error(ErrorKind::Shape, "subset is not closed under the product");
            }
            table[i * k + j] = out.from_parent[p];
        }
    }
    const Elem id = out.from_parent[parent.identity()];
    if (id == kNoElem) throw Error(ErrorKind::Shape, "subset does not contain the identity");
    std::vector<std::string> names;
    if (parent.has_names()) {
        for (Elem e : sub.elements) names.push_back(parent.name(e));
    }
    out.monoid = make_monoid_flat(k, std::move(table), id, std::move(names));
    return out;
}

Submonoid units(const MonoidPtr& m) { return {m, m->unit_elements()}; }

Submonoid kernel(const MonoidHom& sigma) {
    Submonoid out{sigma.source(), {}};
    const Elem one = sigma.target()->identity();
    for (Elem x = 0; x < sigma.source()->order(); ++x) {
        if (sigma(x) == one) out.elements.push_back(x);
    }
    return out;
}

Submonoid image(const MonoidHom& sigma) {
    std::set<Elem> seen(sigma.map().begin(), sigma.map().end());
    return {sigma.target(), std::vector<Elem>(seen.begin(), seen.end())};
}

Submonoid generated_submonoid(const MonoidPtr& m, std::span<const Elem> generators) {
    std::vector<char> in(m->order(), 0);
    std::deque<Elem> queue{m->identity()};
    in[m->identity()] = 1;
    while (!queue.empty()) {
        const Elem e = queue.front();
        queue.pop_front();
        for (Elem g : generators) {
            const Elem t = m->mul(e, g);
            if (!in[t]) {
                in[t] = 1;
                queue.push_back(t);
            }
        }
    }
    Submonoid out{m, {}};
    for (Elem x = 0; x < m->order(); ++x) {
        if (in[x]) out.elements.push_back(x);
    }
    return out;
}

namespace {

std::vector<std::string> pair_names(const FiniteMonoid& a, const FiniteMonoid& b,
                                    const std::vector<std::pair<Elem, Elem>>& pairs) {
    std::vector<std::string> names;
    names.reserve(pairs.size());
    for (auto [x, y] : pairs) names.push_back("(" + a.name(x) + "," + b.name(y) + ")");
    return names;
}

} // namespace

ProductMonoid product_monoid(const MonoidPtr& left, const MonoidPtr& right) {
    const std::size_t nl = left->order();
    const std::size_t nr = right->order();
    check_size(nl * nr, "product_monoid");
    const std::size_t n = nl * nr;
    std::vector<Elem> table(n * n);
    std::vector<std::pair<Elem, Elem>> pairs(n);
    for (Elem x = 0; x < n; ++x) pairs[x] = {Elem(x / nr), Elem(x % nr)};
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            const Elem a = left->mul(pairs[x].first, pairs[y].first);
            const Elem b = right->mul(pairs[x].second, pairs[y].second);
            table[std::size_t(x) * n + y] = Elem(a * nr + b);
        }
    }
    const Elem id = Elem(left->identity() * nr + right->identity());
    auto monoid = make_monoid_flat(n, std::move(table), id, pair_names(*left, *right, pairs));
    std::vector<Elem> first(n), second(n);
    for (Elem x = 0; x < n; ++x) {
        first[x] = pairs[x].first;
        second[x] = pairs[x].second;
    }
    return ProductMonoid{monoid, MonoidHom(monoid, left, std::move(first)),
                         MonoidHom(monoid, right, std::move(second)), nr};
}

ProductHom product_hom(const MonoidHom& sigma1, const MonoidHom& sigma2) {
    auto src = product_monoid(sigma1.source(), sigma2.source());
    auto tgt = product_monoid(sigma1.target(), sigma2.target());
    std::vector<Elem> map(src.monoid->order());
    for (Elem x = 0; x < map.size(); ++x) {
        auto [a, b] = src.decode(x);
        map[x] = tgt.encode(sigma1(a), sigma2(b));
    }
    MonoidHom hom(src.monoid, tgt.monoid, std::move(map));
    return ProductHom{std::move(src), std::move(tgt), std::move(hom)};
}

PullbackMonoid pullback(const MonoidHom& sigma1, const MonoidHom& tau1) {
    if (!same_monoid(sigma1.target(), tau1.target())) {
        throw Error(ErrorKind::Composability, "pullback legs must share a target");
    }
    const auto& k = *sigma1.source();
    const auto& nn = *tau1.source();
    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem a = 0; a < k.order(); ++a) {
        for (Elem b = 0; b < nn.order(); ++b) {
            if (sigma1(a) == tau1(b)) pairs.emplace_back(a, b);
        }
    }
    check_size(pairs.size(), "pullback");
    auto index_of = [&](Elem a, Elem b) {
        auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, b));
        return Elem(it - pairs.begin());
    };
    const std::size_t n = pairs.size();
    std::vector<Elem> table(n * n);
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            table[std::size_t(x) * n + y] = index_of(k.mul(pairs[x].first, pairs[y].first),
                                                     nn.mul(pairs[x].second, pairs[y].second));
        }
    }
    const Elem id = index_of(k.identity(), nn.identity());
    auto monoid = make_monoid_flat(n, std::move(table), id, pair_names(k, nn, pairs));
    std::vector<Elem> first(n), second(n);
    for (Elem x = 0; x < n; ++x) {
        first[x] = pairs[x].first;
        second[x] = pairs[x].second;
    }
    return PullbackMonoid{monoid, MonoidHom(monoid, sigma1.source(), std::move(first)),
                          MonoidHom(monoid, tau1.source(), std::move(second)), std::move(pairs)};
}

MonoidPtr opposite(const MonoidPtr& m) {
    const std::size_t n = m->order();
    std::vector<Elem> table(n * n);
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) table[std::size_t(x) * n + y] = m->mul(y, x);
    }
    return make_monoid_flat(n, std::move(table), m->identity(), m->names());
}

MonoidHom opposite_hom(const MonoidHom& sigma) {
    return MonoidHom(opposite(sigma.source()), opposite(sigma.target()), sigma.map());
}

std::pair<std::size_t, std::size_t> index_and_period(const FiniteMonoid& m, Elem x) {
    std::vector<std::size_t> first_seen(m.order(), 0); // power exponent, 0 = unseen
    Elem p = x;
    for (std::size_t k = 1;; ++k) {
        if (first_seen[p] != 0) return {first_seen[p], k - first_seen[p]};
        first_seen[p] = k;
        p = m.mul(p, x);
    }
}

std::vector<Elem> greedy_generating_set(const FiniteMonoid& m) {
    // generated_submonoid wants a MonoidPtr; use a non-owning alias.
    MonoidPtr alias(std::shared_ptr<const FiniteMonoid>{}, &m);
    std::vector<Elem> gens;
    auto current = generated_submonoid(alias, gens);
    while (current.size() < m.order()) {
        Elem best = kNoElem;
        std::size_t best_size = 0;
        for (Elem x = 0; x < m.order(); ++x) {
            if (current.contains(x)) continue;
            gens.push_back(x);
            const auto size = generated_submonoid(alias, gens).size();
            gens.pop_back();
            if (size > best_size) {
                best = x;
                best_size = size;
            }
        }
        gens.push_back(best);
        current = generated_submonoid(alias, gens);
    }
    return gens;
}

namespace {

// Isomorphism invariants used to prune generator images.
struct Signature {
    std::size_t index = 0;
    std::size_t period = 0;
    bool unit = false;
    std::size_t centralizer = 0;
    std::size_t left_ideal = 0;
    std::size_t right_ideal = 0;

    auto tie() const { return std::tie(index, period, unit, centralizer, left_ideal, right_ideal); }
    friend bool operator==(const Signature& a, const Signature& b) { return a.tie() == b.tie(); }
    friend bool operator<(const Signature& a, const Signature& b) { return a.tie() < b.tie(); }
};

std::vector<Signature> signatures(const FiniteMonoid& m) {
    const std::size_t n = m.order();
    std::vector<Signature> out(n);
    for (Elem x = 0; x < n; ++x) {
        auto& s = out[x];
        std::tie(s.index, s.period) = index_and_period(m, x);
        s.unit = m.is_unit(x);
        std::vector<char> left(n, 0), right(n, 0);
        for (Elem y = 0; y < n; ++y) {
            if (m.mul(x, y) == m.mul(y, x)) ++s.centralizer;
            left[m.mul(y, x)] = 1;
            right[m.mul(x, y)] = 1;
        }
        s.left_ideal = std::size_t(std::count(left.begin(), left.end(), 1));
        s.right_ideal = std::size_t(std::count(right.begin(), right.end(), 1));
    }
    return out;
}

class IsoSearch {
public:
    IsoSearch(const FiniteMonoid& m, const FiniteMonoid& n, bool first_only)
        : m_(m), n_(n), first_only_(first_only) {}

    std::vector<std::vector<Elem>> run() {
        if (m_.order() != n_.order()) return {};
        const auto sm = signatures(m_);
        const auto sn = signatures(n_);
        auto sorted_m = sm, sorted_n = sn;
        std::sort(sorted_m.begin(), sorted_m.end());
        std::sort(sorted_n.begin(), sorted_n.end());
        if (!(sorted_m == sorted_n)) return {};

        gens_ = greedy_generating_set(m_);
        candidates_.resize(gens_.size());
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            for (Elem y = 0; y < n_.order(); ++y) {
                if (sn[y] == sm[gens_[i]]) candidates_[i].push_back(y);
            }
        }
        images_.assign(gens_.size(), kNoElem);
        std::vector<Elem> map(m_.order(), kNoElem);
        std::vector<char> used(n_.order(), 0);
        map[m_.identity()] = n_.identity();
        used[n_.identity()] = 1;
        search(0, map, used);
        return std::move(found_);
    }

private:
    bool close(std::size_t assigned, std::vector<Elem>& map, std::vector<char>& used) const {
        std::deque<Elem> queue;
        for (Elem x = 0; x < m_.order(); ++x) {
            if (map[x] != kNoElem) queue.push_back(x);
        }
        while (!queue.empty()) {
            const Elem e = queue.front();
            queue.pop_front();
            for (std::size_t j = 0; j < assigned; ++j) {
                const Elem t = m_.mul(e, gens_[j]);
                const Elem img = n_.mul(map[e], images_[j]);
                if (map[t] == kNoElem) {
                    if (used[img]) return false;
                    map[t] = img;
                    used[img] = 1;
                    queue.push_back(t);
                } else if (map[t] != img) {
                    return false;
                }
            }
        }
        return true;
    }

    void search(std::size_t depth, const std::vector<Elem>& map, const std::vector<char>& used) {
        if (first_only_ && !found_.empty()) return;
        if (depth == gens_.size()) {
            if (std::find(map.begin(), map.end(), kNoElem) == map.end()) found_.push_back(map);
            return;
        }
        for (Elem c : candidates_[depth]) {
            images_[depth] = c;
            auto next_map = map;
            auto next_used = used;
            if (close(depth + 1, next_map, next_used)) search(depth + 1, next_map, next_used);
            if (first_only_ && !found_.empty()) return;
        }
        images_[depth] = kNoElem;
    }

    const FiniteMonoid& m_;
    const FiniteMonoid& n_;
    bool first_only_;
    std::vector<Elem> gens_;
    std::vector<std::vector<Elem>> candidates_;
    std::vector<Elem> images_;
    std::vector<std::vector<Elem>> found_;
};

} // namespace

std::optional<MonoidHom> find_isomorphism(const MonoidPtr& m, const MonoidPtr& n) {
    auto maps = IsoSearch(*m, *n, true).run();
    if (maps.empty()) return std::nullopt;
    return MonoidHom(m, n, std::move(maps.front()));
}

std::vector<MonoidHom> all_isomorphisms(const MonoidPtr& m, const MonoidPtr& n) {
    auto maps = IsoSearch(*m, *n, false).run();
    std::sort(maps.begin(), maps.end());
    std::vector<MonoidHom> out;
    out.reserve(maps.size());
    for (auto& map : maps) out.emplace_back(m, n, std::move(map));
    return out;
}

std::vector<std::vector<Elem>> automorphisms(const MonoidPtr& m) {
    auto maps = IsoSearch(*m, *m, false).run();
    std::sort(maps.begin(), maps.end());
    for (const auto& map : maps) {
        if (auto failure = audit_hom(*m, *m, map)) {
            throw Error(ErrorKind::NotHomomorphism, "automorphism search produced a non-homomorphism: " + *failure);
        }
    }
    return maps;
}

} // namespace schreier
