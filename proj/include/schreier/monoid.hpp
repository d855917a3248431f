#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "schreier/errors.hpp"

namespace schreier {

// Elements of a finite monoid are dense indices 0..order-1.
using Elem = std::uint32_t;
inline constexpr Elem kNoElem = std::numeric_limits<Elem>::max();

// Upper bound on the order of any monoid the library constructs.
std::size_t size_limit();
void set_size_limit(std::size_t bound);

class ScopedSizeLimit {
public:
    explicit ScopedSizeLimit(std::size_t bound) : saved_(size_limit()) { set_size_limit(bound); }
    ~ScopedSizeLimit() { set_size_limit(saved_); }
    ScopedSizeLimit(const ScopedSizeLimit&) = delete;
    ScopedSizeLimit& operator=(const ScopedSizeLimit&) = delete;

private:
    std::size_t saved_;
};

void check_size(std::size_t requested, const char* what);

/// A monoid given by its Cayley table. Row index is the left factor.
///
/// Instances are only obtained through make_monoid(), which audits the
/// identity and associativity laws, so every FiniteMonoid is valid.
class FiniteMonoid {
public:
    std::size_t order() const noexcept { return order_; }
    Elem identity() const noexcept { return identity_; }
    Elem mul(Elem x, Elem y) const noexcept { return table_[std::size_t(x) * order_ + y]; }
    std::span<const Elem> row(Elem x) const noexcept {
        return {table_.data() + std::size_t(x) * order_, order_};
    }
    const std::vector<Elem>& flat_table() const noexcept { return table_; }

    bool is_unit(Elem x) const noexcept { return inverse_[x] != kNoElem; }
    /// Two-sided inverse, or kNoElem.
    Elem inverse(Elem x) const noexcept { return inverse_[x]; }
    const std::vector<Elem>& unit_elements() const noexcept { return units_; }
    bool is_group() const noexcept { return units_.size() == order_; }
    bool is_commutative() const noexcept { return commutative_; }

    bool has_names() const noexcept { return !names_.empty(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::string name(Elem x) const;

    /// Structural equality: same order, identity and table. Names are ignored.
    friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
        return a.order_ == b.order_ && a.identity_ == b.identity_ && a.table_ == b.table_;
    }

private:
    friend std::shared_ptr<const FiniteMonoid> make_monoid_flat(std::size_t, std::vector<Elem>, Elem,
                                                                std::vector<std::string>);
    FiniteMonoid() = default;

    std::size_t order_ = 0;
    Elem identity_ = 0;
    std::vector<Elem> table_;
    std::vector<std::string> names_;
    std::vector<Elem> inverse_;
    std::vector<Elem> units_;
    bool commutative_ = false;
};

using MonoidPtr = std::shared_ptr<const FiniteMonoid>;

/// Validates and builds a monoid. Throws Error{Shape, BadIdentity, NotAssociative}
/// or SizeLimitError.
MonoidPtr make_monoid(const std::vector<std::vector<Elem>>& table, Elem identity,
                      std::vector<std::string> names = {});
MonoidPtr make_monoid_flat(std::size_t order, std::vector<Elem> table, Elem identity,
                           std::vector<std::string> names = {});

bool same_monoid(const MonoidPtr& a, const MonoidPtr& b);

/// Element-indexed map between two monoids, audited to be a homomorphism.
class MonoidHom {
public:
    /// Throws Error{Shape} or Error{NotHomomorphism} with an (x,y) witness.
    MonoidHom(MonoidPtr source, MonoidPtr target, std::vector<Elem> map);

    const MonoidPtr& source() const noexcept { return source_; }
    const MonoidPtr& target() const noexcept { return target_; }
    const std::vector<Elem>& map() const noexcept { return map_; }
    Elem operator()(Elem x) const noexcept { return map_[x]; }

    bool is_injective() const;
    bool is_surjective() const;
    bool is_bijective() const { return is_injective() && is_surjective(); }

    friend bool operator==(const MonoidHom& a, const MonoidHom& b) {
        return a.map_ == b.map_ && same_monoid(a.source_, b.source_) &&
               same_monoid(a.target_, b.target_);
    }

private:
    MonoidPtr source_;
    MonoidPtr target_;
    std::vector<Elem> map_;
};

/// Returns a description of the first violated homomorphism law, if any.
std::optional<std::string> audit_hom(const FiniteMonoid& source, const FiniteMonoid& target,
                                     std::span<const Elem> map);

MonoidHom identity_hom(const MonoidPtr& m);
MonoidHom trivial_hom(const MonoidPtr& source, const MonoidPtr& target);
/// g after f. Throws Error{Composability} when f.target differs from g.source.
MonoidHom compose(const MonoidHom& g, const MonoidHom& f);

struct Submonoid {
    MonoidPtr parent;
    std::vector<Elem> elements; // sorted

    bool contains(Elem x) const;
    std::size_t size() const noexcept { return elements.size(); }
};

/// A submonoid re-indexed as a monoid of its own, with the embedding back.
struct MaterializedSubmonoid {
    MonoidPtr monoid;
    std::vector<Elem> to_parent;   // local index -> parent index
    std::vector<Elem> from_parent; // parent index -> local index or kNoElem
};

MaterializedSubmonoid materialize(const Submonoid& sub);

Submonoid units(const MonoidPtr& m);
Submonoid kernel(const MonoidHom& sigma);
Submonoid image(const MonoidHom& sigma);
Submonoid generated_submonoid(const MonoidPtr& m, std::span<const Elem> generators);

struct ProductMonoid {
    MonoidPtr monoid;
    MonoidHom first;  // (a,b) -> a
    MonoidHom second; // (a,b) -> b
    std::size_t right_order = 0;

    Elem encode(Elem a, Elem b) const noexcept { return Elem(a * right_order + b); }
    std::pair<Elem, Elem> decode(Elem x) const noexcept {
        return {Elem(x / right_order), Elem(x % right_order)};
    }
};

/// Componentwise product with (a,b) encoded as a*|N|+b.
ProductMonoid product_monoid(const MonoidPtr& left, const MonoidPtr& right);

struct ProductHom {
    ProductMonoid source;
    ProductMonoid target;
    MonoidHom hom;
};

/// sigma1 x sigma2 : M1 x M2 -> N1 x N2.
ProductHom product_hom(const MonoidHom& sigma1, const MonoidHom& sigma2);

struct PullbackMonoid {
    MonoidPtr monoid;
    MonoidHom to_first;  // P -> K
    MonoidHom to_second; // P -> N
    std::vector<std::pair<Elem, Elem>> pairs;
};

/// The submonoid {(k,n) : sigma1(k) = tau1(n)} of K x N.
PullbackMonoid pullback(const MonoidHom& sigma1, const MonoidHom& tau1);

MonoidPtr opposite(const MonoidPtr& m);
/// The same map viewed between opposite monoids.
MonoidHom opposite_hom(const MonoidHom& sigma);

/// Greedy small generating set: repeatedly adds the element that enlarges the
/// generated submonoid most, ties broken by least index.
std::vector<Elem> greedy_generating_set(const FiniteMonoid& m);

/// Lexicographically least isomorphism in generator-image order, if any.
std::optional<MonoidHom> find_isomorphism(const MonoidPtr& m, const MonoidPtr& n);
/// Every isomorphism m -> n, sorted by map.
std::vector<MonoidHom> all_isomorphisms(const MonoidPtr& m, const MonoidPtr& n);
/// Automorphisms of m as permutations, sorted.
std::vector<std::vector<Elem>> automorphisms(const MonoidPtr& m);

/// (index, period) of the cyclic submonoid generated by x.
std::pair<std::size_t, std::size_t> index_and_period(const FiniteMonoid& m, Elem x);

} // namespace schreier
