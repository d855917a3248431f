#pragma once

#include <cstddef>

#include "schreier/monoid.hpp"

namespace schreier {

/// Cyclic group of order k >= 1, elements t^i.
MonoidPtr cyclic_group(std::size_t k);
/// <t | t^(k+n) = t^k>, order k+n, n >= 1.
MonoidPtr cyclic_monoid(std::size_t k, std::size_t n);
/// {1, x, y, xy} with x^2 = y^2 = 1.
MonoidPtr klein4();
/// Quaternion group, elements 1,-1,i,-i,j,-j,k,-k in that order.
MonoidPtr q8();
/// {0..k} under addition capped at k.
MonoidPtr truncated_add(std::size_t k);
/// All self-maps of {0..n-1}, n <= 3, with (fg)(i) = g(f(i)).
MonoidPtr full_transformation(std::size_t n);
/// {1, e} with e^2 = e.
MonoidPtr semilattice2();

/// C(k,n) -> C_n, t^i -> t^(i mod n).
MonoidHom cyclic_reduction(std::size_t k, std::size_t n);

} // namespace schreier
