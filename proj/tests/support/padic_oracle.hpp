#pragma once

#include "massey/arith.hpp"
#include "massey/places.hpp"

namespace massey::testsupport {

/// Independent brute-force Hilbert symbol: searches primitive zeros of
/// a x^2 + b y^2 - z^2 modulo p^k (k = 3 for odd p, k = 6 for p = 2) and
/// accepts only solutions with a Hensel-liftable (nonsingular) coordinate,
/// i.e. some partial derivative of valuation v with k > 2v. Singular-only
/// configurations escalate one power of p before giving up.
/// Real place: -1 iff both a and b are negative.
int oracle_hilbert(const Int& a, const Int& b, const Place& nu);

}  // namespace massey::testsupport
