#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace massey {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a cofactor survives trial division and Pollard rho gives up.
/// The caller gets a loud failure, never a wrong square class.
struct UnfactoredError : std::runtime_error {
    explicit UnfactoredError(const std::string& what) : std::runtime_error(what) {}
};

/// Builds num/den in lowest terms with positive denominator.
Rational make_rational(const Int& num, const Int& den);

struct Factor {
    Int prime;
    unsigned exponent;
};

/// Factorization of |n| for n != 0, primes ascending.
/// Trial division up to 10^6, then Miller-Rabin + Pollard-Brent rho.
std::vector<Factor> factorize(Int n);

bool is_probable_prime(const Int& n);

/// Squarefree representative of v modulo squares, carrying the sign of v,
/// together with the square cofactor: rep * cofactor_square == v exactly.
struct SquareClass {
    Int rep;
    Rational cofactor_square;
};

SquareClass square_class(const Rational& v);

/// Legendre symbol (a/p) for odd prime p, via Euler's criterion.
int legendre(Int a, const Int& p);

/// Exact integer square root when v is a perfect square, nullopt otherwise.
std::optional<Int> exact_isqrt(const Int& v);

/// Nonnegative rational square root when v is a square in Q.
std::optional<Rational> exact_sqrt(const Rational& v);

bool is_squarefree(const Int& n);

}  // namespace massey
