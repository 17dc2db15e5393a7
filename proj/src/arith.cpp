#include "massey/arith.hpp"

#include <algorithm>
#include <map>

namespace massey {

namespace {

using boost::multiprecision::powm;

constexpr long kTrialBound = 1'000'000;
constexpr unsigned long kRhoIterationCap = 50'000'000;

Int positive_mod(Int a, const Int& m) {
    a %= m;
    if (a < 0) a += m;
    return a;
}

bool miller_rabin_witness(const Int& n, const Int& base, const Int& d, unsigned r) {
    Int x = powm(base % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

Int pollard_brent(const Int& n) {
    // Brent's cycle variant; n odd composite, not a prime power of a small prime.
    Int x0 = 2, c = 1;
    unsigned long spent = 0;
    while (true) {
        Int x = x0, y = x0, d = 1;
        Int q = 1;
        const unsigned long m = 128;
        unsigned long r = 1;
        auto f = [&](const Int& v) { return (v * v + c) % n; };
        Int ys = y;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                const unsigned long limit = std::min(m, r - k);
                for (unsigned long i = 0; i < limit; ++i) {
                    y = f(y);
                    q = (q * abs(x - y)) % n;
                }
                d = gcd(q, n);
                k += m;
                spent += limit;
                if (spent > kRhoIterationCap)
                    throw UnfactoredError("factorization gave up on " + n.str());
            }
            r *= 2;
        }
        if (d == n) {
            // Backtrack for the lost factor.
            do {
                ys = f(ys);
                d = gcd(abs(x - ys), n);
            } while (d == 1);
        }
        if (d != n) return d;
        c += 1;
        x0 += 1;
    }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    const Int d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Int n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    // Deterministic for n < 3.3 * 10^24 with this base set.
    for (int base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (miller_rabin_witness(n, base, d, r)) return false;
    }
    return true;
}

std::vector<Factor> factorize(Int n) {
    if (n == 0) throw std::domain_error("factorize(0)");
    if (n < 0) n = -n;
    std::map<Int, unsigned> found;
    for (long p = 2; p <= kTrialBound && Int(p) * p <= n; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) {
            found[Int(p)] += 1;
            n /= p;
        }
    }
    if (n > 1) factor_into(n, found);
    std::vector<Factor> result;
    result.reserve(found.size());
    for (const auto& [p, e] : found) result.push_back({p, e});
    return result;
}

SquareClass square_class(const Rational& v) {
    if (v == 0) throw std::domain_error("square_class(0)");
    const Int m = numerator(v) * denominator(v);  // same square class as v
    Int rep = m < 0 ? Int(-1) : Int(1);
    for (const auto& [p, e] : factorize(m)) {
        if (e % 2 == 1) rep *= p;
    }
    SquareClass sc;
    sc.rep = rep;
    sc.cofactor_square = v / Rational(rep);
    return sc;
}

int legendre(Int a, const Int& p) {
    if (p == 2 || p < 2 || !is_probable_prime(p))
        throw std::domain_error("legendre: modulus must be an odd prime");
    a = positive_mod(a, p);
    if (a == 0) return 0;
    const Int r = powm(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

std::optional<Int> exact_isqrt(const Int& v) {
    if (v < 0) return std::nullopt;
    const Int r = sqrt(v);
    if (r * r == v) return r;
    return std::nullopt;
}

std::optional<Rational> exact_sqrt(const Rational& v) {
    if (v < 0) return std::nullopt;
    const auto rn = exact_isqrt(numerator(v));
    if (!rn) return std::nullopt;
    const auto rd = exact_isqrt(denominator(v));
    if (!rd) return std::nullopt;
    return Rational(*rn, *rd);
}

bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    for (const auto& f : factorize(n)) {
        if (f.exponent > 1) return false;
    }
    return true;
}

}  // namespace massey
