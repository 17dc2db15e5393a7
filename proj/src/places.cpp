#include "massey/places.hpp"

namespace massey {

namespace {

int parity(Int x) {
    x %= 2;
    return x == 0 ? 0 : 1;
}

// (u-1)/2 mod 2 for odd u (possibly negative).
int eps2(const Int& u) { return parity(((u - 1) / 2 % 2 + 2)); }

// (u^2-1)/8 mod 2 for odd u.
int omega2(const Int& u) { return parity((u * u - 1) / 8); }

}  // namespace

std::set<Place> relevant_places(const std::vector<Int>& values) {
    std::set<Place> out{Place::real_place(), Place::prime(2)};
    for (const Int& v : values) {
        if (v == 0 || !is_squarefree(v))
            throw std::domain_error("relevant_places: inputs must be nonzero squarefree");
        for (const auto& f : factorize(v)) {
            if (f.prime != 2) out.insert(Place::prime(f.prime));
        }
    }
    return out;
}

int hilbert_symbol(const Int& a, const Int& b, const Place& nu) {
    if (a == 0 || b == 0) throw std::domain_error("hilbert_symbol: zero input");
    if (nu.real) return (a < 0 && b < 0) ? -1 : 1;

    const Int& p = nu.p;
    if (p == 2) {
        int alpha = 0, beta = 0;
        Int u = a, v = b;
        if (u % 2 == 0) {
            alpha = 1;
            u /= 2;
        }
        if (v % 2 == 0) {
            beta = 1;
            v /= 2;
        }
        const int e = eps2(u) * eps2(v) + alpha * omega2(v) + beta * omega2(u);
        return e % 2 == 0 ? 1 : -1;
    }

    // Odd p, squarefree inputs: valuations are 0 or 1.
    int alpha = 0, beta = 0;
    Int u = a, v = b;
    if (u % p == 0) {
        alpha = 1;
        u /= p;
    }
    if (v % p == 0) {
        beta = 1;
        v /= p;
    }
    int sign = 1;
    if (alpha && beta && parity((p - 1) / 2)) sign = -sign;
    if (beta) sign *= legendre(u, p);
    if (alpha) sign *= legendre(v, p);
    return sign;
}

std::pair<bool, SymbolTable> cup_vanishes_globally(const Int& a, const Int& b) {
    SymbolTable table;
    table.places = relevant_places({a, b});
    bool all_plus = true;
    for (const Place& nu : table.places) {
        const int s = hilbert_symbol(a, b, nu);
        table.entries[nu] = s;
        if (s != 1) all_plus = false;
    }
    return {all_plus, table};
}

std::optional<ConicPoint> conic_point(const Int& a, const Int& b, long height) {
    for (long v = 0; v <= height; ++v) {
        for (long w = 0; w <= height; ++w) {
            if (v == 0 && w == 0) continue;
            const Int t = a * v * v + b * w * w;
            if (t < 0) continue;
            const auto u = exact_isqrt(t);
            if (!u || *u > height) continue;
            if (gcd(gcd(Int(v), Int(w)), *u) != 1) continue;
            return ConicPoint{*u, Int(v), Int(w)};
        }
    }
    return std::nullopt;
}

}  // namespace massey
