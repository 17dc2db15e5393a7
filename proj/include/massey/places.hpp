#pragma once

#include "massey/arith.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace massey {

/// A place of Q: the real place or a finite prime.
struct Place {
    bool real = false;
    Int p = 0;

    static Place real_place() { return Place{true, 0}; }
    static Place prime(Int q) { return Place{false, std::move(q)}; }

    friend bool operator==(const Place& a, const Place& b) {
        return a.real == b.real && a.p == b.p;
    }
    friend bool operator<(const Place& a, const Place& b) {
        if (a.real != b.real) return a.real;  // real place sorts first
        return a.p < b.p;
    }
    std::string str() const { return real ? "inf" : p.str(); }
};

/// Hilbert symbols of a fixed pair (a,b) at every place of the finite
/// supporting set; +1 implied everywhere else.
struct SymbolTable {
    std::set<Place> places;
    std::map<Place, int> entries;

    int product() const {
        int r = 1;
        for (const auto& [pl, s] : entries) r *= s;
        return r;
    }
};

/// {real, 2} together with every odd prime dividing one of the inputs.
/// Inputs must already be squarefree.
std::set<Place> relevant_places(const std::vector<Int>& values);

/// (a,b)_nu for squarefree nonzero a, b, by the closed-form formulas.
int hilbert_symbol(const Int& a, const Int& b, const Place& nu);

/// True iff every relevant symbol is +1; the table is returned as witness.
std::pair<bool, SymbolTable> cup_vanishes_globally(const Int& a, const Int& b);

struct ConicPoint {
    Int u, v, w;  // a v^2 + b w^2 = u^2
};

/// Bounded box search for a primitive nonneg solution of a v^2 + b w^2 = u^2,
/// all coordinates <= H. Preference order: lexicographic in (v, w).
/// Absence only means "not found at this height".
std::optional<ConicPoint> conic_point(const Int& a, const Int& b, long height);

}  // namespace massey
