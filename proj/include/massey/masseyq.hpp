#pragma once

#include "massey/arith.hpp"
#include "massey/places.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace massey {

/// Reduced inputs: squarefree nonzero square-class representatives.
struct SquareClassTriple {
    Int a, b, c;
};

SquareClassTriple reduce_triple(const Rational& a, const Rational& b, const Rational& c);

/// The quartic norm form
///   (y1^2 - a y2^2 + c y3^2 - ac y4^2)^2 - c (2 y1 y3 - 2 a y2 y4)^2,
/// generic over any exact commutative ring with 2 invertible.
template <class R>
R norm_form_eval(const std::array<R, 4>& y, const R& a, const R& c) {
    const R q = y[0] * y[0] - a * y[1] * y[1] + c * y[2] * y[2] - a * c * y[3] * y[3];
    const R t = y[0] * y[2] - a * y[1] * y[3];
    const R r = t + t;
    return q * q - c * r * r;
}

/// Certificate of a rational point: b x^2 = N(y) exactly, x != 0, N(y) != 0.
struct NormFormPoint {
    Rational x;
    std::array<Rational, 4> y;
};

struct LocalVerdict {
    Place place;
    int symbol_ab = 1;
    int symbol_bc = 1;
    bool solvable() const { return symbol_ab == 1 && symbol_bc == 1; }
};

struct ObstructionWitness {
    Place place;
    std::string pair;  // "(a,b)" or "(b,c)"
};

struct MasseyVerdict {
    bool defined = false;
    bool vanishes = false;
    std::vector<ObstructionWitness> obstruction_witnesses;
    std::vector<LocalVerdict> local_table;
    std::optional<NormFormPoint> certificate;
};

LocalVerdict massey_defined_local(const SquareClassTriple& t, const Place& nu);

/// The decision pipeline over Q: local symbols at the relevant places decide
/// definedness, and defined instances vanish. Certificates come from bounded
/// search only and never influence the verdict.
MasseyVerdict decide_massey_q(const SquareClassTriple& t, long certificate_height = 200,
                              long budget_ms = 0);

/// Shell search for integer y with b N(y) a nonzero square, |y_i| <= height.
/// Signs are normalized (y1, y2, y3 >= 0); within the first successful shell
/// the minimum under the key (max|y|, |y4|, |y3|, |y2|, |y1|) is returned.
/// budget_ms > 0 caps wall time, checked between shells (results for the
/// shells actually searched stay deterministic).
std::optional<NormFormPoint> certify_point(const SquareClassTriple& t, long height,
                                           long budget_ms = 0);

/// Independent good-reduction check: does X(a,b,c) have a Z_p-point, decided by
/// F_p enumeration with a gradient (Hensel) check. Requires odd p, p not
/// dividing abc.
bool local_point_oracle(const SquareClassTriple& t, const Int& p);

struct IntegralSearchReport {
    bool found = false;
    std::optional<NormFormPoint> point;
    long height = 0;
    unsigned long long candidates = 0;
    // A miss is never a nonexistence proof.
    bool conclusive = false;
};

/// Bounded enumeration of S-integral candidate points; demo only.
IntegralSearchReport integral_search_demo(const SquareClassTriple& t,
                                          const std::vector<Int>& s_primes, long height);

}  // namespace massey
