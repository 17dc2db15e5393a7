#pragma once

#include "massey/arith.hpp"
#include "massey/groupcoh.hpp"  // U4Element

#include <array>
#include <map>
#include <set>
#include <string>

namespace massey {

/// Exact sparse multivariate Laurent polynomial with rational coefficients.
/// Monomials are variable -> exponent maps (exponents may be negative, never
/// zero); terms are kept in graded-lex order, so equality is map equality.
class SparsePoly {
  public:
    using Monomial = std::map<std::string, int>;

    struct GradedLex {
        bool operator()(const Monomial& a, const Monomial& b) const;
    };

    using TermMap = std::map<Monomial, Rational, GradedLex>;

    SparsePoly() = default;
    static SparsePoly constant(const Rational& c);
    static SparsePoly var(const std::string& name, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::set<std::string> variables() const;

    SparsePoly operator-() const;
    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    SparsePoly pow(int e) const;  // e < 0 requires a single-term polynomial
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.terms_ == b.terms_;
    }

    /// Replaces each mapped variable by its polynomial. A negative power of a
    /// replaced variable requires a one-term (invertible) replacement.
    SparsePoly substitute(const std::map<std::string, SparsePoly>& repl) const;

    /// As above, but the result may only mention the allowed variables.
    SparsePoly substitute(const std::map<std::string, SparsePoly>& repl,
                          const std::set<std::string>& allowed) const;

    /// Multiplies by the minimal monomial that makes every exponent
    /// nonnegative (the clearing monomial is computed from the terms).
    SparsePoly cleared() const;

    std::string str() const;

  private:
    void add_term(const Monomial& m, const Rational& c);
    TermMap terms_;
};

/// Signed permutation matrix: entries in {-1,0,1}, one nonzero per row/column.
struct RepMatrix {
    std::array<std::array<int, 4>, 4> m{};

    static RepMatrix identity();
    friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b);
    friend bool operator==(const RepMatrix&, const RepMatrix&) = default;
    RepMatrix transpose() const;
    bool is_signed_permutation() const;
    bool is_diagonal(const std::array<int, 4>& eigenvalues) const;
    bool is_permutation_with_signs(const std::array<int, 4>& images) const;  // col j -> row
    std::string str() const;
};

/// Matrix of g on V = Ind(sigma_14) in the basis u1..u4, computed from the
/// signed coset permutation on {H, E12 H, E13 H, E12 E13 H} followed by the
/// base change u1 = e1+e3, u2 = e1-e3, u3 = e2+e4, u4 = e2-e4.
RepMatrix rep_matrix(const U4Element& g);

struct InducedRep {
    RepMatrix e12, e23, e34, e13, e24, e14;
};

InducedRep build_induced_rep();

/// Product expansion of the quartic norm form: prod_{i,j} (y1 +- y_a alpha +-
/// y_g gamma +- y_ag alpha gamma) equals the compact two-square form.
bool verify_norm_expansion(bool mutate = false);

/// Quotient coordinates: b x^2 = N(y) under x = 16 u1 u2 u3 u4 / beta,
/// y = (d1, d2/alpha, d3/gamma, d4/(alpha gamma)), (a,b,c) = (alpha^2, beta^2,
/// gamma^2), verified as a Laurent identity, denominators cleared.
bool verify_quotient_identity(bool mutate = false);

/// The denominator-free core of the quotient identity:
/// 256 (u1 u2 u3 u4)^2 = (d1^2 - d2^2 + d3^2 - d4^2)^2 - (2 d1 d3 - 2 d2 d4)^2.
bool verify_quotient_core_identity();

/// The four diagonal/permutation claims for the induced representation.
bool verify_eigen_properties(bool mutate = false);

/// Every nontrivial g in U4 moves one of alpha, beta, gamma, u1*..u4*.
/// The mutation drops the dual coordinates and must fail (E13 survives).
bool verify_free_action(bool mutate = false);

/// N(y y') = N(y) N(y') in the rank-4 algebra with alpha^2 = a, gamma^2 = c.
bool verify_norm_multiplicativity(bool mutate = false);

}  // namespace massey
