#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace massey {

/// F_q for q = p or p^2, p an odd prime. The quadratic case is
/// F_p[t]/(t^2 - d) with d the least nonsquare mod p.
class FqField {
  public:
    // Element encoding: c0 + c1*t as c0 + c1*p, in [0, q).
    using Elem = int;

    FqField(long p, int degree);

    long p() const { return p_; }
    int degree() const { return k_; }
    long q() const { return q_; }
    long nonsquare() const { return d_; }  // modulus t^2 - d when degree 2

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long v) const;
    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem mul(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, long e) const;
    bool is_square(Elem a) const;  // includes 0

    std::string str(Elem a) const;

    /// All q elements, 0 first.
    std::vector<Elem> elements() const;
    std::vector<Elem> units() const;

  private:
    long p_;
    int k_;
    long q_;
    long d_ = 0;
};

/// Wrapper giving norm_form_eval a ring-like scalar over an FqField.
struct FqScalar {
    const FqField* field;
    FqField::Elem v;
    FqScalar operator+(const FqScalar& o) const { return {field, field->add(v, o.v)}; }
    FqScalar operator-(const FqScalar& o) const { return {field, field->sub(v, o.v)}; }
    FqScalar operator*(const FqScalar& o) const { return {field, field->mul(v, o.v)}; }
};

/// { N(y) : y in F^4 - {0} } intersected with F*.
std::set<FqField::Elem> norm_image_direct(const FqField& F, FqField::Elem a, FqField::Elem c);

/// Same set computed through the residue field F(mu) = F[sqrt a, sqrt c]:
/// degree 1 when a and c are both squares (image is all of F*), otherwise the
/// quadratic extension with its norm enumerated directly.
std::set<FqField::Elem> norm_image_via_residue_field(const FqField& F, FqField::Elem a,
                                                     FqField::Elem c);

/// Point existence and count for b x^2 = N(y), x != 0, over F_q.
std::pair<bool, long> x_has_point(const FqField& F, FqField::Elem a, FqField::Elem b,
                                  FqField::Elem c);

struct SweepReport {
    long q = 0;
    long pairs_checked = 0;
    long triples_checked = 0;
    bool norm_images_agree = true;
    bool all_triples_have_points = true;
    std::vector<std::string> counterexamples;
    bool pass() const { return norm_images_agree && all_triples_have_points; }
};

/// Full sweep over all (a,c) pairs and (a,b,c) triples of units.
SweepReport sweep(const FqField& F);

}  // namespace massey
