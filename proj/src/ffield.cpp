#include "massey/ffield.hpp"

#include "massey/masseyq.hpp"  // norm_form_eval

#include <array>

namespace massey {

namespace {

bool small_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

FqField::FqField(long p, int degree) : p_(p), k_(degree) {
    if (!small_prime(p)) throw std::domain_error("FqField: p must be prime");
    if (p == 2) throw std::domain_error("FqField: characteristic 2 is not supported");
    if (degree != 1 && degree != 2) throw std::domain_error("FqField: degree must be 1 or 2");
    q_ = degree == 1 ? p : p * p;
    if (degree == 2) {
        std::vector<char> sq(p, 0);
        for (long z = 1; z < p; ++z) sq[z * z % p] = 1;
        for (long d = 2; d < p; ++d) {
            if (!sq[d]) {
                d_ = d;
                break;
            }
        }
    }
}

FqField::Elem FqField::from_int(long v) const {
    v %= p_;
    if (v < 0) v += p_;
    return static_cast<Elem>(v);
}

FqField::Elem FqField::add(Elem a, Elem b) const {
    const long a0 = a % p_, a1 = a / p_, b0 = b % p_, b1 = b / p_;
    return static_cast<Elem>((a0 + b0) % p_ + (a1 + b1) % p_ * p_);
}

FqField::Elem FqField::neg(Elem a) const {
    const long a0 = a % p_, a1 = a / p_;
    return static_cast<Elem>((p_ - a0) % p_ + (p_ - a1) % p_ * p_);
}

FqField::Elem FqField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FqField::Elem FqField::mul(Elem a, Elem b) const {
    const long a0 = a % p_, a1 = a / p_, b0 = b % p_, b1 = b / p_;
    if (k_ == 1) return static_cast<Elem>(a0 * b0 % p_);
    // (a0 + a1 t)(b0 + b1 t) with t^2 = d
    const long c0 = (a0 * b0 + a1 * b1 % p_ * d_) % p_;
    const long c1 = (a0 * b1 + a1 * b0) % p_;
    return static_cast<Elem>(c0 + c1 * p_);
}

FqField::Elem FqField::pow(Elem a, long e) const {
    Elem r = one(), base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FqField::Elem FqField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("FqField: inverse of zero");
    return pow(a, q_ - 2);
}

bool FqField::is_square(Elem a) const {
    if (a == 0) return true;
    return pow(a, (q_ - 1) / 2) == one();
}

std::string FqField::str(Elem a) const {
    if (k_ == 1) return std::to_string(a);
    return std::to_string(a % p_) + "+" + std::to_string(a / p_) + "t";
}

std::vector<FqField::Elem> FqField::elements() const {
    std::vector<Elem> out(q_);
    for (long i = 0; i < q_; ++i) out[i] = static_cast<Elem>(i);
    return out;
}

std::vector<FqField::Elem> FqField::units() const {
    std::vector<Elem> out;
    out.reserve(q_ - 1);
    for (long i = 1; i < q_; ++i) {
        const Elem e = static_cast<Elem>(i);
        if (k_ == 1 || e != 0) out.push_back(e);
    }
    return out;
}

std::set<FqField::Elem> norm_image_direct(const FqField& F, FqField::Elem a, FqField::Elem c) {
    if (a == 0 || c == 0) throw std::domain_error("norm_image_direct: a, c must be units");
    const long q = F.q();
    if (q * q * q * q > 400'000'000L)
        throw std::domain_error("norm_image_direct: q too large for exhaustive enumeration");
    std::set<FqField::Elem> image;
    const FqScalar sa{&F, a}, sc{&F, c};
    for (long y1 = 0; y1 < q; ++y1) {
        for (long y2 = 0; y2 < q; ++y2) {
            for (long y3 = 0; y3 < q; ++y3) {
                for (long y4 = 0; y4 < q; ++y4) {
                    if (y1 == 0 && y2 == 0 && y3 == 0 && y4 == 0) continue;
                    const std::array<FqScalar, 4> y{
                        FqScalar{&F, static_cast<FqField::Elem>(y1)},
                        FqScalar{&F, static_cast<FqField::Elem>(y2)},
                        FqScalar{&F, static_cast<FqField::Elem>(y3)},
                        FqScalar{&F, static_cast<FqField::Elem>(y4)}};
                    const FqScalar n = norm_form_eval<FqScalar>(y, sa, sc);
                    if (n.v != 0) image.insert(n.v);
                }
            }
        }
    }
    return image;
}

std::set<FqField::Elem> norm_image_via_residue_field(const FqField& F, FqField::Elem a,
                                                     FqField::Elem c) {
    if (a == 0 || c == 0)
        throw std::domain_error("norm_image_via_residue_field: a, c must be units");
    std::set<FqField::Elem> image;
    if (F.is_square(a) && F.is_square(c)) {
        // Degree 1: the norm is the identity and the image is all of F*.
        for (const auto u : F.units()) image.insert(u);
        return image;
    }
    // Degree 2: F(mu) = F[s]/(s^2 - d) for any nonsquare d; pick a or c.
    const FqField::Elem d = !F.is_square(a) ? a : c;
    const long q = F.q();
    for (long u = 0; u < q; ++u) {
        for (long v = 0; v < q; ++v) {
            if (u == 0 && v == 0) continue;
            // N(u + v s) = u^2 - d v^2
            const auto uu = F.mul(static_cast<FqField::Elem>(u), static_cast<FqField::Elem>(u));
            const auto vv = F.mul(static_cast<FqField::Elem>(v), static_cast<FqField::Elem>(v));
            const auto n = F.sub(uu, F.mul(d, vv));
            if (n != 0) image.insert(n);
        }
    }
    return image;
}


namespace {

// Multiset of N(y) values over all y in F^4, indexed by element encoding.
std::vector<long> norm_counts(const FqField& F, FqField::Elem a, FqField::Elem c) {
    const long q = F.q();
    std::vector<long> counts(q, 0);
    const FqScalar sa{&F, a}, sc{&F, c};
    for (long y1 = 0; y1 < q; ++y1) {
        for (long y2 = 0; y2 < q; ++y2) {
            for (long y3 = 0; y3 < q; ++y3) {
                for (long y4 = 0; y4 < q; ++y4) {
                    const std::array<FqScalar, 4> y{
                        FqScalar{&F, static_cast<FqField::Elem>(y1)},
                        FqScalar{&F, static_cast<FqField::Elem>(y2)},
                        FqScalar{&F, static_cast<FqField::Elem>(y3)},
                        FqScalar{&F, static_cast<FqField::Elem>(y4)}};
                    ++counts[norm_form_eval<FqScalar>(y, sa, sc).v];
                }
            }
        }
    }
    return counts;
}

std::pair<bool, long> point_count_from_norms(const FqField& F, const std::vector<long>& counts,
                                             FqField::Elem b) {
    const FqField::Elem binv = F.inv(b);
    long count = 0;
    for (long v = 1; v < F.q(); ++v) {
        if (counts[v] == 0) continue;
        const FqField::Elem xx = F.mul(static_cast<FqField::Elem>(v), binv);
        if (xx == 0 || !F.is_square(xx)) continue;
        count += 2 * counts[v];  // two square roots, q odd
    }
    return {count > 0, count};
}

}  // namespace

std::pair<bool, long> x_has_point(const FqField& F, FqField::Elem a, FqField::Elem b,
                                  FqField::Elem c) {
    if (a == 0 || b == 0 || c == 0) throw std::domain_error("x_has_point: a, b, c must be units");
    const long q = F.q();
    if (q * q * q * q > 400'000'000L)
        throw std::domain_error("x_has_point: q too large for exhaustive enumeration");
    return point_count_from_norms(F, norm_counts(F, a, c), b);
}

SweepReport sweep(const FqField& F) {
    SweepReport report;
    report.q = F.q();
    if (F.q() > 13)
        throw std::domain_error("sweep: full triple sweep is limited to q <= 13");
    const auto units = F.units();
    for (const auto a : units) {
        for (const auto c : units) {
            ++report.pairs_checked;
            const auto direct = norm_image_direct(F, a, c);
            const auto via = norm_image_via_residue_field(F, a, c);
            if (direct != via) {
                report.norm_images_agree = false;
                report.counterexamples.push_back("norm image mismatch at a=" + F.str(a) +
                                                 " c=" + F.str(c));
            }
            const auto counts = norm_counts(F, a, c);
            for (const auto b : units) {
                ++report.triples_checked;
                if (!point_count_from_norms(F, counts, b).first) {
                    report.all_triples_have_points = false;
                    report.counterexamples.push_back("no point at a=" + F.str(a) + " b=" +
                                                     F.str(b) + " c=" + F.str(c));
                }
            }
        }
    }
    return report;
}

}  // namespace massey
