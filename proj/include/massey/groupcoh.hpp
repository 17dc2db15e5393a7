#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace massey {

/// Bit-packed F2 vector; the workhorse for 2- and 3-cochains and for the
/// Gaussian eliminations below.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }
    BitVec& operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    bool zero() const {
        for (const auto w : w_) {
            if (w) return false;
        }
        return true;
    }
    int leading_bit() const {  // index of first set bit, -1 if zero
        for (std::size_t i = 0; i < w_.size(); ++i) {
            if (w_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(w_[i]));
        }
        return -1;
    }
    friend bool operator==(const BitVec&, const BitVec&) = default;
    friend bool operator<(const BitVec& a, const BitVec& b) { return a.w_ < b.w_; }

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Multiplication-table group, identity at index 0, validated on load.
class FiniteGroup {
  public:
    static constexpr int kMaxOrder = 64;

    FiniteGroup(int n, std::vector<int> table, std::vector<int> generators);

    /// File format: line 1 order, line 2 generator indices, then n rows of the
    /// multiplication table.
    static FiniteGroup parse(std::istream& in);

    static FiniteGroup cyclic(int m);
    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
    static FiniteGroup dihedral8();    // D4, order 8
    static FiniteGroup quaternion8();  // Q8

    int order() const { return n_; }
    int mul(int g, int h) const { return table_[g * n_ + h]; }
    int inverse(int g) const { return inverse_[g]; }
    const std::vector<int>& generators() const { return generators_; }

    void serialize(std::ostream& out) const;

  private:
    int n_;
    std::vector<int> table_;
    std::vector<int> generators_;
    std::vector<int> inverse_;
};

/// 1-cochain: bit g = value at group element g (order <= 64).
using Cochain1 = std::uint64_t;

/// 2-cochain: bit g*n+h = value at the ordered pair (g,h).
using Cochain2 = BitVec;

Cochain2 d1(Cochain1 f, const FiniteGroup& G);
BitVec d2(const Cochain2& F, const FiniteGroup& G);  // 3-cochain, bit (g*n+h)*n+k
Cochain2 cup(Cochain1 f, Cochain1 g, const FiniteGroup& G);

bool is_homomorphism(Cochain1 f, const FiniteGroup& G);

/// Solves d1 f = F by bit-packed Gaussian elimination; the seed permutes the
/// pivot order (the solution may change, classes never do).
std::optional<Cochain1> h2_class_is_zero(const Cochain2& F, const FiniteGroup& G,
                                         unsigned seed = 0);

/// Basis of Z^1(G) = Hom(G, Z/2) as bit masks.
std::vector<Cochain1> z1_basis(const FiniteGroup& G);

/// All homomorphisms G -> Z/2 (the span of z1_basis).
std::vector<Cochain1> all_characters(const FiniteGroup& G);

/// Reduced row-echelon basis of the coboundary space image(d1) in C^2.
std::vector<Cochain2> coboundary_basis(const FiniteGroup& G);

/// Canonical representative of [F] in H^2: F reduced against a coboundary
/// basis. Two cocycles are cohomologous iff their reductions are equal.
Cochain2 h2_canonical(const Cochain2& F, const FiniteGroup& G);

enum class MasseyStatus { Undefined, ContainsZero, NonVanishing };

std::string to_string(MasseyStatus s);

struct MasseyResult {
    MasseyStatus status = MasseyStatus::Undefined;
    Cochain2 base_class;                     // E_ab u c + a u E_bc (when defined)
    std::vector<Cochain2> indeterminacy_basis;  // independent H^2 classes
    std::optional<Cochain1> witness_ab, witness_bc;
    /// Filled by brute_force_massey: canonical H^2 class of every defining system.
    std::vector<Cochain2> value_set;
};

/// Triple Massey product of three characters via one defining system plus the
/// indeterminacy ideal.
MasseyResult triple_massey(const FiniteGroup& G, Cochain1 a, Cochain1 b, Cochain1 c,
                           unsigned seed = 0);

/// Enumerates every defining system (|G| <= 8) and collects the value set.
MasseyResult brute_force_massey(const FiniteGroup& G, Cochain1 a, Cochain1 b, Cochain1 c);

/// Unipotent upper-triangular 4x4 matrix over F2, by its strict entries.
struct U4Element {
    unsigned a12 : 1 = 0, a13 : 1 = 0, a14 : 1 = 0, a23 : 1 = 0, a24 : 1 = 0, a34 : 1 = 0;

    friend U4Element operator*(const U4Element& x, const U4Element& y) {
        U4Element r;
        r.a12 = x.a12 ^ y.a12;
        r.a23 = x.a23 ^ y.a23;
        r.a34 = x.a34 ^ y.a34;
        r.a13 = x.a13 ^ y.a13 ^ (x.a12 & y.a23);
        r.a24 = x.a24 ^ y.a24 ^ (x.a23 & y.a34);
        r.a14 = x.a14 ^ y.a14 ^ (x.a12 & y.a24) ^ (x.a13 & y.a34);
        return r;
    }
    friend bool operator==(const U4Element&, const U4Element&) = default;

    U4Element inverse() const;
    int order() const;
    int index() const {  // 0..63
        return a12 | (a13 << 1) | (a14 << 2) | (a23 << 3) | (a24 << 4) | (a34 << 5);
    }
    static U4Element from_index(int i) {
        U4Element e;
        e.a12 = i & 1;
        e.a13 = (i >> 1) & 1;
        e.a14 = (i >> 2) & 1;
        e.a23 = (i >> 3) & 1;
        e.a24 = (i >> 4) & 1;
        e.a34 = (i >> 5) & 1;
        return e;
    }
    static std::vector<U4Element> all();
};

/// Dwyer criterion: a homomorphism G -> U4 whose superdiagonal characters are
/// (a, b, c), found by generator-wise enumeration, or nullopt.
std::optional<std::vector<U4Element>> u4_lift_exists(const FiniteGroup& G, Cochain1 a,
                                                     Cochain1 b, Cochain1 c);

}  // namespace massey
