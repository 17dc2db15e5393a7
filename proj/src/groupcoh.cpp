#include "massey/groupcoh.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace massey {

namespace {

void check_character(Cochain1 f, const FiniteGroup& G, const char* who) {
    if (!is_homomorphism(f, G))
        throw std::domain_error(std::string(who) + ": input character is not a homomorphism");
}

// Linear system over F2 with <= 64 unknowns: rows are (mask, rhs).
struct F2System {
    int cols;
    std::vector<std::pair<std::uint64_t, int>> pivots;  // reduced rows, pivot = perm-first bit
    std::vector<int> pivot_col;                         // parallel to pivots
    std::vector<int> priority;                          // column elimination order
    bool consistent = true;

    F2System(int n, unsigned seed) : cols(n), priority(n) {
        std::iota(priority.begin(), priority.end(), 0);
        if (seed != 0) {
            std::mt19937 rng(seed);
            std::shuffle(priority.begin(), priority.end(), rng);
        }
    }

    int choose_pivot(std::uint64_t mask) const {
        int best = -1;
        for (const int col : priority) {
            if ((mask >> col) & 1) return col;
        }
        return best;
    }

    void add_row(std::uint64_t mask, int rhs) {
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if ((mask >> pivot_col[i]) & 1) {
                mask ^= pivots[i].first;
                rhs ^= pivots[i].second;
            }
        }
        if (mask == 0) {
            if (rhs) consistent = false;
            return;
        }
        const int col = choose_pivot(mask);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if ((pivots[i].first >> col) & 1) {
                pivots[i].first ^= mask;
                pivots[i].second ^= rhs;
            }
        }
        pivots.emplace_back(mask, rhs);
        pivot_col.push_back(col);
    }

    // Particular solution with free variables zero.
    std::uint64_t solution() const {
        std::uint64_t f = 0;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (pivots[i].second) f |= std::uint64_t(1) << pivot_col[i];
        }
        return f;
    }

    // Kernel basis (rhs ignored): one vector per free column.
    std::vector<std::uint64_t> kernel() const {
        std::vector<bool> is_pivot(cols, false);
        for (const int c : pivot_col) is_pivot[c] = true;
        std::vector<std::uint64_t> basis;
        for (int free = 0; free < cols; ++free) {
            if (is_pivot[free]) continue;
            std::uint64_t v = std::uint64_t(1) << free;
            for (std::size_t i = 0; i < pivots.size(); ++i) {
                if ((pivots[i].first >> free) & 1) v |= std::uint64_t(1) << pivot_col[i];
            }
            basis.push_back(v);
        }
        return basis;
    }
};

F2System d1_system(const FiniteGroup& G, const Cochain2* rhs, unsigned seed) {
    const int n = G.order();
    F2System sys(n, seed);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            const std::uint64_t mask = (std::uint64_t(1) << g) ^ (std::uint64_t(1) << h) ^
                                       (std::uint64_t(1) << G.mul(g, h));
            sys.add_row(mask, rhs ? rhs->get(std::size_t(g) * n + h) : 0);
        }
    }
    return sys;
}

// Echelon basis over BitVec with canonical (fully reduced) rows.
struct BitBasis {
    std::vector<Cochain2> rows;  // sorted by leading bit

    // Reduces v against the basis; returns the residue.
    Cochain2 reduce(Cochain2 v) const {
        for (const auto& r : rows) {
            const int lb = r.leading_bit();
            if (v.get(std::size_t(lb))) v ^= r;
        }
        return v;
    }

    // Inserts if independent; returns true when the vector was new.
    bool insert(const Cochain2& v) {
        Cochain2 r = reduce(v);
        if (r.zero()) return false;
        const int lb = r.leading_bit();
        for (auto& row : rows) {
            if (row.get(std::size_t(lb))) row ^= r;
        }
        rows.push_back(r);
        std::sort(rows.begin(), rows.end(),
                  [](const Cochain2& a, const Cochain2& b) { return a.leading_bit() < b.leading_bit(); });
        return true;
    }
};

BitBasis coboundary_bit_basis(const FiniteGroup& G) {
    BitBasis basis;
    for (int g = 0; g < G.order(); ++g) basis.insert(d1(std::uint64_t(1) << g, G));
    return basis;
}

}  // namespace

FiniteGroup::FiniteGroup(int n, std::vector<int> table, std::vector<int> generators)
    : n_(n), table_(std::move(table)), generators_(std::move(generators)) {
    if (n < 1 || n > kMaxOrder) throw std::domain_error("FiniteGroup: order must be in [1, 64]");
    if (static_cast<int>(table_.size()) != n * n)
        throw std::domain_error("FiniteGroup: table size mismatch");
    for (const int v : table_) {
        if (v < 0 || v >= n) throw std::domain_error("FiniteGroup: table entry out of range");
    }
    for (int g = 0; g < n; ++g) {
        if (mul(0, g) != g || mul(g, 0) != g)
            throw std::domain_error("FiniteGroup: index 0 is not an identity");
    }
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            for (int k = 0; k < n; ++k) {
                if (mul(mul(g, h), k) != mul(g, mul(h, k)))
                    throw std::domain_error("FiniteGroup: table is not associative");
            }
        }
    }
    inverse_.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            if (mul(g, h) == 0 && mul(h, g) == 0) {
                inverse_[g] = h;
                break;
            }
        }
        if (inverse_[g] < 0) throw std::domain_error("FiniteGroup: missing inverse");
    }
    for (const int s : generators_) {
        if (s < 0 || s >= n) throw std::domain_error("FiniteGroup: generator out of range");
    }
    // Closure of the generating set must be the whole group.
    std::vector<bool> seen(n, false);
    seen[0] = true;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int g = stack.back();
        stack.pop_back();
        for (const int s : generators_) {
            const int h = mul(g, s);
            if (!seen[h]) {
                seen[h] = true;
                stack.push_back(h);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw std::domain_error("FiniteGroup: generating set does not generate");
}

FiniteGroup FiniteGroup::parse(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw std::domain_error("group file: missing order");
    if (n < 1 || n > kMaxOrder) throw std::domain_error("group file: bad order");
    std::string line;
    std::getline(in, line);
    if (!std::getline(in, line)) throw std::domain_error("group file: missing generator line");
    std::vector<int> gens;
    {
        std::istringstream ls(line);
        int s;
        while (ls >> s) gens.push_back(s);
    }
    std::vector<int> table(std::size_t(n) * n);
    for (auto& v : table) {
        if (!(in >> v)) throw std::domain_error("group file: truncated table");
    }
    return FiniteGroup(n, std::move(table), std::move(gens));
}

void FiniteGroup::serialize(std::ostream& out) const {
    out << n_ << "\n";
    for (std::size_t i = 0; i < generators_.size(); ++i)
        out << generators_[i] << (i + 1 < generators_.size() ? " " : "");
    out << "\n";
    for (int g = 0; g < n_; ++g) {
        for (int h = 0; h < n_; ++h) out << mul(g, h) << (h + 1 < n_ ? " " : "");
        out << "\n";
    }
}

FiniteGroup FiniteGroup::cyclic(int m) {
    std::vector<int> table(std::size_t(m) * m);
    for (int g = 0; g < m; ++g) {
        for (int h = 0; h < m; ++h) table[g * m + h] = (g + h) % m;
    }
    std::vector<int> gens;
    if (m > 1) gens.push_back(1);
    return FiniteGroup(m, std::move(table), std::move(gens));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const int n1 = g.order(), n2 = h.order(), n = n1 * n2;
    if (n > kMaxOrder) throw std::domain_error("direct_product: order exceeds 64");
    auto idx = [&](int x, int y) { return x * n2 + y; };
    std::vector<int> table(std::size_t(n) * n);
    for (int x1 = 0; x1 < n1; ++x1) {
        for (int y1 = 0; y1 < n2; ++y1) {
            for (int x2 = 0; x2 < n1; ++x2) {
                for (int y2 = 0; y2 < n2; ++y2) {
                    table[idx(x1, y1) * n + idx(x2, y2)] = idx(g.mul(x1, x2), h.mul(y1, y2));
                }
            }
        }
    }
    std::vector<int> gens;
    for (const int s : g.generators()) gens.push_back(idx(s, 0));
    for (const int s : h.generators()) gens.push_back(idx(0, s));
    return FiniteGroup(n, std::move(table), std::move(gens));
}

FiniteGroup FiniteGroup::dihedral8() {
    // Elements r^i s^j, index i + 4 j.
    auto idx = [](int i, int j) { return ((i % 4 + 4) % 4) + 4 * (j & 1); };
    std::vector<int> table(64);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 4; ++k) {
                for (int l = 0; l < 2; ++l) {
                    const int i2 = j ? i - k : i + k;
                    table[idx(i, j) * 8 + idx(k, l)] = idx(i2, j ^ l);
                }
            }
        }
    }
    return FiniteGroup(8, std::move(table), {idx(1, 0), idx(0, 1)});
}

FiniteGroup FiniteGroup::quaternion8() {
    // Index = basis + 4*sign, basis 0:1, 1:i, 2:j, 3:k.
    auto mulq = [](int a, int b) {
        const int ba = a & 3, bb = b & 3;
        int sign = ((a >> 2) ^ (b >> 2)) & 1;
        int basis;
        if (ba == 0) {
            basis = bb;
        } else if (bb == 0) {
            basis = ba;
        } else if (ba == bb) {
            basis = 0;
            sign ^= 1;  // i^2 = j^2 = k^2 = -1
        } else {
            basis = ba ^ bb;                       // i j = k cyclically
            if ((ba == 2 && bb == 1) || (ba == 1 && bb == 3) || (ba == 3 && bb == 2))
                sign ^= 1;                          // anti-cyclic order picks up -1
        }
        return basis + 4 * sign;
    };
    std::vector<int> table(64);
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) table[a * 8 + b] = mulq(a, b);
    }
    return FiniteGroup(8, std::move(table), {1, 2});  // i and j
}

Cochain2 d1(Cochain1 f, const FiniteGroup& G) {
    const int n = G.order();
    Cochain2 out(std::size_t(n) * n);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            const int v = ((f >> g) ^ (f >> h) ^ (f >> G.mul(g, h))) & 1;
            if (v) out.set(std::size_t(g) * n + h, true);
        }
    }
    return out;
}

BitVec d2(const Cochain2& F, const FiniteGroup& G) {
    const int n = G.order();
    BitVec out(std::size_t(n) * n * n);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            for (int k = 0; k < n; ++k) {
                const bool v = F.get(std::size_t(h) * n + k) ^
                               F.get(std::size_t(G.mul(g, h)) * n + k) ^
                               F.get(std::size_t(g) * n + G.mul(h, k)) ^
                               F.get(std::size_t(g) * n + h);
                if (v) out.set((std::size_t(g) * n + h) * n + k, true);
            }
        }
    }
    return out;
}

Cochain2 cup(Cochain1 f, Cochain1 g, const FiniteGroup& G) {
    const int n = G.order();
    Cochain2 out(std::size_t(n) * n);
    for (int g1 = 0; g1 < n; ++g1) {
        if (!((f >> g1) & 1)) continue;
        for (int g2 = 0; g2 < n; ++g2) {
            if ((g >> g2) & 1) out.set(std::size_t(g1) * n + g2, true);
        }
    }
    return out;
}

bool is_homomorphism(Cochain1 f, const FiniteGroup& G) {
    if (G.order() < 64 && (f >> G.order()) != 0) return false;
    return d1(f, G).zero();
}

std::optional<Cochain1> h2_class_is_zero(const Cochain2& F, const FiniteGroup& G, unsigned seed) {
    if (!d2(F, G).zero()) throw std::domain_error("h2_class_is_zero: input is not a 2-cocycle");
    const F2System sys = d1_system(G, &F, seed);
    if (!sys.consistent) return std::nullopt;
    return sys.solution();
}

std::vector<Cochain1> z1_basis(const FiniteGroup& G) {
    return d1_system(G, nullptr, 0).kernel();
}

std::vector<Cochain1> all_characters(const FiniteGroup& G) {
    const auto basis = z1_basis(G);
    std::vector<Cochain1> out;
    out.reserve(std::size_t(1) << basis.size());
    for (std::size_t m = 0; m < (std::size_t(1) << basis.size()); ++m) {
        Cochain1 f = 0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if ((m >> i) & 1) f ^= basis[i];
        }
        out.push_back(f);
    }
    return out;
}

std::vector<Cochain2> coboundary_basis(const FiniteGroup& G) {
    return coboundary_bit_basis(G).rows;
}

Cochain2 h2_canonical(const Cochain2& F, const FiniteGroup& G) {
    return coboundary_bit_basis(G).reduce(F);
}

std::string to_string(MasseyStatus s) {
    switch (s) {
        case MasseyStatus::Undefined:
            return "undefined";
        case MasseyStatus::ContainsZero:
            return "containsZero";
        case MasseyStatus::NonVanishing:
            return "nonvanishing";
    }
    return "?";
}

MasseyResult triple_massey(const FiniteGroup& G, Cochain1 a, Cochain1 b, Cochain1 c,
                           unsigned seed) {
    check_character(a, G, "triple_massey");
    check_character(b, G, "triple_massey");
    check_character(c, G, "triple_massey");
    MasseyResult result;
    const auto e_ab = h2_class_is_zero(cup(a, b, G), G, seed);
    const auto e_bc = h2_class_is_zero(cup(b, c, G), G, seed ? seed + 1 : 0);
    if (!e_ab || !e_bc) {
        result.status = MasseyStatus::Undefined;
        return result;
    }
    result.witness_ab = *e_ab;
    result.witness_bc = *e_bc;
    const Cochain2 base = cup(*e_ab, c, G) ^ cup(a, *e_bc, G);
    const BitBasis cobound = coboundary_bit_basis(G);
    result.base_class = cobound.reduce(base);

    BitBasis indet;
    for (const Cochain1 z : z1_basis(G)) {
        for (const Cochain2& v : {cup(a, z, G), cup(z, c, G)}) {
            const Cochain2 cls = cobound.reduce(v);
            if (indet.insert(cls)) result.indeterminacy_basis.push_back(cls);
        }
    }
    result.status = indet.reduce(result.base_class).zero() ? MasseyStatus::ContainsZero
                                                           : MasseyStatus::NonVanishing;
    return result;
}

MasseyResult brute_force_massey(const FiniteGroup& G, Cochain1 a, Cochain1 b, Cochain1 c) {
    if (G.order() > 8) throw std::domain_error("brute_force_massey: |G| <= 8 required");
    check_character(a, G, "brute_force_massey");
    check_character(b, G, "brute_force_massey");
    check_character(c, G, "brute_force_massey");
    MasseyResult result;
    const auto e_ab = h2_class_is_zero(cup(a, b, G), G);
    const auto e_bc = h2_class_is_zero(cup(b, c, G), G);
    if (!e_ab || !e_bc) {
        result.status = MasseyStatus::Undefined;
        return result;
    }
    // Every defining system pair is a Z^1-translate of a particular one.
    const BitBasis cobound = coboundary_bit_basis(G);
    std::vector<Cochain2> values;
    bool zero_seen = false;
    for (const Cochain1 z : all_characters(G)) {
        for (const Cochain1 w : all_characters(G)) {
            const Cochain2 v =
                cup(*e_ab ^ z, c, G) ^ cup(a, *e_bc ^ w, G);
            const Cochain2 cls = cobound.reduce(v);
            if (std::find(values.begin(), values.end(), cls) == values.end()) values.push_back(cls);
            if (cls.zero()) zero_seen = true;
        }
    }
    std::sort(values.begin(), values.end());
    result.value_set = std::move(values);
    result.status = zero_seen ? MasseyStatus::ContainsZero : MasseyStatus::NonVanishing;
    return result;
}

U4Element U4Element::inverse() const {
    for (int i = 0; i < 64; ++i) {
        const U4Element cand = from_index(i);
        if ((*this * cand) == U4Element{}) return cand;
    }
    throw std::logic_error("U4Element: no inverse");  // unreachable
}

int U4Element::order() const {
    U4Element acc = *this;
    int k = 1;
    while (!(acc == U4Element{})) {
        acc = acc * *this;
        ++k;
    }
    return k;
}

std::vector<U4Element> U4Element::all() {
    std::vector<U4Element> out;
    out.reserve(64);
    for (int i = 0; i < 64; ++i) out.push_back(from_index(i));
    return out;
}

std::optional<std::vector<U4Element>> u4_lift_exists(const FiniteGroup& G, Cochain1 a,
                                                     Cochain1 b, Cochain1 c) {
    check_character(a, G, "u4_lift_exists");
    check_character(b, G, "u4_lift_exists");
    check_character(c, G, "u4_lift_exists");
    const auto& gens = G.generators();
    if (gens.size() > 4) throw std::domain_error("u4_lift_exists: at most 4 generators supported");
    const int n = G.order();
    const std::size_t total = std::size_t(1) << (3 * gens.size());

    for (std::size_t assign = 0; assign < total; ++assign) {
        // Superdiagonal bits are pinned by the characters; (a13,a14,a24) free.
        std::vector<U4Element> img(n);
        std::vector<bool> known(n, false);
        known[0] = true;
        bool ok = true;
        std::vector<U4Element> gen_img(gens.size());
        for (std::size_t j = 0; j < gens.size() && ok; ++j) {
            U4Element m;
            m.a12 = (a >> gens[j]) & 1;
            m.a23 = (b >> gens[j]) & 1;
            m.a34 = (c >> gens[j]) & 1;
            m.a13 = (assign >> (3 * j)) & 1;
            m.a14 = (assign >> (3 * j + 1)) & 1;
            m.a24 = (assign >> (3 * j + 2)) & 1;
            gen_img[j] = m;
            if (known[gens[j]]) {
                if (!(img[gens[j]] == m)) ok = false;
            } else {
                known[gens[j]] = true;
                img[gens[j]] = m;
            }
        }
        if (!ok) continue;
        // Closure along the multiplication table.
        std::vector<int> stack;
        for (int g = 0; g < n; ++g) {
            if (known[g]) stack.push_back(g);
        }
        while (ok && !stack.empty()) {
            const int g = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < gens.size(); ++j) {
                const int h = G.mul(g, gens[j]);
                const U4Element cand = img[g] * gen_img[j];
                if (!known[h]) {
                    known[h] = true;
                    img[h] = cand;
                    stack.push_back(h);
                } else if (!(img[h] == cand)) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        // Full homomorphism check.
        for (int g = 0; g < n && ok; ++g) {
            for (int h = 0; h < n; ++h) {
                if (!(img[g] * img[h] == img[G.mul(g, h)])) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return img;
    }
    return std::nullopt;
}

}  // namespace massey
