#include "massey/torsor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace massey {

bool SparsePoly::GradedLex::operator()(const Monomial& a, const Monomial& b) const {
    auto deg = [](const Monomial& m) {
        return std::accumulate(m.begin(), m.end(), 0,
                               [](int s, const auto& kv) { return s + kv.second; });
    };
    const int da = deg(a), db = deg(b);
    if (da != db) return da > db;  // higher degree first
    return a < b;
}

SparsePoly SparsePoly::constant(const Rational& c) {
    SparsePoly p;
    if (c != 0) p.terms_[Monomial{}] = c;
    return p;
}

SparsePoly SparsePoly::var(const std::string& name, int exp) {
    SparsePoly p;
    if (exp == 0) return constant(1);
    p.terms_[Monomial{{name, exp}}] = 1;
    return p;
}

std::set<std::string> SparsePoly::variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_) {
        for (const auto& [v, e] : m) out.insert(v);
    }
    return out;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly p = a;
    for (const auto& [m, c] : b.terms_) p.add_term(m, c);
    return p;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly p;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            SparsePoly::Monomial m = ma;
            for (const auto& [v, e] : mb) {
                const int ne = (m.count(v) ? m[v] : 0) + e;
                if (ne == 0)
                    m.erase(v);
                else
                    m[v] = ne;
            }
            p.add_term(m, ca * cb);
        }
    }
    return p;
}

SparsePoly SparsePoly::pow(int e) const {
    if (e == 0) return constant(1);
    if (e < 0) {
        if (terms_.size() != 1)
            throw std::domain_error("SparsePoly::pow: negative power of a non-monomial");
        const auto& [m, c] = *terms_.begin();
        SparsePoly p;
        Monomial im;
        for (const auto& [v, ex] : m) im[v] = -ex;
        p.terms_[im] = 1 / c;
        return p.pow(-e);
    }
    SparsePoly r = constant(1), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

SparsePoly SparsePoly::substitute(const std::map<std::string, SparsePoly>& repl) const {
    SparsePoly out;
    for (const auto& [m, c] : terms_) {
        SparsePoly term = constant(c);
        for (const auto& [v, e] : m) {
            const auto it = repl.find(v);
            term = term * (it == repl.end() ? var(v, e) : it->second.pow(e));
        }
        out = out + term;
    }
    return out;
}

SparsePoly SparsePoly::substitute(const std::map<std::string, SparsePoly>& repl,
                                  const std::set<std::string>& allowed) const {
    SparsePoly out = substitute(repl);
    for (const auto& v : out.variables()) {
        if (!allowed.count(v))
            throw std::domain_error("SparsePoly::substitute: unsupported variable " + v);
    }
    return out;
}

SparsePoly SparsePoly::cleared() const {
    std::map<std::string, int> min_exp;
    for (const auto& [m, c] : terms_) {
        for (const auto& [v, e] : m) {
            auto it = min_exp.find(v);
            if (it == min_exp.end())
                min_exp[v] = e;
            else
                it->second = std::min(it->second, e);
        }
    }
    SparsePoly clearing = constant(1);
    for (const auto& [v, e] : min_exp) {
        if (e < 0) clearing = clearing * var(v, -e);
    }
    return *this * clearing;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (const auto& [v, e] : m) {
            os << "*" << v;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

RepMatrix RepMatrix::identity() {
    RepMatrix r;
    for (int i = 0; i < 4; ++i) r.m[i][i] = 1;
    return r;
}

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
    RepMatrix r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            int s = 0;
            for (int k = 0; k < 4; ++k) s += a.m[i][k] * b.m[k][j];
            r.m[i][j] = s;
        }
    }
    return r;
}

RepMatrix RepMatrix::transpose() const {
    RepMatrix r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
    }
    return r;
}

bool RepMatrix::is_signed_permutation() const {
    for (int i = 0; i < 4; ++i) {
        int row = 0, col = 0;
        for (int j = 0; j < 4; ++j) {
            if (m[i][j] < -1 || m[i][j] > 1) return false;
            row += m[i][j] != 0;
            col += m[j][i] != 0;
        }
        if (row != 1 || col != 1) return false;
    }
    return true;
}

bool RepMatrix::is_diagonal(const std::array<int, 4>& eigenvalues) const {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (m[i][j] != (i == j ? eigenvalues[i] : 0)) return false;
        }
    }
    return true;
}

bool RepMatrix::is_permutation_with_signs(const std::array<int, 4>& images) const {
    // images[j] = i+1 means column j maps basis vector j to +vector i.
    for (int j = 0; j < 4; ++j) {
        const int target = images[j] - 1;
        for (int i = 0; i < 4; ++i) {
            if (m[i][j] != (i == target ? 1 : 0)) return false;
        }
    }
    return true;
}

std::string RepMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) os << m[i][j] << (j < 3 ? " " : "");
        os << "\n";
    }
    return os.str();
}

namespace {

bool in_h_tilde(const U4Element& h) { return h.a12 == 0 && h.a13 == 0; }

std::array<U4Element, 4> coset_reps() {
    U4Element e12, e13;
    e12.a12 = 1;
    e13.a13 = 1;
    return {U4Element{}, e12, e13, e12 * e13};
}

}  // namespace

RepMatrix rep_matrix(const U4Element& g) {
    const auto r = coset_reps();
    // Signed coset-permutation matrix in the basis e_i = r_i (x) 1.
    std::array<std::array<int, 4>, 4> me{};
    for (int i = 0; i < 4; ++i) {
        const U4Element gri = g * r[i];
        bool placed = false;
        for (int j = 0; j < 4; ++j) {
            const U4Element h = r[j].inverse() * gri;
            if (in_h_tilde(h)) {
                me[j][i] = h.a14 ? -1 : 1;
                placed = true;
                break;
            }
        }
        if (!placed) throw std::logic_error("rep_matrix: coset not found");
    }
    // Base change: columns of P express u_k in the e-basis, with
    // u1 = e1+e3, u2 = e1-e3, u3 = e2+e4, u4 = e2-e4; then M_u = P^-1 M_e P.
    static const int P[4][4] = {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, -1, 0, 0}, {0, 0, 1, -1}};
    static const int Pinv2[4][4] = {  // 2 * P^-1
        {1, 0, 1, 0}, {1, 0, -1, 0}, {0, 1, 0, 1}, {0, 1, 0, -1}};
    RepMatrix out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            int s = 0;
            for (int k = 0; k < 4; ++k) {
                for (int l = 0; l < 4; ++l) s += Pinv2[i][k] * me[k][l] * P[l][j];
            }
            if (s % 2 != 0) throw std::logic_error("rep_matrix: non-integral base change");
            out.m[i][j] = s / 2;
        }
    }
    if (!out.is_signed_permutation())
        throw std::logic_error("rep_matrix: result is not a signed permutation");
    return out;
}

InducedRep build_induced_rep() {
    auto single = [](int bit) {
        U4Element g;
        switch (bit) {
            case 12: g.a12 = 1; break;
            case 23: g.a23 = 1; break;
            case 34: g.a34 = 1; break;
            case 13: g.a13 = 1; break;
            case 24: g.a24 = 1; break;
            case 14: g.a14 = 1; break;
        }
        return g;
    };
    InducedRep rep;
    rep.e12 = rep_matrix(single(12));
    rep.e23 = rep_matrix(single(23));
    rep.e34 = rep_matrix(single(34));
    rep.e13 = rep_matrix(single(13));
    rep.e24 = rep_matrix(single(24));
    rep.e14 = rep_matrix(single(14));
    return rep;
}

namespace {

using P = SparsePoly;

P compact_norm(const P& y1, const P& ya, const P& yg, const P& yag, const P& a, const P& c,
               bool mutate) {
    const P q = y1 * y1 - a * ya * ya + c * yg * yg - a * c * yag * yag;
    const P r = P::constant(2) * (y1 * yg - a * ya * yag);
    return mutate ? q * q + c * r * r : q * q - c * r * r;
}

std::array<P, 4> d_quadrics() {
    std::array<P, 4> u;
    for (int i = 0; i < 4; ++i) {
        const P ui = P::var("u" + std::to_string(i + 1));
        u[i] = ui * ui;
    }
    return {u[0] + u[1] + u[2] + u[3], u[0] + u[1] - u[2] - u[3], u[0] - u[1] + u[2] - u[3],
            u[0] - u[1] - u[2] + u[3]};
}

}  // namespace

bool verify_norm_expansion(bool mutate) {
    const P y1 = P::var("y1"), ya = P::var("ya"), yg = P::var("yg"), yag = P::var("yag");
    const P al = P::var("al"), ga = P::var("ga");
    P prod = P::constant(1);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const P si = P::constant(i ? -1 : 1), sj = P::constant(j ? -1 : 1);
            prod = prod * (y1 + si * ya * al + sj * yg * ga + si * sj * yag * al * ga);
        }
    }
    const P compact = compact_norm(y1, ya, yg, yag, al * al, ga * ga, mutate);
    return (prod - compact).is_zero();
}

bool verify_quotient_identity(bool mutate) {
    const P al = P::var("al"), be = P::var("be"), ga = P::var("ga");
    const auto d = d_quadrics();
    const P x = P::constant(mutate ? 8 : 16) * P::var("u1") * P::var("u2") * P::var("u3") *
                P::var("u4") * be.pow(-1);
    const P a = al * al, b = be * be, c = ga * ga;
    const P y1 = d[0];
    const P ya = d[1] * al.pow(-1);
    const P yg = d[2] * ga.pow(-1);
    const P yag = d[3] * (al * ga).pow(-1);
    const P lhs = b * x * x - compact_norm(y1, ya, yg, yag, a, c, false);
    return lhs.cleared().is_zero();
}

bool verify_quotient_core_identity() {
    const auto d = d_quadrics();
    const P prod =
        P::var("u1") * P::var("u2") * P::var("u3") * P::var("u4");
    const P lhs = P::constant(256) * prod * prod;
    const P q = d[0] * d[0] - d[1] * d[1] + d[2] * d[2] - d[3] * d[3];
    const P r = P::constant(2) * (d[0] * d[2] - d[1] * d[3]);
    return (lhs - (q * q - r * r)).is_zero();
}

bool verify_eigen_properties(bool mutate) {
    const InducedRep rep = build_induced_rep();
    if (mutate) return rep.e13.is_diagonal({1, 1, 1, -1});  // wrong tuple, must fail
    return rep.e13.is_diagonal({1, -1, 1, -1}) && rep.e24.is_diagonal({1, 1, -1, -1}) &&
           rep.e14.is_diagonal({-1, -1, -1, -1}) &&
           rep.e12.is_permutation_with_signs({3, 4, 1, 2}) &&
           rep.e34.is_permutation_with_signs({2, 1, 4, 3}) &&
           rep.e23.is_diagonal({1, 1, 1, -1});
}

bool verify_free_action(bool mutate) {
    for (const U4Element& g : U4Element::all()) {
        if (g == U4Element{}) continue;
        bool moved = g.a12 || g.a23 || g.a34;  // alpha, beta, gamma coordinates
        if (!moved && !mutate) {
            // Dual action on u_i*: functions transform by M(g^-1)^T; a fixed
            // coordinate is an identity column of M(g^-1).
            const RepMatrix minv = rep_matrix(g.inverse());
            for (int i = 0; i < 4 && !moved; ++i) {
                for (int j = 0; j < 4; ++j) {
                    if (minv.m[j][i] != (i == j ? 1 : 0)) {
                        moved = true;
                        break;
                    }
                }
            }
        }
        if (!moved) return false;
    }
    return true;
}

bool verify_norm_multiplicativity(bool mutate) {
    const P a = P::var("a"), c = P::var("c");
    std::array<P, 4> y, z;
    for (int i = 0; i < 4; ++i) {
        y[i] = P::var("y" + std::to_string(i + 1));
        z[i] = P::var("z" + std::to_string(i + 1));
    }
    // Product in the algebra with basis (1, alpha, gamma, alpha gamma),
    // alpha^2 = a, gamma^2 = c.
    std::array<P, 4> w;
    w[0] = y[0] * z[0] + a * y[1] * z[1] + c * y[2] * z[2] + a * c * y[3] * z[3];
    w[1] = y[0] * z[1] + y[1] * z[0] + c * (y[2] * z[3] + y[3] * z[2]);
    w[2] = y[0] * z[2] + y[2] * z[0] + a * (y[1] * z[3] + y[3] * z[1]);
    w[3] = y[0] * z[3] + y[3] * z[0] + y[1] * z[2] + y[2] * z[1];
    if (mutate) w[2] = y[0] * z[2] + y[2] * z[0] + y[1] * z[3] + y[3] * z[1];
    auto norm = [&](const std::array<P, 4>& v) {
        return compact_norm(v[0], v[1], v[2], v[3], a, c, false);
    };
    return (norm(w) - norm(y) * norm(z)).is_zero();
}

}  // namespace massey
