#include "massey/masseyq.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace massey {

namespace {

using I128 = __int128;

I128 to_i128(const Int& v) { return static_cast<I128>(v.convert_to<long long>()); }

bool is_square_i128(I128 t, I128* root) {
    if (t < 0) return false;
    // Cheap residue filter before the exact root.
    static const auto mod64 = [] {
        std::array<bool, 64> sq{};
        for (int i = 0; i < 64; ++i) sq[(i * i) & 63] = true;
        return sq;
    }();
    if (!mod64[static_cast<int>(t & 63)]) return false;
    auto r = static_cast<I128>(std::sqrt(static_cast<long double>(t)));
    while (r > 0 && r * r > t) --r;
    while ((r + 1) * (r + 1) <= t) ++r;
    if (r * r != t) return false;
    if (root) *root = r;
    return true;
}

struct CandidateKey {
    long shell, a4, a3, a2, a1, neg4;
    friend auto operator<=>(const CandidateKey&, const CandidateKey&) = default;
};

unsigned worker_count() {
    if (const char* env = std::getenv("MASSEY_WORKERS")) {
        const long n = std::atol(env);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

long lgcd(long a, long b) {
    a = std::labs(a);
    b = std::labs(b);
    while (b) {
        const long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Enumerates the sign-normalized primitive vectors of shell h (max |y_i| = h,
// y1,y2,y3 >= 0) with y1 restricted to [y1lo, y1hi].
template <class F>
void scan_shell_slice(long h, long y1lo, long y1hi, F&& visit) {
    for (long y1 = y1lo; y1 <= y1hi; ++y1) {
        for (long y2 = 0; y2 <= h; ++y2) {
            for (long y3 = 0; y3 <= h; ++y3) {
                const long partial = std::max(y1, std::max(y2, y3));
                for (long y4 = -h; y4 <= h; ++y4) {
                    if (std::max(partial, std::labs(y4)) != h) continue;
                    if (lgcd(lgcd(y1, y2), lgcd(y3, y4)) != 1) continue;
                    visit(y1, y2, y3, y4);
                }
            }
        }
    }
}

struct ShellHit {
    CandidateKey key;
    std::array<long, 4> y;
    Int root;  // sqrt(b N(y))
};

// Searches one shell; workers split the y1 range, merge keeps the least key.
template <class Eval>
std::optional<ShellHit> search_shell(long h, unsigned workers, Eval&& eval) {
    std::vector<std::optional<ShellHit>> best(workers);
    auto run = [&](unsigned w, long lo, long hi) {
        scan_shell_slice(h, lo, hi, [&](long y1, long y2, long y3, long y4) {
            Int root;
            if (!eval(y1, y2, y3, y4, &root)) return;
            const CandidateKey key{h,
                                   std::labs(y4),
                                   y3,
                                   y2,
                                   y1,
                                   y4 < 0 ? 1L : 0L};
            if (!best[w] || key < best[w]->key)
                best[w] = ShellHit{key, {y1, y2, y3, y4}, root};
        });
    };
    if (workers <= 1 || h < 4) {
        run(0, 0, h);
    } else {
        std::vector<std::thread> pool;
        const long chunk = (h + 1 + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const long lo = w * chunk;
            const long hi = std::min<long>(h, lo + chunk - 1);
            if (lo > hi) break;
            pool.emplace_back(run, w, lo, hi);
        }
        for (auto& t : pool) t.join();
    }
    std::optional<ShellHit> out;
    for (auto& b : best) {
        if (b && (!out || b->key < out->key)) out = b;
    }
    return out;
}

// True when the fast 128-bit evaluation of b*N(y) cannot overflow.
bool fits_i128(const SquareClassTriple& t, long h) {
    const Int bound = Int(h) * h * (1 + abs(t.a)) * (1 + abs(t.c)) * 4;
    return abs(t.a) < (Int(1) << 40) && abs(t.b) < (Int(1) << 40) &&
           bound * bound * abs(t.b) < (Int(1) << 120);
}

Int eval_bn(const SquareClassTriple& t, long y1, long y2, long y3, long y4) {
    const std::array<Int, 4> y{Int(y1), Int(y2), Int(y3), Int(y4)};
    return t.b * norm_form_eval<Int>(y, t.a, t.c);
}

}  // namespace

SquareClassTriple reduce_triple(const Rational& a, const Rational& b, const Rational& c) {
    return SquareClassTriple{square_class(a).rep, square_class(b).rep, square_class(c).rep};
}

LocalVerdict massey_defined_local(const SquareClassTriple& t, const Place& nu) {
    LocalVerdict v;
    v.place = nu;
    v.symbol_ab = hilbert_symbol(t.a, t.b, nu);
    v.symbol_bc = hilbert_symbol(t.b, t.c, nu);
    return v;
}

MasseyVerdict decide_massey_q(const SquareClassTriple& t, long certificate_height,
                              long budget_ms) {
    MasseyVerdict verdict;
    for (const Place& nu : relevant_places({t.a, t.b, t.c})) {
        const LocalVerdict lv = massey_defined_local(t, nu);
        verdict.local_table.push_back(lv);
        if (lv.symbol_ab != 1) verdict.obstruction_witnesses.push_back({nu, "(a,b)"});
        if (lv.symbol_bc != 1) verdict.obstruction_witnesses.push_back({nu, "(b,c)"});
    }
    verdict.defined = verdict.obstruction_witnesses.empty();
    verdict.vanishes = verdict.defined;  // global field: defined implies contains 0
    if (verdict.vanishes && certificate_height > 0)
        verdict.certificate = certify_point(t, certificate_height, budget_ms);
    return verdict;
}

std::optional<NormFormPoint> certify_point(const SquareClassTriple& t, long height,
                                           long budget_ms) {
    const unsigned workers = worker_count();
    const auto start = std::chrono::steady_clock::now();
    for (long h = 0; h <= height; ++h) {
        if (budget_ms > 0 && h > 0 &&
            std::chrono::steady_clock::now() - start > std::chrono::milliseconds(budget_ms))
            break;
        std::optional<ShellHit> hit;
        if (fits_i128(t, h)) {
            const I128 a = to_i128(t.a), b = to_i128(t.b), c = to_i128(t.c);
            hit = search_shell(h, workers, [&](long y1, long y2, long y3, long y4, Int* root) {
                const I128 q = I128(y1) * y1 - a * y2 * y2 + c * I128(y3) * y3 -
                               a * c * I128(y4) * y4;
                const I128 r = 2 * (I128(y1) * y3 - a * I128(y2) * y4);
                const I128 bn = b * (q * q - c * r * r);
                I128 s;
                if (bn == 0 || !is_square_i128(bn, &s)) return false;
                *root = Int(static_cast<long long>(s));
                return true;
            });
        } else {
            hit = search_shell(h, workers, [&](long y1, long y2, long y3, long y4, Int* root) {
                const Int bn = eval_bn(t, y1, y2, y3, y4);
                if (bn <= 0) return false;
                const auto s = exact_isqrt(bn);
                if (!s) return false;
                *root = *s;
                return true;
            });
        }
        if (hit) {
            NormFormPoint pt;
            pt.x = Rational(hit->root, abs(t.b));
            for (int i = 0; i < 4; ++i) pt.y[i] = Rational(hit->y[i]);
            return pt;
        }
    }
    return std::nullopt;
}

bool local_point_oracle(const SquareClassTriple& t, const Int& p) {
    if (p <= 2 || !is_probable_prime(p) || (t.a * t.b * t.c) % p == 0)
        throw std::domain_error("local_point_oracle: need odd prime not dividing abc");
    const long q = p.convert_to<long>();
    auto red = [&](const Int& v) {
        long r = static_cast<long>((v % p).convert_to<long>());
        return r < 0 ? r + q : r;
    };
    const long a = red(t.a), b = red(t.b), c = red(t.c);
    std::vector<char> is_sq(q, 0);
    for (long z = 1; z < q; ++z) is_sq[z * z % q] = 1;
    // f = b x^2 - N(y) has df/dx = 2 b x, a unit at every point with x != 0,
    // so every F_p point found below lifts to Z_p by Hensel.
    for (long y1 = 0; y1 < q; ++y1) {
        for (long y2 = 0; y2 < q; ++y2) {
            for (long y3 = 0; y3 < q; ++y3) {
                for (long y4 = 0; y4 < q; ++y4) {
                    const long qd =
                        ((y1 * y1 - a * y2 % q * y2 + c * y3 % q * y3 - a * c % q * y4 % q * y4) %
                             q +
                         q) %
                        q;
                    const long r = ((2 * (y1 * y3 - a * y2 % q * y4)) % q + q) % q;
                    const long n = ((qd * qd - c * r % q * r) % q + q) % q;
                    if (n == 0) continue;
                    if (is_sq[n * b % q]) return true;  // N(y)/b is a nonzero square
                }
            }
        }
    }
    return false;
}

IntegralSearchReport integral_search_demo(const SquareClassTriple& t,
                                          const std::vector<Int>& s_primes, long height) {
    auto s_smooth = [&](Int v) {
        if (v < 0) v = -v;
        for (const Int& sp : s_primes) {
            while (v % sp == 0) v /= sp;
        }
        return v == 1;
    };
    for (const Int& e : {t.a, t.b, t.c}) {
        if (!s_smooth(e)) throw std::domain_error("integral_search_demo: entries must be S-units");
    }
    IntegralSearchReport report;
    report.height = height;
    for (long h = 0; h <= height && !report.found; ++h) {
        std::optional<CandidateKey> best_key;
        scan_shell_slice(h, 0, h, [&](long y1, long y2, long y3, long y4) {
            ++report.candidates;
            const Int n = eval_bn(t, y1, y2, y3, y4) / t.b;
            if (n == 0 || !s_smooth(n)) return;
            const auto s = exact_isqrt(t.b * n);
            if (!s) return;
            const CandidateKey key{h, std::labs(y4), y3, y2, y1, y4 < 0 ? 1L : 0L};
            if (best_key && !(key < *best_key)) return;
            best_key = key;
            NormFormPoint pt;
            pt.x = Rational(*s, abs(t.b));
            pt.y = {Rational(y1), Rational(y2), Rational(y3), Rational(y4)};
            report.found = true;
            report.point = pt;
        });
    }
    // Existence is conclusive; a miss is only a bounded-search observation.
    report.conclusive = report.found;
    return report;
}

}  // namespace massey
