#include "support/padic_oracle.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace massey::testsupport {

namespace {

int vp_cap(long v, long p, int k) {
    if (v == 0) return k;
    int e = 0;
    while (v % p == 0 && e < k) {
        v /= p;
        ++e;
    }
    return e;
}

// Solvability of a x^2 + b y^2 = z^2 over Z/p^k with a certified
// (nonsingular) primitive solution; escalates once on singular-only hits.
bool search(long a, long b, long p, int k, bool escalated) {
    long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    const long ra = ((a % pk) + pk) % pk;
    const long rb = ((b % pk) + pk) % pk;
    // min_vz[s] = least valuation of a z with z^2 = s mod p^k, or -1.
    std::vector<int> min_vz(pk, -1);
    for (long z = 0; z < pk; ++z) {
        const long s = z * z % pk;
        const int v = vp_cap(z, p, k);
        if (min_vz[s] < 0 || v < min_vz[s]) min_vz[s] = v;
    }
    std::vector<long> xsq(pk);
    for (long x = 0; x < pk; ++x) xsq[x] = x * x % pk;
    bool uncertified = false;
    for (long x = 0; x < pk; ++x) {
        const long ax2 = ra * xsq[x] % pk;
        const int vx = vp_cap(2 * ra % pk * x % pk, p, k);
        for (long y = 0; y < pk; ++y) {
            const long s = (ax2 + rb * xsq[y]) % pk;
            const int vz = min_vz[s];
            if (vz < 0) continue;
            if (x % p == 0 && y % p == 0 && vz != 0) continue;  // not primitive
            const int vy = vp_cap(2 * rb % pk * y % pk, p, k);
            if (2 * vx < k || 2 * vy < k || 2 * vz < k) return true;
            uncertified = true;
        }
    }
    if (uncertified && !escalated) return search(a, b, p, k + 1, true);
    return false;
}

}  // namespace

int oracle_hilbert(const Int& a, const Int& b, const Place& nu) {
    if (nu.real) return (a < 0 && b < 0) ? -1 : 1;
    const long p = nu.p.convert_to<long>();
    const int k = p == 2 ? 6 : 3;
    static std::map<std::tuple<long, long, long>, bool> cache;
    long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    const auto key = std::make_tuple(p, (long)(((a % pk) + pk) % pk).convert_to<long>(),
                                     (long)(((b % pk) + pk) % pk).convert_to<long>());
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, search(std::get<1>(key), std::get<2>(key), p, k, false)).first;
    return it->second ? 1 : -1;
}

}  // namespace massey::testsupport
