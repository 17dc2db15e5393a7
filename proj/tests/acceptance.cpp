// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include "massey/arith.hpp"
#include "massey/ffield.hpp"
#include "massey/groupcoh.hpp"
#include "massey/masseyq.hpp"
#include "massey/places.hpp"
#include "massey/torsor.hpp"
#include "support/padic_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace massey;

namespace {

std::vector<Int> squarefree_range(int bound) {
    std::vector<Int> out;
    for (int v = -bound; v <= bound; ++v) {
        if (v != 0 && is_squarefree(v)) out.push_back(v);
    }
    return out;
}

std::vector<Place> oracle_places() {
    std::vector<Place> out{Place::real_place()};
    for (const Int p : {2, 3, 5, 7, 11, 13}) out.push_back(Place::prime(p));
    return out;
}

// Criterion 1: formula engine vs mod-p^k conic oracle on |a|,|b| <= 30.
bool criterion_oracle_equivalence(std::string& note) {
    const auto sample = squarefree_range(30);
    long checked = 0, failures = 0;
    for (const Place& nu : oracle_places()) {
        for (const Int& a : sample) {
            for (const Int& b : sample) {
                ++checked;
                if (hilbert_symbol(a, b, nu) != testsupport::oracle_hilbert(a, b, nu)) ++failures;
            }
        }
    }
    note = std::to_string(checked) + " symbol comparisons, " + std::to_string(failures) +
           " disagreements";
    return failures == 0;
}

// Criterion 2: product formula over relevant places on the same sample.
bool criterion_product_formula(std::string& note) {
    const auto sample = squarefree_range(30);
    long violations = 0;
    for (const Int& a : sample) {
        for (const Int& b : sample) {
            if (cup_vanishes_globally(a, b).second.product() != 1) ++violations;
        }
    }
    note = std::to_string(sample.size() * sample.size()) + " pairs, " +
           std::to_string(violations) + " product-formula violations";
    return violations == 0;
}

std::vector<FqField> sweep_fields() {
    std::vector<FqField> out;
    for (const long q : {3, 5, 7, 9, 11, 13}) {
        out.push_back(q == 9 ? FqField(3, 2) : FqField(q, 1));
    }
    return out;
}

// Criteria 3 and 4: norm-image equality and universal point existence.
bool criterion_ff(std::string& note3, std::string& note4, bool& points_ok) {
    bool images_ok = true;
    points_ok = true;
    long pairs = 0, triples = 0;
    for (const auto& F : sweep_fields()) {
        const auto rep = sweep(F);
        pairs += rep.pairs_checked;
        triples += rep.triples_checked;
        images_ok = images_ok && rep.norm_images_agree;
        points_ok = points_ok && rep.all_triples_have_points;
    }
    note3 = "q in {3,5,7,9,11,13}: " + std::to_string(pairs) + " (a,c) pairs, images " +
            (images_ok ? "all equal" : "MISMATCH");
    note4 = std::to_string(triples) + " (a,b,c) triples, " +
            (points_ok ? "all have points" : "MISSING POINTS");
    return images_ok;
}

std::vector<std::pair<std::string, FiniteGroup>> group_zoo() {
    const auto z2 = FiniteGroup::cyclic(2);
    const auto z4 = FiniteGroup::cyclic(4);
    std::vector<std::pair<std::string, FiniteGroup>> out;
    out.emplace_back("Z/2", z2);
    out.emplace_back("Z/4", z4);
    out.emplace_back("Z/8", FiniteGroup::cyclic(8));
    out.emplace_back("Z/2xZ/2", FiniteGroup::direct_product(z2, z2));
    out.emplace_back("Z/2^3",
                     FiniteGroup::direct_product(z2, FiniteGroup::direct_product(z2, z2)));
    out.emplace_back("Z/2xZ/4", FiniteGroup::direct_product(z2, z4));
    out.emplace_back("D4", FiniteGroup::dihedral8());
    out.emplace_back("Q8", FiniteGroup::quaternion8());
    return out;
}

// Criteria 5 and 6: Dwyer three-way equivalence and the coset law.
bool criterion_dwyer_and_coset(std::string& note5, std::string& note6, bool& coset_ok) {
    long instances = 0, disagreements = 0, defined_instances = 0, coset_failures = 0;
    for (const auto& [name, G] : group_zoo()) {
        const auto chars = all_characters(G);
        for (const Cochain1 a : chars) {
            for (const Cochain1 b : chars) {
                for (const Cochain1 c : chars) {
                    ++instances;
                    const auto direct = triple_massey(G, a, b, c);
                    const auto lift = u4_lift_exists(G, a, b, c);
                    if (bool(lift) != (direct.status == MasseyStatus::ContainsZero))
                        ++disagreements;
                    const auto brute = brute_force_massey(G, a, b, c);
                    if (brute.status != direct.status) ++disagreements;
                    if (direct.status == MasseyStatus::Undefined) continue;
                    ++defined_instances;
                    // Coset law: brute value set == base + span(indeterminacy).
                    std::set<Cochain2> coset;
                    const auto& basis = direct.indeterminacy_basis;
                    for (std::size_t m = 0; m < (std::size_t(1) << basis.size()); ++m) {
                        Cochain2 v = direct.base_class;
                        for (std::size_t i = 0; i < basis.size(); ++i) {
                            if ((m >> i) & 1) v ^= basis[i];
                        }
                        coset.insert(h2_canonical(v, G));
                    }
                    const std::set<Cochain2> brute_set(brute.value_set.begin(),
                                                       brute.value_set.end());
                    if (coset != brute_set) ++coset_failures;
                }
            }
        }
    }
    note5 = std::to_string(instances) + " triples across the zoo, " +
            std::to_string(disagreements) + " three-way disagreements";
    note6 = std::to_string(defined_instances) + " defined instances, " +
            std::to_string(coset_failures) + " coset-law failures";
    coset_ok = coset_failures == 0;
    return disagreements == 0;
}

// Criterion 7: symbolic suite with paired mutations.
bool criterion_symbolic(std::string& note) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool direct = verify_norm_expansion() && verify_quotient_identity() &&
                        verify_quotient_core_identity() && verify_eigen_properties() &&
                        verify_free_action() && verify_norm_multiplicativity();
    const bool mutants_fail = !verify_norm_expansion(true) && !verify_quotient_identity(true) &&
                              !verify_eigen_properties(true) && !verify_free_action(true) &&
                              !verify_norm_multiplicativity(true);
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[128];
    std::snprintf(buf, sizeof buf, "identities %s, mutants %s, %.2fs",
                  direct ? "hold" : "FAIL", mutants_fail ? "all fail" : "SURVIVE", sec);
    note = buf;
    return direct && mutants_fail && sec < 10.0;
}

// Criterion 8: the (313, 457, 521) instance.
bool criterion_global_instance(std::string& note) {
    const auto v = decide_massey_q({313, 457, 521}, 0);
    bool symbols_ok = v.local_table.size() == 5;
    for (const auto& lv : v.local_table)
        symbols_ok = symbols_ok && lv.symbol_ab == 1 && lv.symbol_bc == 1;
    note = std::string("defined=") + (v.defined ? "true" : "false") + ", vanishes=" +
           (v.vanishes ? "true" : "false") + ", all symbols +1 at 5 places: " +
           (symbols_ok ? "yes" : "NO");
    return v.defined && v.vanishes && symbols_ok;
}

// Criterion 9: (a, b, a) vanishes when the cup product vanishes globally,
// with certificates searched up to height 500.
bool criterion_symmetric_triples(std::string& note) {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> d(-20, 20);
    int found = 0, decided = 0, certified = 0, misses = 0;
    bool verdicts_ok = true;
    while (found < 100) {
        const int a = d(rng), b = d(rng);
        if (a == 0 || b == 0) continue;
        const Int ra = square_class(Rational(a)).rep, rb = square_class(Rational(b)).rep;
        if (!cup_vanishes_globally(ra, rb).first) continue;
        ++found;
        const auto v = decide_massey_q({ra, rb, ra}, 0);
        if (v.defined && v.vanishes) ++decided;
        else verdicts_ok = false;
        const auto cert = certify_point({ra, rb, ra}, 500, 4000);
        if (cert) {
            const Rational n = norm_form_eval<Rational>(cert->y, Rational(ra), Rational(ra));
            if (Rational(rb) * cert->x * cert->x == n && cert->x != 0) ++certified;
            else verdicts_ok = false;
        } else {
            ++misses;
        }
    }
    note = std::to_string(decided) + "/100 vanish as forced; certificates " +
           std::to_string(certified) + "/100, height-500 misses (finding only): " +
           std::to_string(misses);
    return verdicts_ok && decided == 100;
}

// Criterion 10: invariances plus local oracle agreement.
bool criterion_invariances(std::string& note) {
    std::mt19937 rng(211);
    std::uniform_int_distribution<int> d(-30, 30), s(1, 9);
    long scale_fail = 0, sym_fail = 0;
    int done = 0;
    while (done < 500) {
        const int a = d(rng), b = d(rng), c = d(rng);
        if (a == 0 || b == 0 || c == 0) continue;
        ++done;
        const auto t = reduce_triple(Rational(a), Rational(b), Rational(c));
        const auto v = decide_massey_q(t, 0);
        const int s1 = s(rng), s2 = s(rng), s3 = s(rng);
        const auto vs = decide_massey_q(
            reduce_triple(Rational(a * s1 * s1), Rational(b * s2 * s2), Rational(c * s3 * s3)),
            0);
        if (vs.defined != v.defined || vs.vanishes != v.vanishes) ++scale_fail;
        const auto vr = decide_massey_q({t.c, t.b, t.a}, 0);
        if (vr.defined != v.defined || vr.vanishes != v.vanishes) ++sym_fail;
    }
    long oracle_fail = 0, oracle_checks = 0;
    done = 0;
    while (done < 200) {
        const int a = d(rng), b = d(rng), c = d(rng);
        if (a == 0 || b == 0 || c == 0) continue;
        ++done;
        const auto t = reduce_triple(Rational(a), Rational(b), Rational(c));
        for (const Int p : {3, 5, 7, 11, 13}) {
            if ((t.a * t.b * t.c) % p == 0) continue;
            ++oracle_checks;
            if (local_point_oracle(t, p) != massey_defined_local(t, Place::prime(p)).solvable())
                ++oracle_fail;
        }
    }
    note = "500 triples: " + std::to_string(scale_fail) + " scaling / " +
           std::to_string(sym_fail) + " symmetry failures; " + std::to_string(oracle_checks) +
           " good-prime oracle checks, " + std::to_string(oracle_fail) + " disagreements";
    return scale_fail == 0 && sym_fail == 0 && oracle_fail == 0;
}

int report(int idx, const char* what, bool ok, const std::string& note) {
    std::printf("criterion %2d: %s — %s (%s)\n", idx, ok ? "PASS" : "FAIL", what, note.c_str());
    std::fflush(stdout);
    return ok ? 0 : 1;
}

}  // namespace

int main() {
    int failures = 0;
    std::string note, note2;
    bool aux = false;

    failures += report(1, "Hilbert-symbol oracle equivalence (|a|,|b| <= 30)",
                       criterion_oracle_equivalence(note), note);
    failures += report(2, "Hilbert product formula", criterion_product_formula(note), note);
    const bool images_ok = criterion_ff(note, note2, aux);
    failures += report(3, "norm-image set equality over F_q", images_ok, note);
    failures += report(4, "X(a,b,c) has points over every F_q", aux, note2);
    const bool dwyer_ok = criterion_dwyer_and_coset(note, note2, aux);
    failures += report(5, "three-way Massey/Dwyer equivalence on the zoo", dwyer_ok, note);
    failures += report(6, "value set = base class + indeterminacy span", aux, note2);
    failures += report(7, "symbolic torsor suite with mutations", criterion_symbolic(note), note);
    failures += report(8, "global engine on (313, 457, 521)",
                       criterion_global_instance(note), note);
    failures += report(9, "symmetric triples vanish and certify",
                       criterion_symmetric_triples(note), note);
    failures += report(10, "verdict invariances and local oracle agreement",
                       criterion_invariances(note), note);

    if (failures == 0)
        std::printf("all 10 criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
