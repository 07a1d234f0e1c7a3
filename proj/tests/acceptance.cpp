// End-to-end acceptance gate: ten numbered checks, one [PASS]/[FAIL] line
// each, nonzero exit when anything fails.  Each check rebuilds what it needs
// from the public API so a regression in any layer surfaces here.

#include "solenoid/suite.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <utility>
#include <vector>

using namespace solenoid;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << idx << ". " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

PrimeProfile profile_of(const std::vector<Int>& primes) {
    PrimeProfile prof;
    for (const Int& p : primes) prof.set(p, PrimeProfile::Multiplicity::unbounded());
    return prof;
}

VerificationReport run(const ConstructionResult& r, const GridSpec& spec) {
    return verify_equation(r.equation, r.mu1, r.mu2, spec.enumerate(r.host), 1e-12);
}

// One suite run shared by checks 7 and 10.
struct SuiteRun {
    SuiteResult result;
    double seconds = 0;
};

const SuiteRun& shared_suite() {
    static const SuiteRun cached = [] {
        auto t0 = std::chrono::steady_clock::now();
        SuiteRun run{run_suite(SuiteOptions{}), 0};
        run.seconds = seconds_since(t0);
        return run;
    }();
    return cached;
}

// 1. The mixture pair satisfies its identity on {m/24 : |m| <= 24}^2, every
//    comparison exact, in under five seconds.
void criterion_mixture() {
    auto t0 = std::chrono::steady_clock::now();
    auto r = gaussian_haar_mixture();
    auto rep = run(r, GridSpec::box(24, 24));
    double secs = seconds_since(t0);
    std::ostringstream detail;
    detail << rep.pairs_checked << " pairs, " << rep.exact_pairs << " exact, " << secs << " s";
    report(1, "mixture pair verifies exactly on the 24-denominator box",
           rep.verdict == Verdict::Verified && rep.exact_pairs == rep.pairs_checked &&
               rep.pairs_checked == 49 * 49 && secs < 5.0,
           detail.str());
}

// 2. Two-point dyadic family: q in {2,-2,3,7,-5} exhaustively on Z(2^k) for
//    k = 3..6; forced q in {5,13} violated with a concrete witness; < 10 s.
void criterion_dyadic_matrix() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::uint64_t deepest = 0;
    for (const Int& q : std::vector<Int>{2, -2, 3, 7, -5}) {
        auto r = torsion_mod2(q);
        for (int k = 3; k <= 6; ++k) {
            auto rep = run(r, GridSpec::truncation(k));
            ok = ok && rep.verdict == Verdict::Verified;
            if (k == 6) deepest = rep.pairs_checked;
        }
    }
    ok = ok && deepest >= 4096;
    for (const Int& q : std::vector<Int>{5, 13}) {
        auto r = torsion_mod2(q, Rational(1, 3), true);
        auto rep = run(r, GridSpec::truncation(3));
        ok = ok && rep.verdict == Verdict::Violated && rep.witness.has_value();
    }
    double secs = seconds_since(t0);
    std::ostringstream detail;
    detail << deepest << " pairs at k=6, " << secs << " s";
    report(2, "dyadic matrix green for admissible q, violated with witness for controls",
           ok && secs < 10.0, detail.str());
}

// 3. Odd-order family: q = 5 exhaustive on Z(3^4), q = 13 on Z(7^2); the
//    negation identity q*v = -v holds on the whole carrier subgroup.
void criterion_odd_family() {
    bool ok = true;
    {
        auto rep = run(torsion_odd(5), GridSpec::truncation(4));
        ok = ok && rep.verdict == Verdict::Verified && rep.pairs_checked == 81 * 81;
    }
    {
        auto rep = run(torsion_odd(13), GridSpec::truncation(2));
        ok = ok && rep.verdict == Verdict::Verified && rep.pairs_checked == 49 * 49;
    }
    for (const auto& [q, order] : std::vector<std::pair<Int, Int>>{{5, 3}, {13, 7}}) {
        for (Int j = 0; j < order; ++j) {
            const Rational v(j, order);
            const Rational qv = Rational(q) * v;
            ok = ok && mod_one(qv) == mod_one(-v);
        }
    }
    report(3, "odd-order family exhaustive on prime-power towers, q acts as negation", ok);
}

// 4. Split families at (p,q) = (2,5) and (1,6) on rational-group grids with
//    denominator exponent 3; both factors certified outside the
//    Gaussian-with-idempotent class.
void criterion_split_families() {
    bool ok = true;
    auto check = [&](const ConstructionResult& r, const GridSpec& spec) {
        auto rep = run(r, spec);
        ok = ok && rep.verdict == Verdict::Verified;
        ok = ok && classify(r.mu1, r.class_points).cls == DistributionClass::Outside;
        ok = ok && classify(r.mu2, r.class_points).cls == DistributionClass::Outside;
    };
    check(split_composite(2, 5, profile_of({2, 3, 5, 7})), GridSpec::box(27, 20));
    check(split_unit_factor(2, 3, profile_of({2, 3, 5, 7})), GridSpec::box(125, 20));
    report(4, "split constructions verify on depth-3 grids and classify outside");
}

// 5. Gaussian pairs: symmetry holds iff l1*p + l2*q = 0 and the derived
//    independence form holds iff 4pq*l1 + (p+q)^2*l2 = 0, across every
//    coprime pair with |p|,|q| <= 7 and p + q != 0; positive pq admits only
//    the zero solution among nonnegative exponents.
void criterion_gaussian_algebra() {
    auto host = GroupTag::rational_group(profile_of({2, 3}));
    bool ok = true;
    int checked = 0;
    auto symbolic = [&](const EquationSpec& eq, const Rational& l1, const Rational& l2) {
        auto f0 = CharFnExpr::gaussian(host, l1);
        auto f1 = CharFnExpr::gaussian(host, l2);
        auto rep = verify_gaussian_symbolic(eq, f0, f1);
        return rep && rep->verdict == Verdict::Verified;
    };
    for (Int p = -7; p <= 7; ++p) {
        for (Int q = -7; q <= 7; ++q) {
            if (p == 0 || q == 0 || p + q == 0) continue;
            const Int ap = abs(p), aq = abs(q);
            if (gcd(ap, aq) != 1) continue;
            ++checked;
            const Int sum = p + q;
            const Int ind_c1 = 4 * p * q, ind_c2 = sum * sum;
            const std::vector<std::pair<Rational, Rational>> lambdas = {
                {Rational(aq), Rational(ap)},
                {Rational(aq, 2), Rational(ap, 2)},
                {Rational(ind_c2), Rational(-ind_c1)},
                {Rational(1), Rational(1)},
                {Rational(0), Rational(0)},
                {Rational(3), Rational(7)},
            };
            for (const auto& [l1, l2] : lambdas) {
                if (l1 < 0 || l2 < 0) continue;  // not a characteristic function
                bool sym = symbolic(symmetry_equation(p, q), l1, l2);
                ok = ok && sym == gaussian_pair_constraint(p, q, l1, l2);
                bool ind = symbolic(derived_independence_equation(p, q), l1, l2);
                ok = ok && ind == gaussian_pair_constraint(ind_c1, ind_c2, l1, l2);
            }
            if (p > 0 && q > 0) {
                // Nonnegative solutions of both constraints collapse to zero.
                for (Int a = 0; a <= 3; ++a)
                    for (Int b = 0; b <= 3; ++b) {
                        const bool zero = a == 0 && b == 0;
                        ok = ok && gaussian_pair_constraint(p, q, Rational(a), Rational(b)) == zero;
                        ok = ok && gaussian_pair_constraint(ind_c1, ind_c2, Rational(a),
                                                            Rational(b)) == zero;
                    }
            }
        }
    }
    std::ostringstream detail;
    detail << checked << " coefficient pairs";
    report(5, "Gaussian exponent algebra matches both linear criteria exactly", ok && checked > 50,
           detail.str());
}

// 6. For every stored construction, a verified plain-symmetry premise forces
//    the paired-consequence identity on the same grid; the transformed
//    coefficients at (1,-3) match the pinned values.
void criterion_symmetry_implication() {
    bool ok = true;
    int premises_held = 0;
    std::vector<std::pair<ConstructionResult, GridSpec>> stored;
    for (const Int& q : std::vector<Int>{3, -2, 2, 7, -1, -5, 11})
        stored.emplace_back(torsion_mod2(q), GridSpec::truncation(3));
    for (const Int& q : std::vector<Int>{5, 9, 13, -7})
        stored.emplace_back(torsion_odd(q), GridSpec::truncation(1));
    stored.emplace_back(split_composite(3, 2, profile_of({2, 3, 5})), GridSpec::box(1, 8));
    stored.emplace_back(split_composite(2, 5, profile_of({2, 3, 5, 7})), GridSpec::box(27, 20));
    stored.emplace_back(split_unit_factor(2, 3, profile_of({2, 3, 5, 7})), GridSpec::box(20, 20));
    stored.emplace_back(split_unit_factor(3, 2, profile_of({2, 3, 5, 7})), GridSpec::box(20, 20));
    stored.emplace_back(gaussian_haar_mixture(), GridSpec::box(24, 24));
    stored.emplace_back(gaussian_ray(1, -3, profile_of({2, 3})), GridSpec::box(24, 24));

    for (const auto& [r, spec] : stored) {
        const Int p = r.forms.b1, q = r.forms.b2;
        auto grid = spec.enumerate(r.host);
        auto premise =
            verify_equation(equation_from_token("l4.1", p, q), r.mu1, r.mu2, grid, 1e-12);
        if (premise.verdict != Verdict::Verified) continue;  // implication is vacuous
        ++premises_held;
        auto consequence =
            verify_equation(equation_from_token("l4.6", p, q), r.mu1, r.mu2, grid, 1e-12);
        ok = ok && consequence.verdict == Verdict::Verified;
    }

    auto pinned = paired_consequence_equation(1, -3);
    ok = ok && pinned.lhs.size() == 2;
    ok = ok && pinned.lhs[0].fn == 0 && pinned.lhs[0].u_coeff == -2 && pinned.lhs[0].v_coeff == 2;
    ok = ok && pinned.lhs[1].fn == 1 && pinned.lhs[1].u_coeff == -6 && pinned.lhs[1].v_coeff == -2;

    std::ostringstream detail;
    detail << premises_held << " premises held of " << stored.size() << " stored";
    report(6, "verified symmetry premises force the paired consequence", ok && premises_held >= 12,
           detail.str());
}

// 7. The suite's crossvalidation block: at least 30 (construction, finite
//    model, coefficients) triples where the grid verdict and the exact
//    finite-quotient enumeration agree.
void criterion_oracle_agreement() {
    const auto& s = shared_suite();
    int triples = 0, agreeing = 0;
    for (const auto& e : s.result.entries) {
        if (e.category != "crossvalidate") continue;
        ++triples;
        if (e.passed) ++agreeing;
    }
    std::ostringstream detail;
    detail << agreeing << " of " << triples << " triples agree";
    report(7, "equation verdicts equal exact enumeration on the oracle matrix",
           triples >= 30 && agreeing == triples, detail.str());
}

// 8. Exact exponent extraction: planted Gaussian exponents 5 and 2 are
//    recovered exactly; a planted non-quadratic exponent is rejected.
void criterion_exponent_extraction() {
    auto host = GroupTag::rational_group(profile_of({2, 3}));
    std::vector<Rational> points;
    for (Int k = -50; k <= 50; ++k) points.push_back(Rational(k, 8));

    bool ok = true;
    for (const auto& [lambda, expected] :
         std::vector<std::pair<Rational, Rational>>{{Rational(5), Rational(5)},
                                                    {Rational(2), Rational(2)}}) {
        auto g = CharFnExpr::gaussian(host, lambda);
        auto fit = fit_quadratic_exponent([&](const DualElement& y) { return g.eval(y); }, host,
                                          points);
        ok = ok && fit && *fit == expected;
    }

    // phi(y) = y^2 + y has a linear part; the fit must refuse it.
    auto planted = [](const DualElement& y) {
        const Rational expo = y.value * y.value + y.value;
        return CFValue::exact(Rational(1), Phase(), expo);
    };
    ok = ok && !fit_quadratic_exponent(planted, host, points).has_value();

    report(8, "quadratic exponents recovered exactly, non-quadratic plant rejected", ok);
}

// 9. The doubling-and-tripling admissibility shortcut agrees with a brute
//    force search over all coprime coefficient pairs up to 12.
void criterion_admissibility() {
    auto brute = [](const PrimeProfile& prof) {
        for (Int p = -12; p <= 12; ++p)
            for (Int q = -12; q <= 12; ++q) {
                if (p == 0 || q == 0 || p + q == 0 || p - q == 0) continue;
                const Int ap = abs(p), aq = abs(q);
                if (gcd(ap, aq) != 1) continue;
                const Int sum = p + q, diff = p - q;
                if (is_automorphism(prof, p) && is_automorphism(prof, q) &&
                    is_automorphism(prof, sum) && is_automorphism(prof, diff))
                    return true;
            }
        return false;
    };

    const std::vector<std::vector<std::pair<Int, bool>>> profiles = {
        {{2, true}, {3, true}},
        {{2, true}, {3, true}, {5, true}},
        {{2, true}},
        {{3, true}},
        {{2, true}, {5, true}},
        {{3, true}, {5, true}, {7, true}},
        {{2, true}, {3, false}},
        {{2, false}, {3, true}},
        {{5, true}, {7, true}},
        {{2, true}, {3, true}, {5, false}, {7, false}},
    };
    bool ok = true;
    int admissible = 0;
    for (const auto& entries : profiles) {
        PrimeProfile prof;
        for (const auto& [prime, unbounded] : entries)
            prof.set(prime, unbounded ? PrimeProfile::Multiplicity::unbounded()
                                      : PrimeProfile::Multiplicity::finite(2));
        const bool fast = heyde_admissible(prof);
        ok = ok && fast == brute(prof);
        if (fast) ++admissible;
    }
    std::ostringstream detail;
    detail << admissible << " of " << profiles.size() << " profiles admissible";
    report(9, "admissibility shortcut equals brute force over 10 profiles",
           ok && admissible > 0 && admissible < static_cast<int>(profiles.size()), detail.str());
}

// 10. The small suite is green end to end, inside a minute, with every
//     forced negative control red as designed.
void criterion_suite_green() {
    const auto& s = shared_suite();
    int controls = 0, positives = 0;
    bool controls_red = true;
    for (const auto& e : s.result.entries) {
        if (e.category == "control") {
            ++controls;
            controls_red =
                controls_red && e.passed && e.detail.find("VIOLATED") != std::string::npos;
        } else {
            ++positives;
        }
    }
    std::ostringstream detail;
    detail << s.result.passed << " passed, " << s.result.failed << " failed, " << controls
           << " controls, " << s.seconds << " s";
    report(10, "small suite green with every control red inside a minute",
           s.result.ok() && s.seconds < 60.0 && controls >= 4 && controls_red && positives > 0,
           detail.str());
}

}  // namespace

int main() {
    criterion_mixture();
    criterion_dyadic_matrix();
    criterion_odd_family();
    criterion_split_families();
    criterion_gaussian_algebra();
    criterion_symmetry_implication();
    criterion_oracle_agreement();
    criterion_exponent_extraction();
    criterion_admissibility();
    criterion_suite_green();

    if (failures == 0) {
        std::cout << "acceptance: all criteria hold\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria failed\n";
    return 1;
}
