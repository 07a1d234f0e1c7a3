#include "solenoid/suite.hpp"

#include "solenoid/psd.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace solenoid {

namespace {

constexpr double kTol = 1e-12;

PrimeProfile profile_of(const std::vector<Int>& primes) {
    PrimeProfile prof;
    for (const Int& p : primes) prof.set(p, PrimeProfile::Multiplicity::unbounded());
    return prof;
}

struct Collector {
    std::vector<SuiteEntry> entries;

    void add(std::string name, std::string category, bool passed, std::string detail,
             Json report) {
        entries.push_back(
            {std::move(name), std::move(category), passed, std::move(detail), std::move(report)});
    }
};

std::string verdict_line(const VerificationReport& rep) {
    std::ostringstream out;
    out << verdict_name(rep.verdict) << " (" << rep.pairs_checked << " pairs, " << rep.exact_pairs
        << " exact)";
    if (rep.witness)
        out << " witness (u,v) = (" << format_rational(rep.witness->u) << ", "
            << format_rational(rep.witness->v) << ")";
    return out.str();
}

// Equation row: the construction's identity on its grid matches the verdict
// the factory promised.
void equation_row(Collector& out, const std::string& name, const std::string& category,
                  const ConstructionResult& r, const GridSpec& spec) {
    auto rep = verify_equation(r.equation, r.mu1, r.mu2, spec.enumerate(r.host), kTol);
    bool passed = rep.verdict == r.expected;
    Json report{{"equation", equation_json(r.equation)},
                {"grid", grid_json(spec)},
                {"expected", verdict_name(r.expected)},
                {"verification", verification_json(rep)}};
    out.add(name + "/equation", category, passed,
            verdict_line(rep) + ", expected " + verdict_name(r.expected), std::move(report));
}

// Classification row: both factors certify into their expected classes.
void classes_row(Collector& out, const std::string& name, const ConstructionResult& r) {
    auto c1 = classify(r.mu1, r.class_points);
    auto c2 = classify(r.mu2, r.class_points);
    bool passed = c1.cls == r.expected_class1 && c2.cls == r.expected_class2;
    Json report{{"first", classification_json(c1)},
                {"second", classification_json(c2)},
                {"expectedClass1", class_name(r.expected_class1)},
                {"expectedClass2", class_name(r.expected_class2)}};
    out.add(name + "/classes", "construct", passed,
            std::string(class_name(c1.cls)) + " / " + class_name(c2.cls) + ", expected " +
                class_name(r.expected_class1) + " / " + class_name(r.expected_class2),
            std::move(report));
}

// Implication row: the construction's own identity holds and forces
// independence of the paired transformed forms on the same grid.
void implication_row(Collector& out, const std::string& name, const ConstructionResult& r,
                     const GridSpec& spec) {
    auto impl = check_consequence(r.equation, {form_paired_consequence_equation(r.forms)}, r.mu1,
                                  r.mu2, spec.enumerate(r.host), kTol);
    bool passed = impl.premise == Verdict::Verified && impl.consequences == Verdict::Verified;
    out.add(name + "/implication", "construct", passed,
            "premise " + std::string(verdict_name(impl.premise)) + ", paired consequence " +
                verdict_name(impl.consequences),
            implication_json(impl));
}

void construction_rows(Collector& out, const std::string& name, const ConstructionResult& r,
                       const GridSpec& spec) {
    equation_row(out, name, "construct", r, spec);
    classes_row(out, name, r);
    implication_row(out, name, r, spec);
}

// Crossvalidation row: equation verdict on Z(n) must coincide with the
// exact joint-law enumeration; for construction-derived tables the verdict
// itself is also pinned.
void crossvalidation_row(Collector& out, const std::string& name, const FiniteModel& m,
                         const FiniteCharFn& f0, const FiniteCharFn& f1, const FormPair& forms,
                         std::optional<Verdict> pinned) {
    auto cv = crossvalidate(m, f0, f1, forms);
    bool passed = cv.agree && (!pinned || cv.equation == *pinned);
    std::ostringstream detail;
    detail << "equation " << verdict_name(cv.equation) << ", enumeration "
           << (cv.enumeration_symmetric ? "symmetric" : "asymmetric")
           << (cv.agree ? ", agree" : ", DISAGREE");
    if (pinned) detail << ", expected " << verdict_name(*pinned);
    Json report = crossvalidation_json(cv);
    report["model"] = model_json(m);
    report["forms"] = forms_json(forms);
    out.add(name, "crossvalidate", passed, detail.str(), std::move(report));
}

void restricted_row(Collector& out, const std::string& name, const ConstructionResult& r,
                    const Int& n, Verdict pinned) {
    auto f = finite_restriction(r.mu1, n);
    crossvalidation_row(out, name, FiniteModel{n}, f, f, r.forms, pinned);
}

GridSpec dyadic_grid(SuiteLevel level) {
    return GridSpec::truncation(level == SuiteLevel::Full ? 6 : 3);
}

std::vector<Rational> torsion_probe(const Int& order, const Int& deep_den) {
    std::vector<Rational> pts;
    for (Int j = 0; j < order; ++j) pts.push_back(Rational(j, order));
    pts.push_back(Rational(1, deep_den));
    pts.push_back(Rational(2, deep_den));
    return pts;
}

}  // namespace

SuiteResult run_suite(const SuiteOptions& opts) {
    Collector out;
    const bool full = opts.level == SuiteLevel::Full;

    // ---- torsion-mod2: identical two-point factors on the dyadic tower ----
    for (const Int& q : std::vector<Int>{3, -2, 2, 7, -1, -5, 11}) {
        auto r = torsion_mod2(q);
        construction_rows(out, "construct/torsion-mod2(q=" + q.str() + ")", r,
                          dyadic_grid(opts.level));
    }
    for (const Int& q : std::vector<Int>{5, 13}) {
        auto r = torsion_mod2(q, Rational(1, 3), true);
        equation_row(out, "control/torsion-mod2(q=" + q.str() + ")", "control", r,
                     dyadic_grid(opts.level));
    }

    // ---- torsion-odd: constant tables negated by the coefficient ----
    struct OddCase {
        Int q;
        Int order;
        Int deep_den;
    };
    const std::vector<OddCase> odd_cases = {{5, 3, 9},    {9, 5, 25},   {13, 7, 49},
                                            {-7, 3, 9},   {-11, 5, 25}, {17, 9, 27},
                                            {21, 11, 121}, {29, 15, 45}};
    for (const auto& oc : odd_cases) {
        auto r = torsion_odd(oc.q);
        GridSpec spec = full ? GridSpec::truncation(2)
                             : GridSpec::explicit_points(torsion_probe(oc.order, oc.deep_den));
        construction_rows(out, "construct/torsion-odd(q=" + oc.q.str() + ")", r, spec);
    }

    // ---- split-composite: pullback tables on the difference-local carrier ----
    struct SplitCase {
        Int p;
        Int q;
        std::vector<Int> primes;
        GridSpec small;
        GridSpec fullspec;
    };
    std::vector<Rational> integers;
    for (Int m = -8; m <= 8; ++m) integers.push_back(Rational(m));
    const std::vector<SplitCase> split_cases = {
        {3, 2, {2, 3, 5}, GridSpec::explicit_points(integers), GridSpec::box(1, 30)},
        {3, -2, {2, 3, 5}, GridSpec::box(20, 20), GridSpec::box(125, 40)},
        {-3, 2, {2, 3, 5}, GridSpec::box(20, 20), GridSpec::box(125, 40)},
        {5, 2, {2, 3, 5, 7}, GridSpec::box(24, 24), GridSpec::box(27, 40)},
        {5, -2, {2, 3, 5, 7}, GridSpec::box(28, 28), GridSpec::box(343, 40)},
    };
    for (const auto& sc : split_cases) {
        auto r = split_composite(sc.p, sc.q, profile_of(sc.primes));
        construction_rows(out,
                          "construct/split-composite(p=" + sc.p.str() + ",q=" + sc.q.str() + ")", r,
                          full ? sc.fullspec : sc.small);
    }

    // ---- split-unit-factor: the renamed-forms identity ----
    struct UnitCase {
        Int q1;
        Int q2;
        GridSpec small;
        GridSpec fullspec;
    };
    const std::vector<UnitCase> unit_cases = {
        {2, 3, GridSpec::box(20, 20), GridSpec::box(125, 40)},
        {3, 2, GridSpec::box(20, 20), GridSpec::box(125, 40)},
        {-2, 3, GridSpec::box(28, 28), GridSpec::box(343, 40)},
        {2, -3, GridSpec::box(28, 28), GridSpec::box(343, 40)},
    };
    for (const auto& uc : unit_cases) {
        auto r = split_unit_factor(uc.q1, uc.q2, profile_of({2, 3, 5, 7}));
        construction_rows(out,
                          "construct/split-unit-factor(q1=" + uc.q1.str() + ",q2=" + uc.q2.str() +
                              ")",
                          r, full ? uc.fullspec : uc.small);
    }

    // ---- gaussian-haar-mixture ----
    {
        auto r = gaussian_haar_mixture();
        construction_rows(out, "construct/gaussian-haar-mixture", r,
                          full ? GridSpec::box(48, 48) : GridSpec::box(24, 24));
    }

    // ---- gaussian-ray: symbolic fast path plus a grid row ----
    struct RayCase {
        Int p;
        Int q;
        std::vector<Int> primes;
    };
    const std::vector<RayCase> ray_cases = {
        {1, -3, {2, 3}}, {2, -3, {2, 3, 5}}, {3, -2, {2, 3, 5}}, {5, -3, {2, 3, 5}}};
    for (const auto& rc : ray_cases) {
        auto r = gaussian_ray(rc.p, rc.q, profile_of(rc.primes));
        std::string name = "construct/gaussian-ray(p=" + rc.p.str() + ",q=" + rc.q.str() + ")";
        construction_rows(out, name, r, GridSpec::box(24, 24));
        auto sym = verify_gaussian_symbolic(r.equation, r.mu1, r.mu2);
        bool passed = sym && sym->verdict == r.expected;
        out.add(name + "/symbolic", "construct", passed,
                sym ? ("symbolic " + std::string(verdict_name(sym->verdict))) : "fast path refused",
                sym ? verification_json(*sym) : Json(nullptr));
    }
    for (const auto& rc : std::vector<RayCase>{{2, 1, {2, 3}}, {3, 2, {2, 3, 5}}}) {
        auto r = gaussian_ray(rc.p, rc.q, profile_of(rc.primes), Rational(1), true);
        equation_row(out, "control/gaussian-ray(p=" + rc.p.str() + ",q=" + rc.q.str() + ")",
                     "control", r, GridSpec::box(24, 24));
    }

    // ---- crossvalidation: the equation road against exact enumeration ----
    for (const Int& q : std::vector<Int>{3, -2, 2, 7, -1, -5, 11}) {
        auto r = torsion_mod2(q);
        for (const Int& n : std::vector<Int>{8, 16})
            restricted_row(out, "crossvalidate/torsion-mod2(q=" + q.str() + ")/Z(" + n.str() + ")",
                           r, n, Verdict::Verified);
    }
    {
        auto r = torsion_mod2(3);
        for (const Int& n : std::vector<Int>{4, 32})
            restricted_row(out, "crossvalidate/torsion-mod2(q=3)/Z(" + n.str() + ")", r, n,
                           Verdict::Verified);
    }
    for (const auto& oc : odd_cases) {
        auto r = torsion_odd(oc.q);
        restricted_row(out,
                       "crossvalidate/torsion-odd(q=" + oc.q.str() + ")/Z(" + oc.order.str() + ")",
                       r, oc.order, Verdict::Verified);
    }
    {
        const std::vector<std::pair<Int, Int>> deep = {{5, 9}, {9, 25}, {17, 27}, {29, 45}};
        for (const auto& [q, n] : deep)
            restricted_row(out,
                           "crossvalidate/torsion-odd(q=" + q.str() + ")/Z(" + n.str() + ")",
                           torsion_odd(q), n, Verdict::Verified);
    }
    for (const Int& q : std::vector<Int>{5, 13}) {
        auto r = torsion_mod2(q, Rational(1, 3), true);
        for (const Int& n : std::vector<Int>{8, 16})
            restricted_row(out,
                           "crossvalidate/control-torsion-mod2(q=" + q.str() + ")/Z(" + n.str() +
                               ")",
                           r, n, Verdict::Violated);
    }

    // Synthetic finite tables: the oracle property (two roads, one verdict)
    // is the pass condition; the verdict itself is free.
    {
        FiniteModel m{12};
        PMF point(12, Rational(0));
        point[0] = Rational(1);
        auto f = pmf_to_charfn(m, point);
        crossvalidation_row(out, "crossvalidate/synthetic/point-mass-Z(12)", m, f, f,
                            FormPair{1, 1, 3, 5}, std::nullopt);
    }
    {
        FiniteModel m{7};
        PMF uniform(7, Rational(1, 7));
        auto f = pmf_to_charfn(m, uniform);
        crossvalidation_row(out, "crossvalidate/synthetic/uniform-Z(7)", m, f, f,
                            FormPair{2, 1, 1, 3}, std::nullopt);
    }
    {
        FiniteModel m{9};
        PMF two(9, Rational(0));
        two[0] = Rational(1, 2);
        two[1] = Rational(1, 2);
        auto f = pmf_to_charfn(m, two);
        crossvalidation_row(out, "crossvalidate/synthetic/two-point-Z(9)", m, f, f,
                            FormPair{1, 1, 1, 5}, std::nullopt);
    }
    {
        FiniteModel m{9};
        PMF coset(9, Rational(0));
        coset[1] = coset[4] = coset[7] = Rational(1, 3);
        auto f = pmf_to_charfn(m, coset);
        crossvalidation_row(out, "crossvalidate/synthetic/shifted-coset-Z(9)", m, f, f,
                            FormPair{1, 1, 1, 5}, std::nullopt);
    }

    // ---- fault drill ----
    if (opts.inject_fault) {
        auto planted = CharFnExpr::torsion_extension_unchecked(
            GroupTag::prufer(2), 2, {{Rational(0), Rational(1)}, {Rational(1, 2), Rational(2)}});
        auto psd = psd_check(planted, {Rational(0), Rational(1, 2)}, kTol);
        std::string detail = psd.psd
                                 ? "planted table value 2 ACCEPTED: validator is broken"
                                 : "planted table value 2 rejected by psd_check: " + psd.note;
        Json report{{"psd", psd.psd},
                    {"hermitian", psd.hermitian},
                    {"exactPath", psd.exact_path},
                    {"minEigenvalue", psd.min_eigenvalue},
                    {"note", psd.note}};
        // Forced red either way: the drill's purpose is a reachable failure.
        out.add("fault-drill/planted-psd", "fault-drill", false, detail, std::move(report));
    }

    std::sort(out.entries.begin(), out.entries.end(),
              [](const SuiteEntry& a, const SuiteEntry& b) { return a.name < b.name; });
    std::set<std::string> seen;
    for (const auto& e : out.entries)
        if (!seen.insert(e.name).second)
            throw std::logic_error("duplicate suite entry name: " + e.name);

    SuiteResult result;
    result.entries = std::move(out.entries);
    for (const auto& e : result.entries) (e.passed ? result.passed : result.failed) += 1;
    return result;
}

Json suite_json(const SuiteResult& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back(Json{{"name", e.name},
                               {"category", e.category},
                               {"passed", e.passed},
                               {"detail", e.detail},
                               {"report", e.report}});
    return Json{{"entries", entries},
                {"passed", r.passed},
                {"failed", r.failed},
                {"ok", r.ok()}};
}

}  // namespace solenoid
