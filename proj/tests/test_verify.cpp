#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "solenoid/classify.hpp"
#include "solenoid/verify.hpp"

using namespace solenoid;

namespace {

GroupTag host_23() {
    PrimeProfile p;
    p.set(2, PrimeProfile::Multiplicity::unbounded());
    p.set(3, PrimeProfile::Multiplicity::unbounded());
    return GroupTag::rational_group(p);
}

CharFnExpr two_point_table(const Rational& c) {
    return CharFnExpr::torsion_extension(GroupTag::prufer(2), 2,
                                         {{Rational(0), 1}, {Rational(1, 2), c}});
}

bool same_report(const VerificationReport& a, const VerificationReport& b) {
    if (a.verdict != b.verdict || a.pairs_checked != b.pairs_checked ||
        a.exact_pairs != b.exact_pairs || a.note != b.note)
        return false;
    if (a.witness.has_value() != b.witness.has_value()) return false;
    if (a.witness &&
        (a.witness->u != b.witness->u || a.witness->v != b.witness->v ||
         a.witness->lhs != b.witness->lhs || a.witness->rhs != b.witness->rhs))
        return false;
    return true;
}

}  // namespace

TEST_CASE("grid enumeration per host kind") {
    CHECK(GridSpec::truncation(3).enumerate(GroupTag::prufer(2)).size() == 8);
    CHECK(GridSpec::truncation(2).enumerate(GroupTag::torsion_product({2, 3})).size() == 36);
    CHECK(GridSpec::truncation(1).enumerate(GroupTag::cyclic(12)).size() == 12);
    CHECK(GridSpec::box(24, 24).enumerate(host_23()).size() == 49);
    CHECK(GridSpec::default_for(host_23()).enumerate(host_23()).size() == 49);

    CHECK_THROWS(GridSpec::box(5, 5).enumerate(host_23()));  // 5 outside the profile
    CHECK_THROWS(GridSpec::truncation(2).enumerate(host_23()));
    CHECK_THROWS(GridSpec::box(8, 8).enumerate(GroupTag::prufer(2)));
    CHECK_THROWS(GridSpec::explicit_points({Rational(1, 5)}).enumerate(host_23()));

    auto pts = GridSpec::explicit_points({Rational(9, 8), Rational(1, 2)})
                   .enumerate(GroupTag::prufer(2));
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == Rational(1, 8));  // reduced mod 1
}

TEST_CASE("equation catalog tokens") {
    EquationSpec sym = equation_from_token("symmetry", 2, -3);
    CHECK(sym.lhs.size() == 2);
    CHECK(sym.rhs.size() == 2);
    CHECK(sym.lhs[0].v_coeff == 2);
    CHECK(sym.rhs[0].v_coeff == -2);

    EquationSpec ind = equation_from_token("independence", 4, 9);
    CHECK(ind.rhs.size() == 4);

    EquationSpec t21 = equation_from_token("t2.1", 1, 2);
    CHECK(t21.lhs[0].v_coeff == 8);   // 4pq
    CHECK(t21.lhs[1].v_coeff == 9);   // (p+q)^2

    EquationSpec t22 = equation_from_token("t2.2", 1, 2);
    CHECK(t22.lhs.size() == 1);
    CHECK(t22.lhs[0].u_coeff == 1);   // (p-q)^2
    CHECK(t22.rhs.size() == 4);

    EquationSpec fixed = equation_from_token("r1.2", 0, 0);
    CHECK(fixed.lhs[0].v_coeff == 1);
    CHECK(fixed.lhs[1].v_coeff == -3);

    CHECK(equation_tokens().size() == 8);
    CHECK_THROWS(equation_from_token("nope", 1, 1));
}

TEST_CASE("symbolic Gaussian check agrees with the grid scan") {
    GroupTag host = host_23();
    std::vector<Rational> grid = GridSpec::box(12, 12).enumerate(host);

    // Symmetry pairs with pq < 0 admit the exponent ray (|q|, |p|).
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, -3}, {2, -3}, {3, -4}, {1, -2}}) {
        auto ray = gaussian_symmetry_pair(p, q);
        REQUIRE(ray.has_value());
        CHECK(gaussian_pair_constraint(p, q, ray->first, ray->second));
        CharFnExpr g0 = CharFnExpr::gaussian(host, ray->first);
        CharFnExpr g1 = CharFnExpr::gaussian(host, ray->second);
        EquationSpec eq = symmetry_equation(p, q);

        auto symbolic = verify_gaussian_symbolic(eq, g0, g1);
        REQUIRE(symbolic.has_value());
        CHECK(symbolic->verdict == Verdict::Verified);
        VerificationReport scanned = verify_equation(eq, g0, g1, grid, 0.0);
        CHECK(scanned.verdict == Verdict::Verified);
        CHECK(scanned.exact_pairs == scanned.pairs_checked);
    }

    // pq > 0 leaves no positive ray, and any nontrivial pair fails.
    CHECK_FALSE(gaussian_symmetry_pair(2, 3).has_value());
    CharFnExpr g0 = CharFnExpr::gaussian(host, 3);
    CharFnExpr g1 = CharFnExpr::gaussian(host, 2);
    EquationSpec eq = symmetry_equation(2, 3);
    auto symbolic = verify_gaussian_symbolic(eq, g0, g1);
    REQUIRE(symbolic.has_value());
    CHECK(symbolic->verdict == Verdict::Violated);
    VerificationReport scanned = verify_equation(eq, g0, g1, grid, 0.0);
    CHECK(scanned.verdict == Verdict::Violated);
    REQUIRE(scanned.witness.has_value());

    // The fast path declines anything that is not a plain Gaussian node.
    SubgroupSpec H = SubgroupSpec::from_floors(host, {{2, std::nullopt}});
    CHECK_FALSE(verify_gaussian_symbolic(eq, g0, CharFnExpr::indicator(H)).has_value());
}

TEST_CASE("torsion pair verifies its symmetry and the control pair fails") {
    CharFnExpr f = two_point_table(Rational(1, 3));
    std::vector<Rational> grid = GridSpec::truncation(3).enumerate(GroupTag::prufer(2));

    VerificationReport good = verify_equation(symmetry_equation(1, 3), f, f, grid, 0.0);
    CHECK(good.verdict == Verdict::Verified);
    CHECK(good.pairs_checked == 64);
    CHECK(good.exact_pairs == 64);

    // q = 5 is admissible arithmetic but the same table no longer works:
    // at u = v = 1/8 the left side hits f(1/4) = 0 while the right side is
    // f(0) f(-1/2) = 1/3.
    VerificationReport bad = verify_equation(symmetry_equation(1, 5), f, f, grid, 0.0);
    CHECK(bad.verdict == Verdict::Violated);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->u == Rational(1, 8));
    CHECK(bad.witness->v == Rational(1, 8));
    CHECK(bad.witness->lhs == "0");
    CHECK(bad.witness->rhs == "1/3");

    VerificationReport q13 = verify_equation(symmetry_equation(1, 13), f, f, grid, 0.0);
    CHECK(q13.verdict == Verdict::Violated);
}

TEST_CASE("serial reference and parallel kernel return identical reports") {
    CharFnExpr f = two_point_table(Rational(1, 3));
    std::vector<Rational> grid = GridSpec::truncation(4).enumerate(GroupTag::prufer(2));
    for (const Int& q : {Int(3), Int(5)}) {
        EquationSpec eq = symmetry_equation(1, q);
        CHECK(same_report(verify_equation(eq, f, f, grid, 0.0),
                          verify_equation_serial(eq, f, f, grid, 0.0)));
    }

    GroupTag host = host_23();
    CharFnExpr g0 = CharFnExpr::gaussian(host, 3);
    CharFnExpr g1 = CharFnExpr::gaussian(host, 1);
    std::vector<Rational> box = GridSpec::box(12, 12).enumerate(host);
    for (const EquationSpec& eq : {symmetry_equation(1, -3), symmetry_equation(1, 2)}) {
        CHECK(same_report(verify_equation(eq, g0, g1, box, 0.0),
                          verify_equation_serial(eq, g0, g1, box, 0.0)));
    }
}

TEST_CASE("host mismatch is rejected up front") {
    CharFnExpr g = CharFnExpr::gaussian(host_23(), 1);
    CharFnExpr t = two_point_table(Rational(1, 3));
    CHECK_THROWS(verify_equation(symmetry_equation(1, 2), g, t, {Rational(0)}, 0.0));
}

TEST_CASE("classification: structural forms") {
    GroupTag host = host_23();
    SubgroupSpec H = SubgroupSpec::from_floors(host, {{2, std::nullopt}});

    CHECK(classify(CharFnExpr::gaussian(host, 2)).cls == DistributionClass::Gaussian);
    CHECK(classify(CharFnExpr::gaussian(host, 0)).cls == DistributionClass::Idempotent);
    CHECK(classify(CharFnExpr::indicator(H)).cls == DistributionClass::Idempotent);

    CharFnExpr gi = CharFnExpr::product({CharFnExpr::gaussian(host, 1), CharFnExpr::indicator(H)});
    CHECK(classify(gi).cls == DistributionClass::GaussianTimesIdempotent);

    SolenoidPoint x{Rational(1, 3), std::nullopt};
    CHECK(classify(CharFnExpr::shift(x, gi)).cls == DistributionClass::GaussianTimesIdempotent);
    CHECK(classify(CharFnExpr::conjugate(gi)).cls == DistributionClass::GaussianTimesIdempotent);

    // 0/1 torsion table whose support is the order-2 subgroup: a Haar measure.
    CharFnExpr haar_table = CharFnExpr::torsion_extension(
        GroupTag::prufer(2), 4,
        {{Rational(0), 1}, {Rational(1, 4), 0}, {Rational(1, 2), 1}, {Rational(3, 4), 0}});
    CHECK(classify(haar_table).cls == DistributionClass::Idempotent);
}

TEST_CASE("classification: exact certificates push tables out of the family") {
    Classification torsion = classify(two_point_table(Rational(1, 3)));
    CHECK(torsion.cls == DistributionClass::Outside);
    CHECK(torsion.note.find("torsion dual") != std::string::npos);

    // Mixture of Haar measures on nested subgroups: value 1/2 off the small
    // subgroup cannot come from exp(-l y^2) with a rational-power witness.
    GroupTag host = host_23();
    SubgroupSpec H = SubgroupSpec::from_floors(host, {{2, std::nullopt}});
    SubgroupSpec L = SubgroupSpec::from_floors(host, {{2, std::nullopt}, {3, -1}});
    CharFnExpr omega = CharFnExpr::coset_piecewise(
        L, H,
        {{DualElement(Rational(0), host), 1},
         {DualElement(Rational(1, 3), host), Rational(1, 2)},
         {DualElement(Rational(2, 3), host), Rational(1, 2)}});
    Classification mixture_class = classify(omega);
    CHECK(mixture_class.cls == DistributionClass::Outside);
    CHECK(mixture_class.note.find("coefficient mismatch") != std::string::npos);

    CharFnExpr mu1 = CharFnExpr::product({CharFnExpr::gaussian(host, 3), omega});
    CHECK(classify(mu1).cls == DistributionClass::Outside);

    // Indistinct float values leave the verdict open rather than wrong.
    CharFnExpr blur = CharFnExpr::mixture(
        {Rational(1, 2), Rational(1, 2)},
        {CharFnExpr::gaussian(host, 1), CharFnExpr::gaussian(host, 2)});
    CHECK(classify(blur).cls == DistributionClass::Unknown);

    CHECK(default_witness_points(GroupTag::prufer(2)).size() == 256);
    CHECK(default_witness_points(host).size() == 73);  // {m/36 : |m| <= 36}
}

TEST_CASE("nonvanishing propagation scan") {
    GroupTag host = host_23();
    CharFnExpr g0 = CharFnExpr::gaussian(host, 3);
    CharFnExpr g1 = CharFnExpr::gaussian(host, 1);

    // a = 2, b = -1: c = 3, z0 = y0 / 3 = 1/9, generator a b z0 = -2/9.
    NonvanishingReport ok =
        nonvanishing_subgroup_scan(g0, g1, 2, -1, DualElement(Rational(1, 3), host), 20);
    CHECK(ok.holds);
    CHECK(ok.generator == Rational(-2, 9));
    CHECK(ok.checked == 80);
    CHECK_FALSE(ok.zero_at.has_value());

    // An indicator vanishing off the dyadics breaks the propagation at k = 1.
    SubgroupSpec H = SubgroupSpec::from_floors(host, {{2, std::nullopt}});
    NonvanishingReport broken = nonvanishing_subgroup_scan(
        CharFnExpr::indicator(H), g1, 2, -1, DualElement(Rational(1, 3), host), 20);
    CHECK_FALSE(broken.holds);
    REQUIRE(broken.zero_at.has_value());
    CHECK(*broken.zero_at == Rational(40, 9));  // k = -20 is probed first

    CHECK_THROWS(nonvanishing_subgroup_scan(g0, g1, 2, 2,
                                            DualElement(Rational(1, 3), host), 4));
    // 1/4 is not divisible by 3 inside Z[1/2] floors, but it is in Z[1/6];
    // a genuinely indivisible case needs a capped profile.
    PrimeProfile capped;
    capped.set(2, PrimeProfile::Multiplicity::unbounded());
    GroupTag dyadic_host = GroupTag::rational_group(capped);
    CHECK_THROWS(nonvanishing_subgroup_scan(
        CharFnExpr::gaussian(dyadic_host, 1), CharFnExpr::gaussian(dyadic_host, 1), 2, -1,
        DualElement(Rational(1, 4), dyadic_host), 4));
}

TEST_CASE("quadratic exponent fit accepts Gaussians and rejects plants") {
    GroupTag host = host_23();
    std::vector<Rational> pts;
    for (int m = -6; m <= 6; ++m) pts.emplace_back(m, 6);

    CharFnExpr g = CharFnExpr::gaussian(host, Rational(5, 2));
    auto fitted = fit_quadratic_exponent(
        [&](const DualElement& y) { return g.eval(y); }, host, pts);
    REQUIRE(fitted.has_value());
    CHECK(*fitted == Rational(5, 2));

    // phi = y^2 + y is not even.
    auto skew = fit_quadratic_exponent(
        [&](const DualElement& y) {
            return CFValue::exact(1, Phase(), square(y.value) + y.value + Rational(1, 2));
        },
        host, pts);
    // Shifted so phi(0) = 1/2 != 0 also trips the base-point check.
    CHECK_FALSE(skew.has_value());

    auto odd_part = fit_quadratic_exponent(
        [&](const DualElement& y) {
            return CFValue::exact(1, Phase(), square(y.value) + y.value * y.value * y.value);
        },
        host, pts);
    CHECK_FALSE(odd_part.has_value());  // odd cubic breaks evenness

    auto quartic = fit_quadratic_exponent(
        [&](const DualElement& y) { return CFValue::exact(1, Phase(), square(square(y.value))); },
        host, pts);
    CHECK_FALSE(quartic.has_value());  // third difference along rays is nonzero

    auto scaled_coeff = fit_quadratic_exponent(
        [&](const DualElement& y) {
            return y.value == 0 ? CFValue::exact_real(1)
                                : CFValue::exact(Rational(1, 2), Phase(), square(y.value));
        },
        host, pts);
    CHECK_FALSE(scaled_coeff.has_value());  // modulus is not a pure exponential

    auto vanishing = fit_quadratic_exponent(
        [&](const DualElement& y) {
            return y.value == 0 ? CFValue::exact_real(1) : CFValue::exact_real(0);
        },
        host, pts);
    CHECK_FALSE(vanishing.has_value());
}

TEST_CASE("symmetry premise carries its paired consequence") {
    GroupTag host = host_23();
    CharFnExpr g0 = CharFnExpr::gaussian(host, 3);
    CharFnExpr g1 = CharFnExpr::gaussian(host, 1);
    std::vector<Rational> grid = GridSpec::box(12, 12).enumerate(host);

    ImplicationReport good = check_consequence(symmetry_equation(1, -3),
                                               {paired_consequence_equation(1, -3)}, g0, g1,
                                               grid, 0.0);
    CHECK(good.premise == Verdict::Verified);
    CHECK(good.consequences == Verdict::Verified);

    ImplicationReport moot = check_consequence(symmetry_equation(1, 2),
                                               {paired_consequence_equation(1, 2)}, g0, g1,
                                               grid, 0.0);
    CHECK(moot.premise == Verdict::Violated);
    CHECK(moot.consequences == Verdict::Inconclusive);
}
