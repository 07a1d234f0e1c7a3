#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "solenoid/charfn.hpp"
#include "solenoid/psd.hpp"

#include <cmath>

using namespace solenoid;

namespace {

GroupTag host_23() {
    PrimeProfile p;
    p.set(2, PrimeProfile::Multiplicity::unbounded());
    p.set(3, PrimeProfile::Multiplicity::unbounded());
    return GroupTag::rational_group(p);
}

// Dyadic subgroup H = {m / 2^k} and L = H + <1/3> inside Z[1/6].
SubgroupSpec dyadic_in_23() {
    return SubgroupSpec::from_floors(host_23(), {{2, std::nullopt}});
}
SubgroupSpec dyadic_plus_third() {
    return SubgroupSpec::from_floors(host_23(), {{2, std::nullopt}, {3, -1}});
}

}  // namespace

TEST_CASE("two point torsion table evaluates exactly and rejects bad data") {
    GroupTag host = GroupTag::prufer(2);
    std::map<Rational, Rational> table{{Rational(0), 1}, {Rational(1, 2), Rational(1, 3)}};
    CharFnExpr f = CharFnExpr::torsion_extension(host, 2, table);

    CHECK(f.eval(Rational(0)).real_rational() == Rational(1));
    CHECK(f.eval(Rational(1, 2)).real_rational() == Rational(1, 3));
    // Outside the order-2 subgroup the extension vanishes.
    CHECK(f.eval(Rational(1, 4)).is_zero());
    CHECK(f.eval(Rational(3, 8)).is_zero());

    // Value at 0 pinned to 1.
    CHECK_THROWS(CharFnExpr::torsion_extension(
        host, 2, {{Rational(0), Rational(1, 2)}, {Rational(1, 2), Rational(1, 3)}}));
    // |values| <= 1.
    CHECK_THROWS(CharFnExpr::torsion_extension(host, 2,
                                               {{Rational(0), 1}, {Rational(1, 2), 2}}));
    // Missing element.
    CHECK_THROWS(CharFnExpr::torsion_extension(host, 2, {{Rational(0), 1}}));
    // Subgroup must embed: order 3 in a 2-group does not.
    CHECK_THROWS(CharFnExpr::torsion_extension(
        host, 3, {{Rational(0), 1}, {Rational(1, 3), 0}, {Rational(2, 3), 0}}));
}

TEST_CASE("psd gate on tables: Gram of order-2 table is [[1,c],[c,1]]") {
    GroupTag host = GroupTag::prufer(2);
    CHECK_THROWS_WITH(CharFnExpr::torsion_extension(host, 2,
                                                    {{Rational(0), 1}, {Rational(1, 2), 2}}),
                      doctest::Contains("[-1, 1]"));
    std::map<Rational, Rational> edge{{Rational(0), 1}, {Rational(1, 2), Rational(-1)}};
    CHECK_NOTHROW(CharFnExpr::torsion_extension(host, 2, edge));  // c = -1 is still psd

    // Order 4, in-range values, Gram not psd: circulant (1, 1/2, -1, 1/2) has
    // the eigenvalue 1 - 2*(1/2) + (-1) = -1.
    CHECK_THROWS_WITH(CharFnExpr::torsion_extension(host, 4,
                                                    {{Rational(0), 1},
                                                     {Rational(1, 4), Rational(1, 2)},
                                                     {Rational(1, 2), Rational(-1)},
                                                     {Rational(3, 4), Rational(1, 2)}}),
                      doctest::Contains("not positive semidefinite"));

    // The unchecked constructor lets the defective table through so the
    // standalone checker can be exercised against it.
    CharFnExpr forced = CharFnExpr::torsion_extension_unchecked(
        host, 2, {{Rational(0), 1}, {Rational(1, 2), 2}});
    CHECK(forced.eval(Rational(1, 2)).real_rational() == Rational(2));
    PsdReport report = psd_check(forced, {Rational(0), Rational(1, 2)}, 1e-9);
    CHECK(report.hermitian);
    CHECK_FALSE(report.psd);
    CHECK(report.exact_path);
    CHECK(report.min_eigenvalue == doctest::Approx(-1.0).epsilon(1e-9));

    CharFnExpr good = CharFnExpr::torsion_extension(
        host, 2, {{Rational(0), 1}, {Rational(1, 2), Rational(1, 3)}});
    PsdReport ok = psd_check(good, {Rational(0), Rational(1, 2)}, 1e-9);
    CHECK(ok.hermitian);
    CHECK(ok.psd);
    CHECK(ok.exact_path);
    CHECK(ok.min_eigenvalue == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("gaussian factor: exact exponent, host guard, float psd fallback") {
    CharFnExpr g = CharFnExpr::gaussian(host_23(), 3);
    CFValue at_half = g.eval(Rational(1, 2));
    CHECK(at_half.is_exact());
    CHECK(at_half.coeff() == Rational(1));
    CHECK(at_half.exponent() == Rational(3, 4));
    CHECK(std::abs(at_half.approx().real() - std::exp(-0.75)) < 1e-12);

    CHECK_THROWS(CharFnExpr::gaussian(host_23(), Rational(-1)));
    CHECK_THROWS(CharFnExpr::gaussian(GroupTag::prufer(2), 1));

    // Gram of exp(-(y_j - y_k)^2) at 0, 1, 2 has irrational entries, so the
    // check runs through the eigenvalue fallback.  Min eigenvalue 0.48881713.
    CharFnExpr unit = CharFnExpr::gaussian(host_23(), 1);
    PsdReport rep = psd_check(unit, {Rational(0), Rational(1), Rational(2)}, 1e-9);
    CHECK(rep.hermitian);
    CHECK(rep.psd);
    CHECK_FALSE(rep.exact_path);
    CHECK(rep.min_eigenvalue == doctest::Approx(0.48881713).epsilon(1e-6));
}

TEST_CASE("coset piecewise on L/H matches the mixture of Haar indicators") {
    SubgroupSpec H = dyadic_in_23();
    SubgroupSpec L = dyadic_plus_third();
    GroupTag host = host_23();

    CharFnExpr piecewise = CharFnExpr::coset_piecewise(
        L, H,
        {{DualElement(Rational(0), host), 1},
         {DualElement(Rational(1, 3), host), Rational(1, 2)},
         {DualElement(Rational(2, 3), host), Rational(1, 2)}});

    CHECK(piecewise.eval(Rational(1, 4)).real_rational() == Rational(1));
    CHECK(piecewise.eval(Rational(1, 3)).real_rational() == Rational(1, 2));
    CHECK(piecewise.eval(Rational(7, 6)).real_rational() == Rational(1, 2));
    CHECK(piecewise.eval(Rational(1, 9)).is_zero());  // needs 3-depth 2, off L
    CHECK(piecewise.eval(Rational(1, 12)).real_rational() == Rational(1, 2));

    // Same distribution as an explicit half-half mixture of Haar measures.
    CharFnExpr mix = CharFnExpr::mixture({Rational(1, 2), Rational(1, 2)},
                                         {CharFnExpr::indicator(H), CharFnExpr::indicator(L)});
    for (int m = -12; m <= 12; ++m) {
        Rational y(m, 12);
        CHECK(CFValue::equal(piecewise.eval(y), mix.eval(y), 0.0));
    }

    // Zero coset must carry 1 and values must be negation-symmetric.
    CHECK_THROWS(CharFnExpr::coset_piecewise(L, H,
                                             {{DualElement(Rational(0), host), Rational(1, 2)},
                                              {DualElement(Rational(1, 3), host), 1},
                                              {DualElement(Rational(2, 3), host), 1}}));
    CHECK_THROWS(CharFnExpr::coset_piecewise(L, H,
                                             {{DualElement(Rational(0), host), 1},
                                              {DualElement(Rational(1, 3), host), Rational(1, 2)},
                                              {DualElement(Rational(2, 3), host), Rational(1, 4)}}));
    // Duplicate coset representative leaves a coset uncovered.
    CHECK_THROWS(CharFnExpr::coset_piecewise(L, H,
                                             {{DualElement(Rational(0), host), 1},
                                              {DualElement(Rational(1, 3), host), Rational(1, 2)},
                                              {DualElement(Rational(4, 3), host), Rational(1, 2)}}));
}

TEST_CASE("pullback table labels cosets of a scaled subgroup") {
    GroupTag host = host_23();
    SubgroupSpec outer = SubgroupSpec::local(host, {3});  // Z[1/3]: v2 >= 0
    SubgroupSpec doubled = outer.scaled(2);
    REQUIRE(outer.index_of(doubled) == Int(2));

    CharFnExpr f = CharFnExpr::pullback(outer, doubled, {1, Rational(1, 3)});
    CHECK(f.eval(Rational(2, 3)).real_rational() == Rational(1));   // numerator even
    CHECK(f.eval(Rational(1, 3)).real_rational() == Rational(1, 3));
    CHECK(f.eval(Rational(5)).real_rational() == Rational(1, 3));
    CHECK(f.eval(Rational(1, 2)).is_zero());  // outside Z[1/3]

    CHECK_THROWS(CharFnExpr::pullback(outer, doubled, {1, 2}));  // not in [-1, 1]
    CHECK_THROWS(CharFnExpr::pullback(outer, doubled, {Rational(1, 2), 1}));
    CHECK_THROWS(CharFnExpr::pullback(outer, outer.scaled(4), {1, 1}));  // index 4 vs size 2

    // Scaling by 3 is onto Z[1/3], so only the 2-part contributes an index.
    CHECK(outer.index_of(outer.scaled(6)) == Int(2));

    // Index-8 circulant [1, c, ..., c] has eigenvalue 1 + 7c at the trivial
    // character and 1 - c elsewhere.
    SubgroupSpec eighth = outer.scaled(8);
    REQUIRE(outer.index_of(eighth) == Int(8));
    std::vector<Rational> tbl(8, Rational(-1, 8));
    tbl[0] = 1;
    CHECK_NOTHROW(CharFnExpr::pullback(outer, eighth, tbl));
    std::vector<Rational> bad(8, Rational(-1, 4));
    bad[0] = 1;
    CHECK_THROWS(CharFnExpr::pullback(outer, eighth, bad));
}

TEST_CASE("products multiply exactly and mixtures collapse when phases align") {
    GroupTag host = host_23();
    SubgroupSpec H = dyadic_in_23();
    SubgroupSpec L = dyadic_plus_third();
    CharFnExpr omega = CharFnExpr::coset_piecewise(
        L, H,
        {{DualElement(Rational(0), host), 1},
         {DualElement(Rational(1, 3), host), Rational(1, 2)},
         {DualElement(Rational(2, 3), host), Rational(1, 2)}});
    CharFnExpr g3 = CharFnExpr::gaussian(host, 3);
    CharFnExpr mu1 = CharFnExpr::product({g3, omega});

    CFValue v = mu1.eval(Rational(1, 3));
    CHECK(v.is_exact());
    CHECK(v.coeff() == Rational(1, 2));
    CHECK(v.exponent() == Rational(1, 3));

    CHECK(mu1.eval(Rational(1, 9)).is_zero());  // off L, still inside the host

    // Same-exponent mixture stays exact...
    CharFnExpr same = CharFnExpr::mixture({Rational(1, 4), Rational(3, 4)}, {g3, g3});
    CHECK(same.eval(Rational(1, 3)).is_exact());
    CHECK(same.eval(Rational(1, 3)).coeff() == Rational(1));
    // ...while distinct Gaussian exponents force the float representation.
    CharFnExpr mixed = CharFnExpr::mixture(
        {Rational(1, 2), Rational(1, 2)},
        {CharFnExpr::gaussian(host, 1), CharFnExpr::gaussian(host, 2)});
    CFValue w = mixed.eval(Rational(1));
    CHECK_FALSE(w.is_exact());
    CHECK(std::abs(w.approx().real() - 0.2516073622040275) < 1e-12);
    CHECK(std::abs(w.approx().imag()) < 1e-15);

    CHECK_THROWS(CharFnExpr::mixture({Rational(1, 2)}, {g3, g3}));
    CHECK_THROWS(CharFnExpr::mixture({Rational(3, 4), Rational(3, 4)}, {g3, g3}));
    CHECK_THROWS(CharFnExpr::mixture({Rational(-1, 2), Rational(3, 2)}, {g3, g3}));
}

TEST_CASE("shift multiplies by a character and symmetrize cancels it") {
    GroupTag host = host_23();
    SubgroupSpec H = dyadic_in_23();
    SolenoidPoint x{Rational(1, 3), std::nullopt};
    CharFnExpr shifted = CharFnExpr::shift(x, CharFnExpr::indicator(H));

    CFValue at_half = shifted.eval(Rational(1, 2));
    CHECK(at_half.is_exact());
    CHECK(at_half.coeff() == Rational(1));
    CHECK(at_half.phase().turns() == Rational(1, 6));

    CharFnExpr sym = symmetrize(shifted);
    for (int m = -8; m <= 8; ++m) {
        Rational y(m, 4);
        CFValue sv = sym.eval(y);
        CFValue iv = CharFnExpr::indicator(H).eval(y);
        CHECK(CFValue::equal(sv, iv, 0.0));  // |character| = 1 drops out
    }

    CharFnExpr conj = CharFnExpr::conjugate(shifted);
    CHECK(conj.eval(Rational(1, 2)).phase().turns() == Rational(5, 6));
}

TEST_CASE("support check flags modulus-1 points away from zero") {
    GroupTag host = GroupTag::prufer(2);
    CharFnExpr f = CharFnExpr::torsion_extension(
        host, 2, {{Rational(0), 1}, {Rational(1, 2), Rational(1, 3)}});

    std::vector<Rational> points;
    for (int j = 0; j < 16; ++j) points.emplace_back(j, 16);
    // |f| is 1/3 at the half point and 0 elsewhere away from zero, both below
    // 1, so the sampled set certifies full support.
    SupportCheck on_torsion = full_support_check(f, points);
    CHECK(on_torsion.full_support);
    CHECK_FALSE(on_torsion.witness.has_value());

    CharFnExpr haar = CharFnExpr::indicator(SubgroupSpec::torsion(host, 4));
    SupportCheck flat = full_support_check(haar, points);
    CHECK_FALSE(flat.full_support);
    CHECK(flat.witness == Rational(1, 4));
}

TEST_CASE("host mismatch and describe round out the expression layer") {
    GroupTag host = host_23();
    CharFnExpr g = CharFnExpr::gaussian(host, 1);
    CHECK_THROWS(g.eval(DualElement(Rational(1, 2), GroupTag::prufer(2))));
    CHECK_THROWS(CharFnExpr::product({g, CharFnExpr::indicator(SubgroupSpec::torsion(
                                             GroupTag::prufer(2), 2))}));
    CHECK(CharFnExpr::product({g}).describe() == g.describe());
    CHECK(g.describe().find("exp(-1*y^2)") != std::string::npos);
}
