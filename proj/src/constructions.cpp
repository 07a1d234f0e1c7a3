#include "solenoid/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace solenoid {

namespace {

void require_inner_value(const Rational& c) {
    if (c == 0 || c >= 1 || c <= -1)
        throw std::invalid_argument("table value must satisfy 0 < |c| < 1; got " +
                                    format_rational(c));
}

std::vector<Int> distinct_primes(const Int& n) {
    Int a = abs(n);
    std::vector<Int> out;
    for (const auto& [p, e] : factorize(a)) out.push_back(p);
    return out;
}

// Constant c off zero; the zero entry carries 1.
std::vector<Rational> flat_table(const Int& size, const Rational& c) {
    std::vector<Rational> table(size.convert_to<std::size_t>(), c);
    table[0] = 1;
    return table;
}

// Small integer multiples alongside the default sample, so that the scaled
// subgroups of a split pair contribute nonzero points to the class scan.
std::vector<Rational> with_integer_points(const GroupTag& host, const Int& bound) {
    std::vector<Rational> pts = default_witness_points(host);
    for (Int k = 1; k <= bound; ++k) {
        pts.push_back(Rational(k));
        pts.push_back(Rational(-k));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

void CaseSpec::validate() const {
    if (p == 0 || q == 0) throw std::invalid_argument("coefficients must be nonzero");
    Int g = gcd(p, q);
    if (g != 1)
        throw std::invalid_argument("coefficients must be coprime; gcd(" + p.str() + ", " +
                                    q.str() + ") = " + g.str());
    const Int sum = p + q, diff = p - q;
    for (const Int& n : {p, q, sum, diff})
        if (!is_automorphism(profile, n))
            throw std::invalid_argument("multiplication by " + n.str() +
                                        " is not an automorphism of this host");
}

ConstructionResult torsion_mod2(const Int& q, const Rational& c, bool force) {
    if (q == 0) throw std::invalid_argument("q must be nonzero");
    require_inner_value(c);
    Int aq = abs(q);
    Int residue = ((q % 4) + 4) % 4;
    bool admissible = aq == 2 || residue == 3;
    if (!admissible && !force)
        throw std::invalid_argument("q = " + q.str() +
                                    " needs |q| = 2 or q = 3 (mod 4); force builds a control");

    GroupTag host = GroupTag::prufer(2);
    CharFnExpr f = CharFnExpr::torsion_extension(
        host, 2, {{Rational(0), Rational(1)}, {Rational(1, 2), c}});

    std::ostringstream note;
    note << "identical factors, two-point table on the order-2 torsion subgroup, off-zero value "
         << format_rational(c);
    if (!admissible) note << "; control outside the admissible range";

    return {"torsion-mod2",
            host,
            f,
            f,
            symmetry_equation(1, q),
            FormPair{1, 1, 1, q},
            admissible ? Verdict::Verified : Verdict::Violated,
            DistributionClass::Outside,
            DistributionClass::Outside,
            default_witness_points(host),
            note.str()};
}

ConstructionResult torsion_odd(const Int& q, const Rational& c) {
    require_inner_value(c);
    Int residue = ((q % 4) + 4) % 4;
    if (residue != 1)
        throw std::invalid_argument("q = " + q.str() + " is not 1 (mod 4)");
    if (q == 1 || q == -3)
        throw std::invalid_argument("q = " + q.str() + " degenerates to the trivial subgroup");

    Int order = abs((q + 1) / 2);  // odd and >= 3 here; q acts on it as negation
    GroupTag host = GroupTag::torsion_product(distinct_primes(order));
    std::map<Rational, Rational> table;
    for (Int j = 0; j < order; ++j) table[Rational(j, order)] = j == 0 ? Rational(1) : c;
    CharFnExpr f = CharFnExpr::torsion_extension(host, order, std::move(table));

    std::ostringstream note;
    note << "identical factors, constant table " << format_rational(c)
         << " off zero on the order-" << order.str() << " torsion subgroup";

    return {"torsion-odd",
            host,
            f,
            f,
            symmetry_equation(1, q),
            FormPair{1, 1, 1, q},
            Verdict::Verified,
            DistributionClass::Outside,
            DistributionClass::Outside,
            default_witness_points(host),
            note.str()};
}

ConstructionResult split_composite(const Int& p, const Int& q, const PrimeProfile& profile,
                                   const Rational& c) {
    CaseSpec{p, q, profile}.validate();
    Int ap = abs(p), aq = abs(q);
    if (ap <= 1 || aq <= 1)
        throw std::invalid_argument("both coefficients must have modulus > 1");
    require_inner_value(c);

    GroupTag host = GroupTag::rational_group(profile);
    Int s = p - q;
    SubgroupSpec carrier = SubgroupSpec::local(host, distinct_primes(s));
    CharFnExpr mu1 = CharFnExpr::pullback(carrier, carrier.scaled(p), flat_table(ap, c));
    CharFnExpr mu2 = CharFnExpr::pullback(carrier, carrier.scaled(q), flat_table(aq, c));

    std::ostringstream note;
    note << "tables on " << carrier.describe() << " constant 1 on its " << p.str() << "- and "
         << q.str() << "-fold images, " << format_rational(c) << " elsewhere";

    return {"split-composite",
            host,
            mu1,
            mu2,
            symmetry_equation(p, q),
            FormPair{1, 1, p, q},
            Verdict::Verified,
            DistributionClass::Outside,
            DistributionClass::Outside,
            with_integer_points(host, ap * aq),
            note.str()};
}

ConstructionResult split_unit_factor(const Int& q1, const Int& q2, const PrimeProfile& profile,
                                     const Rational& c) {
    Int aq1 = abs(q1), aq2 = abs(q2);
    if (aq1 <= 1 || aq2 <= 1)
        throw std::invalid_argument("both factors must have modulus > 1");
    Int q = q1 * q2;
    CaseSpec{1, q, profile}.validate();
    require_inner_value(c);

    GroupTag host = GroupTag::rational_group(profile);
    Int s = q - 1;
    SubgroupSpec carrier = SubgroupSpec::local(host, distinct_primes(s));
    CharFnExpr mu1 = CharFnExpr::pullback(carrier, carrier.scaled(q1), flat_table(aq1, c));
    CharFnExpr mu2 = CharFnExpr::pullback(carrier, carrier.scaled(q2), flat_table(aq2, c));

    std::ostringstream note;
    note << "unit first coefficient against q = " << q1.str() << " * " << q2.str()
         << "; tables on " << carrier.describe();

    return {"split-unit-factor",
            host,
            mu1,
            mu2,
            unit_factor_equation(q1, q2),
            FormPair{q1, 1, 1, q2},
            Verdict::Verified,
            DistributionClass::Outside,
            DistributionClass::Outside,
            with_integer_points(host, abs(q)),
            note.str()};
}

ConstructionResult gaussian_haar_mixture(const PrimeProfile& profile) {
    if (!heyde_admissible(profile))
        throw std::invalid_argument(
            "host must make doubling and tripling automorphisms for this family");

    GroupTag host = GroupTag::rational_group(profile);
    SubgroupSpec dyadic = SubgroupSpec::from_floors(host, {{2, std::nullopt}});
    SubgroupSpec extended = SubgroupSpec::from_floors(host, {{2, std::nullopt}, {3, -1}});
    CharFnExpr omega1 = CharFnExpr::coset_piecewise(
        extended, dyadic,
        {{DualElement(Rational(0), host), Rational(1)},
         {DualElement(Rational(1, 3), host), Rational(1, 2)},
         {DualElement(Rational(2, 3), host), Rational(1, 2)}});
    CharFnExpr mu1 = CharFnExpr::product({CharFnExpr::gaussian(host, Rational(3)), omega1});
    CharFnExpr mu2 = CharFnExpr::product(
        {CharFnExpr::gaussian(host, Rational(1)), CharFnExpr::indicator(dyadic)});

    return {"gaussian-haar-mixture",
            host,
            mu1,
            mu2,
            equation_from_token("r1.2", 1, -3),
            FormPair{1, 1, 1, -3},
            Verdict::Verified,
            DistributionClass::Outside,
            DistributionClass::GaussianTimesIdempotent,
            default_witness_points(host),
            "Gaussian times a half-weight coset table against Gaussian times subgroup Haar; "
            "only the second factor stays in the Gaussian-with-idempotent class"};
}

ConstructionResult gaussian_haar_mixture() {
    PrimeProfile profile;
    profile.set(2, PrimeProfile::Multiplicity::unbounded());
    profile.set(3, PrimeProfile::Multiplicity::unbounded());
    return gaussian_haar_mixture(profile);
}

ConstructionResult gaussian_ray(const Int& p, const Int& q, const PrimeProfile& profile,
                                const Rational& scale, bool force) {
    if (p == 0 || q == 0) throw std::invalid_argument("coefficients must be nonzero");
    if (scale <= 0) throw std::invalid_argument("scale must be positive");
    bool opposite_signs = (p > 0) != (q > 0);
    if (!force) {
        CaseSpec{p, q, profile}.validate();
        if (!opposite_signs)
            throw std::invalid_argument(
                "same-sign coefficients admit no Gaussian pair; force builds a control");
    }

    GroupTag host = GroupTag::rational_group(profile);
    Int ap = abs(p), aq = abs(q);
    Rational l1 = Rational(aq) * scale, l2 = Rational(ap) * scale;
    CharFnExpr mu1 = CharFnExpr::gaussian(host, l1);
    CharFnExpr mu2 = CharFnExpr::gaussian(host, l2);

    std::ostringstream note;
    note << "Gaussian exponents (" << format_rational(l1) << ", " << format_rational(l2) << ")";
    if (!opposite_signs) note << "; same-sign control, constraint cannot balance";

    return {"gaussian-ray",
            host,
            mu1,
            mu2,
            symmetry_equation(p, q),
            FormPair{1, 1, p, q},
            opposite_signs ? Verdict::Verified : Verdict::Violated,
            DistributionClass::Gaussian,
            DistributionClass::Gaussian,
            default_witness_points(host),
            note.str()};
}

std::vector<std::string> construction_families() {
    return {"torsion-mod2",  "torsion-odd",           "split-composite",
            "split-unit-factor", "gaussian-haar-mixture", "gaussian-ray"};
}

ConstructionResult build_construction(const ConstructionRequest& req) {
    auto profile_or_throw = [&]() -> const PrimeProfile& {
        if (!req.profile)
            throw std::invalid_argument("family " + req.family + " needs a host profile");
        return *req.profile;
    };
    auto fixed_unit_p = [&]() {
        if (req.p != 1)
            throw std::invalid_argument("family " + req.family +
                                        " fixes the first coefficient at 1");
    };

    if (req.family == "torsion-mod2") {
        fixed_unit_p();
        return torsion_mod2(req.q, req.c, req.force);
    }
    if (req.family == "torsion-odd") {
        fixed_unit_p();
        return torsion_odd(req.q, req.c);
    }
    if (req.family == "split-composite")
        return split_composite(req.p, req.q, profile_or_throw(), req.c);
    if (req.family == "split-unit-factor") {
        fixed_unit_p();
        if (req.q1.has_value() != req.q2.has_value())
            throw std::invalid_argument("give both factors of q or neither");
        Int q1, q2;
        if (req.q1) {
            q1 = *req.q1;
            q2 = *req.q2;
            if (q1 * q2 != req.q && req.q != 1)
                throw std::invalid_argument("factors do not multiply to q");
        } else {
            Int aq = abs(req.q);
            auto primes = factorize(aq);
            if (primes.empty())
                throw std::invalid_argument("q must be composite");
            q1 = primes.begin()->first;
            q2 = req.q / q1;
            if (abs(q2) <= 1)
                throw std::invalid_argument("q = " + req.q.str() +
                                            " is not composite; give explicit factors");
        }
        return split_unit_factor(q1, q2, profile_or_throw(), req.c);
    }
    if (req.family == "gaussian-haar-mixture")
        return req.profile ? gaussian_haar_mixture(*req.profile) : gaussian_haar_mixture();
    if (req.family == "gaussian-ray")
        return gaussian_ray(req.p, req.q, profile_or_throw(), req.scale, req.force);
    throw std::invalid_argument("unknown construction family: " + req.family);
}

}  // namespace solenoid
