#pragma once

// Ready-made distribution pairs for the conditional-symmetry analysis.  Each
// family bundles the two characteristic functions, the host group, the
// identity they answer to, the verdict the verification engine is expected
// to return, and the classification each factor is expected to receive.
// Force flags skip the admissibility checks so that known-bad parameter
// choices can serve as negative controls; the expected verdict flips with
// them.

#include "solenoid/charfn.hpp"
#include "solenoid/classify.hpp"
#include "solenoid/equation.hpp"
#include "solenoid/verify.hpp"

namespace solenoid {

// Coefficient pair (p, q) of the linear forms x1 + x2 and p x1 + q x2,
// checked against a host profile: nonzero, coprime, and multiplication by
// p, q, p + q and p - q must each be an automorphism there.
struct CaseSpec {
    Int p = 1;
    Int q = 1;
    PrimeProfile profile;

    void validate() const;  // throws std::invalid_argument with the failing condition
};

struct ConstructionResult {
    std::string family;
    GroupTag host;
    CharFnExpr mu1;
    CharFnExpr mu2;
    EquationSpec equation;
    FormPair forms;  // the linear forms behind the equation
    Verdict expected = Verdict::Inconclusive;
    DistributionClass expected_class1 = DistributionClass::Unknown;
    DistributionClass expected_class2 = DistributionClass::Unknown;
    std::vector<Rational> class_points;  // sample the classification runs over
    std::string note;
};

// Identical factors carried by a two-point table on the order-2 torsion
// subgroup of the 2-primary dual.  Valid for |q| = 2 or q = 3 (mod 4), with
// 0 < |c| < 1; forced builds accept any nonzero q and expect a violation
// when q is outside that range.
ConstructionResult torsion_mod2(const Int& q, const Rational& c = Rational(1, 3),
                                bool force = false);

// Identical factors for q = 4m + 1, m outside {0, -1}: a constant-off-zero
// table on the full torsion subgroup of order |2m + 1|, hosted on the
// product of Prufer groups of its distinct primes.  There q acts as
// negation, so the identity holds on the nose.
ConstructionResult torsion_odd(const Int& q, const Rational& c = Rational(1, 3));

// Coefficients with |p| > 1, |q| > 1: tables pulled back from H/pH and
// H/qH where H is the local subgroup at the primes of p - q.  Both scaled
// subgroups carry value 1, which makes each factor blind to its own
// coefficient shift.
ConstructionResult split_composite(const Int& p, const Int& q, const PrimeProfile& profile,
                                   const Rational& c = Rational(1, 3));

// Unit first coefficient and composite second, q = q1 * q2 with |qj| > 1:
// tables pulled back from H/q1H and H/q2H with H local at the primes of
// q - 1, answering to the split identity with forms (q1, 1) and (1, q2).
ConstructionResult split_unit_factor(const Int& q1, const Int& q2, const PrimeProfile& profile,
                                     const Rational& c = Rational(1, 3));

// The pair for coefficients (1, -3): a Gaussian times a three-coset table
// against a Gaussian times a subgroup Haar factor.  The first factor falls
// outside the Gaussian-with-idempotent class, the second sits inside it.
ConstructionResult gaussian_haar_mixture(const PrimeProfile& profile);
ConstructionResult gaussian_haar_mixture();

// Pure Gaussian pair with exponents (|q|, |p|) * scale, the ray that solves
// the symmetry constraint exactly when pq < 0.  Forced builds accept pq > 0
// and expect a violation.
ConstructionResult gaussian_ray(const Int& p, const Int& q, const PrimeProfile& profile,
                                const Rational& scale = Rational(1), bool force = false);

// Family tags in catalog order.
std::vector<std::string> construction_families();

// Uniform entry point used by the command line and the suite runner.
struct ConstructionRequest {
    std::string family;
    Int p = 1;
    Int q = 1;
    std::optional<Int> q1;  // split-unit-factor: explicit factors of q
    std::optional<Int> q2;
    Rational c = Rational(1, 3);
    Rational scale = Rational(1);
    std::optional<PrimeProfile> profile;  // required by the rational-host families
    bool force = false;
};

ConstructionResult build_construction(const ConstructionRequest& req);

}  // namespace solenoid
