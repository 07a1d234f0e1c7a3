#pragma once

// Finite-quotient oracle.  Distributions on a cyclic group Z(n) are handled
// by exact enumeration, with characteristic functions carried as cyclotomic
// values.  The point: the equation scan and the joint-distribution
// enumeration are two independent roads to the same verdict, so running both
// cross-checks the verification engine against elementary probability.

#include "solenoid/charfn.hpp"
#include "solenoid/cyclotomic.hpp"
#include "solenoid/equation.hpp"
#include "solenoid/verify.hpp"

#include <cstdint>

namespace solenoid {

struct FiniteModel {
    Int order;

    // Coprime orders combine into one cyclic group; anything else has no
    // single-cycle model and is rejected.
    static FiniteModel from_orders(const std::vector<Int>& orders);
};

using PMF = std::vector<Rational>;

void validate_pmf(const PMF& p);

// Characteristic function on Z(n): values at the dual points j/n.
struct FiniteCharFn {
    Int order;
    std::vector<Cyclo> values;
};

FiniteCharFn pmf_to_charfn(const FiniteModel& m, const PMF& p);

// Exact inverse transform.  Throws when some mass comes out irrational or
// negative, i.e. the input was not the characteristic function of a
// distribution on Z(n).
PMF charfn_to_pmf(const FiniteCharFn& f);

// Restriction of a solenoid characteristic function to the points j/n: the
// characteristic function of the projected distribution on the order-n
// quotient.  Requires a torsion host (rational hosts are torsion free, so
// their groups have no finite quotients), exact values with no exponential
// part, and phases compatible with n.
FiniteCharFn finite_restriction(const CharFnExpr& f, const Int& n);

struct ModelReport {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<std::pair<Int, Int>> witness;  // dual indices (u, v)
    std::uint64_t pairs_checked = 0;
};

ModelReport verify_model_equation(const EquationSpec& eq, const FiniteCharFn& f0,
                                  const FiniteCharFn& f1);
ModelReport verify_model_equation_serial(const EquationSpec& eq, const FiniteCharFn& f0,
                                         const FiniteCharFn& f1);

struct EnumerationReport {
    bool symmetric = false;
    std::optional<std::pair<Int, Int>> witness;  // (h, g): P(h, g) != P(h, -g)
};

// Joint law of L1 = a1 x1 + a2 x2, L2 = b1 x1 + b2 x2 with independent
// xi ~ pi, tested for conditional symmetry of L2 given L1.
EnumerationReport conditional_symmetry_enumerate(const FiniteModel& m, const PMF& p0,
                                                 const PMF& p1, const FormPair& forms);
EnumerationReport conditional_symmetry_enumerate_serial(const FiniteModel& m, const PMF& p0,
                                                        const PMF& p1, const FormPair& forms);

// The plain symmetry pair: L1 = x1 + x2, L2 = p x1 + q x2.
EnumerationReport conditional_symmetry_enumerate(const FiniteModel& m, const PMF& p0,
                                                 const PMF& p1, const Int& p, const Int& q);
EnumerationReport conditional_symmetry_enumerate_serial(const FiniteModel& m, const PMF& p0,
                                                        const PMF& p1, const Int& p,
                                                        const Int& q);

struct CrossValidation {
    Verdict equation = Verdict::Inconclusive;
    bool enumeration_symmetric = false;
    bool agree = false;
};

// The functional-equation verdict and the enumeration verdict must coincide
// on finite groups; agree records whether they did.
CrossValidation crossvalidate(const FiniteModel& m, const FiniteCharFn& f0,
                              const FiniteCharFn& f1, const FormPair& forms);
CrossValidation crossvalidate(const FiniteModel& m, const FiniteCharFn& f0,
                              const FiniteCharFn& f1, const Int& p, const Int& q);

// Samples of (L1, L2).  Cumulative thresholds are scaled to 2^64 exactly, so
// equal seeds give equal streams on any platform.
std::vector<std::pair<Int, Int>> sample_forms(const FiniteModel& m, const PMF& p0,
                                              const PMF& p1, const Int& p, const Int& q,
                                              std::size_t count, std::uint64_t seed);

}  // namespace solenoid
