#pragma once

// Exhaustive verification of product identities on dual grids.  The parallel
// kernel and the serial reference scan the same flat (u, v) index space and
// must produce identical reports; a violation always reports the pair with
// the smallest flat index.  A symbolic fast path settles pure Gaussian pairs
// by comparing quadratic forms exactly, with no grid at all.

#include "solenoid/charfn.hpp"
#include "solenoid/equation.hpp"
#include "solenoid/grid.hpp"

#include <cstdint>
#include <functional>

namespace solenoid {

enum class Verdict { Verified, Violated, Inconclusive };

const char* verdict_name(Verdict v);

struct Witness {
    Rational u;
    Rational v;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Witness> witness;
    std::uint64_t pairs_checked = 0;
    std::uint64_t exact_pairs = 0;  // pairs decided with no float comparison
    double tolerance = 0;
    std::string note;
};

// Product of one side at (u, v).
CFValue evaluate_side(const std::vector<EquationTerm>& side, const CharFnExpr& f0,
                      const CharFnExpr& f1, const Rational& u, const Rational& v);

VerificationReport verify_equation(const EquationSpec& eq, const CharFnExpr& f0,
                                   const CharFnExpr& f1, const std::vector<Rational>& grid,
                                   double tol);
VerificationReport verify_equation_serial(const EquationSpec& eq, const CharFnExpr& f0,
                                          const CharFnExpr& f1,
                                          const std::vector<Rational>& grid, double tol);

// Exact quadratic-form comparison when both functions are plain Gaussian
// factors; nullopt when the fast path does not apply.
std::optional<VerificationReport> verify_gaussian_symbolic(const EquationSpec& eq,
                                                           const CharFnExpr& f0,
                                                           const CharFnExpr& f1);

// l1 * c1 + l2 * c2 == 0: a Gaussian pair with exponents (l1, l2) satisfies
// the symmetry equation for (p, q) = (c1, c2), or the independence equation
// for (a, b) = (c1, c2), exactly when this holds.
bool gaussian_pair_constraint(const Int& c1, const Int& c2, const Rational& l1,
                              const Rational& l2);

// The ray (|q|, |p|) solves the symmetry constraint when pq < 0; no pair of
// positive exponents does when pq > 0.
std::optional<std::pair<Rational, Rational>> gaussian_symmetry_pair(const Int& p, const Int& q);

// Nonvanishing propagation: given f0(y0) != 0 and coefficients (a, b) with
// c = a - b != 0, both functions are scanned on the multiples k * (a*b*z0)
// for 0 < |k| <= span, where z0 = y0 / |c|.  A zero value falsifies the
// propagation and is reported as a witness.
struct NonvanishingReport {
    bool holds = false;
    Rational generator;
    std::optional<Rational> zero_at;
    std::uint64_t checked = 0;
};

NonvanishingReport nonvanishing_subgroup_scan(const CharFnExpr& f0, const CharFnExpr& f1,
                                              const Int& a, const Int& b,
                                              const DualElement& y0, int span);

// Fits phi(y) = -log f(y) to a single quadratic lambda * y^2 over the sample
// points.  Requires every value to be exact with coefficient 1 and trivial
// phase; checks evenness, vanishing third differences along rays, a
// least-squares fit, zero residual, and lambda >= 0.  Returns lambda on
// success.
std::optional<Rational> fit_quadratic_exponent(
    const std::function<CFValue(const DualElement&)>& fn, const GroupTag& host,
    const std::vector<Rational>& points);

// Verifies the premise, then each consequence; consequences of a failed
// premise are not evidence either way, so the combined verdict is
// Inconclusive in that case.
struct ImplicationReport {
    Verdict premise = Verdict::Inconclusive;
    Verdict consequences = Verdict::Inconclusive;
    std::string note;
};

ImplicationReport check_consequence(const EquationSpec& premise,
                                    const std::vector<EquationSpec>& consequences,
                                    const CharFnExpr& f0, const CharFnExpr& f1,
                                    const std::vector<Rational>& grid, double tol);

}  // namespace solenoid
