#pragma once

// Positive-semidefiniteness checks for Gram matrices G[j][k] = f(y_j - y_k).
// Rational symmetric matrices get an exact answer by symmetric elimination
// with diagonal pivoting: a symmetric matrix is PSD iff the elimination never
// meets a negative diagonal entry and any all-zero diagonal forces an
// all-zero remaining block.  (Leading minors alone cannot decide
// semidefiniteness: diag(0, -1) has every leading minor zero.)  Matrices with
// irrational or float entries fall back to an eigenvalue bound.

#include "solenoid/charfn.hpp"

namespace solenoid {

bool exact_psd_rational(std::vector<std::vector<Rational>> a);

struct PsdReport {
    bool hermitian = false;
    bool psd = false;
    bool exact_path = false;    // verdict from the rational elimination
    double min_eigenvalue = 0;  // float diagnostic, also on the exact path
    std::string note;
};

PsdReport psd_check(const CharFnExpr& f, const std::vector<Rational>& points, double tol);

}  // namespace solenoid
