#pragma once

// Product identities between two characteristic functions over a dual grid.
// A term stands for f_{fn}(u_coeff * u + v_coeff * v); an equation asserts
// that the product of its left terms equals the product of its right terms
// for every pair (u, v).

#include "solenoid/rational.hpp"

#include <string>
#include <vector>

namespace solenoid {

struct EquationTerm {
    int fn = 0;  // index of the characteristic function (0 or 1)
    Int u_coeff;
    Int v_coeff;
};

struct EquationSpec {
    std::string name;
    std::vector<EquationTerm> lhs;
    std::vector<EquationTerm> rhs;
};

// Coefficients of a pair of linear forms in two independent variables:
// L1 = a1 x1 + a2 x2 and L2 = b1 x1 + b2 x2.
struct FormPair {
    Int a1 = 1;
    Int a2 = 1;
    Int b1 = 1;
    Int b2 = 1;
};

// f0(a1 u + b1 v) f1(a2 u + b2 v) == f0(a1 u - b1 v) f1(a2 u - b2 v):
// conditional symmetry of L2 given L1 for general form coefficients.
EquationSpec form_symmetry_equation(const FormPair& forms);

// f0(u + p v) f1(u + q v) == f0(u - p v) f1(u - q v): conditional symmetry
// of the second linear form given the first.
EquationSpec symmetry_equation(const Int& p, const Int& q);

// f0(q1 u + v) f1(u + q2 v) == f0(q1 u - v) f1(u - q2 v): the working
// identity for pairs whose first coefficient is a unit and whose second
// splits as q1 * q2.
EquationSpec unit_factor_equation(const Int& q1, const Int& q2);

// f0(u + a v) f1(u + b v) == f0(u) f0(a v) f1(u) f1(b v): independence of
// the two linear forms.
EquationSpec independence_equation(const Int& a, const Int& b);

// Independence form induced by a symmetry pair (p, q); coefficients 4pq and
// (p + q)^2.
EquationSpec derived_independence_equation(const Int& p, const Int& q);

// Two-variable consequence of symmetry with coefficients (e1, e2):
// f0((e1+e2)u + 2 e1 v) f1(2 e2 u + (e1+e2)v)
//   == f0((e1+e2)u) f1(2 e2 u) f0(2 e1 v) f1((e1+e2)v).
EquationSpec paired_consequence_equation(const Int& e1, const Int& e2);

// The same consequence for a general form premise.  Rescaling x1 by a1 and
// x2 by a2 (both must act invertibly on the carrier) turns the form premise
// into plain symmetry with coefficients (a2 b1, a1 b2); the induced
// independent pair pulls back to
//   M1 = s a1 x1 + 2 a1 a2 b2 x2,  M2 = 2 a1 a2 b1 x1 + s a2 x2
// with s = a2 b1 + a1 b2.  Coincides with paired_consequence_equation(b1, b2)
// when a1 = a2 = 1.
EquationSpec form_paired_consequence_equation(const FormPair& forms);

// Single-variable marginals of the derived independence form (v unused):
// f0((p-q)^2 u) == f0((p+q)^2 u) f0(4pq u) f1((p+q)^2 u)^2 and
// f1((p-q)^2 u) == f0(4pq u) f1(4pq u) f1((p+q)^2 u).
EquationSpec first_marginal_equation(const Int& p, const Int& q);
EquationSpec second_marginal_equation(const Int& p, const Int& q);

// Catalog lookup by CLI token; p and q feed the parametrized entries.
EquationSpec equation_from_token(const std::string& token, const Int& p, const Int& q);
std::vector<std::string> equation_tokens();

}  // namespace solenoid
