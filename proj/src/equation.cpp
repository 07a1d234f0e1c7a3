#include "solenoid/equation.hpp"

#include <sstream>
#include <stdexcept>

namespace solenoid {

namespace {

std::string tag(const std::string& head, const Int& p, const Int& q) {
    std::ostringstream os;
    os << head << "(" << p.str() << "," << q.str() << ")";
    return os.str();
}

}  // namespace

EquationSpec form_symmetry_equation(const FormPair& forms) {
    std::ostringstream os;
    os << "form-symmetry(" << forms.a1.str() << "," << forms.a2.str() << ";" << forms.b1.str()
       << "," << forms.b2.str() << ")";
    return {os.str(),
            {{0, forms.a1, forms.b1}, {1, forms.a2, forms.b2}},
            {{0, forms.a1, -forms.b1}, {1, forms.a2, -forms.b2}}};
}

EquationSpec symmetry_equation(const Int& p, const Int& q) {
    EquationSpec eq = form_symmetry_equation({1, 1, p, q});
    eq.name = tag("symmetry", p, q);
    return eq;
}

EquationSpec unit_factor_equation(const Int& q1, const Int& q2) {
    EquationSpec eq = form_symmetry_equation({q1, 1, 1, q2});
    eq.name = tag("unit-factor", q1, q2);
    return eq;
}

EquationSpec independence_equation(const Int& a, const Int& b) {
    return {tag("independence", a, b),
            {{0, 1, a}, {1, 1, b}},
            {{0, 1, 0}, {0, 0, a}, {1, 1, 0}, {1, 0, b}}};
}

EquationSpec derived_independence_equation(const Int& p, const Int& q) {
    EquationSpec eq = independence_equation(4 * p * q, (p + q) * (p + q));
    eq.name = tag("derived-independence", p, q);
    return eq;
}

EquationSpec paired_consequence_equation(const Int& e1, const Int& e2) {
    return {tag("paired-consequence", e1, e2),
            {{0, e1 + e2, 2 * e1}, {1, 2 * e2, e1 + e2}},
            {{0, e1 + e2, 0}, {1, 2 * e2, 0}, {0, 0, 2 * e1}, {1, 0, e1 + e2}}};
}

EquationSpec form_paired_consequence_equation(const FormPair& forms) {
    const Int s = forms.a2 * forms.b1 + forms.a1 * forms.b2;
    const Int m1u = s * forms.a1, m1v = 2 * forms.a1 * forms.a2 * forms.b1;
    const Int m2u = 2 * forms.a1 * forms.a2 * forms.b2, m2v = s * forms.a2;
    std::ostringstream os;
    os << "form-paired-consequence(" << forms.a1.str() << "," << forms.a2.str() << ";"
       << forms.b1.str() << "," << forms.b2.str() << ")";
    return {os.str(),
            {{0, m1u, m1v}, {1, m2u, m2v}},
            {{0, m1u, 0}, {1, m2u, 0}, {0, 0, m1v}, {1, 0, m2v}}};
}

EquationSpec first_marginal_equation(const Int& p, const Int& q) {
    Int s = (p - q) * (p - q), t = (p + q) * (p + q), m = 4 * p * q;
    return {tag("first-marginal", p, q),
            {{0, s, 0}},
            {{0, t, 0}, {0, m, 0}, {1, t, 0}, {1, t, 0}}};
}

EquationSpec second_marginal_equation(const Int& p, const Int& q) {
    Int s = (p - q) * (p - q), t = (p + q) * (p + q), m = 4 * p * q;
    return {tag("second-marginal", p, q),
            {{1, s, 0}},
            {{0, m, 0}, {1, m, 0}, {1, t, 0}}};
}

EquationSpec equation_from_token(const std::string& token, const Int& p, const Int& q) {
    if (token == "symmetry" || token == "l4.1") {
        EquationSpec eq = symmetry_equation(p, q);
        if (token == "l4.1") eq.name = tag("l4.1", p, q);
        return eq;
    }
    if (token == "independence") return independence_equation(p, q);
    if (token == "r1.2") {
        EquationSpec eq = symmetry_equation(1, -3);
        eq.name = "r1.2";
        return eq;
    }
    if (token == "l4.6") {
        EquationSpec eq = paired_consequence_equation(p, q);
        eq.name = tag("l4.6", p, q);
        return eq;
    }
    if (token == "t2.1") {
        EquationSpec eq = derived_independence_equation(p, q);
        eq.name = tag("t2.1", p, q);
        return eq;
    }
    if (token == "t2.2") {
        EquationSpec eq = first_marginal_equation(p, q);
        eq.name = tag("t2.2", p, q);
        return eq;
    }
    if (token == "t2.3") {
        EquationSpec eq = second_marginal_equation(p, q);
        eq.name = tag("t2.3", p, q);
        return eq;
    }
    throw std::invalid_argument("unknown equation token: " + token);
}

std::vector<std::string> equation_tokens() {
    return {"symmetry", "independence", "r1.2", "l4.1", "l4.6", "t2.1", "t2.2", "t2.3"};
}

}  // namespace solenoid
