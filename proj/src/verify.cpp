#include "solenoid/verify.hpp"

#include <array>
#include <sstream>

namespace solenoid {

namespace {

void require_shared_host(const CharFnExpr& f0, const CharFnExpr& f1) {
    if (f0.host() != f1.host())
        throw std::invalid_argument("equation needs both functions on one host, got " +
                                    f0.host().describe() + " and " + f1.host().describe());
}

Witness make_witness(const EquationSpec& eq, const CharFnExpr& f0, const CharFnExpr& f1,
                     const Rational& u, const Rational& v) {
    CFValue lhs = evaluate_side(eq.lhs, f0, f1, u, v);
    CFValue rhs = evaluate_side(eq.rhs, f0, f1, u, v);
    return Witness{u, v, lhs.describe(), rhs.describe()};
}

// Shared by the parallel kernel and the serial reference so that both
// produce bitwise-identical reports.
VerificationReport finish_report(const EquationSpec& eq, const CharFnExpr& f0,
                                 const CharFnExpr& f1, const std::vector<Rational>& grid,
                                 double tol, long long violation, std::uint64_t exact) {
    const long long n = static_cast<long long>(grid.size());
    VerificationReport report;
    report.pairs_checked = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    report.exact_pairs = exact;
    report.tolerance = tol;
    if (n == 0) {
        report.verdict = Verdict::Inconclusive;
        report.note = eq.name + " checked on an empty grid";
    } else if (violation < n * n) {
        report.verdict = Verdict::Violated;
        report.witness = make_witness(eq, f0, f1, grid[violation / n], grid[violation % n]);
        report.note = eq.name + " fails on " + std::to_string(report.pairs_checked) + " pairs";
    } else {
        report.verdict = Verdict::Verified;
        report.note = eq.name + " holds on all " + std::to_string(report.pairs_checked) + " pairs";
    }
    return report;
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Verified: return "VERIFIED";
        case Verdict::Violated: return "VIOLATED";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

CFValue evaluate_side(const std::vector<EquationTerm>& side, const CharFnExpr& f0,
                      const CharFnExpr& f1, const Rational& u, const Rational& v) {
    const GroupTag& host = f0.host();
    CFValue acc = CFValue::exact_real(Rational(1));
    for (const auto& term : side) {
        if (term.fn != 0 && term.fn != 1)
            throw std::invalid_argument("equation term refers to function " +
                                        std::to_string(term.fn));
        Rational arg = host.reduce(Rational(term.u_coeff) * u + Rational(term.v_coeff) * v);
        acc = acc * (term.fn == 0 ? f0 : f1).eval(arg);
        if (acc.is_zero()) break;  // exact zero absorbs
    }
    return acc;
}

VerificationReport verify_equation(const EquationSpec& eq, const CharFnExpr& f0,
                                   const CharFnExpr& f1, const std::vector<Rational>& grid,
                                   double tol) {
    require_shared_host(f0, f1);
    const long long n = static_cast<long long>(grid.size());
    const long long total = n * n;
    long long violation = total;
    long long exact = 0;

#pragma omp parallel for schedule(dynamic, 64) reduction(min : violation) reduction(+ : exact)
    for (long long i = 0; i < total; ++i) {
        const Rational& u = grid[i / n];
        const Rational& v = grid[i % n];
        CFValue lhs = evaluate_side(eq.lhs, f0, f1, u, v);
        CFValue rhs = evaluate_side(eq.rhs, f0, f1, u, v);
        if (lhs.is_exact() && rhs.is_exact()) ++exact;
        if (!CFValue::equal(lhs, rhs, tol) && i < violation) violation = i;
    }
    return finish_report(eq, f0, f1, grid, tol, violation, static_cast<std::uint64_t>(exact));
}

VerificationReport verify_equation_serial(const EquationSpec& eq, const CharFnExpr& f0,
                                          const CharFnExpr& f1,
                                          const std::vector<Rational>& grid, double tol) {
    require_shared_host(f0, f1);
    const long long n = static_cast<long long>(grid.size());
    const long long total = n * n;
    long long violation = total;
    long long exact = 0;
    for (long long i = 0; i < total; ++i) {
        const Rational& u = grid[i / n];
        const Rational& v = grid[i % n];
        CFValue lhs = evaluate_side(eq.lhs, f0, f1, u, v);
        CFValue rhs = evaluate_side(eq.rhs, f0, f1, u, v);
        if (lhs.is_exact() && rhs.is_exact()) ++exact;
        if (!CFValue::equal(lhs, rhs, tol) && i < violation) violation = i;
    }
    return finish_report(eq, f0, f1, grid, tol, violation, static_cast<std::uint64_t>(exact));
}

std::optional<VerificationReport> verify_gaussian_symbolic(const EquationSpec& eq,
                                                           const CharFnExpr& f0,
                                                           const CharFnExpr& f1) {
    require_shared_host(f0, f1);
    if (f0.kind() != NodeKind::Gaussian || f1.kind() != NodeKind::Gaussian) return std::nullopt;
    const Rational l0 = f0.data<CharFnExpr::GaussianData>().lambda;
    const Rational l1 = f1.data<CharFnExpr::GaussianData>().lambda;

    // Each side is exp(-(A u^2 + B uv + C v^2)); collect the form exactly.
    auto form = [&](const std::vector<EquationTerm>& side) {
        Rational a = 0, b = 0, c = 0;
        for (const auto& t : side) {
            const Rational& l = t.fn == 0 ? l0 : l1;
            a += l * t.u_coeff * t.u_coeff;
            b += l * 2 * t.u_coeff * t.v_coeff;
            c += l * t.v_coeff * t.v_coeff;
        }
        return std::array<Rational, 3>{a, b, c};
    };
    auto left = form(eq.lhs);
    auto right = form(eq.rhs);

    VerificationReport report;
    report.tolerance = 0;
    report.exact_pairs = 0;
    report.pairs_checked = 0;
    if (left == right) {
        report.verdict = Verdict::Verified;
        report.note = eq.name + " holds identically: both sides are exp(-(" +
                      format_rational(left[0]) + "u^2 + " + format_rational(left[1]) + "uv + " +
                      format_rational(left[2]) + "v^2))";
        return report;
    }
    // Pick the unit pair separating the two forms.
    Rational u = 1, v = 1;
    if (left[0] != right[0]) v = 0;
    else if (left[2] != right[2]) u = 0;
    report.verdict = Verdict::Violated;
    auto value = [](const std::array<Rational, 3>& f, const Rational& uu, const Rational& vv) {
        return CFValue::exact(Rational(1), Phase(),
                              f[0] * uu * uu + f[1] * uu * vv + f[2] * vv * vv);
    };
    report.witness = Witness{u, v, value(left, u, v).describe(), value(right, u, v).describe()};
    report.note = eq.name + " fails as a quadratic-form identity";
    return report;
}

bool gaussian_pair_constraint(const Int& c1, const Int& c2, const Rational& l1,
                              const Rational& l2) {
    return l1 * c1 + l2 * c2 == 0;
}

std::optional<std::pair<Rational, Rational>> gaussian_symmetry_pair(const Int& p, const Int& q) {
    if (p * q >= 0) return std::nullopt;
    Int ap = abs(p), aq = abs(q);
    return std::make_pair(Rational(aq), Rational(ap));
}

NonvanishingReport nonvanishing_subgroup_scan(const CharFnExpr& f0, const CharFnExpr& f1,
                                              const Int& a, const Int& b,
                                              const DualElement& y0, int span) {
    require_shared_host(f0, f1);
    if (y0.host != f0.host())
        throw std::invalid_argument("base point lives on a different host");
    Int c = abs(a - b);
    if (c == 0) throw std::invalid_argument("coefficients must differ");
    auto z0 = divide_exact(y0, c);
    if (!z0)
        throw std::invalid_argument("base point " + format_rational(y0.value) +
                                    " is not divisible by " + c.str() + " in this host");

    NonvanishingReport report;
    report.generator = f0.host().reduce(z0->value * Rational(a * b));
    for (int k = -span; k <= span; ++k) {
        if (k == 0) continue;
        Rational y = f0.host().reduce(report.generator * Rational(k));
        for (const CharFnExpr* f : {&f0, &f1}) {
            ++report.checked;
            if (f->eval(y).is_zero()) {
                report.zero_at = y;
                report.holds = false;
                return report;
            }
        }
    }
    report.holds = true;
    return report;
}

std::optional<Rational> fit_quadratic_exponent(
    const std::function<CFValue(const DualElement&)>& fn, const GroupTag& host,
    const std::vector<Rational>& points) {
    // phi(y) is read off the exact exponent; any other shape of value means
    // the modulus is not a pure exponential of a rational.
    auto phi = [&](const Rational& y) -> std::optional<Rational> {
        CFValue v = fn(DualElement(host.reduce(y), host));
        if (!v.is_exact() || v.is_zero()) return std::nullopt;
        if (v.coeff() != 1 || !v.phase().is_one()) return std::nullopt;
        return v.exponent();
    };

    Rational num_acc = 0, den_acc = 0;
    std::vector<std::pair<Rational, Rational>> sampled;
    for (const auto& p : points) {
        Rational y = host.reduce(p);
        if (y == 0) {
            auto at_zero = phi(y);
            if (!at_zero || *at_zero != 0) return std::nullopt;
            continue;
        }
        auto e = phi(y);
        auto e_neg = phi(-y);
        if (!e || !e_neg || *e != *e_neg) return std::nullopt;  // phi must be even
        // Third difference along the ray y, 2y, 3y vanishes for quadratics.
        auto e2 = phi(y * 2);
        auto e3 = phi(y * 3);
        if (!e2 || !e3) return std::nullopt;
        if (*e3 - 3 * (*e2) + 3 * (*e) != 0) return std::nullopt;
        sampled.emplace_back(y, *e);
        num_acc += *e * square(y);
        den_acc += square(square(y));
    }
    if (sampled.empty() || den_acc == 0) return std::nullopt;
    Rational lambda = num_acc / den_acc;
    if (lambda < 0) return std::nullopt;
    for (const auto& [y, e] : sampled)
        if (e != lambda * square(y)) return std::nullopt;
    return lambda;
}

ImplicationReport check_consequence(const EquationSpec& premise,
                                    const std::vector<EquationSpec>& consequences,
                                    const CharFnExpr& f0, const CharFnExpr& f1,
                                    const std::vector<Rational>& grid, double tol) {
    ImplicationReport report;
    VerificationReport first = verify_equation(premise, f0, f1, grid, tol);
    report.premise = first.verdict;
    if (first.verdict != Verdict::Verified) {
        report.consequences = Verdict::Inconclusive;
        report.note = "premise " + premise.name + " does not hold, consequences not probative";
        return report;
    }
    for (const auto& eq : consequences) {
        VerificationReport r = verify_equation(eq, f0, f1, grid, tol);
        if (r.verdict != Verdict::Verified) {
            report.consequences = Verdict::Violated;
            report.note = "premise holds but " + eq.name + " fails";
            return report;
        }
    }
    report.consequences = Verdict::Verified;
    report.note = "premise and all " + std::to_string(consequences.size()) +
                  " consequences hold on the grid";
    return report;
}

}  // namespace solenoid
