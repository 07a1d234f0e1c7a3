#include "solenoid/finmodel.hpp"

#include <random>

namespace solenoid {

namespace {

std::size_t size_of(const Int& n) { return n.convert_to<std::size_t>(); }

std::size_t index_mod(const Int& value, const Int& n) {
    Int m = ((value % n) + n) % n;
    return size_of(m);
}

void require_same_order(const FiniteCharFn& f0, const FiniteCharFn& f1) {
    if (f0.order != f1.order)
        throw std::invalid_argument("model functions have different orders");
    if (Int(f0.values.size()) != f0.order || Int(f1.values.size()) != f1.order)
        throw std::invalid_argument("model function table size does not match its order");
}

Cyclo side_value(const std::vector<EquationTerm>& side, const FiniteCharFn& f0,
                 const FiniteCharFn& f1, const Int& u, const Int& v, const Int& n) {
    Cyclo acc = cyclo_one(n);
    for (const auto& term : side) {
        const FiniteCharFn& f = term.fn == 0 ? f0 : f1;
        acc = cyclo_mul(acc, f.values[index_mod(term.u_coeff * u + term.v_coeff * v, n)]);
    }
    return acc;
}

ModelReport run_model_kernel(const EquationSpec& eq, const FiniteCharFn& f0,
                             const FiniteCharFn& f1, bool parallel) {
    require_same_order(f0, f1);
    const Int n = f0.order;
    cyclotomic_polynomial(n);  // warm the memo outside the parallel region
    const long long ns = static_cast<long long>(size_of(n));
    const long long total = ns * ns;
    long long violation = total;

    if (parallel) {
#pragma omp parallel for schedule(dynamic, 16) reduction(min : violation)
        for (long long i = 0; i < total; ++i) {
            Int u(i / ns), v(i % ns);
            Cyclo lhs = side_value(eq.lhs, f0, f1, u, v, n);
            cyclo_add_scaled(lhs, Rational(-1), side_value(eq.rhs, f0, f1, u, v, n));
            if (!cyclo_is_zero(lhs) && i < violation) violation = i;
        }
    } else {
        for (long long i = 0; i < total; ++i) {
            Int u(i / ns), v(i % ns);
            Cyclo lhs = side_value(eq.lhs, f0, f1, u, v, n);
            cyclo_add_scaled(lhs, Rational(-1), side_value(eq.rhs, f0, f1, u, v, n));
            if (!cyclo_is_zero(lhs) && i < violation) violation = i;
        }
    }

    ModelReport report;
    report.pairs_checked = static_cast<std::uint64_t>(total);
    if (violation < total) {
        report.verdict = Verdict::Violated;
        report.witness = std::make_pair(Int(violation / ns), Int(violation % ns));
    } else {
        report.verdict = Verdict::Verified;
    }
    return report;
}

EnumerationReport run_enumeration(const FiniteModel& m, const PMF& p0, const PMF& p1,
                                  const FormPair& forms, bool parallel) {
    validate_pmf(p0);
    validate_pmf(p1);
    const std::size_t n = size_of(m.order);
    if (p0.size() != n || p1.size() != n)
        throw std::invalid_argument("pmf size does not match the model order");

    // joint[h][g] = P(L1 = h, L2 = g); rows are independent work items.  In
    // row h the second variable solves a2*x2 == h - a1*x1 (mod n): either
    // gcd(a2, n) divides the residue and there are exactly gcd(a2, n)
    // equally spaced solutions, or the pair contributes nothing.
    const Int d = gcd(((forms.a2 % m.order) + m.order) % m.order, m.order);
    const Int suborder = m.order / d;
    const Int inv = mod_inverse(forms.a2 / d, suborder);
    const std::size_t dn = size_of(d), step = size_of(suborder);

    std::vector<std::vector<Rational>> joint(n, std::vector<Rational>(n, Rational(0)));
    const long long hs = static_cast<long long>(n);

    auto fill_row = [&](long long h) {
        auto& row = joint[static_cast<std::size_t>(h)];
        for (std::size_t x1 = 0; x1 < n; ++x1) {
            if (p0[x1] == 0) continue;
            Int residue = Int(h) - forms.a1 * Int(x1);
            if (residue % d != 0) continue;
            std::size_t x2 = index_mod((residue / d) * inv, suborder);
            for (std::size_t t = 0; t < dn; ++t, x2 += step) {
                if (p1[x2] == 0) continue;
                row[index_mod(forms.b1 * Int(x1) + forms.b2 * Int(x2), m.order)] +=
                    p0[x1] * p1[x2];
            }
        }
    };

    if (parallel) {
#pragma omp parallel for schedule(static)
        for (long long h = 0; h < hs; ++h) fill_row(h);
    } else {
        for (long long h = 0; h < hs; ++h) fill_row(h);
    }

    EnumerationReport report;
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t g = 0; g < n; ++g)
            if (joint[h][g] != joint[h][(n - g) % n]) {
                report.symmetric = false;
                report.witness = std::make_pair(Int(h), Int(g));
                return report;
            }
    report.symmetric = true;
    return report;
}

}  // namespace

FiniteModel FiniteModel::from_orders(const std::vector<Int>& orders) {
    if (orders.empty()) throw std::invalid_argument("model needs at least one order");
    Int n = 1;
    for (const auto& k : orders) {
        if (k < 1) throw std::invalid_argument("model orders must be >= 1");
        if (gcd(n, k) != 1)
            throw std::invalid_argument("orders " + n.str() + " and " + k.str() +
                                        " are not coprime, no cyclic model exists");
        n *= k;
    }
    return FiniteModel{n};
}

void validate_pmf(const PMF& p) {
    if (p.empty()) throw std::invalid_argument("empty pmf");
    Rational total = 0;
    for (const auto& w : p) {
        if (w < 0) throw std::invalid_argument("pmf mass must be >= 0");
        total += w;
    }
    if (total != 1) throw std::invalid_argument("pmf must sum to 1");
}

FiniteCharFn pmf_to_charfn(const FiniteModel& m, const PMF& p) {
    validate_pmf(p);
    const std::size_t n = size_of(m.order);
    if (p.size() != n) throw std::invalid_argument("pmf size does not match the model order");
    FiniteCharFn f{m.order, {}};
    f.values.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        Cyclo v = cyclo_zero(m.order);
        for (std::size_t x = 0; x < n; ++x) v[(j * x) % n] += p[x];
        f.values.push_back(std::move(v));
    }
    return f;
}

PMF charfn_to_pmf(const FiniteCharFn& f) {
    const std::size_t n = f.values.size();
    if (Int(n) != f.order) throw std::invalid_argument("table size does not match order");
    PMF out(n, Rational(0));
    for (std::size_t x = 0; x < n; ++x) {
        Cyclo acc = cyclo_zero(f.order);
        for (std::size_t j = 0; j < n; ++j) {
            const Cyclo& v = f.values[j];
            // v * zeta^{-xj}: rotate the coefficients down by xj.
            std::size_t shift = (x * j) % n;
            for (std::size_t k = 0; k < n; ++k) acc[(k + n - shift) % n] += v[k];
        }
        auto mass = cyclo_rational(acc);
        if (!mass)
            throw std::invalid_argument("inverse transform gave an irrational mass at point " +
                                        std::to_string(x));
        Rational value = *mass / Rational(n);
        if (value < 0)
            throw std::invalid_argument("inverse transform gave negative mass at point " +
                                        std::to_string(x));
        out[x] = value;
    }
    validate_pmf(out);
    return out;
}

FiniteCharFn finite_restriction(const CharFnExpr& f, const Int& n) {
    if (n < 1) throw std::invalid_argument("restriction order must be >= 1");
    if (!f.host().is_mod_one())
        throw std::invalid_argument("restriction needs a torsion host; " + f.host().describe() +
                                    " is torsion free and has no finite quotients");
    FiniteCharFn out{n, {}};
    const std::size_t ns = size_of(n);
    out.values.reserve(ns);
    for (std::size_t j = 0; j < ns; ++j) {
        Rational y(Int(j), n);
        if (!f.host().contains(y))
            throw std::invalid_argument("host has no order-" + n.str() + " torsion point " +
                                        format_rational(y));
        CFValue v = f.eval(f.host().reduce(y));
        if (!v.is_exact() || v.exponent() != 0)
            throw std::invalid_argument("restriction needs exact values without an exponential "
                                        "factor; got " +
                                        v.describe());
        Cyclo cell = cyclo_zero(n);
        if (!v.is_zero()) {
            const Rational& turns = v.phase().turns();
            if (n % den(turns) != 0)
                throw std::invalid_argument("phase " + format_rational(turns) +
                                            " is not an order-" + n.str() + " root of unity");
            cell[size_of((num(turns) * (n / den(turns))) % n)] = v.coeff();
        }
        out.values.push_back(std::move(cell));
    }
    return out;
}

ModelReport verify_model_equation(const EquationSpec& eq, const FiniteCharFn& f0,
                                  const FiniteCharFn& f1) {
    return run_model_kernel(eq, f0, f1, true);
}

ModelReport verify_model_equation_serial(const EquationSpec& eq, const FiniteCharFn& f0,
                                         const FiniteCharFn& f1) {
    return run_model_kernel(eq, f0, f1, false);
}

EnumerationReport conditional_symmetry_enumerate(const FiniteModel& m, const PMF& p0,
                                                 const PMF& p1, const FormPair& forms) {
    return run_enumeration(m, p0, p1, forms, true);
}

EnumerationReport conditional_symmetry_enumerate_serial(const FiniteModel& m, const PMF& p0,
                                                        const PMF& p1, const FormPair& forms) {
    return run_enumeration(m, p0, p1, forms, false);
}

EnumerationReport conditional_symmetry_enumerate(const FiniteModel& m, const PMF& p0,
                                                 const PMF& p1, const Int& p, const Int& q) {
    return run_enumeration(m, p0, p1, {1, 1, p, q}, true);
}

EnumerationReport conditional_symmetry_enumerate_serial(const FiniteModel& m, const PMF& p0,
                                                        const PMF& p1, const Int& p,
                                                        const Int& q) {
    return run_enumeration(m, p0, p1, {1, 1, p, q}, false);
}

CrossValidation crossvalidate(const FiniteModel& m, const FiniteCharFn& f0,
                              const FiniteCharFn& f1, const FormPair& forms) {
    CrossValidation cv;
    cv.equation = verify_model_equation(form_symmetry_equation(forms), f0, f1).verdict;
    EnumerationReport enumerated =
        conditional_symmetry_enumerate(m, charfn_to_pmf(f0), charfn_to_pmf(f1), forms);
    cv.enumeration_symmetric = enumerated.symmetric;
    cv.agree = (cv.equation == Verdict::Verified) == enumerated.symmetric;
    return cv;
}

CrossValidation crossvalidate(const FiniteModel& m, const FiniteCharFn& f0,
                              const FiniteCharFn& f1, const Int& p, const Int& q) {
    return crossvalidate(m, f0, f1, FormPair{1, 1, p, q});
}

std::vector<std::pair<Int, Int>> sample_forms(const FiniteModel& m, const PMF& p0,
                                              const PMF& p1, const Int& p, const Int& q,
                                              std::size_t count, std::uint64_t seed) {
    validate_pmf(p0);
    validate_pmf(p1);
    const std::size_t n = size_of(m.order);
    if (p0.size() != n || p1.size() != n)
        throw std::invalid_argument("pmf size does not match the model order");

    // Exact cumulative thresholds scaled by 2^64; the final threshold is the
    // full 2^64, kept as a big integer so the comparison never overflows.
    const Int scale = pow_int(2, 64);
    auto thresholds = [&](const PMF& pmf) {
        std::vector<Int> t;
        t.reserve(n);
        Rational cum = 0;
        for (const auto& w : pmf) {
            cum += w;
            t.push_back(floor_rational(cum * Rational(scale)));
        }
        t.back() = scale;
        return t;
    };
    std::vector<Int> t0 = thresholds(p0), t1 = thresholds(p1);

    std::mt19937_64 gen(seed);
    auto draw = [&](const std::vector<Int>& t) {
        Int r(static_cast<std::uint64_t>(gen()));
        std::size_t lo = 0, hi = t.size() - 1;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (r < t[mid]) hi = mid;
            else lo = mid + 1;
        }
        return lo;
    };

    std::vector<std::pair<Int, Int>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t x1 = draw(t0);
        std::size_t x2 = draw(t1);
        out.emplace_back(Int((x1 + x2) % n),
                         Int(index_mod(p * Int(x1) + q * Int(x2), m.order)));
    }
    return out;
}

}  // namespace solenoid
