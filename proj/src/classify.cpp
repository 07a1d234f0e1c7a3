#include "solenoid/classify.hpp"

#include <algorithm>
#include <sstream>

namespace solenoid {

namespace {

const CharFnExpr& strip_wrappers(const CharFnExpr& f) {
    // Shifts multiply by a unit-modulus character and conjugation mirrors the
    // distribution; neither moves a function across class boundaries.
    switch (f.kind()) {
        case NodeKind::Shift:
            return strip_wrappers(f.data<CharFnExpr::ShiftData>().child.front());
        case NodeKind::Conjugate:
            return strip_wrappers(f.data<CharFnExpr::ConjugateData>().child.front());
        default:
            return f;
    }
}

bool zero_one_subgroup_torsion(const std::map<Rational, Rational>& table) {
    std::vector<Rational> ones;
    for (const auto& [y, v] : table) {
        if (v != 0 && v != 1) return false;
        if (v == 1) ones.push_back(y);
    }
    for (const auto& a : ones)
        for (const auto& b : ones) {
            Rational d = mod_one(a - b);
            auto it = table.find(d);
            if (it == table.end() || it->second != 1) return false;
        }
    return true;
}

bool zero_one_subgroup_labels(const std::vector<Rational>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> ones;
    for (std::size_t j = 0; j < n; ++j) {
        if (values[j] != 0 && values[j] != 1) return false;
        if (values[j] == 1) ones.push_back(j);
    }
    for (auto a : ones)
        for (auto b : ones)
            if (values[(a + n - b) % n] != 1) return false;
    return true;
}

// Certificate-free recognition over the expression tree.
DistributionClass structural(const CharFnExpr& expr) {
    const CharFnExpr& f = strip_wrappers(expr);
    switch (f.kind()) {
        case NodeKind::Gaussian:
            return f.data<CharFnExpr::GaussianData>().lambda > 0 ? DistributionClass::Gaussian
                                                                 : DistributionClass::Idempotent;
        case NodeKind::SubgroupIndicator:
            return DistributionClass::Idempotent;
        case NodeKind::TorsionExtension:
            return zero_one_subgroup_torsion(f.data<CharFnExpr::TorsionExtensionData>().table)
                       ? DistributionClass::Idempotent
                       : DistributionClass::Unknown;
        case NodeKind::Pullback:
            return zero_one_subgroup_labels(f.data<CharFnExpr::PullbackData>().table)
                       ? DistributionClass::Idempotent
                       : DistributionClass::Unknown;
        case NodeKind::CosetPiecewise: {
            const auto& data = f.data<CharFnExpr::CosetPiecewiseData>();
            std::vector<Rational> values(data.by_label.size());
            for (const auto& [j, v] : data.by_label) values[j.convert_to<std::size_t>()] = v;
            return zero_one_subgroup_labels(values) ? DistributionClass::Idempotent
                                                    : DistributionClass::Unknown;
        }
        case NodeKind::Product: {
            bool has_gaussian = false;
            bool has_idempotent = false;
            for (const auto& child : f.data<CharFnExpr::ProductData>().children) {
                switch (structural(child)) {
                    case DistributionClass::Gaussian: has_gaussian = true; break;
                    case DistributionClass::Idempotent: has_idempotent = true; break;
                    case DistributionClass::GaussianTimesIdempotent:
                        has_gaussian = has_idempotent = true;
                        break;
                    default: return DistributionClass::Unknown;
                }
            }
            if (has_gaussian && has_idempotent) return DistributionClass::GaussianTimesIdempotent;
            return has_gaussian ? DistributionClass::Gaussian : DistributionClass::Idempotent;
        }
        case NodeKind::Mixture: {
            const auto& data = f.data<CharFnExpr::MixtureData>();
            if (data.children.size() == 1) return structural(data.children.front());
            return DistributionClass::Unknown;
        }
        default:
            return DistributionClass::Unknown;
    }
}

// In (0, 1) decided exactly: nonzero and strictly below modulus one.
bool modulus_strictly_inside(const CFValue& v) {
    return v.is_exact() && !v.is_zero() && v.modulus_below_one();
}

std::map<Int, Int> prime_valuations(const Rational& c) {
    std::map<Int, Int> out;
    for (const auto& [p, e] : factorize(num(c))) out[p] += e;
    for (const auto& [p, e] : factorize(den(c))) out[p] -= e;
    return out;
}

// c1^(n2) == c2^(n1) without forming the powers.
bool coeff_powers_match(const Rational& c1, const Int& n1, const Rational& c2, const Int& n2) {
    auto v1 = prime_valuations(c1);
    auto v2 = prime_valuations(c2);
    for (const auto& [p, e] : v1)
        if (n2 * e != n1 * (v2.count(p) ? v2.at(p) : Int(0))) return false;
    for (const auto& [p, e] : v2)
        if (!v1.count(p) && n1 * e != 0) return false;
    return true;
}

}  // namespace

const char* class_name(DistributionClass c) {
    switch (c) {
        case DistributionClass::Gaussian: return "gaussian";
        case DistributionClass::Idempotent: return "idempotent";
        case DistributionClass::GaussianTimesIdempotent: return "gaussian*idempotent";
        case DistributionClass::Outside: return "outside";
        case DistributionClass::Unknown: return "unknown";
    }
    return "unknown";
}

std::vector<Rational> default_witness_points(const GroupTag& host) {
    std::vector<Rational> out;
    if (host.is_mod_one()) {
        Int n = 1;
        if (host.kind() == GroupTag::Kind::Cyclic) {
            n = host.cyclic_order();
        } else {
            for (const auto& p : host.torsion_primes()) {
                while (n * p <= 256) {
                    auto cap = host.exponent_cap(p);
                    if (cap && valuation(n, p) >= *cap) break;
                    n *= p;
                }
            }
        }
        for (Int j = 0; j < n; ++j) out.emplace_back(Rational(j, n));
        return out;
    }
    Int d = 1;
    for (const auto& [p, mult] : host.profile().entries()) {
        int e = mult.is_unbounded ? 2 : std::min(2, mult.count);
        for (int i = 0; i < e && d * p <= 1000; ++i) d *= p;
    }
    for (Int m = -d; m <= d; ++m) out.emplace_back(Rational(m, d));
    return out;
}

Classification classify(const CharFnExpr& f, const std::vector<Rational>& points) {
    DistributionClass s = structural(f);
    if (s != DistributionClass::Unknown) {
        return {s, std::string("structural form: ") + strip_wrappers(f).describe()};
    }

    const GroupTag& host = f.host();
    std::vector<std::pair<Rational, CFValue>> samples;
    samples.reserve(points.size());
    for (const auto& p : points) samples.emplace_back(host.reduce(p), f.eval(host.reduce(p)));

    if (host.is_mod_one()) {
        // (a) Gaussian components are trivial on torsion duals, so any exact
        // modulus strictly inside (0, 1) leaves the family.
        for (const auto& [y, v] : samples) {
            if (modulus_strictly_inside(v)) {
                std::ostringstream os;
                os << "modulus of f(" << format_rational(y)
                   << ") lies strictly between 0 and 1 on a torsion dual";
                return {DistributionClass::Outside, os.str()};
            }
        }
    } else {
        // (c) a single quadratic exponent must fit every support point.
        const std::pair<Rational, CFValue>* first = nullptr;
        for (const auto& sample : samples) {
            if (sample.first == 0 || !sample.second.is_exact() || sample.second.is_zero())
                continue;
            if (!first) {
                first = &sample;
                continue;
            }
            const auto& [y1, v1] = *first;
            const auto& [y2, v2] = sample;
            Rational r = v1.exponent() * square(y2) - v2.exponent() * square(y1);
            Int d = lcm(den(square(y1)), den(square(y2)));
            Int n1 = num(square(y1) * Rational(d));
            Int n2 = num(square(y2) * Rational(d));
            bool coeff_ok = coeff_powers_match(v1.coeff(), n1, v2.coeff(), n2);
            if (r != 0 || !coeff_ok) {
                std::ostringstream os;
                os << "no quadratic exponent fits |f| at " << format_rational(y1) << " and "
                   << format_rational(y2) << " ("
                   << (r != 0 ? "exponent mismatch" : "coefficient mismatch") << ")";
                return {DistributionClass::Outside, os.str()};
            }
        }
    }

    // (b) the support of a Gaussian-times-Haar factor is a subgroup.
    for (const auto& [y, v] : samples) {
        if (v.is_zero()) continue;
        Rational doubled = host.reduce(y * 2);
        if (f.eval(doubled).is_zero()) {
            std::ostringstream os;
            os << "support not closed: f(" << format_rational(y) << ") != 0 but f("
               << format_rational(doubled) << ") = 0";
            return {DistributionClass::Outside, os.str()};
        }
    }

    return {DistributionClass::Unknown, "no structural form matched and no certificate fired"};
}

Classification classify(const CharFnExpr& f) {
    return classify(f, default_witness_points(f.host()));
}

}  // namespace solenoid
