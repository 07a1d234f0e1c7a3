#include "solenoid/charfn.hpp"

#include "solenoid/psd.hpp"

#include <sstream>

namespace solenoid {

namespace {

// All y with order*y = 0 inside the host, as canonical representatives.
std::vector<Rational> torsion_elements(const GroupTag& host, const Int& order) {
    if (!host.is_mod_one())
        throw std::invalid_argument("torsion table needs a mod-1 host: rational groups are torsion-free");
    std::vector<Rational> out;
    for (Int j = 0; j < order; ++j) {
        Rational y(j, order);
        if (!host.contains(y))
            throw std::invalid_argument("torsion subgroup of order " + order.str() +
                                        " does not embed in " + host.describe());
        out.push_back(mod_one(y));
    }
    return out;
}

void check_weight_profile(const std::vector<Rational>& weights, std::size_t n_children) {
    if (weights.size() != n_children)
        throw std::invalid_argument("mixture needs one weight per component");
    Rational total = 0;
    for (const auto& w : weights) {
        if (w <= 0) throw std::invalid_argument("mixture weights must be positive");
        total += w;
    }
    if (total != 1) throw std::invalid_argument("mixture weights must sum to 1");
}

}  // namespace

CharFnExpr CharFnExpr::gaussian(GroupTag host, Rational lambda) {
    if (lambda < 0) throw std::invalid_argument("gaussian exponent coefficient must be >= 0");
    if (host.is_mod_one())
        throw std::invalid_argument("gaussian factors live on rational-group hosts only");
    auto node = std::make_shared<Node>(Node{std::move(host), GaussianData{std::move(lambda)}});
    return CharFnExpr(std::move(node));
}

CharFnExpr CharFnExpr::indicator(SubgroupSpec subgroup) {
    GroupTag host = subgroup.host();
    auto node = std::make_shared<Node>(Node{std::move(host), IndicatorData{std::move(subgroup)}});
    return CharFnExpr(std::move(node));
}

CharFnExpr CharFnExpr::coset_piecewise(SubgroupSpec outer, SubgroupSpec inner,
                                       std::vector<std::pair<DualElement, Rational>> pieces) {
    auto idx = outer.index_of(inner);
    if (!idx) throw std::invalid_argument("coset pieces need a finite quotient");
    const Int k = *idx;
    if (Int(pieces.size()) != k)
        throw std::invalid_argument("expected exactly " + k.str() + " coset pieces");

    CosetPiecewiseData data{outer, inner, pieces, {}, k};
    for (const auto& [rep, value] : pieces) {
        if (!outer.member(rep)) throw std::invalid_argument("coset representative outside subgroup");
        if (value < -1 || value > 1)
            throw std::invalid_argument("coset piece values must lie in [-1, 1]");
        DualElement label = outer.quotient_project(inner, rep);
        Int j = num(label.value * Rational(k));
        if (!data.by_label.emplace(j, value).second)
            throw std::invalid_argument("duplicate coset representative");
    }
    if (data.by_label.at(0) != 1) throw std::invalid_argument("zero coset must carry value 1");
    for (const auto& [j, v] : data.by_label) {
        Int neg = (k - j) % k;
        if (data.by_label.at(neg) != v)
            throw std::invalid_argument("coset values must be symmetric under negation");
    }
    GroupTag host = outer.host();
    auto node = std::make_shared<Node>(Node{std::move(host), std::move(data)});
    return CharFnExpr(std::move(node));
}

CharFnExpr CharFnExpr::torsion_extension_impl(GroupTag host, const Int& order,
                                              std::map<Rational, Rational> table,
                                              bool check_psd) {
    auto elements = torsion_elements(host, order);
    if (table.size() != elements.size())
        throw std::invalid_argument("torsion table must cover the whole torsion subgroup");
    for (const auto& y : elements)
        if (!table.count(y))
            throw std::invalid_argument("torsion table missing element " + format_rational(y));
    if (table.at(Rational(0)) != 1) throw std::invalid_argument("table value at 0 must be 1");
    for (const auto& [y, v] : table) {
        if (check_psd && (v < -1 || v > 1))
            throw std::invalid_argument("table values must lie in [-1, 1]");
        if (table.at(mod_one(-y)) != v)
            throw std::invalid_argument("table must be symmetric under negation");
    }
    if (check_psd) {
        const std::size_t n = elements.size();
        std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                gram[a][b] = table.at(mod_one(elements[a] - elements[b]));
        if (!exact_psd_rational(std::move(gram)))
            throw std::invalid_argument("torsion table is not positive semidefinite");
    }
    auto node = std::make_shared<Node>(
        Node{std::move(host), TorsionExtensionData{order, std::move(table)}});
    return CharFnExpr(std::move(node));
}

CharFnExpr CharFnExpr::torsion_extension(GroupTag host, const Int& order,
                                         std::map<Rational, Rational> table) {
    return torsion_extension_impl(std::move(host), order, std::move(table), true);
}

CharFnExpr CharFnExpr::torsion_extension_unchecked(GroupTag host, const Int& order,
                                                   std::map<Rational, Rational> table) {
    return torsion_extension_impl(std::move(host), order, std::move(table), false);
}

CharFnExpr CharFnExpr::pullback(SubgroupSpec outer, SubgroupSpec scaled,
                                std::vector<Rational> table) {
    auto idx = outer.index_of(scaled);
    if (!idx) throw std::invalid_argument("pullback needs a finite quotient");
    const Int k = *idx;
    if (Int(table.size()) != k) throw std::invalid_argument("pullback table size must equal the index");
    if (table[0] != 1) throw std::invalid_argument("table value at 0 must be 1");
    const std::size_t n = table.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (table[j] < -1 || table[j] > 1)
            throw std::invalid_argument("table values must lie in [-1, 1]");
        if (table[(n - j) % n] != table[j])
            throw std::invalid_argument("table must be symmetric under negation");
    }
    std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) gram[a][b] = table[(a + n - b) % n];
    if (!exact_psd_rational(std::move(gram)))
        throw std::invalid_argument("pullback table is not positive semidefinite");

    GroupTag host = outer.host();
    auto node = std::make_shared<Node>(
        Node{std::move(host), PullbackData{std::move(outer), std::move(scaled), std::move(table), k}});
    return CharFnExpr(std::move(node));
}

CharFnExpr CharFnExpr::product(std::vector<CharFnExpr> children) {
    if (children.empty()) throw std::invalid_argument("product needs at least one factor");
    for (std::size_t i = 1; i < children.size(); ++i)
        if (children[i].host() != children[0].host())
            throw std::invalid_argument("product factors must share a host");
    GroupTag host = children[0].host();
    auto node = std::make_shared<Node>(Node{std::move(host), ProductData{std::move(children)}});
    return CharFnExpr(std::move(node));
}

CharFnExpr CharFnExpr::mixture(std::vector<Rational> weights, std::vector<CharFnExpr> children) {
    if (children.empty()) throw std::invalid_argument("mixture needs at least one component");
    check_weight_profile(weights, children.size());
    for (std::size_t i = 1; i < children.size(); ++i)
        if (children[i].host() != children[0].host())
            throw std::invalid_argument("mixture components must share a host");
    GroupTag host = children[0].host();
    auto node = std::make_shared<Node>(
        Node{std::move(host), MixtureData{std::move(weights), std::move(children)}});
    return CharFnExpr(std::move(node));
}

CharFnExpr CharFnExpr::conjugate(CharFnExpr child) {
    GroupTag host = child.host();
    auto node =
        std::make_shared<Node>(Node{std::move(host), ConjugateData{{std::move(child)}}});
    return CharFnExpr(std::move(node));
}

CharFnExpr CharFnExpr::shift(SolenoidPoint point, CharFnExpr child) {
    GroupTag host = child.host();
    auto node = std::make_shared<Node>(
        Node{std::move(host), ShiftData{std::move(point), {std::move(child)}}});
    return CharFnExpr(std::move(node));
}

NodeKind CharFnExpr::kind() const {
    return static_cast<NodeKind>(node_->data.index());
}

const GroupTag& CharFnExpr::host() const { return node_->host; }

CFValue CharFnExpr::eval(const Rational& value) const {
    return eval(DualElement(value, node_->host));
}

CFValue CharFnExpr::eval(const DualElement& y) const {
    if (y.host != node_->host)
        throw std::invalid_argument("evaluation host mismatch: expression on " +
                                    node_->host.describe() + ", point in " + y.host.describe());
    return std::visit(
        [&](const auto& data) -> CFValue {
            using T = std::decay_t<decltype(data)>;
            if constexpr (std::is_same_v<T, GaussianData>) {
                return CFValue::exact(Rational(1), Phase(), data.lambda * square(y.value));
            } else if constexpr (std::is_same_v<T, IndicatorData>) {
                return CFValue::exact_real(data.subgroup.member(y) ? 1 : 0);
            } else if constexpr (std::is_same_v<T, CosetPiecewiseData>) {
                if (!data.outer.member(y)) return CFValue::exact_real(Rational(0));
                DualElement label = data.outer.quotient_project(data.inner, y);
                Int j = num(label.value * Rational(data.index));
                return CFValue::exact_real(data.by_label.at(j));
            } else if constexpr (std::is_same_v<T, TorsionExtensionData>) {
                if (node_->host.reduce(y.value * Rational(data.order)) != 0)
                    return CFValue::exact_real(Rational(0));
                return CFValue::exact_real(data.table.at(y.value));
            } else if constexpr (std::is_same_v<T, PullbackData>) {
                if (!data.outer.member(y)) return CFValue::exact_real(Rational(0));
                DualElement label = data.outer.quotient_project(data.scaled, y);
                Int j = num(label.value * Rational(data.index));
                return CFValue::exact_real(data.table[j.convert_to<std::size_t>()]);
            } else if constexpr (std::is_same_v<T, ProductData>) {
                CFValue acc = CFValue::exact_real(Rational(1));
                for (const auto& c : data.children) {
                    acc = acc * c.eval(y);
                    if (acc.is_zero()) break;
                }
                return acc;
            } else if constexpr (std::is_same_v<T, MixtureData>) {
                CFValue acc = CFValue::exact_real(Rational(0));
                for (std::size_t i = 0; i < data.children.size(); ++i)
                    acc = acc.fma_mixture(data.weights[i], data.children[i].eval(y));
                return acc;
            } else if constexpr (std::is_same_v<T, ConjugateData>) {
                return data.child.front().eval(y).conj();
            } else {
                static_assert(std::is_same_v<T, ShiftData>);
                CFValue character = CFValue::exact(Rational(1), character_eval(data.point, y), 0);
                return character * data.child.front().eval(y);
            }
        },
        node_->data);
}

std::string CharFnExpr::describe() const {
    std::ostringstream os;
    std::visit(
        [&](const auto& data) {
            using T = std::decay_t<decltype(data)>;
            if constexpr (std::is_same_v<T, GaussianData>) {
                os << "exp(-" << format_rational(data.lambda) << "*y^2)";
            } else if constexpr (std::is_same_v<T, IndicatorData>) {
                os << "ind" << data.subgroup.describe();
            } else if constexpr (std::is_same_v<T, CosetPiecewiseData>) {
                os << "piecewise[" << data.index.str() << " cosets]";
            } else if constexpr (std::is_same_v<T, TorsionExtensionData>) {
                os << "torsion-table[order " << data.order.str() << "]";
            } else if constexpr (std::is_same_v<T, PullbackData>) {
                os << "pullback[Z(" << data.index.str() << ")]";
            } else if constexpr (std::is_same_v<T, ProductData>) {
                for (std::size_t i = 0; i < data.children.size(); ++i)
                    os << (i ? " * " : "") << data.children[i].describe();
            } else if constexpr (std::is_same_v<T, MixtureData>) {
                for (std::size_t i = 0; i < data.children.size(); ++i)
                    os << (i ? " + " : "") << format_rational(data.weights[i]) << "*("
                       << data.children[i].describe() << ")";
            } else if constexpr (std::is_same_v<T, ConjugateData>) {
                os << "conj(" << data.child.front().describe() << ")";
            } else {
                static_assert(std::is_same_v<T, ShiftData>);
                os << "shift(" << data.child.front().describe() << ")";
            }
        },
        node_->data);
    return os.str();
}

CharFnExpr symmetrize(const CharFnExpr& f) {
    return CharFnExpr::product({f, CharFnExpr::conjugate(f)});
}

SupportCheck full_support_check(const CharFnExpr& f, const std::vector<Rational>& points) {
    SupportCheck out;
    out.full_support = true;
    for (const auto& p : points) {
        Rational y = f.host().reduce(p);
        if (y == 0) continue;
        if (!f.eval(y).modulus_below_one()) {
            out.full_support = false;
            out.witness = y;
            return out;
        }
    }
    return out;
}

}  // namespace solenoid
