#pragma once

// Characteristic functions as immutable expression trees over a dual group.
// Leaves are Gaussians exp(-lambda*y^2), subgroup indicators, and three kinds
// of finite real tables (piecewise on cosets, supported on a torsion
// subgroup, or pulled back from a finite quotient).  Inner nodes are
// pointwise products (convolution of the distributions), convex mixtures,
// conjugation, and character shifts.  Constructors enforce the invariants a
// characteristic function must carry: f(0) = 1, f(-y) = conj(f(y)),
// |f(y)| <= 1, weights positive summing to one, and tables positive
// semidefinite where stated.

#include "solenoid/point.hpp"
#include "solenoid/subgroup.hpp"
#include "solenoid/value.hpp"

#include <variant>

namespace solenoid {

enum class NodeKind {
    Gaussian,
    SubgroupIndicator,
    CosetPiecewise,
    TorsionExtension,
    Pullback,
    Product,
    Mixture,
    Conjugate,
    Shift,
};

class CharFnExpr {
public:
    struct GaussianData {
        Rational lambda;
    };
    struct IndicatorData {
        SubgroupSpec subgroup;
    };
    struct CosetPiecewiseData {
        SubgroupSpec outer;
        SubgroupSpec inner;
        std::vector<std::pair<DualElement, Rational>> pieces;  // as supplied
        std::map<Int, Rational> by_label;                      // label in Z(k) -> value
        Int index = 0;
    };
    struct TorsionExtensionData {
        Int order;
        std::map<Rational, Rational> table;  // canonical representative -> value
    };
    struct PullbackData {
        SubgroupSpec outer;
        SubgroupSpec scaled;
        std::vector<Rational> table;  // indexed by label in Z(index)
        Int index = 0;
    };
    struct ProductData {
        std::vector<CharFnExpr> children;
    };
    struct MixtureData {
        std::vector<Rational> weights;
        std::vector<CharFnExpr> children;
    };
    struct ConjugateData {
        std::vector<CharFnExpr> child;  // exactly one; vector dodges incomplete-type recursion
    };
    struct ShiftData {
        SolenoidPoint point;
        std::vector<CharFnExpr> child;
    };

    // exp(-lambda y^2), lambda >= 0 rational; rational-group hosts only.
    static CharFnExpr gaussian(GroupTag host, Rational lambda);

    // 1 on the subgroup, 0 elsewhere: the Haar measure of the annihilator.
    static CharFnExpr indicator(SubgroupSpec subgroup);

    // Constant on each coset of inner within outer, 0 off outer.  Pieces must
    // cover every coset exactly once; the zero coset carries value 1.
    static CharFnExpr coset_piecewise(SubgroupSpec outer, SubgroupSpec inner,
                                      std::vector<std::pair<DualElement, Rational>> pieces);

    // Real table on the full order-n torsion subgroup, 0 elsewhere.
    // Validated positive semidefinite over the torsion subgroup.
    static CharFnExpr torsion_extension(GroupTag host, const Int& order,
                                        std::map<Rational, Rational> table);

    // Same, but without the semidefiniteness check.  Exists so that a
    // deliberately broken table can be handed to psd_check in fault drills.
    static CharFnExpr torsion_extension_unchecked(GroupTag host, const Int& order,
                                                  std::map<Rational, Rational> table);

    // table[label(y)] on the outer subgroup, 0 elsewhere, where label is the
    // projection onto outer/scaled = Z(k).  Validated positive semidefinite.
    static CharFnExpr pullback(SubgroupSpec outer, SubgroupSpec scaled,
                               std::vector<Rational> table);

    static CharFnExpr product(std::vector<CharFnExpr> children);
    static CharFnExpr mixture(std::vector<Rational> weights, std::vector<CharFnExpr> children);
    static CharFnExpr conjugate(CharFnExpr child);
    static CharFnExpr shift(SolenoidPoint point, CharFnExpr child);

    NodeKind kind() const;
    const GroupTag& host() const;

    CFValue eval(const DualElement& y) const;
    CFValue eval(const Rational& value) const;  // wraps into the host

    template <class T>
    const T& data() const {
        return std::get<T>(node_->data);
    }

    std::string describe() const;

private:
    struct Node {
        GroupTag host;
        std::variant<GaussianData, IndicatorData, CosetPiecewiseData, TorsionExtensionData,
                     PullbackData, ProductData, MixtureData, ConjugateData, ShiftData>
            data;
    };

    explicit CharFnExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    static CharFnExpr torsion_extension_impl(GroupTag host, const Int& order,
                                             std::map<Rational, Rational> table, bool check_psd);

    std::shared_ptr<const Node> node_;
};

// f * conj(f): the characteristic function of mu - mu~, always real >= 0.
CharFnExpr symmetrize(const CharFnExpr& f);

struct SupportCheck {
    bool full_support = false;
    std::optional<Rational> witness;  // a nonzero y with |f(y)| = 1, when found
};

// Distributions with full support have |f(y)| < 1 for every nonzero y; checks
// the given points.
SupportCheck full_support_check(const CharFnExpr& f, const std::vector<Rational>& points);

}  // namespace solenoid
