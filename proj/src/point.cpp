#include "solenoid/point.hpp"

namespace solenoid {

namespace {

// Smallest k with den | a_0...a_{k-1}; nullopt when the stored depth is short.
std::optional<std::size_t> reach_depth(const AadicInteger& d, const Int& denom) {
    Int prefix = 1;
    if (denom == 1) return 0;
    for (std::size_t k = 1; k <= d.depth(); ++k) {
        prefix *= d.base()[k - 1];
        if (prefix % denom == 0) return k;
    }
    return std::nullopt;
}

}  // namespace

Phase character_eval(const SolenoidPoint& x, const DualElement& y) {
    switch (y.host.kind()) {
        case GroupTag::Kind::Cyclic:
            if (x.d) throw std::invalid_argument("cyclic host pairs against integer residues only");
            if (den(x.t) != 1) throw std::invalid_argument("cyclic host needs integer t");
            return Phase(y.value * x.t);
        case GroupTag::Kind::Torsion:
            if (x.t != 0) throw std::invalid_argument("torsion host: real coordinate must be 0");
            break;
        case GroupTag::Kind::RationalGroup:
            break;
    }
    Rational angle = y.value * x.t;
    if (x.d) {
        auto k = reach_depth(*x.d, den(y.value));
        if (!k)
            throw std::invalid_argument(
                "insufficient truncation level: denominator " + den(y.value).str() +
                " not reached by base prefix products");
        angle -= y.value * Rational(x.d->rho(*k));
    } else if (y.host.kind() == GroupTag::Kind::Torsion && den(y.value) != 1) {
        throw std::invalid_argument("torsion host pairing needs an a-adic coordinate");
    }
    return Phase(angle);
}

}  // namespace solenoid
