#pragma once

// Points of the base group paired against dual elements.  A point carries a
// real coordinate t and an optional a-adic coordinate d; the class of (t, d)
// modulo the diagonal subgroup {(n, n*u)} acts on y as the character
//   (x, y) = exp(2*pi*i * (y*t - y*rho_k(d))),
// where k is the shallowest truncation with denominator(y) | a_0...a_{k-1}.
// The angle is independent of the choice of such k, and the diagonal acts
// trivially: t = 1 with d = unit gives angle y - y = 0.

#include "solenoid/aadic.hpp"
#include "solenoid/groups.hpp"
#include "solenoid/phase.hpp"

namespace solenoid {

struct SolenoidPoint {
    Rational t;
    std::optional<AadicInteger> d;

    SolenoidPoint() : t(0) {}
    explicit SolenoidPoint(Rational t_, std::optional<AadicInteger> d_ = std::nullopt)
        : t(std::move(t_)), d(std::move(d_)) {}
};

// Pairing (x, y).  Torsion hosts require t = 0 (the real line does not act);
// cyclic hosts require integer t and no a-adic part.  Throws when denominator
// of y is not reached by any stored truncation of d.
Phase character_eval(const SolenoidPoint& x, const DualElement& y);

}  // namespace solenoid
