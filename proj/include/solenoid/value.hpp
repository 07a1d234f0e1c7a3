#pragma once

// Values of characteristic functions.  Everything the expression grammar
// produces from rational inputs has the closed form
//
//     value = coeff * exp(2 pi i * phase) * exp(-expo)
//
// with coeff >= 0 and expo rational.  That triple is unique when coeff > 0:
// matching moduli forces coeff1/coeff2 = e^(expo1-expo2), and e^q is
// irrational for rational q != 0, so expo1 = expo2, then coeff and phase
// match.  Exact equality is therefore componentwise.  Sums that do not
// collapse (mixtures of unlike exponentials) drop to a float payload; the
// exact flag records which side of the boundary a value is on.

#include "solenoid/phase.hpp"

namespace solenoid {

class CFValue {
public:
    CFValue() = default;  // exact zero

    static CFValue exact_real(const Rational& r);
    static CFValue exact(Rational coeff, Phase phase, Rational expo);
    static CFValue inexact(std::complex<double> z);

    bool is_exact() const { return exact_; }
    bool is_zero() const { return exact_ && coeff_ == 0; }

    // Components of the exact form; only meaningful when is_exact().
    const Rational& coeff() const { return coeff_; }
    const Phase& phase() const { return phase_; }
    const Rational& exponent() const { return expo_; }

    std::complex<double> approx() const { return approx_; }

    // +/- coeff when the value is real rational (phase real, expo = 0).
    std::optional<Rational> real_rational() const;

    CFValue operator*(const CFValue& other) const;
    CFValue conj() const;

    // this + weight * other, exact only when the exponential parts align.
    CFValue fma_mixture(const Rational& weight, const CFValue& other) const;

    // Exact componentwise when both exact, |difference| <= tol otherwise.
    static bool equal(const CFValue& a, const CFValue& b, double tol);

    // |value| <= 1, decided exactly for exact values with coeff <= 1 or expo = 0.
    bool modulus_at_most_one() const;
    // |value| < 1 strictly (same exactness caveat).
    bool modulus_below_one() const;

    std::string describe() const;

private:
    bool exact_ = true;
    Rational coeff_;  // >= 0; 0 forces phase = expo = 0
    Phase phase_;
    Rational expo_;
    std::complex<double> approx_;

    void renormalize();
};

}  // namespace solenoid
