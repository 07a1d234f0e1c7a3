#pragma once

// Unit complex numbers with rational angle, stored as turns in [0, 1):
// value = exp(2*pi*i*turns).  Multiplication is exact angle addition, so
// characters of the groups in this library compose without rounding.

#include "solenoid/rational.hpp"

#include <cmath>
#include <complex>

namespace solenoid {

class Phase {
public:
    Phase() : turns_(0) {}
    explicit Phase(const Rational& turns) : turns_(mod_one(turns)) {}

    const Rational& turns() const { return turns_; }

    Phase operator*(const Phase& other) const { return Phase(turns_ + other.turns_); }
    Phase conj() const { return Phase(-turns_); }

    bool is_one() const { return turns_ == 0; }
    // exp(2 pi i t) real <=> t in {0, 1/2}
    bool is_real() const { return turns_ == 0 || turns_ == Rational(1, 2); }

    int real_sign() const {
        if (turns_ == 0) return 1;
        if (turns_ == Rational(1, 2)) return -1;
        throw std::domain_error("phase is not real");
    }

    std::complex<double> to_complex() const {
        constexpr double tau = 6.283185307179586476925286766559;
        const double a = tau * turns_.convert_to<double>();
        return {std::cos(a), std::sin(a)};
    }

    bool operator==(const Phase& other) const { return turns_ == other.turns_; }
    bool operator!=(const Phase& other) const { return !(*this == other); }

private:
    Rational turns_;
};

}  // namespace solenoid
