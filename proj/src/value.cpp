#include "solenoid/value.hpp"

#include <cmath>
#include <sstream>

namespace solenoid {

namespace {

std::complex<double> exact_to_complex(const Rational& coeff, const Phase& phase,
                                      const Rational& expo) {
    const double mag = coeff.convert_to<double>() * std::exp(-expo.convert_to<double>());
    return mag * phase.to_complex();
}

}  // namespace

void CFValue::renormalize() {
    if (!exact_) return;
    if (coeff_ < 0) {
        coeff_ = -coeff_;
        phase_ = phase_ * Phase(Rational(1, 2));
    }
    if (coeff_ == 0) {
        phase_ = Phase();
        expo_ = 0;
    }
    approx_ = exact_to_complex(coeff_, phase_, expo_);
}

CFValue CFValue::exact_real(const Rational& r) {
    CFValue v;
    v.exact_ = true;
    v.coeff_ = r;
    v.phase_ = Phase();
    v.expo_ = 0;
    v.renormalize();
    return v;
}

CFValue CFValue::exact(Rational coeff, Phase phase, Rational expo) {
    CFValue v;
    v.exact_ = true;
    v.coeff_ = std::move(coeff);
    v.phase_ = phase;
    v.expo_ = std::move(expo);
    v.renormalize();
    return v;
}

CFValue CFValue::inexact(std::complex<double> z) {
    CFValue v;
    v.exact_ = false;
    v.approx_ = z;
    return v;
}

std::optional<Rational> CFValue::real_rational() const {
    if (!exact_ || expo_ != 0 || !phase_.is_real()) return std::nullopt;
    return coeff_ * phase_.real_sign();
}

CFValue CFValue::operator*(const CFValue& other) const {
    if (is_zero() || other.is_zero()) return exact_real(Rational(0));
    if (exact_ && other.exact_)
        return exact(coeff_ * other.coeff_, phase_ * other.phase_, expo_ + other.expo_);
    return inexact(approx_ * other.approx_);
}

CFValue CFValue::conj() const {
    if (exact_) return exact(coeff_, phase_.conj(), expo_);
    return inexact(std::conj(approx_));
}

CFValue CFValue::fma_mixture(const Rational& weight, const CFValue& other) const {
    if (weight == 0) return *this;
    if (!exact_ || !other.exact_) {
        return inexact(approx_ + weight.convert_to<double>() * other.approx_);
    }
    if (other.is_zero()) return *this;
    CFValue scaled = exact(weight * other.coeff_, other.phase_, other.expo_);
    if (is_zero()) return scaled;
    if (expo_ == scaled.expo_) {
        if (phase_ == scaled.phase_)
            return exact(coeff_ + scaled.coeff_, phase_, expo_);
        if (phase_ == scaled.phase_ * Phase(Rational(1, 2)))
            return exact(coeff_ - scaled.coeff_, phase_, expo_);
    }
    return inexact(approx_ + scaled.approx_);
}

bool CFValue::equal(const CFValue& a, const CFValue& b, double tol) {
    if (a.exact_ && b.exact_)
        return a.coeff_ == b.coeff_ && a.phase_ == b.phase_ && a.expo_ == b.expo_;
    return std::abs(a.approx_ - b.approx_) <= tol;
}

bool CFValue::modulus_at_most_one() const {
    if (!exact_) return std::abs(approx_) <= 1.0 + 1e-12;
    if (expo_ == 0) return coeff_ <= 1;
    if (coeff_ <= 1 && expo_ > 0) return true;
    return std::abs(approx_) <= 1.0;  // rational-vs-e^q comparison left to floats
}

bool CFValue::modulus_below_one() const {
    if (!exact_) return std::abs(approx_) < 1.0 - 1e-12;
    if (expo_ == 0) return coeff_ < 1;
    if (coeff_ <= 1 && expo_ > 0) return true;
    return std::abs(approx_) < 1.0;
}

std::string CFValue::describe() const {
    std::ostringstream os;
    if (!exact_) {
        os << "~(" << approx_.real() << (approx_.imag() < 0 ? "" : "+") << approx_.imag() << "i)";
        return os.str();
    }
    os << format_rational(coeff_);
    if (!phase_.is_one()) os << "*e^(2pi i*" << format_rational(phase_.turns()) << ")";
    if (expo_ != 0) os << "*e^(-" << format_rational(expo_) << ")";
    return os.str();
}

}  // namespace solenoid
