#include "solenoid/aadic.hpp"

namespace solenoid {

AadicInteger::AadicInteger(std::vector<Int> base, std::vector<Int> digits)
    : base_(std::move(base)), digits_(std::move(digits)) {
    if (base_.size() != digits_.size())
        throw std::invalid_argument("base and digit vectors must have equal length");
    for (std::size_t j = 0; j < base_.size(); ++j) {
        if (base_[j] < 2) throw std::invalid_argument("a-adic base entries must be >= 2");
        if (digits_[j] < 0 || digits_[j] >= base_[j])
            throw std::invalid_argument("digit out of range at position " + std::to_string(j));
    }
}

AadicInteger AadicInteger::zero(std::vector<Int> base) {
    std::vector<Int> digits(base.size(), Int(0));
    return AadicInteger(std::move(base), std::move(digits));
}

AadicInteger AadicInteger::unit(std::vector<Int> base) {
    if (base.empty()) throw std::invalid_argument("unit needs depth >= 1");
    std::vector<Int> digits(base.size(), Int(0));
    digits[0] = 1;
    return AadicInteger(std::move(base), std::move(digits));
}

AadicInteger AadicInteger::from_integer(std::vector<Int> base, Int value) {
    if (value < 0) throw std::invalid_argument("from_integer takes nonnegative values");
    std::vector<Int> digits(base.size());
    for (std::size_t j = 0; j < base.size(); ++j) {
        digits[j] = value % base[j];
        value /= base[j];
    }
    return AadicInteger(std::move(base), std::move(digits));
}

AadicInteger AadicInteger::operator+(const AadicInteger& other) const {
    if (base_ != other.base_) throw std::invalid_argument("a-adic base mismatch");
    std::vector<Int> out(digits_.size());
    Int carry = 0;
    for (std::size_t j = 0; j < digits_.size(); ++j) {
        Int s = digits_[j] + other.digits_[j] + carry;
        carry = s / base_[j];
        out[j] = s % base_[j];
    }
    return AadicInteger(base_, std::move(out));
}

AadicInteger AadicInteger::operator-() const {
    // -x = complement + 1 in the truncated ring: rho(-x) = prefix - rho(x)
    std::vector<Int> out(digits_.size());
    Int borrow = 0;
    for (std::size_t j = 0; j < digits_.size(); ++j) {
        Int s = -digits_[j] - borrow;
        borrow = 0;
        while (s < 0) {
            s += base_[j];
            ++borrow;
        }
        out[j] = s;
    }
    return AadicInteger(base_, std::move(out));
}

Int AadicInteger::prefix_product(std::size_t k) const {
    if (k > base_.size()) throw std::out_of_range("truncation deeper than stored digits");
    Int p = 1;
    for (std::size_t j = 0; j < k; ++j) p *= base_[j];
    return p;
}

Int AadicInteger::rho(std::size_t k) const {
    if (k > digits_.size()) throw std::out_of_range("truncation deeper than stored digits");
    Int acc = 0, scale = 1;
    for (std::size_t j = 0; j < k; ++j) {
        acc += digits_[j] * scale;
        scale *= base_[j];
    }
    return acc;
}

}  // namespace solenoid
