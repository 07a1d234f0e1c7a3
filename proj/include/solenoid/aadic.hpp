#pragma once

// a-adic integers for a base sequence a = (a_0, a_1, ...), truncated to the
// digits actually stored.  Addition carries digit-by-digit:
//   x_j + y_j + t_{j-1} = t_j * a_j + z_j,  0 <= z_j < a_j,
// and the final carry falls off the end.  rho(k) = sum_{j<k} x_j a_0...a_{j-1}
// identifies a truncation to depth k with an ordinary residue mod a_0...a_{k-1}.

#include "solenoid/rational.hpp"

namespace solenoid {

class AadicInteger {
public:
    AadicInteger(std::vector<Int> base, std::vector<Int> digits);

    // All-zero digits over the given base.
    static AadicInteger zero(std::vector<Int> base);

    // The element with rho = 1: digits (1, 0, 0, ...).
    static AadicInteger unit(std::vector<Int> base);

    // Embeds a nonnegative integer as its digit expansion (mod the truncation).
    static AadicInteger from_integer(std::vector<Int> base, Int value);

    const std::vector<Int>& base() const { return base_; }
    const std::vector<Int>& digits() const { return digits_; }
    std::size_t depth() const { return digits_.size(); }

    AadicInteger operator+(const AadicInteger& other) const;
    AadicInteger operator-() const;

    // a_0 * a_1 * ... * a_{k-1}
    Int prefix_product(std::size_t k) const;

    // sum_{j<k} digit_j * a_0...a_{j-1}
    Int rho(std::size_t k) const;

    bool operator==(const AadicInteger& other) const = default;

private:
    std::vector<Int> base_;
    std::vector<Int> digits_;
};

}  // namespace solenoid
