#pragma once

// Dual-group carriers.  Every group this library touches embeds its dual in
// the rationals: either a profile-bounded subgroup of Q itself, or a subgroup
// of Q/Z (Prufer factors glued by CRT, or a single finite cyclic block).
// A DualElement is an exact rational plus the tag of the group it lives in.

#include "solenoid/profile.hpp"

#include <memory>

namespace solenoid {

class GroupTag {
public:
    enum class Kind {
        RationalGroup,  // subgroup of Q with profile-bounded denominators
        Torsion,        // product of Prufer groups Z(p^inf), one per prime; lives in Q/Z
        Cyclic,         // Z(n) embedded in Q/Z as multiples of 1/n
    };

    static GroupTag rational_group(PrimeProfile profile);
    static GroupTag prufer(const Int& p) { return torsion_product({p}); }
    static GroupTag torsion_product(std::vector<Int> primes);
    static GroupTag cyclic(const Int& order);

    Kind kind() const { return kind_; }
    bool is_mod_one() const { return kind_ != Kind::RationalGroup; }

    const PrimeProfile& profile() const;          // RationalGroup only
    const std::vector<Int>& torsion_primes() const;  // Torsion only
    const Int& cyclic_order() const;              // Cyclic only

    // Denominator-cap view that works across all kinds: nullopt = unbounded.
    std::optional<int> exponent_cap(const Int& prime) const;

    bool contains(const Rational& value) const;

    // Canonical representative: identity on RationalGroup, mod 1 otherwise.
    Rational reduce(const Rational& value) const;

    bool operator==(const GroupTag& other) const;
    bool operator!=(const GroupTag& other) const { return !(*this == other); }

    std::string describe() const;

private:
    GroupTag() = default;

    Kind kind_ = Kind::RationalGroup;
    std::shared_ptr<const PrimeProfile> profile_;
    std::vector<Int> primes_;
    Int order_ = 0;
};

struct DualElement {
    Rational value;
    GroupTag host;

    DualElement(Rational v, GroupTag h);

    bool is_zero() const { return value == 0; }

    DualElement operator+(const DualElement& other) const;
    DualElement operator-(const DualElement& other) const;
    DualElement operator-() const;
    DualElement scaled(const Int& n) const;

    bool operator==(const DualElement& other) const;
};

// n*z = y solved inside the host; nullopt when y is not divisible by n there.
std::optional<DualElement> divide_exact(const DualElement& y, const Int& n);

}  // namespace solenoid
