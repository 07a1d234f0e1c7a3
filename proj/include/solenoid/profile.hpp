#pragma once

// PrimeProfile describes which prime-power denominators a rational dual group
// admits: each prime carries a finite multiplicity (a hard cap on the
// exponent) or an unbounded one.  The profile determines exactly which
// multiplication maps f_n(x) = n*x are automorphisms.

#include "solenoid/rational.hpp"

#include <optional>

namespace solenoid {

class PrimeProfile {
public:
    // Multiplicity of a prime: count >= 1, or unbounded().
    struct Multiplicity {
        bool is_unbounded = false;
        int count = 0;  // meaningful only when !is_unbounded

        static Multiplicity unbounded() { return {true, 0}; }
        static Multiplicity finite(int c) { return {false, c}; }
        bool operator==(const Multiplicity&) const = default;
    };

    PrimeProfile() = default;

    void set(const Int& prime, Multiplicity m);

    // Multiplicity of p; nullopt when p does not occur.
    std::optional<Multiplicity> multiplicity(const Int& prime) const;

    bool has_unbounded(const Int& prime) const;

    // Exponent cap for p as used in membership checks: 0 when absent,
    // nullopt when unbounded.
    std::optional<int> exponent_cap(const Int& prime) const;

    const std::map<Int, Multiplicity>& entries() const { return entries_; }

    // True when the denominator's prime powers all fit under the caps.
    bool admits_denominator(const Int& d) const;

    bool operator==(const PrimeProfile&) const = default;

private:
    std::map<Int, Multiplicity> entries_;
};

// f_n is an automorphism of the solenoid (equivalently of its dual) exactly
// when every prime dividing n has unbounded multiplicity.  n = 0 is not an
// endomorphism candidate.
bool is_automorphism(const PrimeProfile& profile, const Int& n);

// A group with this profile supports a nondegenerate symmetry analysis for
// some coprime coefficient pair iff doubling and tripling are automorphisms.
bool heyde_admissible(const PrimeProfile& profile);

}  // namespace solenoid
