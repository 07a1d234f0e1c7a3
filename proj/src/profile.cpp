#include "solenoid/profile.hpp"

namespace solenoid {

void PrimeProfile::set(const Int& prime, Multiplicity m) {
    if (!is_prime(prime)) throw std::invalid_argument("profile key is not prime: " + prime.str());
    if (!m.is_unbounded && m.count < 1)
        throw std::invalid_argument("finite multiplicity must be >= 1");
    entries_[prime] = m;
}

std::optional<PrimeProfile::Multiplicity> PrimeProfile::multiplicity(const Int& prime) const {
    auto it = entries_.find(prime);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

bool PrimeProfile::has_unbounded(const Int& prime) const {
    auto m = multiplicity(prime);
    return m && m->is_unbounded;
}

std::optional<int> PrimeProfile::exponent_cap(const Int& prime) const {
    auto m = multiplicity(prime);
    if (!m) return 0;
    if (m->is_unbounded) return std::nullopt;
    return m->count;
}

bool PrimeProfile::admits_denominator(const Int& d) const {
    if (d < 1) throw std::invalid_argument("denominator must be positive");
    for (const auto& [p, e] : factorize(d)) {
        auto cap = exponent_cap(p);
        if (cap && e > *cap) return false;
    }
    return true;
}

bool is_automorphism(const PrimeProfile& profile, const Int& n) {
    if (n == 0) throw std::invalid_argument("not an endomorphism candidate for Aut");
    if (n == 1 || n == -1) return true;
    for (const auto& [p, e] : factorize(n)) {
        (void)e;
        if (!profile.has_unbounded(p)) return false;
    }
    return true;
}

bool heyde_admissible(const PrimeProfile& profile) {
    return is_automorphism(profile, 2) && is_automorphism(profile, 3);
}

}  // namespace solenoid
