#include "solenoid/groups.hpp"

#include <algorithm>
#include <sstream>

namespace solenoid {

GroupTag GroupTag::rational_group(PrimeProfile profile) {
    GroupTag t;
    t.kind_ = Kind::RationalGroup;
    t.profile_ = std::make_shared<const PrimeProfile>(std::move(profile));
    return t;
}

GroupTag GroupTag::torsion_product(std::vector<Int> primes) {
    if (primes.empty()) throw std::invalid_argument("torsion product needs at least one prime");
    std::sort(primes.begin(), primes.end());
    if (std::adjacent_find(primes.begin(), primes.end()) != primes.end())
        throw std::invalid_argument("torsion product primes must be distinct");
    for (const auto& p : primes)
        if (!is_prime(p)) throw std::invalid_argument("not prime: " + p.str());
    GroupTag t;
    t.kind_ = Kind::Torsion;
    t.primes_ = std::move(primes);
    return t;
}

GroupTag GroupTag::cyclic(const Int& order) {
    if (order < 1) throw std::invalid_argument("cyclic order must be >= 1");
    GroupTag t;
    t.kind_ = Kind::Cyclic;
    t.order_ = order;
    return t;
}

const PrimeProfile& GroupTag::profile() const {
    if (kind_ != Kind::RationalGroup) throw std::logic_error("profile() on non-rational group");
    return *profile_;
}

const std::vector<Int>& GroupTag::torsion_primes() const {
    if (kind_ != Kind::Torsion) throw std::logic_error("torsion_primes() on non-torsion group");
    return primes_;
}

const Int& GroupTag::cyclic_order() const {
    if (kind_ != Kind::Cyclic) throw std::logic_error("cyclic_order() on non-cyclic group");
    return order_;
}

std::optional<int> GroupTag::exponent_cap(const Int& prime) const {
    switch (kind_) {
        case Kind::RationalGroup:
            return profile_->exponent_cap(prime);
        case Kind::Torsion:
            if (std::find(primes_.begin(), primes_.end(), prime) != primes_.end())
                return std::nullopt;
            return 0;
        case Kind::Cyclic:
            return valuation(order_, prime);
    }
    throw std::logic_error("unreachable");
}

bool GroupTag::contains(const Rational& value) const {
    Rational v = reduce(value);
    const Int d = den(v);
    if (d == 1) return true;  // integers reduce to 0 in mod-1 hosts
    for (const auto& [p, e] : factorize(d)) {
        auto cap = exponent_cap(p);
        if (cap && e > *cap) return false;
    }
    return true;
}

Rational GroupTag::reduce(const Rational& value) const {
    return is_mod_one() ? mod_one(value) : value;
}

bool GroupTag::operator==(const GroupTag& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::RationalGroup: return *profile_ == *other.profile_;
        case Kind::Torsion: return primes_ == other.primes_;
        case Kind::Cyclic: return order_ == other.order_;
    }
    return false;
}

std::string GroupTag::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::RationalGroup: {
            os << "Q-subgroup{";
            bool first = true;
            for (const auto& [p, m] : profile_->entries()) {
                if (!first) os << ",";
                first = false;
                os << p.str() << ":";
                if (m.is_unbounded) os << "inf";
                else os << m.count;
            }
            os << "}";
            break;
        }
        case Kind::Torsion: {
            os << "Prufer(";
            for (std::size_t i = 0; i < primes_.size(); ++i)
                os << (i ? "," : "") << primes_[i].str();
            os << ")";
            break;
        }
        case Kind::Cyclic:
            os << "Z(" << order_.str() << ")";
            break;
    }
    return os.str();
}

DualElement::DualElement(Rational v, GroupTag h) : value(std::move(v)), host(std::move(h)) {
    value = host.reduce(value);
    if (!host.contains(value))
        throw std::invalid_argument("value " + format_rational(value) + " outside host " +
                                    host.describe());
}

DualElement DualElement::operator+(const DualElement& other) const {
    if (host != other.host) throw std::invalid_argument("host mismatch in dual-group addition");
    return DualElement(value + other.value, host);
}

DualElement DualElement::operator-(const DualElement& other) const {
    if (host != other.host) throw std::invalid_argument("host mismatch in dual-group subtraction");
    return DualElement(value - other.value, host);
}

DualElement DualElement::operator-() const { return DualElement(-value, host); }

DualElement DualElement::scaled(const Int& n) const { return DualElement(value * Rational(n), host); }

bool DualElement::operator==(const DualElement& other) const {
    return host == other.host && value == other.value;
}

std::optional<DualElement> divide_exact(const DualElement& y, const Int& n) {
    if (n == 0) throw std::invalid_argument("division by zero scale");
    if (!y.host.is_mod_one()) {
        Rational z = y.value / Rational(n);
        if (y.host.contains(z)) return DualElement(z, y.host);
        return std::nullopt;
    }
    Int a = n < 0 ? -n : n;
    for (Int k = 0; k < a; ++k) {
        Rational z = (y.value + Rational(k)) / Rational(n);
        z = mod_one(z);
        if (y.host.contains(z)) return DualElement(z, y.host);
    }
    return std::nullopt;
}

}  // namespace solenoid
