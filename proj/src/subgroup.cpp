#include "solenoid/subgroup.hpp"

#include <sstream>

namespace solenoid {

SubgroupSpec::SubgroupSpec(GroupTag host, std::map<Int, std::optional<int>> floors)
    : host_(std::move(host)), floors_(std::move(floors)) {
    for (auto it = floors_.begin(); it != floors_.end();) {
        const auto& [p, fl] = *it;
        if (!is_prime(p)) throw std::invalid_argument("subgroup floor key not prime: " + p.str());
        auto host_cap = host_.exponent_cap(p);
        if (!fl) {
            // unbounded below: host must allow arbitrary powers of p
            if (host_cap) throw std::invalid_argument("subgroup unbounded at " + p.str() +
                                                      " but host is not");
            ++it;
            continue;
        }
        if (host_.is_mod_one() && *fl > 0)
            throw std::invalid_argument("positive valuation floor is meaningless mod 1");
        if (host_cap && -*fl > *host_cap)
            throw std::invalid_argument("subgroup denominator bound exceeds host at " + p.str());
        if (*fl == 0) it = floors_.erase(it);  // canonical: default floor not stored
        else ++it;
    }
}

SubgroupSpec SubgroupSpec::full(GroupTag host) {
    std::map<Int, std::optional<int>> floors;
    switch (host.kind()) {
        case GroupTag::Kind::RationalGroup:
            for (const auto& [p, m] : host.profile().entries())
                floors[p] = m.is_unbounded ? std::optional<int>() : std::optional<int>(-m.count);
            break;
        case GroupTag::Kind::Torsion:
            for (const auto& p : host.torsion_primes()) floors[p] = std::nullopt;
            break;
        case GroupTag::Kind::Cyclic:
            for (const auto& [p, e] : factorize(host.cyclic_order())) floors[p] = -e;
            break;
    }
    return SubgroupSpec(std::move(host), std::move(floors));
}

SubgroupSpec SubgroupSpec::torsion(GroupTag host, const Int& order) {
    if (!host.is_mod_one())
        throw std::invalid_argument("torsion subgroup of a torsion-free host is trivial");
    if (order < 1) throw std::invalid_argument("torsion order must be >= 1");
    std::map<Int, std::optional<int>> floors;
    for (const auto& [p, e] : factorize(order)) {
        auto cap = host.exponent_cap(p);
        floors[p] = -(cap ? std::min(*cap, e) : e);
    }
    return SubgroupSpec(std::move(host), std::move(floors));
}

SubgroupSpec SubgroupSpec::local(GroupTag host, const std::vector<Int>& unbounded_primes) {
    std::map<Int, std::optional<int>> floors;
    for (const auto& p : unbounded_primes) floors[p] = std::nullopt;
    return SubgroupSpec(std::move(host), std::move(floors));
}

SubgroupSpec SubgroupSpec::from_floors(GroupTag host, std::map<Int, std::optional<int>> floors) {
    return SubgroupSpec(std::move(host), std::move(floors));
}

int SubgroupSpec::floor_at(const Int& p, bool* unbounded) const {
    auto it = floors_.find(p);
    if (it == floors_.end()) {
        *unbounded = false;
        return 0;
    }
    if (!it->second) {
        *unbounded = true;
        return 0;
    }
    *unbounded = false;
    return *it->second;
}

bool SubgroupSpec::member(const DualElement& y) const {
    if (y.host != host_) throw std::invalid_argument("host mismatch in subgroup membership");
    return member(y.value);
}

bool SubgroupSpec::member(const Rational& value) const {
    Rational v = host_.reduce(value);
    if (!host_.contains(v)) return false;
    if (v == 0) return true;
    for (const auto& [p, e] : factorize(den(v))) {
        bool unb = false;
        int fl = floor_at(p, &unb);
        if (unb) continue;
        if (-e < fl) return false;
    }
    // positive floors demand numerator divisibility
    for (const auto& [p, fl] : floors_) {
        if (!fl || *fl <= 0) continue;
        if (valuation(v, p) < *fl) return false;
    }
    return true;
}

SubgroupSpec SubgroupSpec::scaled(const Int& n) const {
    if (n == 0) throw std::invalid_argument("scaling subgroup by zero");
    auto floors = floors_;
    for (const auto& [p, e] : factorize(n)) {
        auto it = floors.find(p);
        if (it != floors.end() && !it->second) continue;  // unbounded absorbs scaling
        int base = (it == floors.end()) ? 0 : *it->second;
        int shifted = base + e;
        if (host_.is_mod_one() && shifted > 0) shifted = 0;
        floors[p] = shifted;
    }
    return SubgroupSpec(host_, std::move(floors));
}

bool SubgroupSpec::subgroup_of(const SubgroupSpec& other) const {
    if (host_ != other.host_) return false;
    auto keys = [](const std::map<Int, std::optional<int>>& m, std::vector<Int>& out) {
        for (const auto& [p, fl] : m) {
            (void)fl;
            out.push_back(p);
        }
    };
    std::vector<Int> primes;
    keys(floors_, primes);
    keys(other.floors_, primes);
    for (const auto& p : primes) {
        bool unb_a = false, unb_b = false;
        int fa = floor_at(p, &unb_a);
        int fb = other.floor_at(p, &unb_b);
        if (unb_b) continue;
        if (unb_a) return false;
        if (fa < fb) return false;
    }
    return true;
}

std::optional<Int> SubgroupSpec::index_of(const SubgroupSpec& sub) const {
    if (!sub.subgroup_of(*this)) throw std::invalid_argument("index_of: not a subgroup");
    Int idx = 1;
    for (const auto& [p, fl] : floors_) {
        bool unb_sub = false;
        int fsub = sub.floor_at(p, &unb_sub);
        if (!fl) {
            if (!unb_sub) return std::nullopt;  // quotient not finite
            continue;
        }
        if (unb_sub) continue;
        idx *= pow_int(p, fsub - *fl);
    }
    for (const auto& [p, fl] : sub.floors_) {
        if (floors_.count(p)) continue;  // already handled
        bool unb_sub = false;
        int fsub = sub.floor_at(p, &unb_sub);
        (void)unb_sub;
        if (!fl) return std::nullopt;  // sub unbounded where this is not: not a subgroup anyway
        idx *= pow_int(p, fsub);
    }
    return idx;
}

DualElement SubgroupSpec::quotient_project(const SubgroupSpec& sub, const DualElement& y) const {
    auto idx = index_of(sub);
    if (!idx) throw std::invalid_argument("quotient not finite");
    if (!member(y)) throw std::invalid_argument("quotient_project: element outside subgroup");
    const Int k = *idx;
    if (k == 1) return DualElement(Rational(0), GroupTag::cyclic(1));

    std::vector<std::pair<Int, Int>> residues;
    for (const auto& [p, e] : factorize(k)) {
        bool unb = false;
        int fl = floor_at(p, &unb);
        // y * p^(-fl) is p-integral; reduce it mod p^e
        const Int pe = pow_int(p, e);
        Rational shifted = y.value;
        if (fl > 0) shifted /= Rational(pow_int(p, fl));
        else if (fl < 0) shifted *= Rational(pow_int(p, -fl));
        Int a = num(shifted) % pe;
        if (a < 0) a += pe;
        Int b = den(shifted) % pe;
        residues.emplace_back(a * mod_inverse(b, pe) % pe, pe);
    }
    const Int r = crt_combine(residues);
    return DualElement(Rational(r, k), GroupTag::cyclic(k));
}

bool SubgroupSpec::operator==(const SubgroupSpec& other) const {
    return host_ == other.host_ && floors_ == other.floors_;
}

std::string SubgroupSpec::describe() const {
    std::ostringstream os;
    os << "{ y in " << host_.describe() << " :";
    if (floors_.empty()) os << " v_p(y) >= 0 for all p";
    bool first = true;
    for (const auto& [p, fl] : floors_) {
        os << (first ? " " : ", ");
        first = false;
        if (!fl) os << "v_" << p.str() << " unbounded";
        else os << "v_" << p.str() << "(y) >= " << *fl;
    }
    os << " }";
    return os.str();
}

}  // namespace solenoid
