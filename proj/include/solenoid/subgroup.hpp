#pragma once

// Subgroups of a dual-group host, described by per-prime valuation floors:
//   S = { y in host : v_p(y) >= floor(p) for every prime p }.
// floor(p) defaults to 0 (integral at p), may be negative (denominator
// allowance), positive (numerator divisibility, rational hosts only), or
// absent entirely for primes where any power is allowed.  This one shape
// covers denominator-bounded subgroups, torsion subgroups, p-local subgroups
// like {m / p^k}, and integer multiples n*S of any of them.

#include "solenoid/groups.hpp"

namespace solenoid {

class SubgroupSpec {
public:
    // Whole host as a subgroup of itself.
    static SubgroupSpec full(GroupTag host);

    // Elements killed by n (mod-1 hosts only; rational groups are torsion-free).
    static SubgroupSpec torsion(GroupTag host, const Int& order);

    // { y : v_p(y) >= 0 except at the given primes, unbounded there }.
    // With an empty prime set this is the integer subgroup Z.
    static SubgroupSpec local(GroupTag host, const std::vector<Int>& unbounded_primes);

    // General form; floors keyed by prime, nullopt floor = unbounded below.
    static SubgroupSpec from_floors(GroupTag host, std::map<Int, std::optional<int>> floors);

    const GroupTag& host() const { return host_; }

    bool member(const DualElement& y) const;
    bool member(const Rational& value) const;

    // n * S.  In mod-1 hosts positive floors are clamped to 0: multiplication
    // by a unit of the local ring is onto, so the set is unchanged there.
    SubgroupSpec scaled(const Int& n) const;

    bool subgroup_of(const SubgroupSpec& other) const;

    // [S : sub], or nullopt when the index is infinite.
    std::optional<Int> index_of(const SubgroupSpec& sub) const;

    // Coset label of y in S/sub, an element of Z(k) with k the finite index.
    // The label map is the CRT glue of the per-prime reductions
    //   y |-> y * p^(-floor_S(p)) mod p^(floor_sub(p) - floor_S(p)).
    DualElement quotient_project(const SubgroupSpec& sub, const DualElement& y) const;

    const std::map<Int, std::optional<int>>& floors() const { return floors_; }

    bool operator==(const SubgroupSpec& other) const;

    std::string describe() const;

private:
    SubgroupSpec(GroupTag host, std::map<Int, std::optional<int>> floors);

    int floor_at(const Int& p, bool* unbounded) const;

    GroupTag host_;
    // nullopt mapped value = no lower bound at that prime.
    std::map<Int, std::optional<int>> floors_;
};

}  // namespace solenoid
