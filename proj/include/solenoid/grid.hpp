#pragma once

// Finite samples of a dual group over which equations are checked
// exhaustively.  Torsion hosts truncate to the subgroup of denominator
// prod p^level; rational hosts take the box {m / den : |m| <= max_num};
// explicit point lists pass through reduction and membership validation.

#include "solenoid/groups.hpp"

namespace solenoid {

struct GridSpec {
    enum class Kind { TorsionTruncation, RationalBox, Explicit };

    Kind kind = Kind::TorsionTruncation;
    int level = 3;
    Int box_den = 24;
    Int box_max = 24;
    std::vector<Rational> points;

    static GridSpec truncation(int level);
    static GridSpec box(Int den, Int max_num);
    static GridSpec explicit_points(std::vector<Rational> pts);
    static GridSpec default_for(const GroupTag& host);

    std::vector<Rational> enumerate(const GroupTag& host) const;

    std::string describe() const;
};

}  // namespace solenoid
