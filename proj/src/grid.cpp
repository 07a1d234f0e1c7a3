#include "solenoid/grid.hpp"

#include <sstream>
#include <stdexcept>

namespace solenoid {

GridSpec GridSpec::truncation(int level) {
    if (level < 1) throw std::invalid_argument("truncation level must be >= 1");
    GridSpec g;
    g.kind = Kind::TorsionTruncation;
    g.level = level;
    return g;
}

GridSpec GridSpec::box(Int den, Int max_num) {
    if (den <= 0 || max_num < 0) throw std::invalid_argument("box needs den > 0 and max >= 0");
    GridSpec g;
    g.kind = Kind::RationalBox;
    g.box_den = std::move(den);
    g.box_max = std::move(max_num);
    return g;
}

GridSpec GridSpec::explicit_points(std::vector<Rational> pts) {
    GridSpec g;
    g.kind = Kind::Explicit;
    g.points = std::move(pts);
    return g;
}

GridSpec GridSpec::default_for(const GroupTag& host) {
    switch (host.kind()) {
        case GroupTag::Kind::Torsion: return truncation(3);
        case GroupTag::Kind::Cyclic: return truncation(1);
        default: return box(24, 24);
    }
}

std::vector<Rational> GridSpec::enumerate(const GroupTag& host) const {
    std::vector<Rational> out;
    switch (kind) {
        case Kind::TorsionTruncation: {
            if (!host.is_mod_one())
                throw std::invalid_argument("truncation grids need a torsion or cyclic host");
            Int n = 1;
            if (host.kind() == GroupTag::Kind::Cyclic) {
                n = host.cyclic_order();
            } else {
                for (const auto& p : host.torsion_primes()) {
                    auto cap = host.exponent_cap(p);
                    int e = cap ? std::min(*cap, level) : level;
                    n *= pow_int(p, e);
                }
            }
            for (Int j = 0; j < n; ++j) out.emplace_back(Rational(j, n));
            return out;
        }
        case Kind::RationalBox: {
            if (host.is_mod_one())
                throw std::invalid_argument("box grids need a rational-group host");
            if (!host.profile().admits_denominator(box_den))
                throw std::invalid_argument("box denominator " + box_den.str() +
                                            " is outside the host profile");
            for (Int m = -box_max; m <= box_max; ++m) out.emplace_back(Rational(m, box_den));
            return out;
        }
        case Kind::Explicit: {
            for (const auto& p : points) {
                if (!host.contains(p))
                    throw std::invalid_argument("grid point " + format_rational(p) +
                                                " is outside " + host.describe());
                out.push_back(host.reduce(p));
            }
            return out;
        }
    }
    throw std::logic_error("unreachable grid kind");
}

std::string GridSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::TorsionTruncation: os << "truncation(level=" << level << ")"; break;
        case Kind::RationalBox:
            os << "box(den=" << box_den.str() << ",max=" << box_max.str() << ")";
            break;
        case Kind::Explicit: os << "explicit(" << points.size() << " points)"; break;
    }
    return os.str();
}

}  // namespace solenoid
