#pragma once

// Sorts a characteristic function into the classes the independence and
// symmetry criteria care about: Gaussian, idempotent (Haar measure of a
// compact subgroup), their convolution, provably outside that family, or
// unknown.  Structural recognition handles expression trees built from the
// validated factories; the OUTSIDE verdicts rest on exact certificates:
//
//  (a) on a torsion dual every Gaussian component is trivial, so a modulus
//      strictly between 0 and 1 rules the family out;
//  (b) the support of a Gaussian-times-Haar distribution is a coset of a
//      subgroup on which the function never vanishes, so f(y) != 0 with
//      f(2y) = 0 is a contradiction;
//  (c) on a rational dual the modulus on the support must be exp(-l*y^2),
//      so two support points with values c1*exp(-e1), c2*exp(-e2) force
//      e1*y2^2 = e2*y1^2 and c1^(D*y2^2) = c2^(D*y1^2); either failure is a
//      witness pair.  (Rational coefficient against a transcendental
//      exponential cannot cancel, so the two parts split cleanly.)

#include "solenoid/charfn.hpp"

namespace solenoid {

enum class DistributionClass {
    Gaussian,
    Idempotent,
    GaussianTimesIdempotent,
    Outside,
    Unknown,
};

const char* class_name(DistributionClass c);

struct Classification {
    DistributionClass cls = DistributionClass::Unknown;
    std::string note;
};

// Dual-group sample covering every denominator the host admits up to a size
// cap; the certificate scan runs over these.
std::vector<Rational> default_witness_points(const GroupTag& host);

Classification classify(const CharFnExpr& f, const std::vector<Rational>& points);
Classification classify(const CharFnExpr& f);

}  // namespace solenoid
