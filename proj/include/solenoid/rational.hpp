#pragma once

// Exact rational scalar type and the few number-theoretic helpers the rest of
// the library leans on (p-adic valuations, mod-1 reduction, CRT).  Rationals
// are boost::multiprecision::cpp_rational, which keeps num/den coprime with a
// positive denominator, exactly the canonical form required throughout.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace solenoid {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Parses "p", "-p", "p/q" (spaces not allowed).  Throws on malformed input or
// a zero denominator.
Rational parse_rational(const std::string& text);

// Formats as "p" or "p/q" with the sign on the numerator.
std::string format_rational(const Rational& r);

// Largest e with p^e | n, for n != 0.
int valuation(Int n, const Int& p);

// v_p of a nonzero rational: valuation(num) - valuation(den).
int valuation(const Rational& r, const Int& p);

// r - floor(r), in [0, 1).
Rational mod_one(const Rational& r);

Int floor_rational(const Rational& r);

// Trial-division factorization; keys ascending.  Intended for the small
// integers that occur as coefficients, denominators and group orders.
std::map<Int, int> factorize(Int n);

bool is_prime(const Int& n);

// a^-1 mod m, m >= 1, gcd(a, m) = 1 required.
Int mod_inverse(Int a, const Int& m);

// x = r_i mod m_i with pairwise coprime moduli; returns x mod prod(m_i).
Int crt_combine(const std::vector<std::pair<Int, Int>>& residues);

Int pow_int(Int base, int exp);

inline Rational square(const Rational& r) { return r * r; }

}  // namespace solenoid
