#include "solenoid/rational.hpp"

#include <cctype>

namespace solenoid {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto check_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!check_int(text)) throw std::invalid_argument("malformed rational: " + text);
        return Rational(Int(text));
    }
    const std::string ns = text.substr(0, slash);
    const std::string ds = text.substr(slash + 1);
    if (!check_int(ns) || !check_int(ds)) throw std::invalid_argument("malformed rational: " + text);
    Int d(ds);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(Int(ns), d);
}

std::string format_rational(const Rational& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

int valuation(Int n, const Int& p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    if (p < 2) throw std::invalid_argument("valuation base must be >= 2");
    if (n < 0) n = -n;
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

int valuation(const Rational& r, const Int& p) {
    if (r == 0) throw std::domain_error("valuation of zero");
    return valuation(num(r), p) - valuation(den(r), p);
}

Int floor_rational(const Rational& r) {
    Int q = num(r) / den(r);
    if (num(r) < 0 && q * den(r) != num(r)) --q;
    return q;
}

Rational mod_one(const Rational& r) { return r - Rational(floor_rational(r)); }

std::map<Int, int> factorize(Int n) {
    if (n == 0) throw std::domain_error("factorize(0)");
    if (n < 0) n = -n;
    std::map<Int, int> out;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        if (n % p == 0) return false;
    return true;
}

Int mod_inverse(Int a, const Int& m) {
    if (m < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
    a %= m;
    if (a < 0) a += m;
    // extended euclid on (a, m)
    Int r0 = a, r1 = m, s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: arguments not coprime");
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

Int crt_combine(const std::vector<std::pair<Int, Int>>& residues) {
    Int modulus = 1;
    for (const auto& [r, m] : residues) {
        (void)r;
        if (m < 1) throw std::invalid_argument("crt_combine: modulus must be positive");
        modulus *= m;
    }
    Int x = 0;
    for (const auto& [r, m] : residues) {
        const Int rest = modulus / m;
        x += r * rest * mod_inverse(rest % m, m);
    }
    x %= modulus;
    if (x < 0) x += modulus;
    return x;
}

Int pow_int(Int base, int exp) {
    if (exp < 0) throw std::invalid_argument("pow_int: negative exponent");
    Int out = 1;
    while (exp > 0) {
        if (exp & 1) out *= base;
        base *= base;
        exp >>= 1;
    }
    return out;
}

}  // namespace solenoid
