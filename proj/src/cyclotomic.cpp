#include "solenoid/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace solenoid {

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return poly_trim(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    Poly divisor = poly_trim(b);
    if (divisor.empty()) throw std::invalid_argument("polynomial division by zero");
    a = poly_trim(std::move(a));
    Poly quot;
    if (a.size() >= divisor.size()) quot.assign(a.size() - divisor.size() + 1, Rational(0));
    const Rational& lead = divisor.back();
    while (a.size() >= divisor.size()) {
        Rational factor = a.back() / lead;
        std::size_t shift = a.size() - divisor.size();
        quot[shift] = factor;
        for (std::size_t i = 0; i < divisor.size(); ++i) a[shift + i] -= factor * divisor[i];
        a = poly_trim(std::move(a));
    }
    return {poly_trim(std::move(quot)), std::move(a)};
}

namespace {

// All positive divisors of n, ascending.
std::vector<Int> divisors(const Int& n) {
    std::vector<Int> out{1};
    for (const auto& [p, e] : factorize(n)) {
        std::vector<Int> next;
        Int pk = 1;
        for (int i = 0; i <= e; ++i) {
            for (const auto& d : out) next.push_back(d * pk);
            pk *= p;
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const Poly& cyclotomic_polynomial(const Int& n) {
    static std::map<Int, Poly> memo;
    static std::mutex guard;
    std::scoped_lock lock(guard);

    // Inner worker so recursion happens with the lock already held.
    struct Builder {
        std::map<Int, Poly>& memo;
        const Poly& get(const Int& n) {
            if (auto it = memo.find(n); it != memo.end()) return it->second;
            if (n < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
            Poly value;
            if (n == 1) {
                value = {Rational(-1), Rational(1)};  // x - 1
            } else {
                Poly x_n_minus_1(n.convert_to<std::size_t>() + 1, Rational(0));
                x_n_minus_1.front() = -1;
                x_n_minus_1.back() = 1;
                Poly acc = std::move(x_n_minus_1);
                for (const auto& d : divisors(n)) {
                    if (d == n) continue;
                    auto [q, r] = poly_divmod(acc, get(d));
                    if (!r.empty())
                        throw std::logic_error("cyclotomic division left a remainder");
                    acc = std::move(q);
                }
                value = std::move(acc);
            }
            return memo.emplace(n, std::move(value)).first->second;
        }
    };
    return Builder{memo}.get(n);
}

Cyclo cyclo_zero(const Int& n) {
    return Cyclo(n.convert_to<std::size_t>(), Rational(0));
}

Cyclo cyclo_one(const Int& n) {
    Cyclo c = cyclo_zero(n);
    c.at(0) = 1;
    return c;
}

Cyclo cyclo_root_power(const Int& n, const Int& k) {
    Cyclo c = cyclo_zero(n);
    Int idx = ((k % n) + n) % n;
    c.at(idx.convert_to<std::size_t>()) = 1;
    return c;
}

Cyclo cyclo_mul(const Cyclo& a, const Cyclo& b) {
    if (a.size() != b.size()) throw std::invalid_argument("mixed cyclotomic orders");
    const std::size_t n = a.size();
    Cyclo out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            out[(i + j) % n] += a[i] * b[j];
        }
    }
    return out;
}

void cyclo_add_scaled(Cyclo& a, const Rational& w, const Cyclo& b) {
    if (a.size() != b.size()) throw std::invalid_argument("mixed cyclotomic orders");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += w * b[i];
}

std::optional<Rational> cyclo_rational(const Cyclo& a) {
    const Poly& phi = cyclotomic_polynomial(Int(a.size()));
    auto [q, r] = poly_divmod(Poly(a.begin(), a.end()), phi);
    if (r.empty()) return Rational(0);
    if (r.size() == 1) return r.front();
    return std::nullopt;
}

bool cyclo_is_zero(const Cyclo& a) {
    auto r = cyclo_rational(a);
    return r && *r == 0;
}

}  // namespace solenoid
