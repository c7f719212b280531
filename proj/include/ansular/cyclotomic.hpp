#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ansular/rational.hpp"

namespace ansular {

namespace detail {

/// Integer coefficients of the M-th cyclotomic polynomial, low degree first.
/// Computed by exact division of x^M - 1 by the cyclotomic polynomials of
/// the proper divisors; results are cached.
inline const std::vector<std::int64_t>& cyclotomic_polynomial(int m) {
    static std::map<int, std::vector<std::int64_t>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // p := x^m - 1
    std::vector<std::int64_t> p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const auto& phi_d = cyclotomic_polynomial(d);
        // exact division p /= phi_d (both monic over Z)
        std::vector<std::int64_t> q(p.size() - phi_d.size() + 1, 0);
        std::vector<std::int64_t> rem = p;
        for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
            std::int64_t c = rem[i + phi_d.size() - 1];
            q[i] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < phi_d.size(); ++j)
                rem[i + j] -= c * phi_d[j];
        }
        p = std::move(q);
    }
    return cache.emplace(m, std::move(p)).first->second;
}

} // namespace detail

/// Exact element of the cyclotomic field Q(zeta_M), stored as a polynomial in
/// zeta_M reduced modulo the M-th cyclotomic polynomial. Equality is exact;
/// no floating point is involved anywhere.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeff_() {}

    static Cyclotomic zero() { return Cyclotomic(); }

    static Cyclotomic one() { return integer(1); }

    static Cyclotomic integer(std::int64_t n) { return from_rational(Rational(n)); }

    static Cyclotomic from_rational(const Rational& r) {
        Cyclotomic c;
        c.order_ = 1;
        if (!r.is_zero()) c.coeff_ = {r};
        return c;
    }

    /// zeta_M^k
    static Cyclotomic root_of_unity(int order, std::int64_t k) {
        if (order < 1) throw std::domain_error("Cyclotomic: root order must be positive");
        std::int64_t e = ((k % order) + order) % order;
        Cyclotomic c;
        c.order_ = order;
        c.coeff_.assign(static_cast<std::size_t>(e) + 1, Rational(0));
        c.coeff_.back() = Rational(1);
        c.reduce();
        return c;
    }

    int order() const { return order_; }
    bool is_zero() const { return coeff_.empty(); }
    bool is_one() const { return *this == one(); }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = to_common_order(a, b);
        if (y.coeff_.size() > x.coeff_.size()) x.coeff_.resize(y.coeff_.size(), Rational(0));
        for (std::size_t i = 0; i < y.coeff_.size(); ++i) x.coeff_[i] += y.coeff_[i];
        x.trim();
        return x;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        return a + (-b);
    }

    Cyclotomic operator-() const {
        Cyclotomic c = *this;
        for (auto& r : c.coeff_) r = -r;
        return c;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = to_common_order(a, b);
        if (x.coeff_.empty() || y.coeff_.empty()) { Cyclotomic z; z.order_ = x.order_; z.trim(); return z; }
        std::vector<Rational> prod(x.coeff_.size() + y.coeff_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < x.coeff_.size(); ++i)
            for (std::size_t j = 0; j < y.coeff_.size(); ++j)
                prod[i + j] += x.coeff_[i] * y.coeff_[j];
        Cyclotomic z;
        z.order_ = x.order_;
        z.coeff_ = std::move(prod);
        z.reduce();
        return z;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    Cyclotomic pow(std::int64_t e) const {
        if (e < 0) throw std::domain_error("Cyclotomic: negative power not supported");
        Cyclotomic acc = one();
        Cyclotomic base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = to_common_order(a, b);
        return x.coeff_ == y.coeff_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// If this value equals zeta_M^k for the stored order M, return k.
    std::optional<int> as_root_exponent() const {
        for (int k = 0; k < order_; ++k)
            if (*this == root_of_unity(order_, k)) return k;
        return std::nullopt;
    }

    /// Human-readable form, e.g. "z4^3" or "1 - z3".
    std::string str() const {
        if (coeff_.empty()) return "0";
        if (auto k = as_root_exponent()) {
            if (*k == 0) return "1";
            std::ostringstream os;
            os << "z" << order_;
            if (*k != 1) os << "^" << *k;
            return os.str();
        }
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeff_.size(); ++i) {
            if (coeff_[i].is_zero()) continue;
            if (!first) os << " + ";
            os << coeff_[i].str();
            if (i > 0) {
                os << "*z" << order_;
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

    /// Coefficients of the reduced representative (for serialization).
    const std::vector<Rational>& coefficients() const { return coeff_; }

private:
    void trim() {
        while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
    }

    void reduce() {
        const auto& phi = detail::cyclotomic_polynomial(order_);
        const std::size_t deg = phi.size() - 1;
        while (coeff_.size() > deg) {
            Rational c = coeff_.back();
            std::size_t shift = coeff_.size() - phi.size();
            if (!c.is_zero())
                for (std::size_t j = 0; j < phi.size(); ++j)
                    coeff_[shift + j] -= c * Rational(phi[j]);
            coeff_.pop_back();
        }
        trim();
    }

    Cyclotomic promoted(int target_order) const {
        if (target_order == order_) return *this;
        if (target_order % order_ != 0)
            throw std::logic_error("Cyclotomic: invalid order promotion");
        int stride = target_order / order_;
        Cyclotomic c;
        c.order_ = target_order;
        if (!coeff_.empty()) {
            c.coeff_.assign((coeff_.size() - 1) * stride + 1, Rational(0));
            for (std::size_t i = 0; i < coeff_.size(); ++i) c.coeff_[i * stride] = coeff_[i];
        }
        c.reduce();
        return c;
    }

    static std::pair<Cyclotomic, Cyclotomic> to_common_order(const Cyclotomic& a,
                                                             const Cyclotomic& b) {
        int l = std::lcm(a.order_, b.order_);
        return {a.promoted(l), b.promoted(l)};
    }

    int order_;
    std::vector<Rational> coeff_; // reduced mod Phi_order, low degree first
};

} // namespace ansular
