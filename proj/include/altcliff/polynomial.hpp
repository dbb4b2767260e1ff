#pragma once

// Dense univariate polynomials in λ over Q, and their fraction field Q(λ).
// Degrees stay tiny (≤ 2 in the constructions, a little more in products),
// so schoolbook arithmetic and Euclidean gcd are all we need.

#include "altcliff/rational.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

namespace altcliff {

class Poly {
public:
    Poly() = default;
    Poly(int c) : Poly(Rat(c)) {}
    Poly(long c) : Poly(Rat(c)) {}
    Poly(const Rat& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// The monomial λ.
    static Poly lambda() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

    static Poly monomial(const Rat& c, int e) {
        std::vector<Rat> v(e + 1, Rat(0));
        v[e] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
    }
    Rat leading() const { return is_zero() ? Rat(0) : c_.back(); }
    bool is_constant() const { return degree() <= 0; }
    Rat constant() const { return coeff(0); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<Rat> v(c_);
        for (auto& x : v) x = -x;
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(v));
    }
    friend Poly operator*(const Rat& s, const Poly& p) { return Poly(s) * p; }
    friend Poly operator*(const Poly& p, const Rat& s) { return Poly(s) * p; }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Horner evaluation at θ.
    Rat eval(const Rat& theta) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * theta + *it;
        return acc;
    }

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        assert(!b.is_zero());
        Poly r = a;
        std::vector<Rat> q(std::max(0, a.degree() - b.degree() + 1), Rat(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            Rat f = r.leading() / b.leading();
            q[shift] = f;
            r -= Poly::monomial(f, shift) * b;
        }
        return {Poly(std::move(q)), r};
    }

    /// Monic gcd (Euclid); gcd(0,0) = 0.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero() && a.leading() != 1) a = a * (Rat(1) / a.leading());
        return a;
    }

    std::string to_string(const std::string& var = "λ") const {
        if (is_zero()) return "0";
        std::string out;
        for (int e = degree(); e >= 0; --e) {
            const Rat c = coeff(e);
            if (c == 0) continue;
            Rat ac = c < 0 ? Rat(-c) : c;
            if (!out.empty()) out += (c < 0) ? "-" : "+";
            else if (c < 0) out += "-";
            bool show_coef = (e == 0) || ac != 1;
            if (show_coef) out += rat_to_string(ac);
            if (e > 0) {
                if (show_coef) out += "*";
                out += var;
                if (e > 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

    /// Sparse dump notation: "c*λ^e" terms joined by "+", ascending exponent.
    std::string to_sparse_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int e = 0; e <= degree(); ++e) {
            if (coeff(e) == 0) continue;
            if (!out.empty()) out += "+";
            out += rat_to_string(coeff(e)) + "*λ^" + std::to_string(e);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;  // c_[i] = coefficient of λ^i; no trailing zeros
};

/// Q(λ): denominator monic, gcd(num, den) = 1.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(const Rat& c) : num_(c), den_(1) {}
    RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
    RatFunc(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
        assert(!den_.is_zero());
        normalize();
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        assert(!b.is_zero());
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string(const std::string& var = "λ") const {
        if (is_polynomial()) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly::divmod(num_, g).first;
            den_ = Poly::divmod(den_, g).first;
        }
        Rat lc = den_.leading();
        if (lc != 1) {
            Rat inv = Rat(1) / lc;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
    Poly num_, den_;
};

}  // namespace altcliff

namespace Eigen {

template <>
struct NumTraits<altcliff::Poly> : GenericNumTraits<altcliff::Poly> {
    using Real = altcliff::Poly;
    using NonInteger = altcliff::Poly;
    using Nested = altcliff::Poly;
    using Literal = int;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 80,
    };
    static inline Real epsilon() { return altcliff::Poly(); }
    static inline Real dummy_precision() { return altcliff::Poly(); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<altcliff::RatFunc> : GenericNumTraits<altcliff::RatFunc> {
    using Real = altcliff::RatFunc;
    using NonInteger = altcliff::RatFunc;
    using Nested = altcliff::RatFunc;
    using Literal = int;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 120,
    };
    static inline Real epsilon() { return altcliff::RatFunc(); }
    static inline Real dummy_precision() { return altcliff::RatFunc(); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
