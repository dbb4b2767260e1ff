#pragma once

// Exact rational scalars: arbitrary-precision, always reduced, denominator > 0.
// A thin wrapper over cpp_rational; the wrapper keeps all operators
// non-template so the type composes cleanly with Eigen matrices.

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace altcliff {

using Int = boost::multiprecision::cpp_int;

class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(n) {}
    Rat(long long n) : v_(n) {}
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& n, const Int& d) {
        if (d == 0) throw std::domain_error("zero denominator");
        v_ = d < 0 ? boost::multiprecision::cpp_rational(-n, -d)
                   : boost::multiprecision::cpp_rational(n, d);
    }
    explicit Rat(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }
    int sign() const { return v_.sign(); }
    std::string str() const { return v_.str(); }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.v_ == 0) throw std::domain_error("division by zero rational");
        return Rat(a.v_ / b.v_);
    }
    Rat operator-() const { return Rat(-v_); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_; }

private:
    boost::multiprecision::cpp_rational v_;
};

inline Int num(const Rat& r) { return r.numerator(); }
inline Int den(const Rat& r) { return r.denominator(); }

/// Formats as "p" or "p/q", q > 0.
inline std::string rat_to_string(const Rat& r) { return r.str(); }

/// Parses "p", "-p" or "p/q". Returns nullopt on malformed input.
inline std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) return std::nullopt;
        return Rat(n, d);
    } catch (const std::runtime_error&) {
        return std::nullopt;
    }
}

/// Exact square root of a rational if it is a perfect square.
inline std::optional<Rat> rational_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rat(0);
    Int n = num(r), d = den(r);
    Int sn = boost::multiprecision::sqrt(n);
    Int sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rat(sn, sd);
}

inline bool is_rational_square(const Rat& r) {
    return r != 0 && rational_sqrt(r).has_value();
}

}  // namespace altcliff

namespace Eigen {

template <>
struct NumTraits<altcliff::Rat> : GenericNumTraits<altcliff::Rat> {
    using Real = altcliff::Rat;
    using NonInteger = altcliff::Rat;
    using Nested = altcliff::Rat;
    using Literal = int;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 30,
        MulCost = 30,
    };
    static inline Real epsilon() { return altcliff::Rat(); }
    static inline Real dummy_precision() { return altcliff::Rat(); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
