#pragma once

// Square classes of Q*: sign together with the set of primes of odd exponent.
// Canonical form by trial division of numerator·denominator; inputs in this
// project stay far below the range where that hurts.

#include "altcliff/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace altcliff {

/// Prime factorization of |n| by trial division.
inline std::map<Int, int> factorize(Int n) {
    if (n < 0) n = -n;
    std::map<Int, int> f;
    if (n <= 1) return f;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    }
    if (n > 1) ++f[n];
    return f;
}

class SquareClass {
public:
    SquareClass() : sign_(1) {}

    /// Canonical class of a nonzero rational.
    static SquareClass of(const Rat& r) {
        if (r == 0) throw std::invalid_argument("square class of zero");
        SquareClass sc;
        sc.sign_ = r < 0 ? -1 : 1;
        for (const auto& [p, e] : factorize(num(r) * den(r)))
            if (e % 2 != 0) sc.primes_.push_back(p);
        return sc;
    }

    int sign() const { return sign_; }
    const std::vector<Int>& odd_primes() const { return primes_; }
    bool is_trivial() const { return sign_ == 1 && primes_.empty(); }

    /// Squarefree signed representative.
    Rat representative() const {
        Int r = sign_;
        for (const auto& p : primes_) r *= p;
        return Rat(r);
    }

    /// Class multiplication: signs multiply, prime sets combine by
    /// symmetric difference.
    friend SquareClass operator*(const SquareClass& a, const SquareClass& b) {
        SquareClass r;
        r.sign_ = a.sign_ * b.sign_;
        std::size_t i = 0, j = 0;
        while (i < a.primes_.size() || j < b.primes_.size()) {
            if (j == b.primes_.size() || (i < a.primes_.size() && a.primes_[i] < b.primes_[j]))
                r.primes_.push_back(a.primes_[i++]);
            else if (i == a.primes_.size() || b.primes_[j] < a.primes_[i])
                r.primes_.push_back(b.primes_[j++]);
            else {
                ++i;
                ++j;
            }
        }
        return r;
    }

    friend bool operator==(const SquareClass& a, const SquareClass& b) {
        return a.sign_ == b.sign_ && a.primes_ == b.primes_;
    }
    friend bool operator!=(const SquareClass& a, const SquareClass& b) { return !(a == b); }
    friend bool operator<(const SquareClass& a, const SquareClass& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        return a.primes_ < b.primes_;
    }

    std::string to_string() const {
        std::string s = sign_ < 0 ? "-1" : "+1";
        s += ",{";
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            if (i) s += ",";
            s += primes_[i].str();
        }
        return s + "}";
    }

private:
    int sign_;
    std::vector<Int> primes_;  // sorted ascending
};

}  // namespace altcliff
