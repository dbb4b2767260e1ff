#pragma once

// Exact dense linear algebra over Q and Q(λ): Gaussian elimination giving a
// particular solution plus a kernel basis, with deterministic normalization
// of kernel vectors (denominator-free, primitive, positive leading entry).

#include "altcliff/polynomial.hpp"
#include "altcliff/rational.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace altcliff {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatR = Mat<Rat>;
using VecR = Vec<Rat>;
using MatF = Mat<RatFunc>;
using VecF = Vec<RatFunc>;

inline bool scalar_is_zero(const Rat& x) { return x == 0; }
inline bool scalar_is_zero(const RatFunc& x) { return x.is_zero(); }

/// Clears denominators and rational content; first nonzero entry gets a
/// positive leading coefficient. Entries come back as polynomials.
inline void normalize_kernel_vector(VecF& v) {
    Poly den_lcm(1);
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) {
            Poly g = Poly::gcd(den_lcm, v[i].den());
            den_lcm = den_lcm * Poly::divmod(v[i].den(), g).first;
        }
    std::vector<Poly> entries(v.size());
    Poly poly_gcd;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        entries[i] = (v[i] * RatFunc(den_lcm)).num();
        poly_gcd = Poly::gcd(poly_gcd, entries[i]);
    }
    if (!poly_gcd.is_zero() && poly_gcd.degree() > 0)
        for (auto& e : entries) e = Poly::divmod(e, poly_gcd).first;
    // rational content -> primitive integer coefficients
    Int g(0), l(1);
    for (const auto& e : entries)
        for (const auto& c : e.coeffs()) {
            if (c == 0) continue;
            g = boost::multiprecision::gcd(g, num(c) < 0 ? Int(-num(c)) : num(c));
            l = boost::multiprecision::lcm(l, den(c));
        }
    Rat scale = (g == 0) ? Rat(1) : Rat(l, g);
    for (auto& e : entries) e = e * scale;
    for (const auto& e : entries)
        if (!e.is_zero()) {
            if (e.leading() < 0)
                for (auto& f : entries) f = -f;
            break;
        }
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = RatFunc(entries[i]);
}

/// Same normalization over Q: primitive integer vector, first nonzero positive.
inline void normalize_kernel_vector(VecR& v) {
    Int g(0), l(1);
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v[i] != 0) {
            g = boost::multiprecision::gcd(g, num(v[i]) < 0 ? Int(-num(v[i])) : num(v[i]));
            l = boost::multiprecision::lcm(l, den(v[i]));
        }
    if (g == 0) return;
    Rat scale(l, g);
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] *= scale;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v[i] != 0) {
            if (v[i] < 0) v = -v;
            break;
        }
}

template <class S>
struct LinearSolution {
    bool consistent = false;
    Vec<S> particular;            // valid when consistent
    std::vector<Vec<S>> kernel;   // basis of the homogeneous solution space
    int rank = 0;
};

/// Exact Gaussian elimination over a field scalar (Rat or RatFunc).
/// Inconsistency is a valid return, not an error.
template <class S>
LinearSolution<S> solve_linear(Mat<S> A, Vec<S> b) {
    const Eigen::Index rows = A.rows(), cols = A.cols();
    std::vector<Eigen::Index> pivot_col;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (!scalar_is_zero(A(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) {
            A.row(piv).swap(A.row(r));
            std::swap(b[piv], b[r]);
        }
        S inv = S(1) / A(r, c);
        for (Eigen::Index j = c; j < cols; ++j) A(r, j) = A(r, j) * inv;
        b[r] = b[r] * inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || scalar_is_zero(A(i, c))) continue;
            S f = A(i, c);
            for (Eigen::Index j = c; j < cols; ++j) A(i, j) = A(i, j) - f * A(r, j);
            b[i] = b[i] - f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    LinearSolution<S> sol;
    sol.rank = static_cast<int>(r);
    for (Eigen::Index i = r; i < rows; ++i)
        if (!scalar_is_zero(b[i])) return sol;  // inconsistent
    sol.consistent = true;
    sol.particular = Vec<S>::Constant(cols, S(0));
    for (Eigen::Index i = 0; i < r; ++i) sol.particular[pivot_col[i]] = b[i];
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    for (Eigen::Index c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec<S> k = Vec<S>::Constant(cols, S(0));
        k[c] = S(1);
        for (Eigen::Index i = 0; i < r; ++i) k[pivot_col[i]] = S(0) - A(i, c);
        normalize_kernel_vector(k);
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

/// Kernel basis of A (normalized as above).
template <class S>
std::vector<Vec<S>> kernel_basis(const Mat<S>& A) {
    Vec<S> zero = Vec<S>::Constant(A.rows(), S(0));
    return solve_linear<S>(A, zero).kernel;
}

}  // namespace altcliff
