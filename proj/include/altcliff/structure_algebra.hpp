#pragma once

// Finite-rank nonassociative algebras by structure constants over an exact
// commutative coefficient ring, with the constructors and verifiers used to
// assemble and certify octonion rings: quaternion tables, Cayley–Dickson
// doubling, the classical Clifford comparison algebra, alternativity and
// Moufang-consequence checkers, and center/nucleus computation.

#include "altcliff/linalg.hpp"
#include "altcliff/polynomial.hpp"
#include "altcliff/rational.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace altcliff {

inline std::string format_scalar(const Rat& r) { return rat_to_string(r); }
inline std::string format_scalar(const Poly& p) { return p.to_sparse_string(); }
inline std::string format_scalar(const RatFunc& f) { return f.to_string(); }

inline bool scalar_is_zero_r(const Rat& x) { return x == 0; }
inline bool scalar_is_zero_r(const Poly& x) { return x.is_zero(); }
inline bool scalar_is_zero_r(const RatFunc& x) { return x.is_zero(); }

template <class R>
bool element_is_zero(const Vec<R>& x) {
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (!scalar_is_zero_r(x[i])) return false;
    return true;
}

template <class R>
bool matrix_is_zero(const Mat<R>& M) {
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = 0; j < M.cols(); ++j)
            if (!scalar_is_zero_r(M(i, j))) return false;
    return true;
}

/// e_i e_j = Σ_k γ_ijk e_k over a commutative coefficient ring R.
template <class R>
struct StructureAlgebra {
    int rank = 0;
    int unit = 0;
    std::vector<std::string> labels;
    std::vector<R> table;  // rank³ entries, index ((i·rank)+j)·rank+k

    StructureAlgebra() = default;
    StructureAlgebra(int rank_, int unit_)
        : rank(rank_), unit(unit_), labels(rank_), table(std::size_t(rank_) * rank_ * rank_, R(0)) {}

    const R& gamma(int i, int j, int k) const {
        return table[(std::size_t(i) * rank + j) * rank + k];
    }
    R& gamma_ref(int i, int j, int k) { return table[(std::size_t(i) * rank + j) * rank + k]; }

    Vec<R> zero_element() const { return Vec<R>::Constant(rank, R(0)); }
    Vec<R> basis(int i) const {
        Vec<R> e = zero_element();
        e[i] = R(1);
        return e;
    }
    Vec<R> unit_element() const { return basis(unit); }

    bool is_unital() const {
        for (int i = 0; i < rank; ++i)
            for (int k = 0; k < rank; ++k) {
                R want = (k == i) ? R(1) : R(0);
                if (!(gamma(unit, i, k) == want) || !(gamma(i, unit, k) == want)) return false;
            }
        return true;
    }
};

template <class R>
Vec<R> multiply(const StructureAlgebra<R>& A, const Vec<R>& x, const Vec<R>& y) {
    if (x.size() != A.rank || y.size() != A.rank)
        throw std::invalid_argument("element rank mismatch");
    Vec<R> out = A.zero_element();
    for (int i = 0; i < A.rank; ++i) {
        if (scalar_is_zero_r(x[i])) continue;
        for (int j = 0; j < A.rank; ++j) {
            if (scalar_is_zero_r(y[j])) continue;
            R c = x[i] * y[j];
            for (int k = 0; k < A.rank; ++k) {
                const R& g = A.gamma(i, j, k);
                if (!scalar_is_zero_r(g)) out[k] += c * g;
            }
        }
    }
    return out;
}

template <class R>
Vec<R> commutator(const StructureAlgebra<R>& A, const Vec<R>& x, const Vec<R>& y) {
    return multiply(A, x, y) - multiply(A, y, x);
}

template <class R>
Vec<R> circ(const StructureAlgebra<R>& A, const Vec<R>& x, const Vec<R>& y) {
    return multiply(A, x, y) + multiply(A, y, x);
}

template <class R>
Vec<R> associator(const StructureAlgebra<R>& A, const Vec<R>& x, const Vec<R>& y,
                  const Vec<R>& z) {
    return multiply(A, multiply(A, x, y), z) - multiply(A, x, multiply(A, y, z));
}

/// Matrix of R_b (x ↦ x·b) acting on coordinates.
template <class R>
Mat<R> right_mult_matrix(const StructureAlgebra<R>& A, const Vec<R>& b) {
    Mat<R> M = Mat<R>::Constant(A.rank, A.rank, R(0));
    for (int i = 0; i < A.rank; ++i)
        for (int j = 0; j < A.rank; ++j) {
            if (scalar_is_zero_r(b[j])) continue;
            for (int k = 0; k < A.rank; ++k) M(k, i) += b[j] * A.gamma(i, j, k);
        }
    return M;
}

/// Matrix of L_b (x ↦ b·x).
template <class R>
Mat<R> left_mult_matrix(const StructureAlgebra<R>& A, const Vec<R>& b) {
    Mat<R> M = Mat<R>::Constant(A.rank, A.rank, R(0));
    for (int j = 0; j < A.rank; ++j)
        for (int i = 0; i < A.rank; ++i) {
            if (scalar_is_zero_r(b[i])) continue;
            for (int k = 0; k < A.rank; ++k) M(k, j) += b[i] * A.gamma(i, j, k);
        }
    return M;
}

// ---------------------------------------------------------------------------
// verifiers

struct CheckReport {
    std::vector<std::string> violations;
    int checks_run = 0;
    std::uint64_t seed = 0;
    bool ok() const { return violations.empty(); }
};

/// Basis-level alternativity: (e_i,e_i,e_j) = (e_i,e_j,e_j) = 0 and full
/// alternation of (e_i,e_j,e_k) under transpositions. Equivalent to the
/// element-wise definition when 2 is invertible in R.
template <class R>
CheckReport check_alternative(const StructureAlgebra<R>& A) {
    CheckReport rep;
    auto note = [&](int i, int j, int k, const char* what) {
        std::ostringstream os;
        os << what << " fails at basis triple (" << i << "," << j << "," << k << ")";
        rep.violations.push_back(os.str());
    };
    for (int i = 0; i < A.rank; ++i)
        for (int j = 0; j < A.rank; ++j) {
            ++rep.checks_run;
            if (!element_is_zero(associator(A, A.basis(i), A.basis(i), A.basis(j))))
                note(i, i, j, "(a,a,b)=0");
            if (!element_is_zero(associator(A, A.basis(i), A.basis(j), A.basis(j))))
                note(i, j, j, "(a,b,b)=0");
        }
    for (int i = 0; i < A.rank; ++i)
        for (int j = 0; j < A.rank; ++j)
            for (int k = 0; k < A.rank; ++k) {
                ++rep.checks_run;
                Vec<R> a = associator(A, A.basis(i), A.basis(j), A.basis(k));
                if (!element_is_zero<R>(a + associator(A, A.basis(j), A.basis(i), A.basis(k))))
                    note(i, j, k, "associator alternation (swap 1,2)");
                if (!element_is_zero<R>(a + associator(A, A.basis(i), A.basis(k), A.basis(j))))
                    note(i, j, k, "associator alternation (swap 2,3)");
            }
    return rep;
}

template <class R>
Vec<R> random_element(const StructureAlgebra<R>& A, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-5, 5);
    Vec<R> x = A.zero_element();
    for (int i = 0; i < A.rank; ++i) x[i] = R(d(rng));
    return x;
}

/// Evaluates the standard alternative-ring identities on pseudo-random
/// elements with small integer coordinates:
///   [a∘b, a] = [b, a²]            (two-generated subrings are associative)
///   (a,[b,a],c) = [a,(a,b,c)]
///   a∘(a,b,c) = (a²,b,c)
///   (a, a∘b, c) = (a²,b,c)
///   R_b∘R_c = R_{b∘c} and L_b∘L_c = L_{b∘c}   (as operator matrices)
///   (x,y,xy) = (x,y,yx) = 0       (Artin)
template <class R>
CheckReport check_identities(const StructureAlgebra<R>& A, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    CheckReport rep;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    auto fail = [&](int t, const char* what) {
        std::ostringstream os;
        os << what << " fails on trial " << t;
        rep.violations.push_back(os.str());
    };
    for (int t = 0; t < trials; ++t) {
        Vec<R> a = random_element(A, rng), b = random_element(A, rng), c = random_element(A, rng);
        Vec<R> a2 = multiply(A, a, a);
        ++rep.checks_run;
        if (!element_is_zero<R>(commutator(A, circ(A, a, b), a) - commutator(A, b, a2)))
            fail(t, "[a∘b,a]=[b,a²]");
        if (!element_is_zero<R>(associator(A, a, commutator(A, b, a), c) -
                             commutator(A, a, associator(A, a, b, c))))
            fail(t, "(a,[b,a],c)=[a,(a,b,c)]");
        if (!element_is_zero<R>(circ(A, a, associator(A, a, b, c)) - associator(A, a2, b, c)))
            fail(t, "a∘(a,b,c)=(a²,b,c)");
        if (!element_is_zero<R>(associator(A, a, circ(A, a, b), c) - associator(A, a2, b, c)))
            fail(t, "(a,a∘b,c)=(a²,b,c)");
        Mat<R> Rb = right_mult_matrix(A, b), Rc = right_mult_matrix(A, c);
        Mat<R> Rbc = right_mult_matrix(A, circ(A, b, c));
        if (!matrix_is_zero<R>(Rb * Rc + Rc * Rb - Rbc)) fail(t, "R_b∘R_c=R_{b∘c}");
        Mat<R> Lb = left_mult_matrix(A, b), Lc = left_mult_matrix(A, c);
        Mat<R> Lbc = left_mult_matrix(A, circ(A, b, c));
        if (!matrix_is_zero<R>(Lb * Lc + Lc * Lb - Lbc)) fail(t, "L_b∘L_c=L_{b∘c}");
        if (!element_is_zero(associator(A, a, b, multiply(A, a, b)))) fail(t, "(a,b,ab)=0");
        if (!element_is_zero(associator(A, a, b, multiply(A, b, a)))) fail(t, "(a,b,ba)=0");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// constructors

/// Standard involution and reduced trace data on a basis.
template <class R>
struct InvolutionData {
    Mat<R> conj;        // conj(e_j) = Σ_k conj(k,j) e_k
    Vec<R> trace;       // tr(e_j) ∈ R, with tr(a)·1 = a + ā
    Vec<R> conjugate(const Vec<R>& x) const { return conj * x; }
    R trace_of(const Vec<R>& x) const {
        R t(0);
        for (Eigen::Index i = 0; i < x.size(); ++i) t += trace[i] * x[i];
        return t;
    }
};

/// Quaternion algebra (α₁,α₂): basis {1,u,v,uv}, u² = α₁, v² = α₂, vu = −uv.
template <class R>
std::pair<StructureAlgebra<R>, InvolutionData<R>> quaternion_algebra(const R& a1, const R& a2) {
    if (scalar_is_zero_r(a1) || scalar_is_zero_r(a2))
        throw std::invalid_argument("quaternion parameters must be nonzero");
    StructureAlgebra<R> A(4, 0);
    A.labels = {"1", "u", "v", "uv"};
    auto set = [&](int i, int j, int k, const R& val) { A.gamma_ref(i, j, k) = val; };
    for (int i = 0; i < 4; ++i) {
        set(0, i, i, R(1));
        if (i) set(i, 0, i, R(1));
    }
    set(1, 1, 0, a1);                 // u·u = α₁
    set(2, 2, 0, a2);                 // v·v = α₂
    set(1, 2, 3, R(1));               // u·v = uv
    set(2, 1, 3, R(0) - R(1));        // v·u = −uv
    set(1, 3, 2, a1);                 // u·uv = α₁ v
    set(3, 1, 2, R(0) - a1);          // uv·u = −α₁ v
    set(2, 3, 1, R(0) - a2);          // v·uv = −α₂ u
    set(3, 2, 1, a2);                 // uv·v = α₂ u
    set(3, 3, 0, R(0) - a1 * a2);     // (uv)² = −α₁α₂
    InvolutionData<R> inv;
    inv.conj = Mat<R>::Constant(4, 4, R(0));
    inv.conj(0, 0) = R(1);
    for (int i = 1; i < 4; ++i) inv.conj(i, i) = R(0) - R(1);
    inv.trace = Vec<R>::Constant(4, R(0));
    inv.trace[0] = R(2);
    return {A, inv};
}

/// Cayley–Dickson double on basis {1,u,v,uv, z,uz,vz,(uv)z} with the product
/// (a + bz)(c + dz) = (ac + γ d̄ b) + (da + b c̄)z, so z·a = ā·z and z² = γ.
/// γ = 0 is rejected: the double would be degenerate.
template <class R>
StructureAlgebra<R> cayley_dickson_double(const StructureAlgebra<R>& Q,
                                          const InvolutionData<R>& inv, const R& gamma) {
    if (Q.rank != 4 || Q.unit != 0) throw std::invalid_argument("rank-4 unital base required");
    if (scalar_is_zero_r(gamma)) throw std::invalid_argument("doubling scalar must be nonzero");
    StructureAlgebra<R> D(8, 0);
    D.labels.resize(8);
    for (int i = 0; i < 4; ++i) {
        D.labels[i] = Q.labels[i];
        D.labels[i + 4] = (i == 0) ? "z" : Q.labels[i] + "z";
    }
    auto conj_basis = [&](int j) { return Vec<R>(inv.conj.col(j)); };
    for (int p = 0; p < 8; ++p)
        for (int q = 0; q < 8; ++q) {
            const int i = p % 4, j = q % 4;
            Vec<R> low = Vec<R>::Constant(4, R(0)), high = low;
            if (p < 4 && q < 4) {
                for (int k = 0; k < 4; ++k) low[k] = Q.gamma(i, j, k);
            } else if (p < 4) {
                high = multiply(Q, Q.basis(j), Q.basis(i));  // e_i·(e_j z) = (e_j e_i)z
            } else if (q < 4) {
                high = multiply(Q, Q.basis(i), conj_basis(j));  // (e_i z)·e_j = (e_i ē_j)z
            } else {
                low = multiply(Q, conj_basis(j), Q.basis(i));  // (e_i z)(e_j z) = γ ē_j e_i
                for (int k = 0; k < 4; ++k) low[k] = gamma * low[k];
            }
            for (int k = 0; k < 4; ++k) {
                D.gamma_ref(p, q, k) = low[k];
                D.gamma_ref(p, q, k + 4) = high[k];
            }
        }
    return D;
}

/// Classical (associative) Clifford algebra of ⟨α₁,α₂,α₃⟩ on the monomial
/// basis {1,u,v,w,uv,uw,vw,uvw}; generators anticommute and square to α_i.
/// Associativity is verified on all basis triples at construction.
inline StructureAlgebra<Rat> classical_clifford_ternary(const Rat& a1, const Rat& a2,
                                                        const Rat& a3) {
    if (a1 == 0 || a2 == 0 || a3 == 0)
        throw std::invalid_argument("Clifford parameters must be nonzero");
    const Rat alpha[3] = {a1, a2, a3};
    // blade bitmask (bit g = generator g) -> basis index in the fixed order
    const int mask_to_index[8] = {0, 1, 2, 4, 3, 5, 6, 7};
    StructureAlgebra<Rat> A(8, 0);
    A.labels = {"1", "u", "v", "w", "uv", "uw", "vw", "uvw"};
    for (int ma = 0; ma < 8; ++ma)
        for (int mb = 0; mb < 8; ++mb) {
            Rat coef(1);
            int acc = ma;
            for (int g = 0; g < 3; ++g) {
                if (!(mb & (1 << g))) continue;
                int higher = 0;
                for (int h = g + 1; h < 3; ++h)
                    if (acc & (1 << h)) ++higher;
                if (higher % 2 != 0) coef = -coef;
                if (acc & (1 << g)) {
                    coef *= alpha[g];
                    acc &= ~(1 << g);
                } else {
                    acc |= (1 << g);
                }
            }
            A.gamma_ref(mask_to_index[ma], mask_to_index[mb], mask_to_index[acc]) = coef;
        }
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            for (int k = 0; k < 8; ++k)
                if (!element_is_zero(associator(A, A.basis(i), A.basis(j), A.basis(k))))
                    throw std::logic_error("Clifford table not associative");
    return A;
}

// ---------------------------------------------------------------------------
// center and nucleus over a field scalar

/// Kernel of the stacked linear conditions [x,e_i] = 0 and (x,e_i,e_j) = 0.
template <class S>
std::vector<Vec<S>> center_basis(const StructureAlgebra<S>& A) {
    const int n = A.rank;
    Mat<S> M = Mat<S>::Constant(n * n + n * n * n, n, S(0));
    Eigen::Index row = 0;
    for (int i = 0; i < n; ++i) {
        Mat<S> C = right_mult_matrix(A, A.basis(i)) - left_mult_matrix(A, A.basis(i));
        M.block(row, 0, n, n) = C;  // coords of [x, e_i]
        row += n;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // (x, e_i, e_j) = (x e_i) e_j − x (e_i e_j)
            Mat<S> C = right_mult_matrix(A, A.basis(j)) * right_mult_matrix(A, A.basis(i)) -
                       right_mult_matrix(A, multiply(A, A.basis(i), A.basis(j)));
            M.block(row, 0, n, n) = C;
            row += n;
        }
    return kernel_basis<S>(M);
}

/// Kernel of the three associator systems (x,e_i,e_j), (e_i,x,e_j), (e_i,e_j,x).
template <class S>
std::vector<Vec<S>> nucleus_basis(const StructureAlgebra<S>& A) {
    const int n = A.rank;
    Mat<S> M = Mat<S>::Constant(3 * n * n * n, n, S(0));
    Eigen::Index row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat<S> Ri = right_mult_matrix(A, A.basis(i)), Rj = right_mult_matrix(A, A.basis(j));
            Mat<S> Li = left_mult_matrix(A, A.basis(i)), Lj = left_mult_matrix(A, A.basis(j));
            M.block(row, 0, n, n) =
                Rj * Ri - right_mult_matrix(A, multiply(A, A.basis(i), A.basis(j)));
            row += n;
            M.block(row, 0, n, n) = Rj * Li - Li * Rj;
            row += n;
            M.block(row, 0, n, n) =
                left_mult_matrix(A, multiply(A, A.basis(i), A.basis(j))) - Li * Lj;
            row += n;
        }
    return kernel_basis<S>(M);
}

// ---------------------------------------------------------------------------
// conversions and dumps

template <class To, class From, class Fn>
StructureAlgebra<To> convert_algebra(const StructureAlgebra<From>& A, Fn&& map_entry) {
    StructureAlgebra<To> B(A.rank, A.unit);
    B.labels = A.labels;
    for (std::size_t t = 0; t < A.table.size(); ++t) B.table[t] = map_entry(A.table[t]);
    return B;
}

inline StructureAlgebra<Poly> to_poly_algebra(const StructureAlgebra<Rat>& A) {
    return convert_algebra<Poly>(A, [](const Rat& r) { return Poly(r); });
}
inline StructureAlgebra<RatFunc> to_ratfunc_algebra(const StructureAlgebra<Poly>& A) {
    return convert_algebra<RatFunc>(A, [](const Poly& p) { return RatFunc(p); });
}
inline StructureAlgebra<Rat> specialize_algebra(const StructureAlgebra<Poly>& A,
                                                const Rat& theta) {
    return convert_algebra<Rat>(A, [&](const Poly& p) { return p.eval(theta); });
}

/// One line per nonzero γ_ijk: `i j k value`, 0-based indices.
template <class R>
std::string dump_structure_constants(const StructureAlgebra<R>& A) {
    std::ostringstream os;
    for (int i = 0; i < A.rank; ++i)
        for (int j = 0; j < A.rank; ++j)
            for (int k = 0; k < A.rank; ++k)
                if (!scalar_is_zero_r(A.gamma(i, j, k)))
                    os << i << " " << j << " " << k << " " << format_scalar(A.gamma(i, j, k))
                       << "\n";
    return os.str();
}

}  // namespace altcliff
