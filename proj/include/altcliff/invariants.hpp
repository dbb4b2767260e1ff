#pragma once

// Cohomological invariants of ternary forms over Q: the three Stiefel-Whitney
// classes, the octonion symbol μ over Q(λ) with its norm-form identities, the
// splitting criterion, and the residues of μ at the divisors of γ. Degree-3
// mod-2 classes over Q are decided at the real place; no finite completion
// carries any.

#include "altcliff/alt_clifford.hpp"
#include "altcliff/isotropy.hpp"
#include "altcliff/quadratic_form.hpp"
#include "altcliff/square_class.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace altcliff {

/// Formal mod-2 sum of symmetric symbols (tuples of square classes). A term
/// with a trivial slot is dropped; adding a term twice cancels it.
struct SymbolSum {
    int degree = 2;
    std::set<std::vector<SquareClass>> terms;

    explicit SymbolSum(int deg = 2) : degree(deg) {}

    void add_term(std::vector<SquareClass> t) {
        if (static_cast<int>(t.size()) != degree)
            throw std::invalid_argument("symbol arity mismatch");
        for (const auto& s : t)
            if (s.is_trivial()) return;
        std::sort(t.begin(), t.end());
        auto it = terms.find(t);
        if (it == terms.end())
            terms.insert(std::move(t));
        else
            terms.erase(it);
    }

    friend bool operator==(const SymbolSum& a, const SymbolSum& b) {
        return a.degree == b.degree && a.terms == b.terms;
    }
};

/// A Brauer class recorded by its ramification set (even by reciprocity).
struct BrauerLocalVector {
    std::set<Place> ramified;
    friend bool operator==(const BrauerLocalVector& a, const BrauerLocalVector& b) {
        return a.ramified == b.ramified;
    }
};

/// Degree-3 mod-2 class over Q, detected at the real place.
struct Degree3Class {
    int real_bit = 0;
};

/// Symbol (a, b, c) of an octonion algebra, possibly with c = γ(λ).
struct OctonionDescriptor {
    Rat a, b;
    Poly c;            // constant when over_lambda is false
    bool over_lambda = false;
};

struct StiefelWhitney {
    SquareClass w1;               // (α₁α₂α₃)
    SymbolSum w2{2};              // (α₁,α₂)+(α₁,α₃)+(α₂,α₃)
    BrauerLocalVector w2_local;
    SymbolSum w3{3};              // (α₁,α₂,α₃)
    Degree3Class w3_real;
};

namespace detail {
inline std::array<Rat, 3> diagonal_alphas(const QuadraticForm& phi) {
    if (phi.dim() != 3) throw std::invalid_argument("ternary form required");
    auto d = diagonalize(phi);  // throws DegenerateForm on degenerate input
    return {d.alphas[0], d.alphas[1], d.alphas[2]};
}
}  // namespace detail

inline StiefelWhitney stiefel_whitney(const QuadraticForm& phi) {
    auto a = detail::diagonal_alphas(phi);
    StiefelWhitney sw;
    sw.w1 = SquareClass::of(a[0] * a[1] * a[2]);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            sw.w2.add_term({SquareClass::of(a[i]), SquareClass::of(a[j])});
    for (Place v : relevant_places({a[0], a[1], a[2]})) {
        int prod = hilbert_symbol(a[0], a[1], v) * hilbert_symbol(a[0], a[2], v) *
                   hilbert_symbol(a[1], a[2], v);
        if (prod == -1) sw.w2_local.ramified.insert(v);
    }
    sw.w3.add_term({SquareClass::of(a[0]), SquareClass::of(a[1]), SquareClass::of(a[2])});
    sw.w3_real.real_bit = (a[0] < 0 && a[1] < 0 && a[2] < 0) ? 1 : 0;
    return sw;
}

/// (disc)∪ω₂ = ω₃ + (−1)∪ω₂ with disc = (−α₁α₂α₃), decided by real bits of
/// the degree-3 terms ((δ)∪(a,b) contributes iff δ, a, b are all negative).
/// Rearranged via (−δ) = (−1)+(δ) this is the cup-product computation
/// (α₁α₂α₃)∪ω₂ = ω₃; the disc class is the degree-1 invariant that actually
/// appears in the Clifford-center restriction.
inline bool sw_identity_check(const QuadraticForm& phi) {
    auto a = detail::diagonal_alphas(phi);
    const Rat disc = -a[0] * a[1] * a[2];
    int lhs = 0, rhs = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (disc < 0 && a[i] < 0 && a[j] < 0) lhs ^= 1;
            if (a[i] < 0 && a[j] < 0) rhs ^= 1;  // (−1)∪(a_i,a_j)
        }
    if (a[0] < 0 && a[1] < 0 && a[2] < 0) rhs ^= 1;  // ω₃
    return lhs == rhs;
}

/// μ(⟨α₁,α₂,α₃⟩) = (α₁, α₂, λ² + 4α₁α₂α₃) over Q(λ).
inline OctonionDescriptor mu_symbol(const QuadraticForm& phi) {
    auto a = detail::diagonal_alphas(phi);
    OctonionDescriptor mu;
    mu.a = a[0];
    mu.b = a[1];
    mu.c = Poly::lambda() * Poly::lambda() + Poly(4 * a[0] * a[1] * a[2]);
    mu.over_lambda = true;
    return mu;
}

/// Norm form ⟪a, b, c(θ)⟫ of the specialized octonion algebra; the
/// specialization must miss the roots of c.
inline QuadraticForm norm_form(const OctonionDescriptor& mu, std::optional<Rat> theta = {}) {
    Rat c;
    if (mu.over_lambda) {
        if (!theta) throw std::invalid_argument("theta required over Q(lambda)");
        c = mu.c.eval(*theta);
        if (c == 0) throw std::invalid_argument("specialization at a root of gamma");
    } else {
        c = mu.c.constant();
    }
    return pfister({mu.a, mu.b, c});
}

/// The slot order of μ is immaterial: every choice of two of the α's gives an
/// equivalent norm form at each sampled θ.
inline bool mu_symmetry_check(const QuadraticForm& phi, const std::vector<Rat>& thetas) {
    auto a = detail::diagonal_alphas(phi);
    auto mu = mu_symbol(phi);
    static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& th : thetas) {
        Rat c = mu.c.eval(th);
        if (c == 0) continue;
        auto base = form_invariants(norm_form(mu, th));
        for (const auto& pr : pairs)
            if (!(form_invariants(pfister({a[pr[0]], a[pr[1]], c})) == base)) return false;
    }
    return true;
}

/// μ = 3μ = (γ)∪ω₂: at each sampled θ, the real bit of (γ(θ))∪ω₂ matches the
/// real bit of the octonion symbol (α₁, α₂, γ(θ)).
inline bool mu_three_presentation_check(const QuadraticForm& phi, const std::vector<Rat>& thetas) {
    auto a = detail::diagonal_alphas(phi);
    auto mu = mu_symbol(phi);
    for (const auto& th : thetas) {
        Rat g = mu.c.eval(th);
        if (g == 0) continue;
        int lhs = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (g < 0 && a[i] < 0 && a[j] < 0) lhs ^= 1;
        int rhs = (mu.a < 0 && mu.b < 0 && g < 0) ? 1 : 0;
        if (lhs != rhs) return false;
    }
    return true;
}

struct SymmPReport {
    struct Entry {
        Rat theta;
        int pair_i, pair_j;  // indices of the chosen α pair in the ω factor
        bool equivalent;
    };
    std::vector<Entry> entries;
    bool ok() const {
        for (const auto& e : entries)
            if (!e.equivalent) return false;
        return !entries.empty();
    }
};

/// Norm form factorization: ⟪α₁,α₂,γ(θ)⟫ ≃ ⟪γ(θ)⟫ ⊗ ⟪−α_iα_j, −α_iα_k⟫ for
/// every choice of distinguished index i.
inline SymmPReport verify_symmP(const QuadraticForm& phi, const std::vector<Rat>& thetas) {
    auto a = detail::diagonal_alphas(phi);
    auto mu = mu_symbol(phi);
    SymmPReport rep;
    for (const auto& th : thetas) {
        Rat g = mu.c.eval(th);
        if (g == 0) continue;
        auto lhs = form_invariants(norm_form(mu, th));
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            QuadraticForm rhs = tensor_diagonal(pfister({g}), pfister({-a[i] * a[j], -a[i] * a[k]}));
            rep.entries.push_back({th, i, j, form_invariants(rhs) == lhs});
        }
    }
    return rep;
}

/// Splitting criterion: the algebra splits iff φ is isotropic, decided through
/// the symbol of ω = ⟪−α₁α₂, −α₁α₃⟫ and cross-checked against the
/// Hasse-Minkowski isotropy test.
inline bool splits(const QuadraticForm& phi) {
    auto a = detail::diagonal_alphas(phi);
    bool by_omega = symbol_splits_everywhere(-a[0] * a[1], -a[0] * a[2]);
    bool by_isotropy = is_isotropic(QuadraticForm::diagonal({a[0], a[1], a[2]}));
    if (by_omega != by_isotropy)
        throw std::logic_error("splitting criterion disagrees with isotropy");
    return by_omega;
}

struct Residue {
    Poly locus;            // monic irreducible divisor of γ
    Rat symbol_a, symbol_b;
    bool over_quadratic = false;  // residue field Q(√disc) instead of Q
    Rat disc;                     // squarefree, only when over_quadratic
    bool split = true;
};

/// The nonzero residues of μ live at the divisors of γ = λ² + 4α₁α₂α₃: two
/// rational points when disc(φ) = (−α₁α₂α₃) is a square, one quadratic point
/// otherwise, each carrying the quaternion symbol (α₁, α₂).
inline std::vector<Residue> residues(const QuadraticForm& phi) {
    auto a = detail::diagonal_alphas(phi);
    auto mu = mu_symbol(phi);
    const Rat a1 = a[0], a2 = a[1];
    std::vector<Residue> out;
    Rat m = SquareClass::of(-a[0] * a[1] * a[2]).representative();
    auto root = rational_sqrt(-mu.c.constant());  // γ = λ² − root² when disc ≡ 1
    if (root) {
        for (const Rat& r : {*root, -*root}) {
            Residue res;
            res.locus = Poly::lambda() - Poly(r);
            res.symbol_a = a1;
            res.symbol_b = a2;
            res.over_quadratic = false;
            res.split = symbol_splits_everywhere(a1, a2);
            out.push_back(res);
        }
    } else {
        Residue res;
        res.locus = mu.c;
        res.symbol_a = a1;
        res.symbol_b = a2;
        res.over_quadratic = true;
        res.disc = m;
        res.split = symbol_splits_over_quadratic(a1, a2, m);
        out.push_back(res);
    }
    return out;
}

/// The associative Clifford algebra of φ: the symbol (α₁,α₂) over the center
/// Q[√disc]. Its data and the residue list of μ determine each other; this
/// checks their locus structure and splitness agree.
inline bool residue_vs_clifford_check(const QuadraticForm& phi) {
    auto a = detail::diagonal_alphas(phi);
    SquareClass disc = SquareClass::of(-a[0] * a[1] * a[2]);
    auto res = residues(phi);
    if (disc.is_trivial()) {
        // split center Q×Q: two rational residues, same symbol on both factors
        if (res.size() != 2) return false;
        bool clifford_split = symbol_splits_everywhere(a[0], a[1]);
        for (const auto& r : res)
            if (r.over_quadratic || r.split != clifford_split) return false;
        return true;
    }
    if (res.size() != 1 || !res[0].over_quadratic) return false;
    if (SquareClass::of(res[0].disc) != disc) return false;
    bool clifford_split = symbol_splits_over_quadratic(a[0], a[1], disc.representative());
    return res[0].split == clifford_split;
}

}  // namespace altcliff
