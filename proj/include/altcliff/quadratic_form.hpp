#pragma once

// Quadratic forms over Q by upper-triangular coefficients, with evaluation,
// bilinearization, and symmetric-congruence diagonalization. Degeneracy is
// rejected with an explicit radical vector as witness.

#include "altcliff/linalg.hpp"
#include "altcliff/rational.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace altcliff {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DegenerateForm : public std::invalid_argument {
public:
    DegenerateForm(std::string msg, VecR radical)
        : std::invalid_argument(std::move(msg)), radical_vector(std::move(radical)) {}
    VecR radical_vector;
};

/// φ(x) = Σ_{i≤j} c_ij x_i x_j, indices 0-based internally, dim 1..8.
class QuadraticForm {
public:
    explicit QuadraticForm(int dim) : dim_(dim) {
        if (dim < 1 || dim > 8) throw std::invalid_argument("dimension must be in 1..8");
    }

    static QuadraticForm diagonal(const std::vector<Rat>& alphas) {
        QuadraticForm q(static_cast<int>(alphas.size()));
        for (int i = 0; i < q.dim_; ++i) q.set_coeff(i, i, alphas[i]);
        return q;
    }

    int dim() const { return dim_; }

    void set_coeff(int i, int j, const Rat& c) {
        check_index(i, j);
        if (c == 0)
            c_.erase({i, j});
        else
            c_[{i, j}] = c;
    }
    Rat coeff(int i, int j) const {
        check_index(i, j);
        auto it = c_.find({i, j});
        return it == c_.end() ? Rat(0) : it->second;
    }

    bool is_diagonal() const {
        for (const auto& [ij, c] : c_)
            if (ij.first != ij.second && c != 0) return false;
        return true;
    }
    std::vector<Rat> diagonal_entries() const {
        std::vector<Rat> a(dim_);
        for (int i = 0; i < dim_; ++i) a[i] = coeff(i, i);
        return a;
    }

    Rat evaluate(const VecR& x) const {
        if (x.size() != dim_) throw DimensionMismatch("evaluate: wrong vector length");
        Rat s(0);
        for (const auto& [ij, c] : c_) s += c * x[ij.first] * x[ij.second];
        return s;
    }

    /// b(x,y) = φ(x+y) − φ(x) − φ(y).
    Rat bilinear(const VecR& x, const VecR& y) const {
        if (x.size() != dim_ || y.size() != dim_)
            throw DimensionMismatch("bilinear: wrong vector length");
        return evaluate(x + y) - evaluate(x) - evaluate(y);
    }

    /// Gram matrix of b: B_ii = 2c_ii, B_ij = B_ji = c_ij.
    MatR gram() const {
        MatR B = MatR::Constant(dim_, dim_, Rat(0));
        for (const auto& [ij, c] : c_) {
            auto [i, j] = ij;
            if (i == j)
                B(i, i) = 2 * c;
            else
                B(i, j) = B(j, i) = c;
        }
        return B;
    }

    /// A nonzero radical vector when the form is degenerate.
    std::optional<VecR> radical_vector() const {
        auto ker = kernel_basis<Rat>(gram());
        if (ker.empty()) return std::nullopt;
        return ker.front();
    }
    bool is_nondegenerate() const { return !radical_vector().has_value(); }

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }

private:
    void check_index(int i, int j) const {
        if (i < 0 || j < i || j >= dim_) throw std::invalid_argument("bad coefficient index");
    }
    int dim_;
    std::map<std::pair<int, int>, Rat> c_;
};

struct Diagonalization {
    std::vector<Rat> alphas;
    MatR basis_change;  // φ(T x) = Σ α_i x_i², T invertible
};

/// d₀ = 4α₁α₂ − b₁₂², the determinant of a binary subform.
inline Rat subform_det2(const Rat& a1, const Rat& a2, const Rat& b12) {
    return 4 * a1 * a2 - b12 * b12;
}

/// Symmetric congruence diagonalization. Pivot: first nonzero diagonal
/// entry; if all remaining diagonal entries vanish, the lexicographically
/// first nonzero off-diagonal b(e_i,e_j) creates one via e_i ← e_i + e_j.
inline Diagonalization diagonalize(const QuadraticForm& q) {
    if (auto rad = q.radical_vector())
        throw DegenerateForm("degenerate form has no diagonalization", *rad);
    const int n = q.dim();
    MatR B = q.gram();
    MatR T = MatR::Identity(n, n);
    auto apply_col_op = [&](int target, int source, const Rat& f) {
        // e_target ← e_target + f e_source, congruence on B
        for (int r = 0; r < n; ++r) B(r, target) += f * B(r, source);
        for (int r = 0; r < n; ++r) B(target, r) += f * B(source, r);
        for (int r = 0; r < n; ++r) T(r, target) += f * T(r, source);
    };
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (B(i, i) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) {
            bool fixed = false;
            for (int i = k; i < n && !fixed; ++i)
                for (int j = i + 1; j < n && !fixed; ++j)
                    if (B(i, j) != 0) {
                        apply_col_op(i, j, Rat(1));
                        fixed = true;
                    }
            for (int i = k; i < n; ++i)
                if (B(i, i) != 0) {
                    piv = i;
                    break;
                }
        }
        if (piv < 0) throw std::logic_error("no pivot in nondegenerate form");
        if (piv != k) {
            B.col(piv).swap(B.col(k));
            B.row(piv).swap(B.row(k));
            T.col(piv).swap(T.col(k));
        }
        for (int j = k + 1; j < n; ++j) {
            if (B(k, j) == 0) continue;
            apply_col_op(j, k, -B(k, j) / B(k, k));
        }
    }
    Diagonalization d;
    d.basis_change = T;
    d.alphas.resize(n);
    for (int i = 0; i < n; ++i) d.alphas[i] = B(i, i) / 2;
    // contract: φ(Tx) = Σ α_i x_i² as a polynomial identity, i.e. TᵀGT diagonal
    MatR check = T.transpose() * q.gram() * T;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat want = (i == j) ? 2 * d.alphas[i] : Rat(0);
            if (check(i, j) != want) throw std::logic_error("diagonalization check failed");
        }
    return d;
}

/// Parses `diag:a1,...` or `coeffs:c11,c12,...` (upper triangular, row major).
inline std::optional<QuadraticForm> parse_form(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) return std::nullopt;
    std::string kind = text.substr(0, colon);
    std::vector<Rat> vals;
    std::stringstream ss(text.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto r = parse_rat(tok);
        if (!r) return std::nullopt;
        vals.push_back(*r);
    }
    if (kind == "diag") {
        if (vals.empty() || vals.size() > 8) return std::nullopt;
        return QuadraticForm::diagonal(vals);
    }
    if (kind == "coeffs") {
        // n(n+1)/2 coefficients determine n
        int n = 0;
        while (n <= 8 && static_cast<std::size_t>(n * (n + 1) / 2) < vals.size()) ++n;
        if (n < 1 || n > 8 || static_cast<std::size_t>(n * (n + 1) / 2) != vals.size())
            return std::nullopt;
        QuadraticForm q(n);
        std::size_t idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) q.set_coeff(i, j, vals[idx++]);
        return q;
    }
    return std::nullopt;
}

inline std::string format_form(const QuadraticForm& q) {
    std::string out;
    if (q.is_diagonal()) {
        out = "diag:";
        auto a = q.diagonal_entries();
        for (int i = 0; i < q.dim(); ++i) {
            if (i) out += ",";
            out += rat_to_string(a[i]);
        }
        return out;
    }
    out = "coeffs:";
    bool first = true;
    for (int i = 0; i < q.dim(); ++i)
        for (int j = i; j < q.dim(); ++j) {
            if (!first) out += ",";
            first = false;
            out += rat_to_string(q.coeff(i, j));
        }
    return out;
}

}  // namespace altcliff
