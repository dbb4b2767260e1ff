#pragma once

// Construction of the alternative Clifford algebra of a nondegenerate
// ternary form as an octonion ring over Q[λ]: diagonalize, build the
// quaternion subalgebra, double by γ = λ² + 4α₁α₂α₃, and certify the whole
// presentation exactly. Also the specializations λ ↦ θ, the quotient by the
// associator ideal, and the scan confirming all other fibers are octonion.

#include "altcliff/isotropy.hpp"
#include "altcliff/quadratic_form.hpp"
#include "altcliff/structure_algebra.hpp"

#include <array>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace altcliff {

struct AltCliffordModel {
    StructureAlgebra<Poly> octonion;      // rank 8 over Q[λ]
    StructureAlgebra<Rat> quaternion;     // embedded rank-4 subalgebra (indices 0..3)
    InvolutionData<Rat> quat_involution;
    Vec<Poly> g_u, g_v, g_w;              // images of the orthogonal basis of V
    Vec<Poly> lambda_elem;                // λ·1, the central generator
    Vec<Poly> z_elem;                     // the associator element [w, uv]
    Rat d0;                               // 4α₁α₂
    Poly gamma;                           // λ² + d₀α₃
    std::array<Rat, 3> alphas;
    MatR basis_change;                    // user coordinates -> orthogonal basis
};

/// δ(x,y,z) = x∘(yz) − b(y,z)·x, with b(y,z) read off as the unit
/// coordinate of y∘z.
template <class R>
Vec<R> delta(const StructureAlgebra<R>& A, const Vec<R>& x, const Vec<R>& y, const Vec<R>& z) {
    Vec<R> yz = multiply(A, y, z);
    R b = circ(A, y, z)[A.unit];
    Vec<R> out = circ(A, x, yz);
    for (int k = 0; k < A.rank; ++k) out[k] -= b * x[k];
    return out;
}

struct PresentationReport {
    struct Item {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Item> items;
    bool ok() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
};

PresentationReport verify_presentation(const AltCliffordModel& m);

/// Builds the model for a nondegenerate ternary φ and certifies the
/// presentation; a degenerate φ is rejected with a radical witness and any
/// verification failure aborts the build.
inline AltCliffordModel build_alt_clifford(const QuadraticForm& phi) {
    if (phi.dim() != 3) throw std::invalid_argument("ternary form required");
    auto diag = diagonalize(phi);  // throws DegenerateForm with witness
    AltCliffordModel m;
    m.alphas = {diag.alphas[0], diag.alphas[1], diag.alphas[2]};
    m.basis_change = diag.basis_change;
    m.d0 = 4 * m.alphas[0] * m.alphas[1];
    m.gamma = Poly::lambda() * Poly::lambda() + Poly(m.d0 * m.alphas[2]);
    auto [Q, inv] = quaternion_algebra<Rat>(m.alphas[0], m.alphas[1]);
    m.quaternion = Q;
    m.quat_involution = inv;
    StructureAlgebra<Poly> Qp = to_poly_algebra(Q);
    InvolutionData<Poly> inv_p;
    inv_p.conj = Mat<Poly>::Constant(4, 4, Poly());
    inv_p.trace = Vec<Poly>::Constant(4, Poly());
    for (int i = 0; i < 4; ++i) {
        inv_p.trace[i] = Poly(inv.trace[i]);
        for (int j = 0; j < 4; ++j) inv_p.conj(i, j) = Poly(inv.conj(i, j));
    }
    m.octonion = cayley_dickson_double<Poly>(Qp, inv_p, m.gamma);
    m.g_u = m.octonion.basis(1);
    m.g_v = m.octonion.basis(2);
    // w = (2/d₀)((uv)z − λ·uv): index 7 is (uv)z, index 3 is uv
    m.g_w = m.octonion.zero_element();
    m.g_w[7] = Poly(Rat(2) / m.d0);
    m.g_w[3] = Poly::monomial(Rat(-2) / m.d0, 1);
    m.lambda_elem = m.octonion.zero_element();
    m.lambda_elem[0] = Poly::lambda();
    m.z_elem = commutator(m.octonion, m.g_w, multiply(m.octonion, m.g_u, m.g_v));
    auto rep = verify_presentation(m);
    if (!rep.ok()) {
        std::string why = "presentation verification failed:";
        for (const auto& it : rep.items)
            if (!it.pass) why += " [" + it.name + "]";
        throw std::logic_error(why);
    }
    return m;
}

/// Exact checks of the defining data of the constructed octonion ring.
inline PresentationReport verify_presentation(const AltCliffordModel& m) {
    PresentationReport rep;
    const auto& A = m.octonion;
    auto unit_times = [&](const Poly& s) {
        Vec<Poly> e = A.zero_element();
        e[A.unit] = s;
        return e;
    };
    auto add = [&](const std::string& name, bool pass, std::string detail = "") {
        rep.items.push_back({name, pass, std::move(detail)});
    };
    const std::array<Vec<Poly>, 3> g = {m.g_u, m.g_v, m.g_w};

    // (i) defining relations on the orthogonal generators
    bool gen_ok = true;
    for (int i = 0; i < 3; ++i)
        if (!element_is_zero<Poly>(multiply(A, g[i], g[i]) - unit_times(Poly(m.alphas[i]))))
            gen_ok = false;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && !element_is_zero<Poly>(circ(A, g[i], g[j]))) gen_ok = false;
    add("generator squares and orthogonality", gen_ok);
    {
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<int> d(-9, 9);
        bool rel_ok = true;
        for (int t = 0; t < 20; ++t) {
            Rat t1(d(rng)), t2(d(rng)), t3(Rat(d(rng), 1 + (t % 3)));
            Vec<Poly> x = A.zero_element();
            for (int k = 0; k < A.rank; ++k)
                x[k] = Poly(t1) * m.g_u[k] + Poly(t2) * m.g_v[k] + Poly(t3) * m.g_w[k];
            Rat value = m.alphas[0] * t1 * t1 + m.alphas[1] * t2 * t2 + m.alphas[2] * t3 * t3;
            if (!element_is_zero<Poly>(multiply(A, x, x) - unit_times(Poly(value))))
                rel_ok = false;
        }
        add("defining relation on random elements of V", rel_ok);
    }
    // (ii) [u,v]² = −d₀
    {
        Vec<Poly> uv_comm = commutator(A, m.g_u, m.g_v);
        add("[u,v]² = -d₀",
            element_is_zero<Poly>(multiply(A, uv_comm, uv_comm) - unit_times(Poly(-m.d0))));
    }
    // (iii) z = [w,uv] = −(u,v,w)
    add("z = [w,uv]",
        element_is_zero<Poly>(m.z_elem -
                              commutator(A, m.g_w, multiply(A, m.g_u, m.g_v))));
    add("z = -(u,v,w)",
        element_is_zero<Poly>(m.z_elem + associator(A, m.g_u, m.g_v, m.g_w)));
    // (iv) z² = γ
    add("z² = γ",
        element_is_zero<Poly>(multiply(A, m.z_elem, m.z_elem) - unit_times(m.gamma)));
    // (v) z∘a = tr(a)z on the quaternion basis
    {
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
            Vec<Poly> a = A.basis(i);
            Vec<Poly> lhs = circ(A, m.z_elem, a);
            Poly tr = Poly(m.quat_involution.trace[i]);
            Vec<Poly> rhs = A.zero_element();
            for (int k = 0; k < A.rank; ++k) rhs[k] = tr * m.z_elem[k];
            if (!element_is_zero<Poly>(lhs - rhs)) ok = false;
        }
        add("z∘a = tr(a)z on quaternion basis", ok);
    }
    // (vi) δ(u,v,w) = λ·1
    Vec<Poly> dl = delta(A, m.g_u, m.g_v, m.g_w);
    add("δ(u,v,w) = λ·1", element_is_zero<Poly>(dl - m.lambda_elem));
    // (vii) centrality of λ·1 and of δ(u,v,w)
    {
        bool ok = true;
        for (const auto& x : {m.lambda_elem, dl})
            for (int i = 0; i < A.rank; ++i) {
                if (!element_is_zero<Poly>(commutator(A, x, A.basis(i)))) ok = false;
                for (int j = 0; j < A.rank; ++j)
                    if (!element_is_zero<Poly>(associator(A, x, A.basis(i), A.basis(j))))
                        ok = false;
            }
        add("centrality of λ and δ(u,v,w)", ok);
    }
    // (viii) z∘w = 0
    add("z∘w = 0", element_is_zero<Poly>(circ(A, m.z_elem, m.g_w)));
    return rep;
}

/// λ ↦ θ on every structure constant.
inline StructureAlgebra<Rat> specialize(const AltCliffordModel& m, const Rat& theta) {
    return specialize_algebra(m.octonion, theta);
}

struct QuotientClassification {
    enum class Kind { Octonion, QuaternionOnto };
    Kind kind;
    Rat alpha1, alpha2;
    Rat gamma_theta;               // γ(θ); zero exactly in the QuaternionOnto case
    bool division = false;
    std::vector<int> radical_indices;       // QuaternionOnto only
    bool radical_squares_zero = false;      // QuaternionOnto only
    bool quotient_matches_quaternion = false;  // QuaternionOnto only
};

/// The fiber at λ ↦ θ: an octonion algebra (α₁,α₂,γ(θ)) when γ(θ) ≠ 0,
/// otherwise the projection onto Q with nilpotent radical Qz.
inline QuotientClassification classify_quotient(const AltCliffordModel& m, const Rat& theta) {
    QuotientClassification out;
    out.alpha1 = m.alphas[0];
    out.alpha2 = m.alphas[1];
    out.gamma_theta = m.gamma.eval(theta);
    if (out.gamma_theta != 0) {
        out.kind = QuotientClassification::Kind::Octonion;
        // division iff the norm form ⟪α₁,α₂,γ(θ)⟫ is anisotropic over Q,
        // i.e. positive definite: all square-class representatives negative
        out.division = m.alphas[0] < 0 && m.alphas[1] < 0 && out.gamma_theta < 0;
        return out;
    }
    out.kind = QuotientClassification::Kind::QuaternionOnto;
    out.radical_indices = {4, 5, 6, 7};
    auto S = specialize(m, theta);
    out.radical_squares_zero = true;
    for (int i : out.radical_indices)
        for (int j : out.radical_indices)
            if (!element_is_zero<Rat>(multiply(S, S.basis(i), S.basis(j))))
                out.radical_squares_zero = false;
    out.quotient_matches_quaternion = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 8; ++k) {
                Rat want = k < 4 ? m.quaternion.gamma(i, j, k) : Rat(0);
                if (S.gamma(i, j, k) != want) out.quotient_matches_quaternion = false;
            }
    out.division = !symbol_splits_everywhere(out.alpha1, out.alpha2);
    return out;
}

struct QuotientZReport {
    StructureAlgebra<Rat> quotient;   // Q ⊗ F[λ]/(γ) on {1,u,v,uv}×{1,λ̄}
    StructureAlgebra<Rat> clifford;   // classical C(⟨α₁,α₂,α₃⟩)
    MatR iso;                         // column j = image of quotient basis j
    bool multiplicative = false;      // on all 64 basis pairs
    bool bijective = false;
    bool associative = false;         // all 512 basis triples of the quotient
    Rat lambda_bar_square;            // λ̄² = −d₀α₃ = −γ(0)
    bool lambda_square_consistent = false;  // (2uvw)² matches in the Clifford algebra
    bool ok() const { return multiplicative && bijective && associative && lambda_square_consistent; }
};

/// C^alt(φ)/⟨z⟩ realized as Q ⊗ F[λ]/(γ), with the explicit isomorphism onto
/// the classical Clifford algebra (λ̄ ↦ 2uvw) checked exhaustively.
inline QuotientZReport quotient_by_z(const AltCliffordModel& m) {
    QuotientZReport rep;
    const Rat s = -m.d0 * m.alphas[2];  // λ̄²
    rep.lambda_bar_square = s;
    StructureAlgebra<Rat> A(8, 0);
    A.labels = {"1", "u", "v", "uv", "λ̄", "uλ̄", "vλ̄", "uvλ̄"};
    for (int i = 0; i < 4; ++i)
        for (int e1 = 0; e1 < 2; ++e1)
            for (int j = 0; j < 4; ++j)
                for (int e2 = 0; e2 < 2; ++e2)
                    for (int k = 0; k < 4; ++k) {
                        Rat c = m.quaternion.gamma(i, j, k);
                        if (e1 + e2 == 2) c *= s;
                        A.gamma_ref(i + 4 * e1, j + 4 * e2, k + 4 * ((e1 + e2) % 2)) += c;
                    }
    rep.quotient = A;
    rep.clifford = classical_clifford_ternary(m.alphas[0], m.alphas[1], m.alphas[2]);
    const auto& C = rep.clifford;
    // images: 1,u,v,uv fixed; λ̄ ↦ 2uvw; products accordingly
    VecR img_lambda = C.zero_element();
    img_lambda[7] = Rat(2);  // 2uvw
    rep.iso = MatR::Constant(8, 8, Rat(0));
    const int quat_to_cliff[4] = {0, 1, 2, 4};  // 1,u,v,uv in the Clifford basis
    for (int i = 0; i < 4; ++i) {
        rep.iso(quat_to_cliff[i], i) = Rat(1);
        VecR img = multiply(C, C.basis(quat_to_cliff[i]), img_lambda);
        rep.iso.col(i + 4) = img;
    }
    rep.multiplicative = true;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            VecR lhs = rep.iso * multiply(A, A.basis(i), A.basis(j));
            VecR rhs = multiply(C, VecR(rep.iso.col(i)), VecR(rep.iso.col(j)));
            if (!element_is_zero<Rat>(lhs - rhs)) rep.multiplicative = false;
        }
    rep.bijective = kernel_basis<Rat>(rep.iso).empty();
    rep.associative = true;
    for (int i = 0; i < 8 && rep.associative; ++i)
        for (int j = 0; j < 8 && rep.associative; ++j)
            for (int k = 0; k < 8; ++k)
                if (!element_is_zero<Rat>(associator(A, A.basis(i), A.basis(j), A.basis(k)))) {
                    rep.associative = false;
                    break;
                }
    VecR sq = multiply(C, img_lambda, img_lambda);
    VecR want = C.zero_element();
    want[0] = -4 * m.alphas[0] * m.alphas[1] * m.alphas[2];  // = −γ(0)
    rep.lambda_square_consistent =
        element_is_zero<Rat>(sq - want) && want[0] == -m.gamma.eval(Rat(0));
    return rep;
}

/// Rational roots of γ = λ² + d₀α₃ (0 or 2 of them).
inline std::vector<Rat> gamma_rational_roots(const AltCliffordModel& m) {
    Rat c = m.gamma.coeff(0);
    auto r = rational_sqrt(-c);
    if (!r) return {};
    if (*r == 0) return {Rat(0)};
    return {*r, -*r};
}

struct AzumayaScan {
    struct Sample {
        Rat theta;
        QuotientClassification::Kind kind;
    };
    std::vector<Sample> samples;
    std::vector<Rat> gamma_roots;
    bool ok = false;  // non-octonion fibers are exactly the sampled roots of γ
};

/// Confirms every fiber off the zero locus of γ = (u,v,w)² is octonion.
inline AzumayaScan azumaya_scan(const AltCliffordModel& m, const std::vector<Rat>& thetas) {
    AzumayaScan scan;
    scan.gamma_roots = gamma_rational_roots(m);
    scan.ok = true;
    for (const auto& t : thetas) {
        auto c = classify_quotient(m, t);
        scan.samples.push_back({t, c.kind});
        bool is_root = false;
        for (const auto& r : scan.gamma_roots) is_root |= (r == t);
        bool expect_quaternion = is_root;
        if ((c.kind == QuotientClassification::Kind::QuaternionOnto) != expect_quaternion)
            scan.ok = false;
    }
    return scan;
}

}  // namespace altcliff
