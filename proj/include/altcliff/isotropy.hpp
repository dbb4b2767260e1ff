#pragma once

// Local-global machinery for forms over Q: Hilbert symbols, Hasse–Minkowski
// isotropy, classification invariants, Pfister forms, and the brute-force
// search oracle that validates all of it in tests.

#include "altcliff/quadratic_form.hpp"
#include "altcliff/rational.hpp"
#include "altcliff/square_class.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace altcliff {

/// Place of Q: 0 denotes ∞, otherwise a prime.
using Place = long long;
constexpr Place kInfinitePlace = 0;

inline int valuation(Int n, const Int& p) {
    int v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

/// Legendre symbol (a|p) for odd prime p, a coprime to p.
inline int legendre(Int a, const Int& p) {
    Int e = (p - 1) / 2;
    Int r = boost::multiprecision::powm(((a % p) + p) % p, e, p);
    return r == 1 ? 1 : -1;
}

/// Standard local Hilbert symbol (a,b)_v for nonzero rationals.
inline int hilbert_symbol(const Rat& a, const Rat& b, Place place) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert symbol needs nonzero arguments");
    if (place == kInfinitePlace) return (a < 0 && b < 0) ? -1 : 1;
    if (place < 2) throw std::invalid_argument("invalid place");
    Int p(place);
    // square classes only: replace by integer representatives
    Int ai = num(a) * den(a), bi = num(b) * den(b);
    int al = valuation(ai, p), be = valuation(bi, p);
    Int u = ai, v = bi;
    for (int i = 0; i < al; ++i) u /= p;
    for (int i = 0; i < be; ++i) v /= p;
    if (p == 2) {
        auto eps = [](const Int& x) { return (((x % 8) + 8) % 8 == 3 || ((x % 8) + 8) % 8 == 7) ? 1 : 0; };
        auto omega = [](const Int& x) {
            Int m = ((x % 8) + 8) % 8;
            return (m == 3 || m == 5) ? 1 : 0;
        };
        int e = eps(u) * eps(v) + al * omega(v) + be * omega(u);
        return e % 2 == 0 ? 1 : -1;
    }
    int e = (al * be) % 2;
    int epsp = ((p - 1) / 2) % 2 == 1 ? 1 : 0;  // p ≡ 3 (mod 4)
    int s = (e * epsp) % 2 == 1 ? -1 : 1;
    if (be % 2 != 0) s *= legendre(u, p);
    if (al % 2 != 0) s *= legendre(v, p);
    return s;
}

/// ∞, 2, and every odd prime with odd or even appearance in any input:
/// the superset of places where symbols built from these values can ramify.
inline std::vector<Place> relevant_places(const std::vector<Rat>& values) {
    std::set<Place> ps{kInfinitePlace, 2};
    for (const auto& r : values) {
        if (r == 0) continue;
        for (const auto& [p, e] : factorize(num(r) * den(r)))
            if (p < (Int(1) << 62)) ps.insert(static_cast<Place>(p));
    }
    return {ps.begin(), ps.end()};
}

/// Places where the quaternion symbol (a,b) is nontrivial.
inline std::set<Place> symbol_ramified_places(const Rat& a, const Rat& b) {
    std::set<Place> out;
    for (Place v : relevant_places({a, b}))
        if (hilbert_symbol(a, b, v) == -1) out.insert(v);
    return out;
}

inline bool symbol_splits_everywhere(const Rat& a, const Rat& b) {
    return symbol_ramified_places(a, b).empty();
}

/// Whether d is a square in the completion at v.
inline bool is_local_square(const Rat& d, Place v) {
    if (d == 0) throw std::invalid_argument("local square test needs nonzero input");
    if (v == kInfinitePlace) return d > 0;
    Int p(v);
    Int di = num(d) * den(d);
    int val = valuation(di, p);
    if (val % 2 != 0) return false;
    Int u = di;
    for (int i = 0; i < val; ++i) u /= p;
    if (p == 2) return ((u % 8) + 8) % 8 == 1;
    return legendre(u, p) == 1;
}

inline int hasse_invariant(const std::vector<Rat>& alphas, Place v) {
    int s = 1;
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = i + 1; j < alphas.size(); ++j)
            s *= hilbert_symbol(alphas[i], alphas[j], v);
    return s;
}

struct FormInvariants {
    int dim = 0;
    SquareClass det;
    std::set<Place> hasse_minus;  // places with Hasse invariant −1
    std::pair<int, int> signature{0, 0};

    friend bool operator==(const FormInvariants& a, const FormInvariants& b) {
        return a.dim == b.dim && a.det == b.det && a.hasse_minus == b.hasse_minus &&
               a.signature == b.signature;
    }
};

inline FormInvariants form_invariants(const QuadraticForm& q) {
    auto d = diagonalize(q);
    FormInvariants inv;
    inv.dim = q.dim();
    Rat det(1);
    for (const auto& a : d.alphas) {
        det *= a;
        if (a > 0)
            ++inv.signature.first;
        else
            ++inv.signature.second;
    }
    inv.det = SquareClass::of(det);
    for (Place v : relevant_places(d.alphas))
        if (hasse_invariant(d.alphas, v) == -1) inv.hasse_minus.insert(v);
    return inv;
}

/// Classification of forms over Q: equivalent iff dim, det class, signature
/// and all local Hasse invariants agree.
inline bool form_equiv(const QuadraticForm& a, const QuadraticForm& b) {
    return form_invariants(a) == form_invariants(b);
}

/// Hasse–Minkowski isotropy decision for nondegenerate forms of dim 1..8.
inline bool is_isotropic(const QuadraticForm& q) {
    auto d = diagonalize(q);  // rejects degenerate input
    const auto& a = d.alphas;
    const int n = q.dim();
    if (n == 1) return false;
    if (n == 2) return is_rational_square(-a[0] * a[1]);
    int pos = 0, neg = 0;
    for (const auto& x : a) (x > 0 ? pos : neg)++;
    if (n >= 5) return pos > 0 && neg > 0;  // indefinite ⇔ isotropic
    if (n == 3) {
        for (Place v : relevant_places(a))
            if (hilbert_symbol(-a[0] * a[2], -a[1] * a[2], v) == -1) return false;
        return true;
    }
    // n == 4: anisotropic at v iff det is a local square and the Hasse
    // invariant differs from (−1,−1)_v
    Rat det = a[0] * a[1] * a[2] * a[3];
    for (Place v : relevant_places(a)) {
        if (is_local_square(det, v) &&
            hasse_invariant(a, v) != hilbert_symbol(Rat(-1), Rat(-1), v))
            return false;
    }
    return true;
}

/// Brute-force witness search: nonzero integer x, |x_i| ≤ height, q(x) = 0.
inline std::optional<std::vector<long long>> isotropy_oracle(const QuadraticForm& q,
                                                             int height) {
    if (height < 1) throw std::invalid_argument("height must be >= 1");
    const int n = q.dim();
    // scale to integer coefficients; zeros are unchanged
    Int l(1);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) l = boost::multiprecision::lcm(l, den(q.coeff(i, j)));
    std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) c[i][j] = num(Rat(l) * q.coeff(i, j)).convert_to<long long>();
    std::vector<long long> x(n, -height);
    const bool diag = q.is_diagonal();
    // odometer enumeration; diagonal forms get an incremental inner loop
    if (diag) {
        std::vector<long long> alpha(n);
        for (int i = 0; i < n; ++i) alpha[i] = c[i][i];
        std::vector<long long> xs(n, -height);
        while (true) {
            long long s = 0;
            bool nonzero = false;
            for (int i = 0; i < n - 1; ++i) {
                s += alpha[i] * xs[i] * xs[i];
                if (xs[i] != 0) nonzero = true;
            }
            for (long long t = -height; t <= height; ++t) {
                if (!nonzero && t == 0) continue;
                if (s + alpha[n - 1] * t * t == 0) {
                    xs[n - 1] = t;
                    return xs;
                }
            }
            int k = n - 2;
            while (k >= 0 && xs[k] == height) xs[k--] = -height;
            if (k < 0) return std::nullopt;
            ++xs[k];
        }
    }
    while (true) {
        bool nonzero = false;
        for (int i = 0; i < n; ++i)
            if (x[i] != 0) nonzero = true;
        if (nonzero) {
            long long s = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) s += c[i][j] * x[i] * x[j];
            if (s == 0) return x;
        }
        int k = n - 1;
        while (k >= 0 && x[k] == height) x[k--] = -height;
        if (k < 0) return std::nullopt;
        ++x[k];
    }
}

/// m-fold Pfister form ⟪γ₁,…,γ_m⟫ = ⊗⟨1,−γ_i⟩ as a diagonal form of dim 2^m;
/// slot for subset S carries Π_{i∈S}(−γ_i), subsets in bitmask order.
inline QuadraticForm pfister(const std::vector<Rat>& gammas) {
    if (gammas.size() > 3) throw std::invalid_argument("at most 3-fold Pfister forms");
    for (const auto& g : gammas)
        if (g == 0) throw std::invalid_argument("zero Pfister slot");
    const int m = static_cast<int>(gammas.size());
    std::vector<Rat> slots(std::size_t(1) << m, Rat(1));
    for (std::size_t mask = 0; mask < slots.size(); ++mask)
        for (int i = 0; i < m; ++i)
            if (mask & (std::size_t(1) << i)) slots[mask] *= -gammas[i];
    return QuadraticForm::diagonal(slots);
}

/// Drops the unit slot of a diagonal Pfister form.
inline QuadraticForm pure_subform(const QuadraticForm& pf) {
    auto a = pf.diagonal_entries();
    return QuadraticForm::diagonal({a.begin() + 1, a.end()});
}

/// Tensor product of diagonal forms: all pairwise coefficient products.
inline QuadraticForm tensor_diagonal(const QuadraticForm& f, const QuadraticForm& g) {
    std::vector<Rat> out;
    for (const auto& a : f.diagonal_entries())
        for (const auto& b : g.diagonal_entries()) out.push_back(a * b);
    return QuadraticForm::diagonal(out);
}

/// ⟨a,b,c⟩ ↦ (⟨abc⟩, ⟪−ab,−ac⟫): the discriminant slot and 2-fold Pfister
/// descriptor that together recover the ternary form up to equivalence.
struct TernaryDecomposition {
    SquareClass delta_disc;
    std::array<Rat, 2> omega_gammas;
};

inline TernaryDecomposition decompose_ternary(const QuadraticForm& q) {
    if (q.dim() != 3) throw std::invalid_argument("ternary form required");
    auto d = diagonalize(q);
    const Rat a = d.alphas[0], b = d.alphas[1], c = d.alphas[2];
    return {SquareClass::of(a * b * c), {-a * b, -a * c}};
}

inline QuadraticForm reconstruct_ternary(const TernaryDecomposition& t) {
    Rat delta = t.delta_disc.representative();
    QuadraticForm omega_pure =
        pure_subform(pfister({t.omega_gammas[0], t.omega_gammas[1]}));
    std::vector<Rat> out;
    for (const auto& s : omega_pure.diagonal_entries()) out.push_back(delta * s);
    return QuadraticForm::diagonal(out);
}

/// ω of the decomposition is hyperbolic ⇔ its symbol splits locally everywhere.
inline bool omega_hyperbolic(const TernaryDecomposition& t) {
    return symbol_splits_everywhere(t.omega_gammas[0], t.omega_gammas[1]);
}

/// Quaternion (a,b) splits over Q(√m) iff it splits over Q or the quaternary
/// form ⟨a, b, −ab, −m⟩ is isotropic over Q (pure-quaternion embedding).
inline bool symbol_splits_over_quadratic(const Rat& a, const Rat& b, const Rat& m) {
    if (symbol_splits_everywhere(a, b)) return true;
    return is_isotropic(QuadraticForm::diagonal({a, b, -a * b, -m}));
}

}  // namespace altcliff
