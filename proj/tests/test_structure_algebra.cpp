#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "altcliff/structure_algebra.hpp"

#include <random>
#include <sstream>

using namespace altcliff;

namespace {

VecR scaled_unit(const StructureAlgebra<Rat>& A, const Rat& s) {
    VecR e = A.zero_element();
    e[A.unit] = s;
    return e;
}

}  // namespace

TEST_CASE("quaternion table: Hamilton case (-1,-1)") {
    auto [H, inv] = quaternion_algebra<Rat>(Rat(-1), Rat(-1));
    CHECK(H.is_unital());
    VecR u = H.basis(1), v = H.basis(2), uv = H.basis(3);
    CHECK(element_is_zero<Rat>(multiply(H, u, u) - scaled_unit(H, Rat(-1))));
    CHECK(element_is_zero<Rat>(multiply(H, v, v) - scaled_unit(H, Rat(-1))));
    CHECK(element_is_zero<Rat>(multiply(H, uv, uv) - scaled_unit(H, Rat(-1))));
    CHECK(element_is_zero<Rat>(multiply(H, u, v) - uv));
    CHECK(element_is_zero<Rat>(multiply(H, v, u) + uv));
    // u·uv = −v and uv·u = v with α₁ = −1
    CHECK(element_is_zero<Rat>(multiply(H, u, uv) + v));
    CHECK(element_is_zero<Rat>(multiply(H, uv, u) - v));
    CHECK(inv.trace_of(H.unit_element()) == 2);
    CHECK(inv.trace_of(uv) == 0);
    CHECK(element_is_zero<Rat>(inv.conjugate(u) + u));
    // associative, hence alternative with no violations
    auto rep = check_alternative(H);
    CHECK(rep.ok());
}

TEST_CASE("split quaternions (1,1) have zero divisors") {
    auto [A, inv] = quaternion_algebra<Rat>(Rat(1), Rat(1));
    VecR x = A.unit_element() - A.basis(1);  // 1 − u
    VecR y = A.unit_element() + A.basis(1);  // 1 + u
    CHECK(element_is_zero<Rat>(multiply(A, x, y)));
    CHECK(!element_is_zero<Rat>(x));
    CHECK(!element_is_zero<Rat>(y));
}

TEST_CASE("quaternion norm: x·x̄ = (x₀²-α₁x₁²-α₂x₂²+α₁α₂x₃²)·1") {
    Rat a1(2), a2(-3);
    auto [A, inv] = quaternion_algebra<Rat>(a1, a2);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 120; ++t) {
        VecR x = random_element(A, rng);
        Rat n = x[0] * x[0] - a1 * x[1] * x[1] - a2 * x[2] * x[2] + a1 * a2 * x[3] * x[3];
        CHECK(element_is_zero<Rat>(multiply(A, x, inv.conjugate(x)) - scaled_unit(A, n)));
        CHECK(inv.trace_of(x) == 2 * x[0]);
        // x + x̄ = tr(x)·1
        CHECK(element_is_zero<Rat>(x + inv.conjugate(x) - scaled_unit(A, inv.trace_of(x))));
    }
}

TEST_CASE("Cayley-Dickson double: z relations and alternativity") {
    Rat a1(-1), a2(-1), g(-1);
    auto [Q, inv] = quaternion_algebra<Rat>(a1, a2);
    auto O = cayley_dickson_double<Rat>(Q, inv, g);
    CHECK(O.rank == 8);
    CHECK(O.is_unital());
    VecR u = O.basis(1), z = O.basis(4), uz = O.basis(5);
    // z·u = ū·z = −uz, u·z = uz, z² = γ
    CHECK(element_is_zero<Rat>(multiply(O, z, u) + uz));
    CHECK(element_is_zero<Rat>(multiply(O, u, z) - uz));
    VecR g1 = O.zero_element();
    g1[0] = g;
    CHECK(element_is_zero<Rat>(multiply(O, z, z) - g1));
    // (−1,−1,−1): the real octonions, alternative but not associative
    auto rep = check_alternative(O);
    CHECK(rep.ok());
    bool some_nonassoc = false;
    for (int i = 1; i < 8 && !some_nonassoc; ++i)
        for (int j = 1; j < 8 && !some_nonassoc; ++j)
            for (int k = 1; k < 8; ++k)
                if (!element_is_zero<Rat>(associator(O, O.basis(i), O.basis(j), O.basis(k)))) {
                    some_nonassoc = true;
                    break;
                }
    CHECK(some_nonassoc);
    auto idrep = check_identities(O, 40, 12345);
    CHECK(idrep.ok());
    CHECK(idrep.checks_run == 40);
}

TEST_CASE("Cayley-Dickson rejects gamma = 0") {
    auto [Q, inv] = quaternion_algebra<Rat>(Rat(-1), Rat(-1));
    CHECK_THROWS_AS(cayley_dickson_double<Rat>(Q, inv, Rat(0)), std::invalid_argument);
}

TEST_CASE("octonion norm is multiplicative on the double of (-1,-1) by -1") {
    auto [Q, inv] = quaternion_algebra<Rat>(Rat(-1), Rat(-1));
    auto O = cayley_dickson_double<Rat>(Q, inv, Rat(-1));
    auto norm = [](const VecR& x) {
        Rat n(0);
        for (int i = 0; i < 8; ++i) n += x[i] * x[i];
        return n;
    };
    std::mt19937_64 rng(99);
    for (int t = 0; t < 60; ++t) {
        VecR x = random_element(O, rng), y = random_element(O, rng);
        CHECK(norm(multiply(O, x, y)) == norm(x) * norm(y));
    }
}

TEST_CASE("mutation: a corrupted table is caught by the checkers") {
    auto [Q, inv] = quaternion_algebra<Rat>(Rat(-1), Rat(-1));
    auto O = cayley_dickson_double<Rat>(Q, inv, Rat(-1));
    O.gamma_ref(5, 6, 3) = -O.gamma(5, 6, 3);  // flip one sign
    auto rep = check_alternative(O);
    CHECK(!rep.ok());
    auto idrep = check_identities(O, 25, 4242);
    CHECK(!idrep.ok());
    CHECK(!idrep.violations.empty());
}

TEST_CASE("classical Clifford algebra of a ternary diagonal form") {
    Rat a1(2), a2(3), a3(5);
    auto C = classical_clifford_ternary(a1, a2, a3);
    CHECK(C.rank == 8);
    CHECK(C.is_unital());
    VecR u = C.basis(1), v = C.basis(2), w = C.basis(3);
    VecR uvw = C.basis(7), vw = C.basis(6);
    CHECK(element_is_zero<Rat>(multiply(C, u, u) - scaled_unit(C, a1)));
    CHECK(element_is_zero<Rat>(multiply(C, w, w) - scaled_unit(C, a3)));
    CHECK(element_is_zero<Rat>(circ(C, u, v)));
    CHECK(element_is_zero<Rat>(circ(C, v, w)));
    // (uvw)² = −α₁α₂α₃, and uvw is central
    CHECK(element_is_zero<Rat>(multiply(C, uvw, uvw) + scaled_unit(C, a1 * a2 * a3)));
    for (int i = 0; i < 8; ++i)
        CHECK(element_is_zero<Rat>(commutator(C, uvw, C.basis(i))));
    // u·vw = vw·u (even commutes with the complementary odd blade)
    CHECK(element_is_zero<Rat>(commutator(C, u, vw)));
    CHECK(element_is_zero<Rat>(multiply(C, multiply(C, u, v), w) - uvw));
}

TEST_CASE("center of the classical Clifford algebra is spanned by 1, uvw") {
    auto C = classical_clifford_ternary(Rat(-1), Rat(-1), Rat(-1));
    auto Z = center_basis<Rat>(C);
    REQUIRE(Z.size() == 2);
    // each center vector is supported on {1, uvw}
    for (const auto& x : Z)
        for (int i = 1; i < 7; ++i) CHECK(x[i] == 0);
    auto N = nucleus_basis<Rat>(C);
    CHECK(N.size() == 8);  // associative: the nucleus is everything
}

TEST_CASE("nucleus of the real octonions is the scalars") {
    auto [Q, inv] = quaternion_algebra<Rat>(Rat(-1), Rat(-1));
    auto O = cayley_dickson_double<Rat>(Q, inv, Rat(-1));
    auto N = nucleus_basis<Rat>(O);
    REQUIRE(N.size() == 1);
    for (int i = 1; i < 8; ++i) CHECK(N[0][i] == 0);
    auto Z = center_basis<Rat>(O);
    REQUIRE(Z.size() == 1);
}

TEST_CASE("multiplication matrices realize the product") {
    auto [Q, inv] = quaternion_algebra<Rat>(Rat(2), Rat(-7));
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        VecR x = random_element(Q, rng), b = random_element(Q, rng);
        CHECK(element_is_zero<Rat>(VecR(right_mult_matrix(Q, b) * x) - multiply(Q, x, b)));
        CHECK(element_is_zero<Rat>(VecR(left_mult_matrix(Q, b) * x) - multiply(Q, b, x)));
    }
}

TEST_CASE("polynomial coefficients: doubling by a polynomial gamma") {
    auto [Q, inv] = quaternion_algebra<Rat>(Rat(-1), Rat(-1));
    auto Qp = to_poly_algebra(Q);
    InvolutionData<Poly> invp;
    invp.conj = Mat<Poly>::Constant(4, 4, Poly());
    invp.trace = Vec<Poly>::Constant(4, Poly());
    for (int i = 0; i < 4; ++i) {
        invp.trace[i] = Poly(inv.trace[i]);
        for (int j = 0; j < 4; ++j) invp.conj(i, j) = Poly(inv.conj(i, j));
    }
    Poly g = Poly::lambda() * Poly::lambda() + Poly(4);  // λ²+4
    auto O = cayley_dickson_double<Poly>(Qp, invp, g);
    Vec<Poly> z = O.basis(4);
    Vec<Poly> zz = multiply(O, z, z);
    CHECK(zz[0] == g);
    for (int i = 1; i < 8; ++i) CHECK(zz[i].is_zero());
    CHECK(check_alternative(O).ok());
    // specializing at θ = 0 gives the double by 4 and stays alternative
    auto S = specialize_algebra(O, Rat(0));
    CHECK(S.gamma(4, 4, 0) == 4);
    CHECK(check_alternative(S).ok());
}

TEST_CASE("dump format: one `i j k value` line per nonzero constant") {
    auto [Q, inv] = quaternion_algebra<Rat>(Rat(1), Rat(1));
    std::string s = dump_structure_constants(Q);
    std::istringstream is(s);
    std::string line;
    int lines = 0;
    bool saw_uu = false;
    while (std::getline(is, line)) {
        ++lines;
        if (line == "1 1 0 1") saw_uu = true;
    }
    CHECK(lines == 16);  // 7 unit entries + 9 nonunit products
    CHECK(saw_uu);
}
