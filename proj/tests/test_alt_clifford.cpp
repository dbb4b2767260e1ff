#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "altcliff/alt_clifford.hpp"

#include <random>

using namespace altcliff;

namespace {

Vec<Poly> unit_times(const StructureAlgebra<Poly>& A, const Poly& s) {
    Vec<Poly> e = A.zero_element();
    e[A.unit] = s;
    return e;
}

}  // namespace

TEST_CASE("construction on <-1,-1,-1>: d0 = 4, gamma = λ²-4") {
    auto m = build_alt_clifford(*parse_form("diag:-1,-1,-1"));
    CHECK(m.d0 == 4);
    CHECK(m.gamma == Poly(std::vector<Rat>{Rat(-4), Rat(0), Rat(1)}));
    CHECK(verify_presentation(m).ok());
}

TEST_CASE("construction on <2,3,5>: d0 = 24, gamma = λ²+120") {
    auto m = build_alt_clifford(*parse_form("diag:2,3,5"));
    CHECK(m.d0 == 24);
    CHECK(m.gamma == Poly(std::vector<Rat>{Rat(120), Rat(0), Rat(1)}));
    // the squared associator is the central polynomial γ
    Vec<Poly> a = associator(m.octonion, m.g_u, m.g_v, m.g_w);
    CHECK(element_is_zero<Poly>(multiply(m.octonion, a, a) - unit_times(m.octonion, m.gamma)));
}

TEST_CASE("presentation items are individually reported") {
    auto m = build_alt_clifford(*parse_form("diag:1,-2,3"));
    auto rep = verify_presentation(m);
    CHECK(rep.items.size() >= 8);
    for (const auto& it : rep.items) CHECK(it.pass);
}

TEST_CASE("delta is alternating: swapping two arguments flips the sign") {
    auto m = build_alt_clifford(*parse_form("diag:-1,-1,-1"));
    Vec<Poly> d1 = delta(m.octonion, m.g_u, m.g_v, m.g_w);
    Vec<Poly> d2 = delta(m.octonion, m.g_v, m.g_u, m.g_w);
    CHECK(element_is_zero<Poly>(d1 - m.lambda_elem));
    CHECK(element_is_zero<Poly>(d1 + d2));
}

TEST_CASE("non-diagonal input: images of vectors square to form values") {
    auto phi = *parse_form("coeffs:1,1,1,0,1,2");  // x²+xy+xz+yz+2z²
    auto m = build_alt_clifford(phi);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> d(-4, 4);
    const std::array<Vec<Poly>, 3> g = {m.g_u, m.g_v, m.g_w};
    for (int t = 0; t < 25; ++t) {
        VecR y(3);
        for (int i = 0; i < 3; ++i) y[i] = Rat(d(rng));
        VecR x = m.basis_change * y;  // user coordinates of Σ y_i b_i
        Vec<Poly> img = m.octonion.zero_element();
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 8; ++k) img[k] += Poly(y[i]) * g[i][k];
        CHECK(element_is_zero<Poly>(multiply(m.octonion, img, img) -
                                    unit_times(m.octonion, Poly(phi.evaluate(x)))));
    }
}

TEST_CASE("degenerate forms are rejected with a radical witness") {
    auto phi = *parse_form("diag:1,0,3");
    CHECK_THROWS_AS(build_alt_clifford(phi), DegenerateForm);
    try {
        build_alt_clifford(phi);
    } catch (const DegenerateForm& e) {
        VecR r = e.radical_vector;
        CHECK(!element_is_zero<Rat>(r));
        for (int i = 0; i < 3; ++i) CHECK(phi.bilinear(r, VecR(MatR::Identity(3, 3).col(i))) == 0);
    }
}

TEST_CASE("center and nucleus over Q(λ) are one-dimensional") {
    auto m = build_alt_clifford(*parse_form("diag:2,3,5"));
    auto F = to_ratfunc_algebra(m.octonion);
    auto Z = center_basis<RatFunc>(F);
    REQUIRE(Z.size() == 1);
    for (int i = 1; i < 8; ++i) CHECK(Z[0][i].is_zero());
    auto N = nucleus_basis<RatFunc>(F);
    REQUIRE(N.size() == 1);
    for (int i = 1; i < 8; ++i) CHECK(N[0][i].is_zero());
}

TEST_CASE("specialization commutes with direct doubling by gamma(theta)") {
    auto m = build_alt_clifford(*parse_form("diag:2,3,5"));
    for (int th : {0, 1, -3, 7}) {
        Rat gt = m.gamma.eval(Rat(th));
        REQUIRE(gt != 0);
        auto S = specialize(m, Rat(th));
        auto direct = cayley_dickson_double<Rat>(m.quaternion, m.quat_involution, gt);
        for (std::size_t t = 0; t < S.table.size(); ++t) CHECK(S.table[t] == direct.table[t]);
        CHECK(check_alternative(S).ok());
    }
}

TEST_CASE("fibers where gamma(theta) != 0 are octonion algebras") {
    auto m = build_alt_clifford(*parse_form("diag:-1,-1,-1"));
    auto c0 = classify_quotient(m, Rat(0));
    CHECK(c0.kind == QuotientClassification::Kind::Octonion);
    CHECK(c0.gamma_theta == -4);
    CHECK(c0.division);  // (−1,−1,−4): positive definite norm form
    auto c3 = classify_quotient(m, Rat(3));
    CHECK(c3.kind == QuotientClassification::Kind::Octonion);
    CHECK(c3.gamma_theta == 5);
    CHECK(!c3.division);  // γ(3) > 0 splits the octonion algebra
}

TEST_CASE("fibers at roots of gamma map onto the quaternion subalgebra") {
    auto m = build_alt_clifford(*parse_form("diag:-1,-1,-1"));
    for (int th : {2, -2}) {
        auto c = classify_quotient(m, Rat(th));
        REQUIRE(c.kind == QuotientClassification::Kind::QuaternionOnto);
        CHECK(c.gamma_theta == 0);
        CHECK(c.radical_indices == std::vector<int>({4, 5, 6, 7}));
        CHECK(c.radical_squares_zero);
        CHECK(c.quotient_matches_quaternion);
        CHECK(c.division);  // (−1,−1) ramifies at the real place
    }
    auto m2 = build_alt_clifford(*parse_form("diag:1,1,-1"));
    auto c = classify_quotient(m2, Rat(2));
    REQUIRE(c.kind == QuotientClassification::Kind::QuaternionOnto);
    CHECK(!c.division);  // (1,1) is split
}

TEST_CASE("quotient by z matches the classical Clifford algebra") {
    for (const char* f : {"diag:-1,-1,-1", "diag:2,3,5", "diag:1,-2,3", "coeffs:1,1,1,0,1,2"}) {
        auto m = build_alt_clifford(*parse_form(f));
        auto rep = quotient_by_z(m);
        CHECK(rep.multiplicative);
        CHECK(rep.bijective);
        CHECK(rep.associative);
        CHECK(rep.lambda_square_consistent);
        CHECK(rep.lambda_bar_square == -m.gamma.eval(Rat(0)));
        CHECK(rep.ok());
    }
}

TEST_CASE("azumaya scan: non-octonion fibers are exactly the roots of gamma") {
    std::vector<Rat> thetas;
    for (int t = -6; t <= 6; ++t) thetas.push_back(Rat(t));
    thetas.push_back(Rat(Int(1), Int(2)));
    {
        auto m = build_alt_clifford(*parse_form("diag:-1,-1,-1"));
        auto scan = azumaya_scan(m, thetas);
        CHECK(scan.gamma_roots.size() == 2);
        CHECK(scan.ok);
    }
    {
        auto m = build_alt_clifford(*parse_form("diag:2,3,5"));
        auto scan = azumaya_scan(m, thetas);
        CHECK(scan.gamma_roots.empty());
        CHECK(scan.ok);
        for (const auto& s : scan.samples)
            CHECK(s.kind == QuotientClassification::Kind::Octonion);
    }
}

TEST_CASE("mutation: corrupting gamma breaks the z² item") {
    auto m = build_alt_clifford(*parse_form("diag:2,3,5"));
    m.gamma = Poly::lambda() * Poly::lambda();
    auto rep = verify_presentation(m);
    CHECK(!rep.ok());
    bool z2_failed = false;
    for (const auto& it : rep.items)
        if (it.name == "z² = γ" && !it.pass) z2_failed = true;
    CHECK(z2_failed);
}
