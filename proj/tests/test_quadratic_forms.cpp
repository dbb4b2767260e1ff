#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "altcliff/isotropy.hpp"
#include "altcliff/quadratic_form.hpp"
#include "local_oracle.hpp"

#include <random>

using namespace altcliff;

namespace {

std::mt19937_64 rng(0x51ad7a7e);

Rat random_small_nonzero() {
    std::uniform_int_distribution<int> d(1, 7), s(0, 1);
    return Rat((s(rng) ? 1 : -1) * d(rng));
}

QuadraticForm random_diag_form(int dim) {
    std::vector<Rat> a(dim);
    for (auto& x : a) x = random_small_nonzero();
    return QuadraticForm::diagonal(a);
}

VecR vec3(int a, int b, int c) {
    VecR v(3);
    v << Rat(a), Rat(b), Rat(c);
    return v;
}

}  // namespace

TEST_CASE("evaluate examples") {
    auto q = QuadraticForm::diagonal({Rat(-1), Rat(-1), Rat(-1)});
    CHECK(q.evaluate(vec3(1, 0, 0)) == Rat(-1));
    auto q2 = QuadraticForm::diagonal({Rat(1), Rat(1), Rat(-1)});
    CHECK(q2.evaluate(vec3(1, 0, 1)) == Rat(0));
    QuadraticForm cross(2);
    cross.set_coeff(0, 1, Rat(1));
    VecR x(2);
    x << Rat(2), Rat(3);
    CHECK(cross.evaluate(x) == Rat(6));
    CHECK_THROWS_AS(q.evaluate(x), DimensionMismatch);
}

TEST_CASE("bilinear examples") {
    auto q = QuadraticForm::diagonal({Rat(2), Rat(3), Rat(5)});
    CHECK(q.bilinear(vec3(1, 0, 0), vec3(0, 1, 0)) == Rat(0));
    CHECK(q.bilinear(vec3(1, 0, 0), vec3(1, 0, 0)) == Rat(4));  // b(u,u) = 2φ(u)
    QuadraticForm cross(2);
    cross.set_coeff(0, 1, Rat(1));
    VecR e1(2), e2(2);
    e1 << Rat(1), Rat(0);
    e2 << Rat(0), Rat(1);
    CHECK(cross.bilinear(e1, e2) == Rat(1));
    // symmetry on random vectors
    for (int t = 0; t < 50; ++t) {
        std::uniform_int_distribution<int> d(-4, 4);
        VecR x(3), y(3);
        for (int i = 0; i < 3; ++i) {
            x[i] = Rat(d(rng));
            y[i] = Rat(d(rng));
        }
        CHECK(q.bilinear(x, y) == q.bilinear(y, x));
    }
}

TEST_CASE("diagonalize examples") {
    auto d1 = diagonalize(QuadraticForm::diagonal({Rat(-1), Rat(-1), Rat(-1)}));
    CHECK(d1.alphas == std::vector<Rat>{Rat(-1), Rat(-1), Rat(-1)});
    CHECK(d1.basis_change == MatR::Identity(3, 3));

    QuadraticForm cross(2);
    cross.set_coeff(0, 1, Rat(1));
    auto d2 = diagonalize(cross);  // identity check is the contract
    for (const auto& a : d2.alphas) CHECK(a != 0);

    auto d3 = diagonalize(QuadraticForm::diagonal({Rat(1), Rat(1), Rat(-1)}));
    CHECK(d3.alphas == std::vector<Rat>{Rat(1), Rat(1), Rat(-1)});
}

TEST_CASE("diagonalize rejects degenerate with witness") {
    auto q = QuadraticForm::diagonal({Rat(1), Rat(0), Rat(1)});
    try {
        diagonalize(q);
        FAIL("expected DegenerateForm");
    } catch (const DegenerateForm& e) {
        CHECK(q.evaluate(e.radical_vector) == 0);
        CHECK(e.radical_vector[1] != 0);
    }
}

TEST_CASE("diagonalize random forms satisfies identity") {
    std::uniform_int_distribution<int> d(-5, 5);
    int done = 0;
    while (done < 60) {
        QuadraticForm q(3);
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) q.set_coeff(i, j, Rat(d(rng)));
        if (!q.is_nondegenerate()) continue;
        auto dg = diagonalize(q);  // internal exact identity check
        for (const auto& a : dg.alphas) CHECK(a != 0);
        ++done;
    }
}

TEST_CASE("subform_det2") {
    CHECK(subform_det2(Rat(-1), Rat(-1), Rat(0)) == Rat(4));
    CHECK(subform_det2(Rat(2), Rat(3), Rat(0)) == Rat(24));
    CHECK(subform_det2(Rat(1), Rat(1), Rat(2)) == Rat(0));
}

TEST_CASE("hilbert symbol examples against brute-force oracle") {
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), kInfinitePlace) == -1);
    CHECK(altcliff_test::hilbert_oracle(-1, -1, 2) == -1);
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), 2) == -1);
    CHECK(altcliff_test::hilbert_oracle(-1, -1, 5) == 1);
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), 5) == 1);
}

TEST_CASE("hilbert symbol agrees with local solvability oracle") {
    std::uniform_int_distribution<int> d(1, 30), s(0, 1);
    for (Place p : {Place(2), Place(3), Place(5), Place(7), Place(13), kInfinitePlace}) {
        int limit = (p == 2) ? 3 : (p <= 5 ? 2 : 1);  // keep oracle search tractable
        for (int t = 0; t < 50; ++t) {
            long long a, b;
            do {
                a = (s(rng) ? 1 : -1) * d(rng);
                b = (s(rng) ? 1 : -1) * d(rng);
            } while (p != kInfinitePlace &&
                     valuation(Int(a), Int(p)) + valuation(Int(b), Int(p)) > limit);
            CHECK(hilbert_symbol(Rat(a), Rat(b), p) == altcliff_test::hilbert_oracle(a, b, p));
        }
    }
}

TEST_CASE("hilbert symbol symmetry and bimultiplicativity") {
    std::uniform_int_distribution<int> d(1, 40), s(0, 1);
    auto rnz = [&] { return Rat((s(rng) ? 1 : -1) * d(rng), d(rng)); };
    for (Place p : {kInfinitePlace, Place(2), Place(3), Place(5), Place(7), Place(11)}) {
        for (int t = 0; t < 200; ++t) {
            Rat a = rnz(), b = rnz(), a2 = rnz();
            CHECK(hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p));
            CHECK(hilbert_symbol(a * a2, b, p) ==
                  hilbert_symbol(a, b, p) * hilbert_symbol(a2, b, p));
            CHECK(hilbert_symbol(a, -a, p) == 1);
        }
    }
}

TEST_CASE("hilbert product formula") {
    std::uniform_int_distribution<int> d(1, 50), s(0, 1);
    for (int t = 0; t < 100; ++t) {
        Rat a((s(rng) ? 1 : -1) * d(rng), d(rng));
        Rat b((s(rng) ? 1 : -1) * d(rng), d(rng));
        int prod = 1;
        for (Place v : relevant_places({a, b})) prod *= hilbert_symbol(a, b, v);
        CHECK(prod == 1);
    }
}

TEST_CASE("is_isotropic examples") {
    CHECK(is_isotropic(QuadraticForm::diagonal({Rat(1), Rat(1), Rat(-1)})));
    CHECK(!is_isotropic(QuadraticForm::diagonal({Rat(-1), Rat(-1), Rat(-1)})));
    CHECK(is_isotropic(QuadraticForm::diagonal({Rat(1), Rat(1), Rat(1), Rat(1), Rat(-7)})));
    CHECK(!is_isotropic(QuadraticForm::diagonal({Rat(1), Rat(-5)})));
    CHECK(is_isotropic(QuadraticForm::diagonal({Rat(1), Rat(-4)})));
    CHECK_THROWS_AS(is_isotropic(QuadraticForm::diagonal({Rat(0), Rat(1)})), DegenerateForm);
}

TEST_CASE("isotropy oracle examples") {
    auto w = isotropy_oracle(QuadraticForm::diagonal({Rat(1), Rat(1), Rat(-1)}), 1);
    REQUIRE(w.has_value());
    {
        VecR x(3);
        for (int i = 0; i < 3; ++i) x[i] = Rat((*w)[i]);
        CHECK(QuadraticForm::diagonal({Rat(1), Rat(1), Rat(-1)}).evaluate(x) == 0);
    }
    CHECK(!isotropy_oracle(QuadraticForm::diagonal({Rat(-1), Rat(-1), Rat(-1)}), 50));
    CHECK(!isotropy_oracle(QuadraticForm::diagonal({Rat(1), Rat(-5)}), 10));
}

TEST_CASE("is_isotropic agrees with search oracle, dims 2-4") {
    std::uniform_int_distribution<int> dim(2, 4);
    const Rat choices[] = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(3),
                           Rat(-3), Rat(5), Rat(-5), Rat(7), Rat(-7)};
    std::uniform_int_distribution<int> pick(0, 9);
    for (int t = 0; t < 100; ++t) {
        int n = dim(rng);
        std::vector<Rat> a(n);
        for (auto& x : a) x = choices[pick(rng)];
        auto q = QuadraticForm::diagonal(a);
        bool hm = is_isotropic(q);
        auto witness = isotropy_oracle(q, 50);
        if (witness) {
            CHECK(hm);
            VecR x(n);
            for (int i = 0; i < n; ++i) x[i] = Rat((*witness)[i]);
            CHECK(q.evaluate(x) == 0);
        }
        if (!hm) CHECK(!witness);
    }
}

TEST_CASE("ternary isotropy iff quaternion symbol splits") {
    for (int t = 0; t < 100; ++t) {
        auto q = random_diag_form(3);
        auto a = q.diagonal_entries();
        CHECK(is_isotropic(q) ==
              symbol_splits_everywhere(-a[0] * a[2], -a[1] * a[2]));
    }
}

TEST_CASE("form_invariants and form_equiv") {
    CHECK(form_equiv(QuadraticForm::diagonal({Rat(1), Rat(1)}),
                     QuadraticForm::diagonal({Rat(2), Rat(2)})));
    CHECK(!form_equiv(QuadraticForm::diagonal({Rat(1), Rat(1)}),
                      QuadraticForm::diagonal({Rat(1), Rat(-1)})));
    auto q = random_diag_form(3);
    CHECK(form_equiv(q, q));
    auto inv = form_invariants(QuadraticForm::diagonal({Rat(-1), Rat(-1), Rat(-1)}));
    CHECK(inv.signature == std::pair<int, int>(0, 3));
    CHECK(inv.det == SquareClass::of(Rat(-1)));
}

TEST_CASE("form_equiv invariant under congruence") {
    // scaling a slot by a square keeps the class
    for (int t = 0; t < 50; ++t) {
        auto q = random_diag_form(3);
        auto a = q.diagonal_entries();
        std::uniform_int_distribution<int> d(1, 5);
        a[t % 3] *= Rat(d(rng) * d(rng));
        a[t % 3] = q.diagonal_entries()[t % 3] * Rat(d(rng)) * Rat(d(rng));
        int s = d(rng);
        a[t % 3] = q.diagonal_entries()[t % 3] * Rat(s * s);
        CHECK(form_equiv(q, QuadraticForm::diagonal(a)));
    }
}

TEST_CASE("pfister forms") {
    auto p1 = pfister({Rat(5)});
    CHECK(p1.diagonal_entries() == std::vector<Rat>{Rat(1), Rat(-5)});
    auto p2 = pfister({Rat(2), Rat(3)});
    CHECK(p2.diagonal_entries() == std::vector<Rat>{Rat(1), Rat(-2), Rat(-3), Rat(6)});
    auto pure = pure_subform(p2);
    CHECK(pure.diagonal_entries() == std::vector<Rat>{Rat(-2), Rat(-3), Rat(6)});
    CHECK(pfister({Rat(1), Rat(1), Rat(1)}).dim() == 8);
    CHECK_THROWS(pfister({Rat(0)}));
}

TEST_CASE("decompose/reconstruct ternary") {
    auto t1 = decompose_ternary(QuadraticForm::diagonal({Rat(-1), Rat(-1), Rat(-1)}));
    CHECK(t1.delta_disc == SquareClass::of(Rat(-1)));
    CHECK(t1.omega_gammas == std::array<Rat, 2>{Rat(-1), Rat(-1)});

    auto t2 = decompose_ternary(QuadraticForm::diagonal({Rat(1), Rat(1), Rat(-1)}));
    CHECK(t2.delta_disc == SquareClass::of(Rat(-1)));
    CHECK(omega_hyperbolic(t2));

    auto q = QuadraticForm::diagonal({Rat(2), Rat(3), Rat(5)});
    CHECK(form_equiv(reconstruct_ternary(decompose_ternary(q)), q));

    for (int t = 0; t < 100; ++t) {
        auto r = random_diag_form(3);
        auto dec = decompose_ternary(r);
        CHECK(form_equiv(reconstruct_ternary(dec), r));
        CHECK(is_isotropic(r) == omega_hyperbolic(dec));
    }
}

TEST_CASE("form text format round-trip") {
    auto q = parse_form("diag:-1,-1,-1");
    REQUIRE(q.has_value());
    CHECK(q->dim() == 3);
    CHECK(q->coeff(0, 0) == Rat(-1));
    auto g = parse_form("coeffs:1,1,0,1,0,1");
    REQUIRE(g.has_value());
    CHECK(g->dim() == 3);
    CHECK(g->coeff(0, 1) == Rat(1));
    auto h = parse_form("diag:1/2,-3/4,5");
    REQUIRE(h.has_value());
    CHECK(h->coeff(1, 1) == Rat(-3, 4));
    CHECK(!parse_form("diag:").has_value());
    CHECK(!parse_form("nope:1").has_value());
    CHECK(!parse_form("coeffs:1,2").has_value());
    CHECK(parse_form(format_form(*g)) == g);
    CHECK(parse_form(format_form(*q)) == q);
}
