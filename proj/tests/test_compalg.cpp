#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "magicchart/compalg.hpp"

using namespace magicchart;

namespace {

std::mt19937_64 rng(12345);

Rat rc() {
    static std::uniform_int_distribution<int> d(-3, 3);
    return Rat(d(rng));
}

Octonion random_octonion() {
    std::array<Rat, 8> c;
    for (auto& v : c) v = rc();
    return octo_from_coords(c);
}

Octonion random_imaginary() {
    Octonion x = random_octonion();
    return x - octo_re(x) * Octonion::one();
}

bool convention_ok(const MulConvention& c, const std::vector<std::pair<Octonion, Octonion>>& probes) {
    // two-sided unit
    Octonion e = Octonion::one();
    for (const auto& x : octo_basis()) {
        if (!(octo_mul_with(e, x, c) == x) || !(octo_mul_with(x, e, c) == x)) return false;
    }
    // composition on all ordered basis pairs (necessary but not sufficient)
    auto bs = octo_basis();
    for (const auto& x : bs)
        for (const auto& y : bs)
            if (octo_q(octo_mul_with(x, y, c)) != octo_q(x) * octo_q(y)) return false;
    // composition on generic elements (this is what separates the candidates)
    for (const auto& [x, y] : probes)
        if (octo_q(octo_mul_with(x, y, c)) != octo_q(x) * octo_q(y)) return false;
    return true;
}

}  // namespace

TEST_CASE("2x2 helpers") {
    Mat2 m;
    m.a[0][0] = 1;
    m.a[0][1] = 2;
    m.a[1][0] = 3;
    m.a[1][1] = 4;
    CHECK(mat_trace(m) == 5);
    CHECK(mat_det(m) == -2);
    CHECK(m * mat_adj0(m) == mat_det(m) * Mat2::identity());
    CHECK(mat_adj0(m) + m == mat_trace(m) * Mat2::identity());
}

TEST_CASE("sextonion algebra: unit, degenerate norm, null ideal") {
    Sextonion e = Sextonion::one();
    for (const auto& x : sext_basis()) {
        CHECK(sext_mul(e, x) == x);
        CHECK(sext_mul(x, e) == x);
    }
    // U is a two-sided null ideal
    Sextonion u{Mat2::zero(), Vec2{{1, 2}}}, v{Mat2::zero(), Vec2{{-1, 3}}};
    CHECK(sext_mul(u, v) == Sextonion{});
    CHECK(sext_q(u) == 0);
}

TEST_CASE("the pinned multiplication is the unique good convention in its family") {
    std::vector<std::pair<Octonion, Octonion>> probes;
    for (int t = 0; t < 8; ++t) probes.emplace_back(random_octonion(), random_octonion());
    int good = 0;
    MulConvention winner;
    for (int alpha : {-2, -1, 1, 2})
        for (bool t1 : {false, true})
            for (int beta : {-2, -1, 1, 2})
                for (bool t2 : {false, true})
                    for (int af = 0; af < 4; ++af)
                        for (int bf = 0; bf < 4; ++bf) {
                            MulConvention c{alpha, t1, beta, t2, af, bf};
                            if (convention_ok(c, probes)) {
                                ++good;
                                winner = c;
                            }
                        }
    REQUIRE(good == 1);
    CHECK(winner == kPinnedConvention);
}

TEST_CASE("octonion structural identities") {
    for (int t = 0; t < 20; ++t) {
        Octonion x = random_octonion(), y = random_octonion();
        CHECK(octo_q(octo_mul(x, y)) == octo_q(x) * octo_q(y));
        CHECK(octo_mul(x, octo_mul(x, y)) == octo_mul(octo_mul(x, x), y));  // left alt
        CHECK(octo_mul(octo_mul(y, x), x) == octo_mul(y, octo_mul(x, x)));  // right alt
        CHECK(octo_mul(octo_mul(x, y), x) == octo_mul(x, octo_mul(y, x)));  // flexible
        CHECK(octo_conj(octo_mul(x, y)) == octo_mul(octo_conj(y), octo_conj(x)));
        CHECK(x + octo_conj(x) == (2 * octo_re(x)) * Octonion::one());
        CHECK(octo_mul(x, octo_conj(x)) == octo_q(x) * Octonion::one());
    }
}

TEST_CASE("sextonion embedding is a subalgebra of the octonions") {
    auto bs = sext_basis();
    for (const auto& x : bs)
        for (const auto& y : bs) {
            CHECK(sext_embed(sext_mul(x, y)) == octo_mul(sext_embed(x), sext_embed(y)));
        }
}

TEST_CASE("associative form: domain, alternation, pairing with products") {
    CHECK_THROWS_AS(assoc_form(Octonion::one(), random_imaginary(), random_imaginary()),
                    std::invalid_argument);
    for (int t = 0; t < 10; ++t) {
        Octonion x = random_imaginary(), y = random_imaginary(), z = random_imaginary();
        Rat v = assoc_form(x, y, z);
        CHECK(assoc_form(y, x, z) == -v);
        CHECK(assoc_form(x, z, y) == -v);
        // phi(x, y, z) = -2 q(z, xy) in this sign convention
        CHECK(v == -2 * octo_q_polar(z, octo_mul(x, y)));
    }
}

TEST_CASE("null planes") {
    // U = span{e1, e2} is a null plane
    Octonion e1{}, e2{};
    e1.u.v[0] = 1;
    e2.u.v[1] = 1;
    CHECK(is_null_plane(e1, e2));
    // U* = span{e1*, e2*} as well
    Octonion f1{}, f2{};
    f1.us.v[0] = 1;
    f2.us.v[1] = 1;
    CHECK(is_null_plane(f1, f2));
    // a mixed plane is not
    CHECK_FALSE(is_null_plane(e1, f1));
    // dependent input is rejected
    CHECK_THROWS_AS(is_null_plane(e1, Rat(2) * e1), std::invalid_argument);
}

TEST_CASE("d_sigma and d_rho are derivations for arbitrary parameters") {
    for (int t = 0; t < 5; ++t) {
        RElement s{Vec2{{rc(), rc()}}, Vec2{{rc(), rc()}}};
        LinMap d = build_d_sigma(s);
        CHECK(is_derivation(d, Algebra::Octonion));
        CHECK(is_derivation(d, Algebra::Sextonion));
        Mat2 rho;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) rho.a[i][j] = rc();
        CHECK(is_derivation(build_d_rho(rho), Algebra::Octonion));
        CHECK(is_derivation(build_d_rho(rho), Algebra::Sextonion));
    }
    // a generic linear map is not a derivation
    LinMap m(8);
    m.at(0, 1) = 1;
    CHECK_FALSE(is_derivation(m, Algebra::Octonion));
}

TEST_CASE("automorphisms of S from (rho1, sigma)") {
    for (int t = 0; t < 10; ++t) {
        Mat2 rho1;
        do {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) rho1.a[i][j] = rc();
        } while (mat_det(rho1) == 0);
        RElement s{Vec2{{rc(), rc()}}, Vec2{{rc(), rc()}}};
        CHECK(is_aut_S(rho1, s));
    }
    CHECK_THROWS_AS(is_aut_S(Mat2::zero(), RElement{}), std::invalid_argument);
}
