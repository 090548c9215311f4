#include <catch2/catch_amalgamated.hpp>

#include "magicchart/dimform.hpp"
#include "magicchart/rootsys.hpp"

using namespace magicchart;

TEST_CASE("der, tri, g closed forms at the composition algebra parameters") {
    CHECK(dim_der(Rat(1)) == 0);
    CHECK(dim_der(Rat(2)) == 0);
    CHECK(dim_der(Rat(4)) == 3);
    CHECK(dim_der(Rat(6)) == 8);  // with the null ideal contribution
    CHECK(dim_der(Rat(8)) == 14);

    CHECK(dim_tri(Rat(1)) == 0);
    CHECK(dim_tri(Rat(2)) == 2);
    CHECK(dim_tri(Rat(4)) == 9);
    CHECK(dim_tri(Rat(6)) == 18);
    CHECK(dim_tri(Rat(8)) == 28);

    CHECK(dim_g(Rat(8), Rat(8)) == 248);   // e8
    CHECK(dim_g(Rat(8), Rat(4)) == 133);   // e7
    CHECK(dim_g(Rat(8), Rat(2)) == 78);    // e6
    CHECK(dim_g(Rat(8), Rat(1)) == 52);    // f4
    CHECK(dim_g(Rat(6), Rat(6)) == 144);   // e7-half . H(32) . H(44)
    CHECK(dim_g(Rat(6), Rat(8)) == dim_g(Rat(8), Rat(6)));  // symmetric
}

TEST_CASE("closed forms stay integral over the whole chart") {
    const Rat rows[] = {Rat(1), Rat(2), Rat(4), Rat(6), Rat(8)};
    const Rat cols[] = {Rat(-2, 3), Rat(0), Rat(1), Rat(2), Rat(4), Rat(6), Rat(8)};
    for (const Rat& a : rows) {
        CHECK(is_integer(dim_der(a)));
        CHECK(is_integer(dim_tri(a)));
        for (const Rat& b : cols) CHECK(is_integer(dim_g(a, b)));
    }
    // the extra columns used only in the g formula
    CHECK(dim_g(Rat(8), Rat(-2, 3)) == 14);  // g2
    CHECK(dim_g(Rat(8), Rat(0)) == 28);
}

TEST_CASE("poles are rejected") {
    CHECK_THROWS_AS(dim_der(Rat(-4)), std::domain_error);
    CHECK_THROWS_AS(dim_tri(Rat(-4)), std::domain_error);
    CHECK_THROWS_AS(dim_g(Rat(-4), Rat(8)), std::domain_error);
    CHECK_THROWS_AS(dim_g(Rat(8), Rat(-4)), std::domain_error);
}

TEST_CASE("exceptional series Cartan powers") {
    CHECK(exc_gk(Rat(8), 0) == 1);
    CHECK(exc_gk(Rat(8), 1) == 248);
    CHECK(exc_gk(Rat(8), 2) == 27000);
    CHECK(exc_gk(Rat(6), 1) == 190);
    CHECK(exc_gk(Rat(6), 2) == 15504);
    for (const Rat& a :
         {Rat(-4, 3), Rat(-1), Rat(-2, 3), Rat(0), Rat(1), Rat(2), Rat(4), Rat(6), Rat(8)}) {
        for (unsigned k = 0; k <= 4; ++k) CHECK_NOTHROW(exc_gk(a, k));
        CHECK(exc_gk(a, 0) == 1);
    }
    CHECK_THROWS_AS(exc_gk(Rat(3), 1), std::invalid_argument);
}

TEST_CASE("subexceptional series Cartan powers") {
    CHECK(subexc_gk(Rat(6), 1) == 99);    // D6.H(32): so12 + half-spin + center
    CHECK(subexc_vk(Rat(6), 1) == 44);    // 32 + 12
    CHECK(subexc_v2k(Rat(6), 1) == 945);
    CHECK(subexc_gk(Rat(8), 1) == 133);   // a = 8 is the adjoint e7 itself
    for (const Rat& a : {Rat(-2, 3), Rat(0), Rat(1), Rat(2), Rat(4), Rat(6), Rat(8)}) {
        for (unsigned k = 0; k <= 4; ++k) {
            CHECK_NOTHROW(subexc_gk(a, k));
            CHECK_NOTHROW(subexc_vk(a, k));
            CHECK_NOTHROW(subexc_v2k(a, k));
        }
        CHECK(subexc_gk(a, 0) == 1);
        CHECK(subexc_vk(a, 0) == 1);
    }
    CHECK_THROWS_AS(subexc_gk(Rat(-1), 1), std::invalid_argument);
    CHECK_THROWS_AS(subexc_vk(Rat(3), 1), std::invalid_argument);
    CHECK_THROWS_AS(subexc_v2k(Rat(5), 1), std::invalid_argument);
}

TEST_CASE("Severi series Cartan powers against the A5 oracle") {
    CHECK(severi_vk(Rat(6), 1) == 21);   // Lambda^2 C^6 + (C^6)*
    CHECK(severi_vk(Rat(6), 2) == 210);
    // a = 6 oracle: V^(k) = sum over i + j = k of the A5 modules V_{i w2 + j w5}
    RootSystem a5 = build_root_system('A', 5);
    for (unsigned k = 1; k <= 6; ++k) {
        Int oracle = 0;
        for (unsigned i = 0; i <= k; ++i) {
            Weight w = {0, 0, 0, 0, 0};
            w[1] = i;
            w[4] = k - i;
            oracle += a5.weyl_dim(w);
        }
        CHECK(severi_vk(Rat(6), k) == oracle);
    }
    for (const Rat& a : {Rat(-2, 3), Rat(0), Rat(1), Rat(2), Rat(4), Rat(6), Rat(8)})
        for (unsigned k = 0; k <= 4; ++k) CHECK_NOTHROW(severi_vk(a, k));
    CHECK_THROWS_AS(severi_vk(Rat(7), 1), std::invalid_argument);
}

TEST_CASE("explicit two-parameter polynomials") {
    CHECK(e7_vdim(1, 0) == 133);
    CHECK(e7_vdim(0, 1) == 56);
    CHECK(e7_vdim(0, 0) == 1);

    CHECK(so12_vdim_w5w2(1, 0) == 66);  // i counts w2: the adjoint
    CHECK(so12_vdim_w5w2(0, 1) == 32);  // j counts w5: a half-spin
    CHECK(so12_vdim_w6w1(0, 0) == 1);
    CHECK(so12_vdim_w6w1(1, 0) == 32);
    CHECK(so12_vdim_w6w1(0, 1) == 12);
    CHECK(so12_vdim_4param(0, 0, 0, 0) == 1);

    RootSystem d6 = build_root_system('D', 6);
    for (long long i = 0; i <= 2; ++i)
        for (long long j = 0; j <= 2; ++j) {
            Weight w(6, 0);
            w[1] = i;
            w[4] = j;
            CHECK(so12_vdim_w5w2(i, j) == d6.weyl_dim(w));
        }
    RootSystem e7 = build_root_system('E', 7);
    for (long long i = 0; i <= 2; ++i)
        for (long long j = 0; j <= 2; ++j) {
            Weight w(7, 0);
            w[0] = i;
            w[6] = j;
            CHECK(e7_vdim(i, j) == e7.weyl_dim(w));
        }
}

TEST_CASE("adjoint dimension bookkeeping") {
    AdjointDims e8 = adjoint_dims(vogel_params('E', 8));
    CHECK(e8.dimXH == 33);
    CHECK(e8.dimXG == 45);
    CHECK(e8.dimXGbar == 57);

    AdjointParams c3 = vogel_params('C', 3);
    CHECK(c3.beta == 1);
    CHECK(c3.hcheck == 4);

    AdjointParams g2 = vogel_params('G', 2);
    CHECK(g2.use_two);

    CHECK_THROWS_AS(vogel_params('Q', 5), std::invalid_argument);

    auto [va, vb, vc] = vogel_abc_e7half();
    CHECK(va == -2);
    CHECK(vb == 10);
    CHECK(vc == 16);
}
