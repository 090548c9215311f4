#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "magicchart/jordan.hpp"
#include "magicchart/json_io.hpp"

using namespace magicchart;

namespace {

std::mt19937_64 rng(777);

Rat rc() {
    static std::uniform_int_distribution<int> d(-3, 3);
    return Rat(d(rng));
}

Octonion ro() {
    std::array<Rat, 8> c;
    for (auto& v : c) v = rc();
    return octo_from_coords(c);
}

J3 rj(AlgTag tag) { return J3(tag, rc(), rc(), rc(), ro(), ro(), ro()); }

}  // namespace

TEST_CASE("jordan product: commutative, unital, tag-checked") {
    for (AlgTag tag : {AlgTag::H, AlgTag::S, AlgTag::O}) {
        J3 x = rj(tag), y = rj(tag);
        CHECK(jordan_mul(x, y) == jordan_mul(y, x));
        CHECK(jordan_mul(x, J3::identity(tag)) == x);
    }
    CHECK_THROWS_AS(jordan_mul(rj(AlgTag::H), rj(AlgTag::O)), std::invalid_argument);
}

TEST_CASE("determinant: diagonal case and trace compatibility") {
    J3 d = J3::diag(AlgTag::O, 2, 3, 5);
    CHECK(j3_det(d) == 30);
    CHECK(j3_trace(d) == 10);
    CHECK(j3_det(J3::identity(AlgTag::S)) == 1);
    for (AlgTag tag : {AlgTag::H, AlgTag::S, AlgTag::O}) {
        J3 x = rj(tag);
        CHECK(j3_trace_form(x, j3_cofactor(x)) == 3 * j3_det(x));
    }
}

TEST_CASE("cofactor identities pin the det convention") {
    for (AlgTag tag : {AlgTag::H, AlgTag::S, AlgTag::O}) {
        for (int t = 0; t < 25; ++t) {
            J3 x = rj(tag);
            J3 q = j3_cofactor(x);
            Rat det = j3_det(x);
            CHECK(j3_cofactor(q) == det * x);
            CHECK(jordan_mul(x, q) == det * J3::identity(tag));
        }
    }
}

TEST_CASE("cofactor polarization") {
    J3 x = rj(AlgTag::O), w = rj(AlgTag::O);
    CHECK(j3_cofactor(x + w) ==
          j3_cofactor(x) + Rat(2) * j3_cofactor_polar(x, w) + j3_cofactor(w));
}

TEST_CASE("nu2 on the scalar chart is rank one") {
    for (AlgTag tag : {AlgTag::H, AlgTag::S, AlgTag::O}) {
        Octonion x = rc() * Octonion::one();
        J3 v = nu2(x, ro(), ro(), tag);
        CHECK(j3_cofactor(v) == Rat(0) * J3::identity(tag));
        CHECK(j3_det(v) == 0);
    }
}

TEST_CASE("radical of J3(S) squares to zero") {
    auto rad = [&] {
        Octonion x{};
        x.u = Vec2{{rc(), rc()}};
        return x;
    };
    J3 r1(AlgTag::S, 0, 0, 0, rad(), rad(), rad());
    J3 r2(AlgTag::S, 0, 0, 0, rad(), rad(), rad());
    CHECK(jordan_mul(r1, r2) == Rat(0) * J3::identity(AlgTag::S));
    // and it is an ideal: J3(S) ∘ radical stays in the radical
    J3 p = jordan_mul(rj(AlgTag::S), r1);
    CHECK(p.r[0] == 0);
    CHECK(p.r[1] == 0);
    CHECK(p.r[2] == 0);
    CHECK(p.a.X == Mat2::zero());
    CHECK(p.b.X == Mat2::zero());
    CHECK(p.c.X == Mat2::zero());
}

TEST_CASE("nu3 images satisfy the G_omega equations and t_w is a translation action") {
    for (AlgTag tag : {AlgTag::H, AlgTag::S, AlgTag::O}) {
        J3 x = rj(tag), w = rj(tag), w2 = rj(tag);
        Z2 m = nu3(x);
        CHECK(gw_membership(m));
        CHECK(t_w(m, w) == nu3(x + w));
        CHECK(gw_membership(t_w(m, w)));
        CHECK(t_w(t_w(m, w), w2) == t_w(m, w + w2));
    }
}

TEST_CASE("secant solver statuses") {
    // double root: equal weights give lambda = mu
    J3 a = J3::diag(AlgTag::O, 1, 2, 3);
    J3 b = J3::diag(AlgTag::O, 2, 1, 1);
    Z2 tangent = Rat(1) * nu3(a) + Rat(1) * nu3(b);
    CHECK(secant_decompose(tangent).status == SecantStatus::Tangent);

    // a point on the cone over the Veronese itself is rejected
    CHECK_THROWS_AS(secant_decompose(Rat(2) * nu3(a)), std::domain_error);

    // rational split round-trip
    Z2 m = Rat(1) * nu3(a) + Rat(3) * nu3(b);
    SecantResult res = secant_decompose(m);
    REQUIRE(res.status == SecantStatus::RationalSplit);
    CHECK(res.lambda + res.mu == 4);
    CHECK(res.lambda * nu3(res.a) + res.mu * nu3(res.b) == m);

    // at infinity
    Z2 inf{0, a, b, 1};
    CHECK_THROWS_AS(secant_decompose(inf), std::domain_error);

    // irrational split: quadratic discriminant not a rational square
    Z2 irr{1, Rat(0) * a, J3::diag(AlgTag::O, 1, 1, 1), 1};
    SecantResult r2 = secant_decompose(irr.y, irr.s, irr.t);
    CHECK(r2.status == SecantStatus::IrrationalSplit);
}

TEST_CASE("sp2 membership equations") {
    // the Pluecker index is a bijection onto 0..14
    std::array<bool, 15> seen{};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            int idx = detail::pluecker_index(i, j);
            REQUIRE(idx >= 0);
            REQUIRE(idx < 15);
            CHECK_FALSE(seen[size_t(idx)]);
            seen[size_t(idx)] = true;
        }

    LambdaRep pure{};
    pure.h = {1, 0, 0, 0, 0, 0};
    CHECK(sp2_membership(pure));

    // decomposable omega = e0 ∧ e1 with h = e2* (incident)
    LambdaRep dec{};
    dec.omega[detail::pluecker_index(0, 1)] = 1;
    dec.h = {0, 0, 1, 0, 0, 0};
    CHECK(sp2_membership(dec));

    // same omega but h not annihilating it
    LambdaRep bad_h = dec;
    bad_h.h = {1, 0, 0, 0, 0, 0};
    CHECK_FALSE(sp2_membership(bad_h));

    // non-decomposable omega fails the Pluecker quadric
    LambdaRep bad{};
    bad.omega[detail::pluecker_index(0, 1)] = 1;
    bad.omega[detail::pluecker_index(2, 3)] = 1;
    CHECK_FALSE(sp2_membership(bad));

    CHECK_THROWS_AS(sp2_membership(LambdaRep{}), std::invalid_argument);
}

TEST_CASE("json round-trips are exact") {
    J3 x = rj(AlgTag::S);
    CHECK(j3_from_json(j3_to_json(x)) == x);
    Z2 m = nu3(rj(AlgTag::O));
    CHECK(z2_from_json(z2_to_json(m)) == m);
    LambdaRep p{};
    p.omega[3] = Rat(-7, 2);
    p.h[5] = Rat(1, 3);
    CHECK(lambda_from_json(lambda_to_json(p)) == p);
    Json j = j3_to_json(x);
    CHECK(j.contains("tag"));
    CHECK(j.contains("diag"));
    CHECK(j.contains("off"));
}
