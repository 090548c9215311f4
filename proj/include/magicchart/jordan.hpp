#pragma once

// Jordan algebras J3(A) for A in {H, S, O}, Zorn-style elements Z2(A),
// Veronese maps nu2 / nu3, the G_omega(S^3, S^6) membership equations,
// the translation action t_w, the unique-secant solver, and SP^2 membership
// as pairs (omega, h).

#include <array>
#include <stdexcept>

#include "magicchart/compalg.hpp"
#include "magicchart/rational.hpp"

namespace magicchart {

enum class AlgTag { H, S, O };

// Project an octonion onto the subalgebra named by the tag
// (H = gl(U), S = gl(U) ⊕ U).
inline Octonion tag_project(const Octonion& x, AlgTag tag) {
    Octonion r = x;
    if (tag == AlgTag::H) r.u = Vec2{};
    if (tag != AlgTag::O) r.us = Vec2{};
    return r;
}

// A Hermitian 3x3 matrix over A:
//   [[r1,       c,  conj(b)],
//    [conj(c), r2,  a      ],
//    [b,   conj(a), r3     ]]
struct J3 {
    AlgTag tag = AlgTag::O;
    Rat r[3]{};
    Octonion a, b, c;

    J3() = default;
    J3(AlgTag t, Rat r1, Rat r2, Rat r3, const Octonion& aa, const Octonion& bb,
       const Octonion& cc)
        : tag(t), r{std::move(r1), std::move(r2), std::move(r3)}, a(tag_project(aa, t)),
          b(tag_project(bb, t)), c(tag_project(cc, t)) {}

    static J3 identity(AlgTag t) { return J3(t, 1, 1, 1, {}, {}, {}); }
    static J3 diag(AlgTag t, Rat r1, Rat r2, Rat r3) {
        return J3(t, std::move(r1), std::move(r2), std::move(r3), {}, {}, {});
    }

    friend J3 operator+(const J3& x, const J3& y) {
        if (x.tag != y.tag) throw std::invalid_argument("J3 tag mismatch");
        return J3(x.tag, x.r[0] + y.r[0], x.r[1] + y.r[1], x.r[2] + y.r[2], x.a + y.a,
                  x.b + y.b, x.c + y.c);
    }
    friend J3 operator-(const J3& x, const J3& y) {
        if (x.tag != y.tag) throw std::invalid_argument("J3 tag mismatch");
        return J3(x.tag, x.r[0] - y.r[0], x.r[1] - y.r[1], x.r[2] - y.r[2], x.a - y.a,
                  x.b - y.b, x.c - y.c);
    }
    friend J3 operator*(const Rat& k, const J3& x) {
        return J3(x.tag, k * x.r[0], k * x.r[1], k * x.r[2], k * x.a, k * x.b, k * x.c);
    }
    friend bool operator==(const J3&, const J3&) = default;
};

inline Rat j3_trace(const J3& x) { return x.r[0] + x.r[1] + x.r[2]; }

namespace detail {

using OctMat3 = std::array<std::array<Octonion, 3>, 3>;

inline OctMat3 to_matrix(const J3& x) {
    OctMat3 m;
    m[0][0] = x.r[0] * Octonion::one();
    m[1][1] = x.r[1] * Octonion::one();
    m[2][2] = x.r[2] * Octonion::one();
    m[0][1] = x.c;
    m[1][0] = octo_conj(x.c);
    m[0][2] = octo_conj(x.b);
    m[2][0] = x.b;
    m[1][2] = x.a;
    m[2][1] = octo_conj(x.a);
    return m;
}

inline OctMat3 matmul(const OctMat3& p, const OctMat3& q) {
    OctMat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i][j] = octo_mul(p[i][0], q[0][j]) + octo_mul(p[i][1], q[1][j]) +
                      octo_mul(p[i][2], q[2][j]);
    return r;
}

// Read a Hermitian octonionic matrix back into J3 form, checking that it
// really is Hermitian with scalar diagonal (an internal consistency bug trips
// the exception, never silent corruption).
inline J3 from_matrix(const OctMat3& m, AlgTag tag) {
    for (int i = 0; i < 3; ++i) {
        Octonion d = m[i][i];
        if (!(d == octo_re(d) * Octonion::one()))
            throw std::logic_error("J3 product has non-scalar diagonal");
    }
    if (!(m[1][0] == octo_conj(m[0][1])) || !(m[2][0] == octo_conj(m[0][2])) ||
        !(m[2][1] == octo_conj(m[1][2])))
        throw std::logic_error("J3 product is not Hermitian");
    return J3(tag, octo_re(m[0][0]), octo_re(m[1][1]), octo_re(m[2][2]), m[1][2], m[2][0],
              m[0][1]);
}

}  // namespace detail

// Jordan product x ∘ y = (xy + yx) / 2, matrix products expanded entrywise in A.
inline J3 jordan_mul(const J3& x, const J3& y) {
    if (x.tag != y.tag) throw std::invalid_argument("J3 tag mismatch");
    auto p = detail::matmul(detail::to_matrix(x), detail::to_matrix(y));
    auto q = detail::matmul(detail::to_matrix(y), detail::to_matrix(x));
    detail::OctMat3 s{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s[i][j] = Rat(1, 2) * (p[i][j] + q[i][j]);
    return detail::from_matrix(s, x.tag);
}

// The cubic norm. The triple-term convention 2 Re((ab)c) is pinned by the
// identities Q(Q(x)) = det(x) x and x ∘ Q(x) = det(x) I (exact-arithmetic
// selection; regression-tested).
inline Rat j3_det(const J3& x) {
    return x.r[0] * x.r[1] * x.r[2] - x.r[0] * octo_q(x.a) - x.r[1] * octo_q(x.b) -
           x.r[2] * octo_q(x.c) + 2 * octo_re(octo_mul(octo_mul(x.a, x.b), x.c));
}

// Cofactor (adjoint) map: Q(x) = x∘x - tr(x) x + sigma2(x) I with
// sigma2 = (tr(x)^2 - tr(x∘x)) / 2.
inline J3 j3_cofactor(const J3& x) {
    J3 xx = jordan_mul(x, x);
    Rat t = j3_trace(x);
    Rat s2 = (t * t - j3_trace(xx)) / 2;
    return xx - t * x + s2 * J3::identity(x.tag);
}

// Polarization: Q(x + w) = Q(x) + 2 Q(x, w) + Q(w).
inline J3 j3_cofactor_polar(const J3& x, const J3& w) {
    return Rat(1, 2) * (j3_cofactor(x + w) - j3_cofactor(x) - j3_cofactor(w));
}

// Trace form T(x, y) = tr(x ∘ y).
inline Rat j3_trace_form(const J3& x, const J3& y) { return j3_trace(jordan_mul(x, y)); }

// Veronese square: nu2(x, y, z) = (entries u v̄); rank one, Q(nu2) = 0.
inline J3 nu2(const Octonion& x, const Octonion& y, const Octonion& z, AlgTag tag) {
    Octonion px = tag_project(x, tag), py = tag_project(y, tag), pz = tag_project(z, tag);
    // a = y z̄, b = z x̄, c = x ȳ; diagonal (q(x), q(y), q(z)).
    return J3(tag, octo_q(px), octo_q(py), octo_q(pz), octo_mul(py, octo_conj(pz)),
              octo_mul(pz, octo_conj(px)), octo_mul(px, octo_conj(py)));
}

// ----------------------------------------------------------------- Z2(A)

struct Z2 {
    Rat s;
    J3 x;
    J3 y;
    Rat t;

    friend Z2 operator+(const Z2& p, const Z2& q) {
        return {p.s + q.s, p.x + q.x, p.y + q.y, p.t + q.t};
    }
    friend Z2 operator*(const Rat& k, const Z2& p) { return {k * p.s, k * p.x, k * p.y, k * p.t}; }
    friend bool operator==(const Z2&, const Z2&) = default;
};

// nu3(x) = (1, x, Q(x), det x).
inline Z2 nu3(const J3& x) { return {1, x, j3_cofactor(x), j3_det(x)}; }

// Lemma (G_omega equations): Q(x) = s y, Q(y) = t x, x ∘ y = s t I.
inline bool gw_membership(const Z2& m) {
    AlgTag tag = m.x.tag;
    return j3_cofactor(m.x) == m.s * m.y && j3_cofactor(m.y) == m.t * m.x &&
           jordan_mul(m.x, m.y) == (m.s * m.t) * J3::identity(tag);
}

// Translation action of w in J3(A) on Z2(A); affine in m, preserves the
// G_omega equations, and t_w(nu3(x)) = nu3(x + w).
inline Z2 t_w(const Z2& m, const J3& w) {
    return {m.s, m.x + m.s * w,
            m.y + 2 * j3_cofactor_polar(m.x, w) + m.s * j3_cofactor(w),
            m.t + j3_trace_form(m.y, w) + j3_trace_form(m.x, j3_cofactor(w)) +
                m.s * j3_det(w)};
}

// -------------------------------------------------------------- secant solver

enum class SecantStatus { RationalSplit, IrrationalSplit, Tangent };

struct SecantResult {
    SecantStatus status;
    // Monic quadratic z^2 + quad_b z + quad_c = 0 satisfied by lambda and mu.
    Rat quad_b, quad_c;
    // Populated when status == RationalSplit:
    Rat lambda, mu;
    J3 a, b;
};

namespace detail {
// Exact square root test: returns true and sets root if r = root^2 with r >= 0.
inline bool rat_sqrt(const Rat& r, Rat& root) {
    if (r < 0) return false;
    Int p = numerator(r), q = denominator(r);
    Int sp = sqrt(p), sq = sqrt(q);
    if (sp * sp != p || sq * sq != q) return false;
    root = Rat(sp, sq);
    return true;
}
}  // namespace detail

// Solve m = lambda nu3(a) + mu nu3(b) for m = (s, 0, y, t) with det(y) != 0,
// s != 0: lambda + mu = s, (lambda - mu)^2 / (lambda mu) = s t^2 / det(y),
// a = ((mu - lambda)/lambda) Q(y)/(s t), b = ((lambda - mu)/mu) Q(y)/(s t).
inline SecantResult secant_decompose(const J3& y, const Rat& s, const Rat& t) {
    Rat dy = j3_det(y);
    if (dy == 0 || s == 0)
        throw std::domain_error("secant_decompose: on tangential quartic / at infinity");
    Rat r = s * t * t / dy;
    if (r == -4)
        throw std::domain_error("secant_decompose: degenerate quadratic (4 + s t^2/det(y) = 0)");
    SecantResult res;
    res.quad_b = -s;
    res.quad_c = s * s / (4 + r);
    Rat disc = res.quad_b * res.quad_b - 4 * res.quad_c;
    Rat root;
    if (disc == 0) {
        res.status = SecantStatus::Tangent;
        res.lambda = res.mu = s / 2;
        return res;
    }
    if (!detail::rat_sqrt(disc, root)) {
        res.status = SecantStatus::IrrationalSplit;
        return res;
    }
    res.status = SecantStatus::RationalSplit;
    res.lambda = (s + root) / 2;
    res.mu = (s - root) / 2;
    if (res.lambda == 0 || res.mu == 0 || t == 0)
        throw std::domain_error("secant_decompose: vertex at infinity (lambda mu t = 0)");
    J3 qy = j3_cofactor(y);
    res.a = ((res.mu - res.lambda) / (res.lambda * s * t)) * qy;
    res.b = ((res.lambda - res.mu) / (res.mu * s * t)) * qy;
    return res;
}

// General-position wrapper: translate m so the x slot vanishes, then solve.
// The returned (a, b) decompose the *translated* matrix; shifting both by
// x/s recovers a decomposition of m itself (tested).
inline SecantResult secant_decompose(const Z2& m) {
    if (m.s == 0) throw std::domain_error("secant_decompose: at infinity (s = 0)");
    Z2 shifted = t_w(m, (Rat(-1) / m.s) * m.x);
    SecantResult res = secant_decompose(shifted.y, shifted.s, shifted.t);
    if (res.status == SecantStatus::RationalSplit) {
        J3 back = (Rat(1) / m.s) * m.x;
        res.a = res.a + back;
        res.b = res.b + back;
    }
    return res;
}

// --------------------------------------------------------- SP^2 membership

// J3(S) identified with Lambda^2 W ⊕ W*, W = C^6. omega holds the 15 Pluecker
// coordinates omega_{ij}, i < j, in lexicographic order; h the 6 coordinates
// of a linear form on W.
struct LambdaRep {
    std::array<Rat, 15> omega{};
    std::array<Rat, 6> h{};
    friend bool operator==(const LambdaRep&, const LambdaRep&) = default;
};

namespace detail {
inline int pluecker_index(int i, int j) {
    // lexicographic rank of (i, j), 0 <= i < j < 6
    return i * (11 - i) / 2 + (j - i - 1);
}
// Antisymmetric lookup omega_{ij} for any i != j.
inline Rat omega_at(const LambdaRep& p, int i, int j) {
    if (i == j) return 0;
    if (i < j) return p.omega[pluecker_index(i, j)];
    return -p.omega[pluecker_index(j, i)];
}
}  // namespace detail

// Membership in SP^2: omega ∧ omega = 0 (15 Pluecker quadrics) and
// iota_h omega = 0 (the plane lies in the hyperplane h). The pure-h locus
// (omega = 0) is the singular P^5 and passes.
inline bool sp2_membership(const LambdaRep& p) {
    bool zero = true;
    for (const auto& v : p.omega) zero = zero && v == 0;
    for (const auto& v : p.h) zero = zero && v == 0;
    if (zero) throw std::invalid_argument("sp2_membership: zero input");
    // omega ∧ omega = 0: one quadric per 4-subset {i<j<k<l}.
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k)
                for (int l = k + 1; l < 6; ++l) {
                    using detail::omega_at;
                    Rat v = omega_at(p, i, j) * omega_at(p, k, l) -
                            omega_at(p, i, k) * omega_at(p, j, l) +
                            omega_at(p, i, l) * omega_at(p, j, k);
                    if (v != 0) return false;
                }
    // iota_h omega = 0: (iota_h omega)_i = sum_j h_j omega_{ji}.
    for (int i = 0; i < 6; ++i) {
        Rat v = 0;
        for (int j = 0; j < 6; ++j) v += p.h[j] * detail::omega_at(p, j, i);
        if (v != 0) return false;
    }
    return true;
}

}  // namespace magicchart
