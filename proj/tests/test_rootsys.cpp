#include <catch2/catch_amalgamated.hpp>

#include "magicchart/rootsys.hpp"

using namespace magicchart;

TEST_CASE("positive root counts") {
    struct Row {
        char tag;
        int rank;
        std::size_t count;
    };
    for (const Row& r : {Row{'A', 2, 3}, Row{'B', 3, 9}, Row{'C', 3, 9}, Row{'D', 6, 30},
                         Row{'G', 2, 6}, Row{'F', 4, 24}, Row{'E', 6, 36}, Row{'E', 7, 63},
                         Row{'E', 8, 120}}) {
        RootSystem rs = build_root_system(r.tag, r.rank);
        CHECK(rs.positive_roots.size() == r.count);
    }
}

TEST_CASE("Weyl dimension formula on known modules") {
    RootSystem a2 = build_root_system('A', 2);
    CHECK(a2.weyl_dim({1, 0}) == 3);
    CHECK(a2.weyl_dim({1, 1}) == 8);  // adjoint

    RootSystem g2 = build_root_system('G', 2);
    CHECK(g2.weyl_dim({1, 0}) == 7);
    CHECK(g2.weyl_dim({0, 1}) == 14);  // adjoint

    RootSystem d6 = build_root_system('D', 6);
    CHECK(d6.weyl_dim({1, 0, 0, 0, 0, 0}) == 12);
    CHECK(d6.weyl_dim({0, 1, 0, 0, 0, 0}) == 66);  // adjoint
    CHECK(d6.weyl_dim({0, 0, 0, 0, 1, 0}) == 32);  // half-spin
    CHECK(d6.weyl_dim({0, 0, 0, 0, 0, 1}) == 32);  // half-spin

    RootSystem e7 = build_root_system('E', 7);
    CHECK(e7.weyl_dim({0, 0, 0, 0, 0, 0, 1}) == 56);
    CHECK(e7.weyl_dim({1, 0, 0, 0, 0, 0, 0}) == 133);  // adjoint

    RootSystem e8 = build_root_system('E', 8);
    CHECK(e8.weyl_dim({0, 0, 0, 0, 0, 0, 0, 1}) == 248);  // adjoint
}

TEST_CASE("weyl_dim input validation") {
    RootSystem a2 = build_root_system('A', 2);
    CHECK_THROWS_AS(a2.weyl_dim({1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(a2.weyl_dim({1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system('Z', 2), std::invalid_argument);
}

TEST_CASE("module and Cartan power dimensions") {
    RootSystem a2 = build_root_system('A', 2);
    CHECK(a2.module_dim({{{1, 0}, 2}, {{1, 1}, 1}}) == 14);
    CHECK(a2.cartan_power_dim({{1, 0}, {0, 1}}, {1, 1}) == 8);
    CHECK(a2.cartan_power_dim({{1, 0}}, {3}) == 10);  // S^3 C^3
}

TEST_CASE("Freudenthal multiplicities") {
    RootSystem a2 = build_root_system('A', 2);
    auto adj = a2.freudenthal_mults({1, 1});
    CHECK(adj.at({1, 1}) == 1);
    CHECK(adj.at({0, 0}) == 2);  // rank of A2 at the zero weight

    // minuscule module: every weight has multiplicity one
    RootSystem d6 = build_root_system('D', 6);
    Weight spin = {0, 0, 0, 0, 0, 1};
    CHECK(d6.weight_set(spin).size() == 32);
    for (const auto& [w, m] : d6.full_character({{spin, 1}})) {
        (void)w;
        CHECK(m == 1);
    }

    // total of the character equals the Weyl dimension
    Int total = 0;
    for (const auto& [w, m] : a2.full_character({{{1, 1}, 1}})) {
        (void)w;
        total += m;
    }
    CHECK(total == 8);
}

TEST_CASE("symmetric and exterior powers of small modules") {
    RootSystem a1 = build_root_system('A', 1);
    ModuleSpec v2 = {{{1}, 1}};
    CHECK(power_decompose(a1, v2, 2, PowerKind::Sym) == ModuleSpec{{{2}, 1}});
    CHECK(power_decompose(a1, v2, 2, PowerKind::Alt) == ModuleSpec{{{0}, 1}});
    CHECK(power_decompose(a1, v2, 3, PowerKind::Sym) == ModuleSpec{{{3}, 1}});

    RootSystem a2 = build_root_system('A', 2);
    ModuleSpec v3 = {{{1, 0}, 1}};
    CHECK(power_decompose(a2, v3, 2, PowerKind::Alt) == ModuleSpec{{{0, 1}, 1}});
    // S^2(C^3 ⊕ C^3*) = S^2 V ⊕ (V ⊗ V*) ⊕ S^2 V* = (2,0) + (1,1) + (0,0) + (0,2)
    ModuleSpec sum = {{{1, 0}, 1}, {{0, 1}, 1}};
    ModuleSpec s2 = power_decompose(a2, sum, 2, PowerKind::Sym);
    CHECK(a2.module_dim(s2) == 21);
    bool has_adjoint = false, has_trivial = false;
    for (const auto& [w, m] : s2) {
        if (w == Weight{1, 1}) has_adjoint = m == 1;
        if (w == Weight{0, 0}) has_trivial = m == 1;
    }
    CHECK(has_adjoint);
    CHECK(has_trivial);
}

TEST_CASE("power decomposition bounds") {
    RootSystem a1 = build_root_system('A', 1);
    PowerBounds tight;
    tight.max_degree = 2;
    CHECK_THROWS_AS(power_decompose(a1, {{{1}, 1}}, 3, PowerKind::Sym, tight),
                    std::invalid_argument);
    tight.max_degree = 3;
    tight.max_dim = 4;
    CHECK_THROWS_AS(power_decompose(a1, {{{9}, 1}}, 2, PowerKind::Sym, tight),
                    std::invalid_argument);
    CHECK_THROWS_AS(power_decompose(a1, {{{1}, 1}}, 0, PowerKind::Sym), std::invalid_argument);
}

TEST_CASE("weight string round-trip") {
    Weight w = {3, 0, -2, 5};
    CHECK(weight_from_string(weight_to_string(w)) == w);
}
