#include <catch2/catch_amalgamated.hpp>

#include "magicchart/chart.hpp"
#include "magicchart/intermediate.hpp"

using namespace magicchart;

TEST_CASE("expanded chart names and dimensions") {
    MagicChart ch = magic_chart();
    CHECK(ch.names[4][6] == "E_8");
    CHECK(ch.dims[4][6] == 248);
    CHECK(ch.names[3][5] == "D_6.H_{32}.H_{44}");
    CHECK(ch.dims[3][5] == 144);
    CHECK(ch.names[4][0] == "G_2");
    CHECK(ch.dims[4][0] == 14);
    CHECK(ch.names[2][4] == "D_6");
    CHECK(ch.dims[2][4] == 66);
    CHECK(ch.names[3][6] == "E_7.H_{56}");
    CHECK(ch.dims[3][6] == 190);
    // Barton-Sudbery triality table
    CHECK(ch.bs_names[4][2] == "D_4");
    CHECK(ch.bs_dims[4] == std::array<Int, 3>{14, 21, 28});
    CHECK(ch.bs_dims[3] == std::array<Int, 3>{8, 13, 18});
}

TEST_CASE("intermediate algebra Cartan powers") {
    GradedAlgDescriptor e = e7half_descriptor();
    CHECK(intermediate_gk_dim(e, 0) == 1);
    CHECK(intermediate_gk_dim(e, 1) == 190);
    CHECK(intermediate_gk_dim(e, 1) == exc_gk(Rat(6), 1));
    CHECK(intermediate_gk_dim(e, 2) == exc_gk(Rat(6), 2));

    GradedAlgDescriptor d = d6h32_descriptor();
    CHECK(intermediate_gk_dim(d, 1) == 99);
    CHECK(intermediate_gk_dim(d, 1) == subexc_gk(Rat(6), 1));
    CHECK(intermediate_gk_dim(d, 2) == subexc_gk(Rat(6), 2));

    // proportional highest weights are rejected
    GradedAlgDescriptor bad = d;
    bad.lambda_v = bad.lambda_h;
    CHECK_THROWS_AS(intermediate_gk_dim(bad, 1), std::invalid_argument);
}

TEST_CASE("odd symplectic Cartan powers") {
    CHECK(odd_symplectic_gk(1, 0) == 1);
    CHECK(odd_symplectic_gk(1, 1) == 6);   // C(4,2)
    CHECK(odd_symplectic_gk(2, 1) == 15);  // C(6,2)
    CHECK(odd_symplectic_gk(3, 2) == 210); // C(10,4)
    CHECK_THROWS_AS(odd_symplectic_gk(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(odd_symplectic_gk(1, -1), std::invalid_argument);
}

TEST_CASE("Vogel square identities hold on every subexceptional row") {
    for (const SubexcRow& row : subexc_rows()) {
        VerifyReport rep = vogel_square_check(row);
        INFO(rep.suite);
        for (const auto& c : rep.checks) {
            INFO(c.check_id << ": " << c.lhs << " vs " << c.rhs);
            CHECK(c.pass);
        }
        CHECK(rep.all_pass());
    }
}

TEST_CASE("row plethysms match the exact power decompositions") {
    for (int row : {1, 2}) {
        VerifyReport rep = row_plethysm_check(row, 2);
        for (const auto& c : rep.checks) {
            INFO(rep.suite << " / " << c.check_id << ": " << c.lhs << " vs " << c.rhs);
            CHECK(c.pass);
        }
        CHECK(rep.all_pass());
    }
}

TEST_CASE("chart rendering") {
    MagicChart ch = magic_chart();
    std::string md = chart_markdown(ch);
    CHECK(md.find("E_8") != std::string::npos);
    CHECK(md.find("248") != std::string::npos);
    std::string csv = chart_csv(ch);
    CHECK(csv.find("E_7.H_{56} (190)") != std::string::npos);
    std::string js = chart_json(ch);
    CHECK(js.find("\"barton_sudbery\"") != std::string::npos);
    CHECK(render_chart(ch, "md") == md);
    CHECK_THROWS_AS(render_chart(ch, "yaml"), std::invalid_argument);
}
