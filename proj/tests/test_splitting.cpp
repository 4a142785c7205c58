#include <catch2/catch_amalgamated.hpp>

#include "foldatlas/splitting.hpp"
#include "foldatlas/witness.hpp"

using namespace foldatlas;

namespace {

// The four-component surface with five fold circles drawn in the splitting
// figure: one vertebra-style chain with a triple edge in the middle.
SplitSurface figure_five_surface() {
    SplitSurface s;
    s.plus_components = {{"p1", 1}, {"p2", 1}};
    s.minus_components = {{"m1", 1}, {"m2", 2}};
    s.sigma_circles = {{"p1", "m1", {}},
                       {"p2", "m1", {}},
                       {"p2", "m1", {}},
                       {"p2", "m1", {}},
                       {"p2", "m2", {}}};
    return s;
}

SplitSurface minimal_surface() {
    SplitSurface s;
    s.plus_components = {{"p", 1}};
    s.minus_components = {{"m", 1}};
    s.sigma_circles = {{"p", "m", {}}};
    return s;
}

}  // namespace

TEST_CASE("summary of the figure surface") {
    const SplitSummary sum = summarize(figure_five_surface());
    CHECK(sum.num_plus == 2);
    CHECK(sum.num_minus == 2);
    CHECK(sum.sigma_count == 5);
    CHECK(sum.rho == 3);
    CHECK(sum.n_diff == 0);
    // slot counts: p1 has 1, m1 has 4, p2 has 4, m2 has 1
    CHECK(sum.chi_plus == (2 - 2 - 1) + (2 - 2 - 4));
    CHECK(sum.chi_minus == (2 - 2 - 4) + (2 - 4 - 1));
}

TEST_CASE("summary of the minimal admissible surface") {
    const SplitSummary sum = summarize(minimal_surface());
    CHECK(sum.chi_plus == -1);
    CHECK(sum.chi_minus == -1);
    CHECK(sum.chi_s == -2);
    CHECK(sum.genus_s == 2);
    CHECK(sum.rho == 1);
    CHECK_NOTHROW(check_balance(minimal_surface()));
}

TEST_CASE("summary of the worked-example witness splitting") {
    const auto cert = build_witness({14, 9, 5, 3});
    const SplitSummary sum = summarize(cert.splitting);
    CHECK(sum.num_plus == 5);
    CHECK(sum.num_minus == 3);
    CHECK(sum.sigma_count == 9);
    CHECK(sum.genus_s == 14);
    CHECK(sum.rho == 7);
    CHECK(sum.chi_plus == -13);
    CHECK(sum.chi_minus == -13);
    CHECK_NOTHROW(check_balance(cert.splitting));
}

TEST_CASE("malformed splittings are rejected") {
    SECTION("dangling circle reference") {
        SplitSurface s = minimal_surface();
        s.sigma_circles.push_back({"p", "nowhere", {}});
        CHECK_THROWS_AS(summarize(s), MalformedSplitting);
    }
    SECTION("planar component") {
        SplitSurface s = minimal_surface();
        s.plus_components[0].genus = 0;
        CHECK_THROWS_AS(summarize(s), MalformedSplitting);
    }
    SECTION("disconnected graph") {
        SplitSurface s = minimal_surface();
        s.plus_components.push_back({"p2", 1});
        s.minus_components.push_back({"m2", 1});
        s.sigma_circles.push_back({"p2", "m2", {}});
        CHECK_THROWS_AS(summarize(s), MalformedSplitting);
    }
    SECTION("isolated component") {
        SplitSurface s = minimal_surface();
        s.plus_components.push_back({"p2", 1});
        CHECK_THROWS_AS(summarize(s), MalformedSplitting);
    }
    SECTION("empty fold set") {
        SplitSurface s = minimal_surface();
        s.sigma_circles.clear();
        CHECK_THROWS_AS(summarize(s), MalformedSplitting);
    }
}

TEST_CASE("balance check") {
    SECTION("unequal genus across one circle is unbalanced") {
        SplitSurface s = minimal_surface();
        s.minus_components[0].genus = 2;
        try {
            check_balance(s);
            FAIL("expected UnbalancedSplitting");
        } catch (const UnbalancedSplitting& e) {
            CHECK(e.chi_plus == -1);
            CHECK(e.chi_minus == -3);
        }
    }
}

TEST_CASE("admissibility flags") {
    SECTION("the worked example is admissible") {
        const auto v = check_admissible(14, 9, 5, 3);
        CHECK(v.genus_at_least_two);
        CHECK(v.sigma_below_genus);
        CHECK(v.sigma_spans_components);
        CHECK(v.parity);
        CHECK(v.admissible());
    }
    SECTION("the minimal combination is admissible") {
        CHECK(check_admissible(2, 1, 1, 1).admissible());
    }
    SECTION("parity alone can fail") {
        const auto v = check_admissible(3, 1, 1, 1);
        CHECK(v.genus_at_least_two);
        CHECK(v.sigma_below_genus);
        CHECK(v.sigma_spans_components);
        CHECK_FALSE(v.parity);
        CHECK_FALSE(v.admissible());
    }
    SECTION("flipping any single input flips exactly its condition") {
        const auto base = check_admissible(14, 9, 5, 3);
        REQUIRE(base.admissible());
        const auto low_g = check_admissible(1, 9, 5, 3);   // breaks (i) and (ii), parity flips too
        CHECK_FALSE(low_g.genus_at_least_two);
        const auto big_sigma = check_admissible(14, 15, 5, 3);
        CHECK_FALSE(big_sigma.sigma_below_genus);
        CHECK(big_sigma.genus_at_least_two);
        const auto many_comps = check_admissible(14, 9, 8, 3);
        CHECK_FALSE(many_comps.sigma_spans_components);
        CHECK(many_comps.genus_at_least_two);
        CHECK(many_comps.sigma_below_genus);
        CHECK(many_comps.parity);
    }
}

TEST_CASE("bipartite multigraph of the figure surface") {
    const SplitGraph g = to_graph(figure_five_surface());
    CHECK(g.vertices.size() == 4);
    CHECK(g.rho == 3);
    REQUIRE(g.edges.size() == 3);
    int triple_edges = 0;
    for (const auto& e : g.edges)
        if (e.multiplicity == 3) ++triple_edges;
    CHECK(triple_edges == 1);
}

TEST_CASE("single circle gives a path graph on two vertices") {
    const SplitGraph g = to_graph(minimal_surface());
    CHECK(g.vertices.size() == 2);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].multiplicity == 1);
    CHECK(g.rho == 1);
}

TEST_CASE("worked-example witness graph has eight vertices and rho seven") {
    const auto cert = build_witness({14, 9, 5, 3});
    const SplitGraph g = to_graph(cert.splitting);
    CHECK(g.vertices.size() == 8);
    CHECK(g.rho == 7);
    // circles carry the weight quadruple of their assigned words
    int weighted = 0;
    for (const auto& e : g.edges) weighted += static_cast<int>(e.weights.size());
    CHECK(weighted == 9);
}

TEST_CASE("dot export carries chi weights and multiplicities") {
    const std::string dot = to_dot(to_graph(figure_five_surface()));
    CHECK(dot.find("graph splitting") != std::string::npos);
    CHECK(dot.find("multiplicity=3") != std::string::npos);
    CHECK(dot.find("chi=") != std::string::npos);
}

TEST_CASE("balance identity chain holds for witness splittings") {
    for (const auto combo : {AdmissibleCombo{2, 1, 1, 1}, AdmissibleCombo{8, 5, 3, 2},
                             AdmissibleCombo{14, 9, 5, 3}, AdmissibleCombo{11, 6, 4, 3}}) {
        const auto cert = build_witness(combo);
        const auto sum = summarize(cert.splitting);
        int genus_plus = 0, genus_minus = 0;
        for (const auto& c : cert.splitting.plus_components) genus_plus += c.genus;
        for (const auto& c : cert.splitting.minus_components) genus_minus += c.genus;
        // 2#S+ - |Sigma| - 2 sum g+ = 2#S- - |Sigma| - 2 sum g-  <=>  (iii)
        CHECK(2 * sum.num_plus - sum.sigma_count - 2 * genus_plus ==
              2 * sum.num_minus - sum.sigma_count - 2 * genus_minus);
        CHECK(sum.num_plus - sum.num_minus == genus_plus - genus_minus);
        CHECK_NOTHROW(check_balance(cert.splitting));
        CHECK(check_admissible(combo.g, combo.sigma_count, combo.num_plus, combo.num_minus)
                  .admissible());
    }
}
