#include <catch2/catch_amalgamated.hpp>

#include "foldatlas/bounds.hpp"
#include "foldatlas/witness.hpp"

using namespace foldatlas;

namespace {

SplitSummary summary_for(int g, int sigma, int p, int q) {
    SplitSummary s;
    s.num_plus = p;
    s.num_minus = q;
    s.sigma_count = sigma;
    s.n_diff = std::abs(p - q);
    s.rho = p + q - 1;
    s.chi_s = 2 - 2 * g;
    s.chi_plus = s.chi_s / 2;
    s.chi_minus = s.chi_s / 2;
    s.genus_s = g;
    return s;
}

}  // namespace

TEST_CASE("boundary bound equals 2g+2 and ignores the boundary count") {
    CHECK(boundary_bound(1, 1) == 4);
    CHECK(boundary_bound(3, 5) == 8);
    for (int g = 1; g <= 8; ++g)
        for (int k = 1; k <= 10; ++k) CHECK(boundary_bound(g, k) == 2 * g + 2);
    CHECK_THROWS_AS(boundary_bound(0, 1), NotApplicable);
}

TEST_CASE("fold bound on the worked example") {
    const auto r = fold_bound(summary_for(14, 9, 5, 3));
    CHECK(r.tree_form == 24);
    CHECK(r.max_form == 24);
    CHECK(r.refined_gromov_form == 24);
    CHECK(r.gromov_form == 6);
}

TEST_CASE("fold bound on the minimal case") {
    const auto r = fold_bound(summary_for(2, 1, 1, 1));
    CHECK(r.tree_form == 4);
    CHECK(r.gromov_form == 2);
}

TEST_CASE("corollary case: g = rho + 1 with balanced sides gives 2g") {
    // g = rho(G) + 1, n = 0, |Sigma| = g - 1
    for (int half = 1; half <= 5; ++half) {
        const int p = half, q = half;
        const int g = p + q;   // rho = p + q - 1 = g - 1
        const int sigma = g - 1;
        const auto r = fold_bound(summary_for(g, sigma, p, q));
        CHECK(r.tree_form == 2 * g);
    }
}

TEST_CASE("gromov comparison") {
    SECTION("worked example") {
        const auto g = gromov_compare(summary_for(14, 9, 5, 3));
        CHECK(g.gromov == 6);
        CHECK(g.refined == 24);
        CHECK(g.slack == 18);
    }
    SECTION("minimal case") {
        const auto g = gromov_compare(summary_for(2, 1, 1, 1));
        CHECK(g.gromov == 2);
        CHECK(g.refined == 4);
        CHECK(g.slack == 2);
    }
}

TEST_CASE("bound identities over the admissible sweep") {
    for (int g = 2; g <= 12; ++g) {
        for (int sigma = 1; sigma < g; ++sigma) {
            for (int p = 1; p <= sigma + 1; ++p) {
                for (int q = 1; p + q <= sigma + 1; ++q) {
                    if (!check_admissible(g, sigma, p, q).admissible()) continue;
                    const auto s = summary_for(g, sigma, p, q);
                    const auto r = fold_bound(s);
                    CHECK(r.max_form == r.tree_form);
                    CHECK(r.refined_gromov_form == r.tree_form);
                    CHECK(r.refined_gromov_form - r.gromov_form == 2 * (s.rho + s.n_diff));
                    CHECK(r.refined_gromov_form >= r.gromov_form + 2);
                    if (g == s.rho + 1 && p == q) {
                        CHECK(r.tree_form >= 2 * g);
                        if (sigma == g - 1) CHECK(r.tree_form == 2 * g);
                    }
                }
            }
        }
    }
}

TEST_CASE("per-side form cross-validates the closed forms on witnesses") {
    for (const auto combo : {AdmissibleCombo{2, 1, 1, 1}, AdmissibleCombo{14, 9, 5, 3},
                             AdmissibleCombo{10, 7, 4, 2}, AdmissibleCombo{12, 5, 2, 2}}) {
        const auto cert = build_witness(combo);
        const auto r = fold_bound(cert.splitting);
        REQUIRE(r.per_side_form);
        CHECK(*r.per_side_form == r.tree_form);
    }
}

TEST_CASE("fold bound propagates imbalance") {
    SplitSurface s;
    s.plus_components = {{"p", 1}};
    s.minus_components = {{"m", 2}};
    s.sigma_circles = {{"p", "m", {}}};
    CHECK_THROWS_AS(fold_bound(s), UnbalancedSplitting);
}
