#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "foldatlas/rewrites.hpp"
#include "foldatlas/words.hpp"

using namespace foldatlas;

TEST_CASE("R1 removes one negative and one positive crossing from A-") {
    const auto step = apply_rewrite(make_multiset({word_a(5, false)}), RewriteRule::R1, word_a(5, false));
    CHECK(step.kind == RewriteKind::PositiveIsotopy);
    CHECK(step.after == make_multiset({word_c(3, false)}));
    CHECK_THROWS_AS(apply_rewrite(make_multiset({word_a(1, false)}), RewriteRule::R1, word_a(1, false)),
                    RuleNotApplicable);
}

TEST_CASE("R2 mirrors R1") {
    const auto step = apply_rewrite(make_multiset({word_c(0, true)}), RewriteRule::R2, word_c(0, true));
    CHECK(step.after == make_multiset({word_a(2, true)}));
}

TEST_CASE("R3 turns A+ into the next B+") {
    const auto step = apply_rewrite(make_multiset({word_a(2, true)}), RewriteRule::R3, word_a(2, true));
    CHECK(step.after == make_multiset({word_b(3, true)}));
}

TEST_CASE("R4 composes R2 and R3 on an embedded hole") {
    const auto direct = apply_rewrite(make_multiset({word_c(0, true)}), RewriteRule::R4, word_c(0, true));
    CHECK(direct.after == make_multiset({word_b(3, true)}));

    auto two_step = apply_rewrite(make_multiset({word_c(0, true)}), RewriteRule::R2, word_c(0, true));
    two_step = apply_rewrite(two_step.after, RewriteRule::R3, word_a(2, true));
    CHECK(two_step.after == direct.after);
    CHECK_THROWS_AS(apply_rewrite(make_multiset({word_c(1, true)}), RewriteRule::R4, word_c(1, true)),
                    RuleNotApplicable);
}

TEST_CASE("R5 splits a B word along a composition") {
    SECTION("the worked decomposition of B+10,1") {
        const auto step = apply_rewrite(make_multiset({word_b(10, true)}), RewriteRule::R5,
                                        word_b(10, true), {4, 1, 3, 2});
        CHECK(step.kind == RewriteKind::PositiveConcordance);
        CHECK(step.after ==
              make_multiset({word_b(4, true), word_c(1, true), word_c(3, true), word_c(2, true)}));
        CHECK(crossing_total(step.after) == 11);
    }
    SECTION("the trivial composition is the identity") {
        const auto step = apply_rewrite(make_multiset({word_b(6, true)}), RewriteRule::R5,
                                        word_b(6, true), {6});
        CHECK(step.after == make_multiset({word_b(6, true)}));
    }
    SECTION("bad compositions are rejected") {
        CHECK_THROWS_AS(apply_rewrite(make_multiset({word_b(5, true)}), RewriteRule::R5,
                                      word_b(5, true), {4, 0, 1}),
                        InvalidComposition);
        CHECK_THROWS_AS(apply_rewrite(make_multiset({word_b(5, true)}), RewriteRule::R5,
                                      word_b(5, true), {4, 2}),
                        InvalidComposition);
        CHECK_THROWS_AS(apply_rewrite(make_multiset({word_b(5, true)}), RewriteRule::R5,
                                      word_b(5, true), {}),
                        InvalidComposition);
    }
    SECTION("the target must be present") {
        CHECK_THROWS_AS(apply_rewrite(make_multiset({word_c(2, true)}), RewriteRule::R5,
                                      word_b(5, true), {5}),
                        RuleNotApplicable);
    }
}

TEST_CASE("isotopy rules preserve the table winding of the rewritten word") {
    const auto winding_of = [](const WordMultiset& ms) { return winding_total(ms); };
    for (int k = 2; k <= 12; ++k) {
        const auto s1 = apply_rewrite(make_multiset({word_a(k, false)}), RewriteRule::R1, word_a(k, false));
        CHECK(winding_of(s1.before) == winding_of(s1.after));
    }
    for (int k = 0; k <= 10; ++k) {
        const auto s2 = apply_rewrite(make_multiset({word_c(k, true)}), RewriteRule::R2, word_c(k, true));
        CHECK(winding_of(s2.before) == winding_of(s2.after));
    }
    for (int k = 1; k <= 10; ++k) {
        const auto s3 = apply_rewrite(make_multiset({word_a(k, true)}), RewriteRule::R3, word_a(k, true));
        CHECK(winding_of(s3.before) == winding_of(s3.after));
    }
    const auto s4 = apply_rewrite(make_multiset({word_c(0, true)}), RewriteRule::R4, word_c(0, true));
    CHECK(winding_of(s4.before) == winding_of(s4.after));
}

TEST_CASE("concordance bookkeeping: winding drop equals new component count") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 20);
        std::vector<int> parts;
        int left = k;
        while (left > 0) {
            const int part = 1 + static_cast<int>(rng() % left);
            parts.push_back(part);
            left -= part;
        }
        const auto step =
            apply_rewrite(make_multiset({word_b(k, true)}), RewriteRule::R5, word_b(k, true), parts);
        const int s = static_cast<int>(parts.size()) - 1;
        CHECK(winding_total(step.before) - winding_total(step.after) ==
              static_cast<int>(step.after.words.size()) - static_cast<int>(step.before.words.size()));
        CHECK(winding_total(step.after) == 2 - k - s);
        // this concordance also preserves the crossing total
        CHECK(crossing_total(step.after) == crossing_total(step.before));
    }
}
