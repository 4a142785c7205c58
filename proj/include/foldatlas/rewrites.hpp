#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "foldatlas/words.hpp"

namespace foldatlas {

class RuleNotApplicable : public std::runtime_error {
  public:
    explicit RuleNotApplicable(const std::string& what) : std::runtime_error(what) {}
};

class InvalidComposition : public std::runtime_error {
  public:
    explicit InvalidComposition(const std::string& what) : std::runtime_error(what) {}
};

enum class RewriteKind { PositiveIsotopy, PositiveConcordance };

enum class RewriteRule {
    R1,   // A-_k => C-_{k-2}            (isotopy, k >= 2)
    R2,   // C+_{k-2} => A+_k            (isotopy, mirror of R1)
    R3,   // A+_k => B+_{k+1,1}          (isotopy)
    R4,   // C+_0 => B+_{3,1}            (isotopy, R2 then R3 with k = 2)
    R5,   // B+_k,1 => B+_{i0,1} u C+_{i1} u ... u C+_{is}   (concordance)
};

inline const char* to_string(RewriteRule r) {
    switch (r) {
        case RewriteRule::R1: return "R1";
        case RewriteRule::R2: return "R2";
        case RewriteRule::R3: return "R3";
        case RewriteRule::R4: return "R4";
        case RewriteRule::R5: return "R5";
    }
    return "?";
}

// A certified symbolic rewrite. Positive isotopies are bijective on
// components; positive concordances may change the component count.
struct RewriteStep {
    RewriteKind kind = RewriteKind::PositiveIsotopy;
    WordMultiset before;
    WordMultiset after;
    RewriteRule rule = RewriteRule::R1;
};

namespace detail {

inline WordMultiset erase_one(const WordMultiset& ms, const CurveWord& w) {
    WordMultiset out = ms;
    const auto it = std::find(out.words.begin(), out.words.end(), w);
    if (it == out.words.end())
        throw RuleNotApplicable("multiset does not contain " + to_string(w));
    out.words.erase(it);
    return out;
}

}  // namespace detail

// Applies one certified rule to the given occurrence. `target` names the word
// being rewritten; `parts` is used by R5 only and must be a composition of
// target.k into positive parts (i0 first).
inline RewriteStep apply_rewrite(const WordMultiset& input, RewriteRule rule, const CurveWord& target,
                                 const std::vector<int>& parts = {}) {
    RewriteStep step;
    step.before = input;
    step.rule = rule;
    WordMultiset rest = detail::erase_one(input, target);
    switch (rule) {
        case RewriteRule::R1: {
            if (target.family != Family::A || target.positive || target.k < 2)
                throw RuleNotApplicable("R1 rewrites A-_k with k >= 2");
            step.kind = RewriteKind::PositiveIsotopy;
            rest.add(word_c(target.k - 2, false));
            break;
        }
        case RewriteRule::R2: {
            if (target.family != Family::C || !target.positive)
                throw RuleNotApplicable("R2 rewrites C+_k");
            step.kind = RewriteKind::PositiveIsotopy;
            rest.add(word_a(target.k + 2, true));
            break;
        }
        case RewriteRule::R3: {
            if (target.family != Family::A || !target.positive)
                throw RuleNotApplicable("R3 rewrites A+_k");
            step.kind = RewriteKind::PositiveIsotopy;
            rest.add(word_b(target.k + 1, true));
            break;
        }
        case RewriteRule::R4: {
            if (target.family != Family::C || !target.positive || target.k != 0)
                throw RuleNotApplicable("R4 rewrites C+_0");
            step.kind = RewriteKind::PositiveIsotopy;
            rest.add(word_b(3, true));
            break;
        }
        case RewriteRule::R5: {
            if (target.family != Family::B || !target.positive)
                throw RuleNotApplicable("R5 rewrites B+_k,1");
            if (parts.empty()) throw InvalidComposition("R5 needs a composition of k");
            for (int p : parts)
                if (p < 1) throw InvalidComposition("composition parts must be positive");
            if (std::accumulate(parts.begin(), parts.end(), 0) != target.k)
                throw InvalidComposition("composition parts must sum to k = " + std::to_string(target.k));
            step.kind = RewriteKind::PositiveConcordance;
            rest.add(word_b(parts[0], true));
            for (std::size_t i = 1; i < parts.size(); ++i) rest.add(word_c(parts[i], true));
            break;
        }
    }
    step.after = rest;
    if (step.kind == RewriteKind::PositiveIsotopy &&
        step.after.words.size() != step.before.words.size())
        throw std::logic_error("isotopy changed the component count");
    return step;
}

}  // namespace foldatlas
