#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "foldatlas/splitting.hpp"

namespace foldatlas {

class NotApplicable : public std::runtime_error {
  public:
    explicit NotApplicable(const std::string& what) : std::runtime_error(what) {}
};

class InternalCountMismatch : public std::logic_error {
  public:
    explicit InternalCountMismatch(const std::string& what) : std::logic_error(what) {}
};

// Minimal self-intersection count of the immersed boundary of a genus-g
// surface with k boundary components: 4 - k - chi(S) = 2g + 2.
inline int boundary_bound(int genus, int boundary_count) {
    if (genus < 1)
        throw NotApplicable("the boundary estimate does not apply to planar surfaces");
    if (boundary_count < 1) throw NotApplicable("need at least one boundary component");
    const int chi = 2 - 2 * genus - boundary_count;
    return 4 - boundary_count - chi;
}

// Every closed form of the fold-singularity lower bound, evaluated together
// so their mutual identities can be asserted.
struct BoundReport {
    int max_form = 0;                      // 4 max{#S+,#S-} - (chi/2 + |Sigma|)
    int tree_form = 0;                     // 2(rho + 1 + n) - (chi/2 + |Sigma|)
    std::optional<int> per_side_form;      // max over sides of sum(2g_i + 2)
    int gromov_form = 0;                   // |H(S)|/2 - |Sigma|
    int refined_gromov_form = 0;           // 2(rho + n) + |H(S)|/2 - |Sigma|
};

inline BoundReport fold_bound(const SplitSummary& s) {
    if (s.chi_s % 2 != 0) throw InternalCountMismatch("chi(S) must be even");
    const int half_chi = s.chi_s / 2;
    const int maxc = std::max(s.num_plus, s.num_minus);
    BoundReport r;
    r.max_form = 4 * maxc - (half_chi + s.sigma_count);
    r.tree_form = 2 * (s.rho + 1 + s.n_diff) - (half_chi + s.sigma_count);
    const int betti_sum = 2 * s.genus_s + 2;
    r.gromov_form = betti_sum / 2 - s.sigma_count;
    r.refined_gromov_form = 2 * (s.rho + s.n_diff) + betti_sum / 2 - s.sigma_count;
    if (r.max_form != r.tree_form)
        throw InternalCountMismatch("max and spanning-tree bound forms disagree");
    if (r.refined_gromov_form != r.tree_form)
        throw InternalCountMismatch("refined homological form disagrees with the tree form");
    return r;
}

// With the full splitting available, the bound is also evaluated along the
// proof route: apply the boundary estimate per component and sum each side.
inline BoundReport fold_bound(const SplitSurface& surface) {
    const SplitSummary s = summarize(surface);
    if (s.chi_plus != s.chi_minus) throw UnbalancedSplitting(s.chi_plus, s.chi_minus);
    BoundReport r = fold_bound(s);
    int side_plus = 0, side_minus = 0;
    for (const auto& c : surface.plus_components) side_plus += boundary_bound(c.genus, 1);
    for (const auto& c : surface.minus_components) side_minus += boundary_bound(c.genus, 1);
    r.per_side_form = std::max(side_plus, side_minus);
    return r;
}

struct GromovComparison {
    int gromov = 0;
    int refined = 0;
    int slack = 0;   // refined - gromov = 2(rho + n)
};

inline GromovComparison gromov_compare(const SplitSummary& s) {
    const BoundReport r = fold_bound(s);
    return {r.gromov_form, r.refined_gromov_form, r.refined_gromov_form - r.gromov_form};
}

}  // namespace foldatlas
