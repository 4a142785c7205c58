#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "foldatlas/bounds.hpp"
#include "foldatlas/families.hpp"
#include "foldatlas/splitting.hpp"
#include "foldatlas/words.hpp"

namespace foldatlas {

struct AdmissibleCombo {
    int g = 0;
    int sigma_count = 0;
    int num_plus = 0;
    int num_minus = 0;
};

class InadmissibleCombo : public std::runtime_error {
  public:
    InadmissibleCombo(const AdmissibleCombo& combo, const AdmissibilityVerdict& verdict)
        : std::runtime_error("combination (g=" + std::to_string(combo.g) +
                             ", |Sigma|=" + std::to_string(combo.sigma_count) +
                             ", #S+=" + std::to_string(combo.num_plus) +
                             ", #S-=" + std::to_string(combo.num_minus) + ") is not admissible"),
          verdict(verdict) {}
    AdmissibilityVerdict verdict;
};

enum class CircleAnatomy { SpineInternal, SpineJoin, SkullInternal, ToothAttach, SpineSkullJoin };

inline const char* to_string(CircleAnatomy a) {
    switch (a) {
        case CircleAnatomy::SpineInternal: return "SpineInternal";
        case CircleAnatomy::SpineJoin: return "SpineJoin";
        case CircleAnatomy::SkullInternal: return "SkullInternal";
        case CircleAnatomy::ToothAttach: return "ToothAttach";
        case CircleAnatomy::SpineSkullJoin: return "SpineSkullJoin";
    }
    return "?";
}

// The spine/skull/teeth decomposition with a curve word per fold circle.
// anatomy and assignment run parallel to splitting.sigma_circles.
struct WitnessCertificate {
    AdmissibleCombo combo;
    bool swapped = false;   // teeth live on the plus side; mirrored inputs are recorded
    SplitSurface splitting;
    std::vector<CircleAnatomy> anatomy;
    std::vector<CurveWord> assignment;
    int delta_sigma = 0;
    BoundReport bound;

    WordMultiset words() const { return make_multiset(assignment); }
};

struct AnatomyCounts {
    int spine_internal = 0;
    int spine_join = 0;
    int skull_internal = 0;
    int tooth_attach = 0;
    int spine_skull_join = 0;

    int total() const {
        return spine_internal + spine_join + skull_internal + tooth_attach + spine_skull_join;
    }
};

inline AnatomyCounts expected_anatomy(const AdmissibleCombo& c) {
    const int m = std::min(c.num_plus, c.num_minus);
    const int n = std::abs(c.num_plus - c.num_minus);
    AnatomyCounts a;
    a.spine_internal = m - 1;
    a.spine_join = std::max(m - 2, 0);
    a.skull_internal = c.sigma_count + 2 - (c.num_plus + c.num_minus);
    a.tooth_attach = n;
    a.spine_skull_join = m >= 2 ? 1 : 0;
    return a;
}

// Builds the sharpness witness: a chain of genus-1 vertebra pairs, a
// two-component skull of genus (g - |Sigma| + 1)/2 per side, and n surplus
// genus-1 teeth, with the crossing budget concentrated on one B word per
// assembly. The certificate asserts delta_sigma = tree_form exactly.
inline WitnessCertificate build_witness(const AdmissibleCombo& combo_in) {
    const auto verdict = check_admissible(combo_in.g, combo_in.sigma_count, combo_in.num_plus,
                                          combo_in.num_minus);
    if (!verdict.admissible()) throw InadmissibleCombo(combo_in, verdict);

    WitnessCertificate cert;
    cert.combo = combo_in;
    cert.swapped = combo_in.num_minus > combo_in.num_plus;
    const int p = std::max(combo_in.num_plus, combo_in.num_minus);
    const int q = std::min(combo_in.num_plus, combo_in.num_minus);
    const int g = combo_in.g;
    const int sigma = combo_in.sigma_count;
    const int m = q;
    const int n = p - q;
    const int skull_genus = (g - sigma + 1) / 2;
    const int skull_internal = sigma + 2 - (p + q);

    auto& split = cert.splitting;
    const auto add_circle = [&](const std::string& plus, const std::string& minus,
                                CircleAnatomy anatomy, const CurveWord& word) {
        const TableRow row = predicted_invariants(word);
        split.sigma_circles.push_back(
            {plus, minus, CircleWeight{row.i_plus, row.i_minus, row.n_plus, row.n_minus}});
        cert.anatomy.push_back(anatomy);
        cert.assignment.push_back(word);
    };

    // spine: m-1 vertebrae, each a plus/minus pair of genus-1 components
    for (int i = 1; i < m; ++i) {
        split.plus_components.push_back({"spine_p" + std::to_string(i), 1});
        split.minus_components.push_back({"spine_m" + std::to_string(i), 1});
    }
    split.plus_components.push_back({"skull_p", skull_genus});
    split.minus_components.push_back({"skull_m", skull_genus});
    for (int j = 1; j <= n; ++j) split.plus_components.push_back({"tooth" + std::to_string(j), 1});

    for (int i = 1; i < m; ++i)
        add_circle("spine_p" + std::to_string(i), "spine_m" + std::to_string(i),
                   CircleAnatomy::SpineInternal, word_b(3, true));
    for (int i = 1; i < m - 1; ++i)
        add_circle("spine_p" + std::to_string(i + 1), "spine_m" + std::to_string(i),
                   CircleAnatomy::SpineJoin, word_c(0, true));
    if (m >= 2)
        // the skull attaches to a spine plus component glued to exactly one
        // minus component; the head vertebra qualifies
        add_circle("spine_p1", "skull_m", CircleAnatomy::SpineSkullJoin, word_c(0, true));
    for (int i = 0; i < skull_internal; ++i)
        add_circle("skull_p", "skull_m", CircleAnatomy::SkullInternal,
                   i == 0 ? word_b(g - sigma + 2, true) : word_c(0, true));
    for (int j = 1; j <= n; ++j)
        add_circle("tooth" + std::to_string(j), "skull_m", CircleAnatomy::ToothAttach,
                   word_b(3, true));

    cert.delta_sigma = 4 * (m - 1) + (g - sigma + 3) + 4 * n;
    cert.bound = fold_bound(split);

    if (cert.delta_sigma != crossing_total(cert.words()))
        throw InternalCountMismatch("witness crossing budget disagrees with its word multiset");
    if (cert.delta_sigma != 4 * p + g - sigma - 1)
        throw InternalCountMismatch("witness crossing budget disagrees with 4 max + g - |Sigma| - 1");
    if (cert.delta_sigma != cert.bound.tree_form)
        throw InternalCountMismatch("witness crossing budget does not meet the bound");
    return cert;
}

// Geometric realization of the certificate's singular set: every assigned
// word rendered disjointly, so the collection's Delta equals delta_sigma.
inline PlanarCurve realize_witness(const WitnessCertificate& cert) {
    return realize_all(cert.words());
}

struct WitnessVerdict {
    bool balanced = false;          // chi(S+) = chi(S-) = 1 - g
    bool anatomy_counts = false;    // anatomy tallies match and sum to |Sigma|
    bool combo_matches = false;     // component counts and total genus match the combo
    bool crossing_total_ok = false; // sum of word crossings = tree bound = delta_sigma

    bool all() const { return balanced && anatomy_counts && combo_matches && crossing_total_ok; }
};

// Recomputes every certificate claim from scratch.
inline WitnessVerdict verify_certificate(const WitnessCertificate& cert) {
    WitnessVerdict v;
    const int g = cert.combo.g;
    try {
        check_balance(cert.splitting);
        const SplitSummary s = summarize(cert.splitting);
        v.balanced = s.chi_plus == 1 - g && s.chi_minus == 1 - g;

        AnatomyCounts counted;
        for (const auto a : cert.anatomy) {
            switch (a) {
                case CircleAnatomy::SpineInternal: counted.spine_internal++; break;
                case CircleAnatomy::SpineJoin: counted.spine_join++; break;
                case CircleAnatomy::SkullInternal: counted.skull_internal++; break;
                case CircleAnatomy::ToothAttach: counted.tooth_attach++; break;
                case CircleAnatomy::SpineSkullJoin: counted.spine_skull_join++; break;
            }
        }
        const AnatomyCounts expect = expected_anatomy(cert.combo);
        v.anatomy_counts = counted.spine_internal == expect.spine_internal &&
                           counted.spine_join == expect.spine_join &&
                           counted.skull_internal == expect.skull_internal &&
                           counted.tooth_attach == expect.tooth_attach &&
                           counted.spine_skull_join == expect.spine_skull_join &&
                           counted.total() == cert.combo.sigma_count &&
                           counted.total() == static_cast<int>(cert.splitting.sigma_circles.size());

        // teeth always sit on the plus side, so the built splitting carries
        // the larger count there regardless of the recorded mirror flag
        v.combo_matches = s.num_plus == std::max(cert.combo.num_plus, cert.combo.num_minus) &&
                          s.num_minus == std::min(cert.combo.num_plus, cert.combo.num_minus) &&
                          s.genus_s == g && s.sigma_count == cert.combo.sigma_count;

        v.crossing_total_ok = crossing_total(cert.words()) == cert.bound.tree_form &&
                              cert.delta_sigma == cert.bound.tree_form &&
                              cert.assignment.size() == cert.splitting.sigma_circles.size();
    } catch (const std::exception&) {
        // any structural failure leaves the touched checks false
    }
    return v;
}

}  // namespace foldatlas
