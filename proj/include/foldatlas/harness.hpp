#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "foldatlas/bounds.hpp"
#include "foldatlas/curve.hpp"
#include "foldatlas/invariants.hpp"
#include "foldatlas/random_curves.hpp"
#include "foldatlas/witness.hpp"

namespace foldatlas {

// Quadratic all-pairs crossing finder. This is the independent oracle the
// grid-accelerated production path is checked against; it shares only the
// segment-intersection primitive.
inline std::vector<Crossing> brute_force_crossings(const PlanarCurve& curve) {
    const auto geo = detail::make_geometry(curve);
    std::vector<detail::RawCrossing> raw;
    for (std::size_t ca = 0; ca < geo.size(); ++ca) {
        for (std::size_t cb = ca; cb < geo.size(); ++cb) {
            const std::size_t na = geo[ca].size(), nb = geo[cb].size();
            for (std::size_t i = 0; i < na; ++i) {
                for (std::size_t j = (ca == cb ? i + 1 : std::size_t{0}); j < nb; ++j) {
                    if (ca == cb && (i == j || (i + 1) % na == j || (j + 1) % na == i)) continue;
                    const auto hit = segment_intersection(
                        geo[ca].vertex(i), geo[ca].vertex((i + 1) % na), geo[cb].vertex(j),
                        geo[cb].vertex((j + 1) % nb));
                    if (hit)
                        raw.push_back({ca, cb, geo[ca].param_at(i, hit->t),
                                       geo[cb].param_at(j, hit->u), hit->point});
                }
            }
        }
    }
    std::vector<Crossing> out;
    for (const auto& rc : raw) {
        Crossing c;
        c.comp_a = rc.comp_a;
        c.comp_b = rc.comp_b;
        c.location = rc.location;
        if (rc.comp_a == rc.comp_b) {
            const auto& g = geo[rc.comp_a];
            double pa = g.from_basepoint(rc.raw_a), pb = g.from_basepoint(rc.raw_b);
            if (pa > pb) std::swap(pa, pb);
            c.param_a = pa;
            c.param_b = pb;
            const Vec2 t1 = g.tangent_at(std::fmod(pa + g.cum[g.comp->basepoint], g.total));
            const Vec2 t2 = g.tangent_at(std::fmod(pb + g.cum[g.comp->basepoint], g.total));
            c.sign = cross(t1, t2) > 0 ? +1 : -1;
        } else {
            c.param_a = geo[rc.comp_a].from_basepoint(rc.raw_a);
            c.param_b = geo[rc.comp_b].from_basepoint(rc.raw_b);
            const Vec2 t1 = geo[rc.comp_a].tangent_at(rc.raw_a);
            const Vec2 t2 = geo[rc.comp_b].tangent_at(rc.raw_b);
            c.sign = cross(t1, t2) > 0 ? +1 : -1;
        }
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) {
        return std::tie(a.comp_a, a.comp_b, a.param_a, a.param_b) <
               std::tie(b.comp_a, b.comp_b, b.param_a, b.param_b);
    });
    return out;
}

inline bool crossings_equal(const std::vector<Crossing>& a, const std::vector<Crossing>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].comp_a != b[i].comp_a || a[i].comp_b != b[i].comp_b) return false;
        if (a[i].sign != b[i].sign) return false;
        if (dist(a[i].location, b[i].location) > 1e-7) return false;
        if (std::abs(a[i].param_a - b[i].param_a) > 1e-7) return false;
        if (std::abs(a[i].param_b - b[i].param_b) > 1e-7) return false;
    }
    return true;
}

struct FuzzReport {
    std::uint64_t seed = 0;
    int trials = 0;
    int performed = 0;
    int skipped = 0;   // generation retries exhausted
    int whitney_mismatches = 0;
    int oracle_mismatches = 0;
    int lemma_violations = 0;
    double seconds = 0.0;

    bool clean() const {
        return whitney_mismatches == 0 && oracle_mismatches == 0 && lemma_violations == 0;
    }
};

// Random generic closed polylines; for each, the Whitney identity is checked
// with both sides computed by independent code paths, the grid crossing finder
// is compared against the quadratic oracle, and the lowest-point lemma is
// evaluated directly.
inline FuzzReport run_whitney_fuzz(int trials, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    FuzzReport rep;
    rep.seed = seed;
    rep.trials = trials;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial) * 0x9e3779b97f4a7c15ull);
        const int components = 1 + static_cast<int>(rng() % 3);
        const auto curve = random_generic_curve(rng, components);
        if (!curve) {
            rep.skipped++;
            continue;
        }
        rep.performed++;
        try {
            invariants(*curve);   // throws WhitneyViolation on an identity mismatch
        } catch (const WhitneyViolation&) {
            rep.whitney_mismatches++;
        } catch (const std::logic_error&) {
            rep.lemma_violations++;
        }
        if (!crossings_equal(find_crossings(*curve), brute_force_crossings(*curve)))
            rep.oracle_mismatches++;
        for (const auto& comp : curve->components) {
            const ComponentArrangement arr(comp);
            if (!detail::lowest_point_lemma_holds(arr)) rep.lemma_violations++;
        }
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

struct SweepFailure {
    AdmissibleCombo combo;
    std::string what;
};

struct SweepReport {
    int g_max = 0;
    std::vector<AdmissibleCombo> combos;
    std::vector<SweepFailure> failures;
    double seconds = 0.0;

    bool clean() const { return failures.empty(); }
};

// Enumerates every admissible combination with 2 <= g <= g_max, builds the
// sharpness witness for each, and checks all bound identities with equality.
inline SweepReport run_sweep(int g_max) {
    const auto start = std::chrono::steady_clock::now();
    SweepReport rep;
    rep.g_max = g_max;
    for (int g = 2; g <= g_max; ++g) {
        for (int sigma = 1; sigma < g; ++sigma) {
            for (int p = 1; p <= sigma + 1; ++p) {
                for (int q = 1; p + q <= sigma + 1; ++q) {
                    if (!check_admissible(g, sigma, p, q).admissible()) continue;
                    const AdmissibleCombo combo{g, sigma, p, q};
                    rep.combos.push_back(combo);
                    const auto fail = [&](const std::string& what) {
                        rep.failures.push_back({combo, what});
                    };
                    try {
                        const WitnessCertificate cert = build_witness(combo);
                        const WitnessVerdict verdict = verify_certificate(cert);
                        if (!verdict.all()) fail("certificate verification failed");
                        const SplitSummary s = summarize(cert.splitting);
                        if (s.chi_plus != 1 - g || s.chi_minus != 1 - g)
                            fail("chi(S+-) != 1 - g");
                        const BoundReport& b = cert.bound;
                        if (cert.delta_sigma != b.tree_form || b.tree_form != b.max_form ||
                            b.refined_gromov_form != b.tree_form)
                            fail("bound forms disagree");
                        if (b.refined_gromov_form < b.gromov_form ||
                            b.refined_gromov_form - b.gromov_form != 2 * (s.rho + s.n_diff))
                            fail("homological slack is not 2(rho + n)");
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
                        if (counted.total() != sigma) fail("anatomy does not sum to |Sigma|");
                    } catch (const std::exception& e) {
                        fail(e.what());
                    }
                }
            }
        }
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace foldatlas
