#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "foldatlas/curve.hpp"
#include "foldatlas/invariants.hpp"

namespace foldatlas {

// Random generic closed polylines: star polygons (connect every s-th of N
// spokes) with a random harmonic perturbation of the radii. High crossing
// diversity; genericity failures are regenerated by the caller.
struct StarPolygonParams {
    int min_vertices = 8;
    int max_vertices = 40;
    double harmonic_amplitude = 0.35;
    int harmonics = 4;
};

inline CurveComponent random_star_polygon(std::mt19937_64& rng, const StarPolygonParams& p = {}) {
    std::uniform_int_distribution<int> nv(p.min_vertices, p.max_vertices);
    const int n = nv(rng);
    std::uniform_int_distribution<int> sd(1, std::max(1, n / 3));
    int step = sd(rng);
    while (std::gcd(step, n) != 1) ++step;

    std::uniform_real_distribution<double> amp(0.0, p.harmonic_amplitude);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    std::vector<double> a(p.harmonics), ph(p.harmonics);
    for (int h = 0; h < p.harmonics; ++h) {
        a[h] = amp(rng);
        ph[h] = phase(rng);
    }
    std::uniform_real_distribution<double> jitter(-0.03, 0.03);

    CurveComponent comp;
    comp.vertices.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double spoke = 2.0 * M_PI * ((static_cast<long long>(i) * step) % n) / n;
        double r = 1.0;
        for (int h = 0; h < p.harmonics; ++h) r += a[h] * std::sin((h + 1) * spoke + ph[h]);
        r += jitter(rng);
        r = std::max(r, 0.15);
        comp.vertices.push_back({r * std::cos(spoke), r * std::sin(spoke)});
    }
    return comp;
}

// Generates a generic curve with valid basepoints, retrying on genericity or
// basepoint failures. Returns nullopt when the retry budget runs out.
inline std::optional<PlanarCurve> random_generic_curve(std::mt19937_64& rng, int components,
                                                       int max_retries = 50,
                                                       const StarPolygonParams& p = {}) {
    std::uniform_real_distribution<double> shift(-0.9, 0.9);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        PlanarCurve curve;
        for (int c = 0; c < components; ++c) {
            CurveComponent comp = random_star_polygon(rng, p);
            const Vec2 offset{shift(rng), shift(rng)};
            for (Vec2& v : comp.vertices) v = v + offset;
            curve.components.push_back(std::move(comp));
        }
        try {
            validate_genericity(curve);
            for (auto& comp : curve.components) comp.basepoint = choose_basepoint(comp);
            invariants(curve);   // also rejects basepoints invalidated by other components
        } catch (const NonGenericCurve&) {
            continue;
        } catch (const NoValidBasepoint&) {
            continue;
        } catch (const InvalidBasepoint&) {
            continue;
        }
        return curve;
    }
    return std::nullopt;
}

}  // namespace foldatlas
