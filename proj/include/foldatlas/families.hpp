#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "foldatlas/curve.hpp"
#include "foldatlas/invariants.hpp"
#include "foldatlas/words.hpp"

namespace foldatlas {
namespace detail {

// A curl is a small loop attached to a host arc through a pair of crossing
// strands. Its plane rotation sense is forced by the side the loop hangs on:
// hanging left of the traversal gives a counterclockwise curl (one negative
// self-crossing seen from a basepoint outside the loop), hanging right gives
// a clockwise one (one positive crossing).
//
// Emits the detour polyline E, T, arc samples, T' in the local frame
// (east, north) centred at P; the exit foot F is supplied by the caller.
inline void balloon(std::vector<Vec2>& out, Vec2 E, Vec2 P, Vec2 east, Vec2 north, double rho,
                    double height, int arc_steps) {
    const auto local = [&](double x, double y) {
        return Vec2{P.x + x * east.x + y * north.x, P.y + x * east.y + y * north.y};
    };
    out.push_back(E);
    out.push_back(local(rho, height));
    for (int s = 1; s < arc_steps; ++s) {
        const double th = M_PI * s / arc_steps;
        out.push_back(local(rho * std::cos(th), height + rho * std::sin(th)));
    }
    out.push_back(local(-rho, height));
}

struct CurlSizes {
    double beta;   // half of the angular attach window on the host circle
    double a;      // half-width of the window chord
    double rho;    // loop radius
    double height; // distance from the host circle to the loop centre
};

// Shrinks the attach window until neighbouring inward loops cannot collide.
inline CurlSizes curl_sizes(double R, double spacing) {
    double beta = std::min(0.3 * spacing, 0.22);
    while (beta > 1e-4) {
        const double a = R * std::sin(beta);
        const double rho = 0.8 * a, height = 2.2 * a;
        const double rc = R - height;
        if (rc > 0.05 * R && 2.0 * rc * std::sin(spacing / 2) >= 2.6 * rho) break;
        beta *= 0.85;
    }
    const double a = R * std::sin(beta);
    return {beta, a, 0.8 * a, 2.2 * a};
}

// Counterclockwise circle of radius R with n curls, sites spread over an 80%
// band centred at the top so the bottom vertex stays clear of all features.
// Inward curls are counterclockwise, outward ones clockwise.
inline std::vector<Vec2> circle_with_curls(int n_curls, bool outward, double R = 1.0) {
    const double band = 0.8 * 2.0 * M_PI;
    const double top = M_PI / 2;
    const double bottom = -M_PI / 2;
    const double spacing = band / std::max(n_curls, 1);
    const CurlSizes cs = curl_sizes(R, spacing);

    std::vector<Vec2> verts;
    const auto circle_pt = [&](double a) { return Vec2{R * std::cos(a), R * std::sin(a)}; };
    const auto add_arc = [&](double a0, double a1) {
        if (a1 <= a0) a1 += 2.0 * M_PI;
        const int steps = std::max(3, static_cast<int>((a1 - a0) / (2.0 * M_PI / 72)));
        for (int s = 0; s < steps; ++s) verts.push_back(circle_pt(a0 + (a1 - a0) * s / steps));
    };
    double prev = bottom;
    for (int j = 0; j < n_curls; ++j) {
        const double site = top + band * ((j + 0.5) / n_curls) - band / 2;
        const Vec2 u{std::cos(site), std::sin(site)};
        const Vec2 tau{-u.y, u.x};
        const Vec2 north = outward ? u : Vec2{-u.x, -u.y};
        add_arc(prev, site - cs.beta);
        balloon(verts, circle_pt(site - cs.beta), circle_pt(site), tau, north, cs.rho, cs.height, 10);
        prev = site + cs.beta;
    }
    add_arc(prev, bottom + 2.0 * M_PI);
    return verts;
}

// Single-boundary sharp curve: counterclockwise circle, one counterclockwise inward curl
// whose loop carries k clockwise sub-curls on its outward side. Basepoint at
// the bottom of the circle gives one negative and k positive crossings.
inline std::vector<Vec2> b_plus_curve(int k, double R = 1.0) {
    const double beta0 = 0.42;
    const double rho0 = 0.42 * R, height0 = 0.52 * R;
    const double bottom = -M_PI / 2;
    const Vec2 tau{-1.0, 0.0};          // traversal direction at the top site
    const Vec2 north{0.0, -1.0};        // inward
    const Vec2 O{0.0, R - height0};     // main loop centre

    std::vector<Vec2> verts;
    const auto circle_pt = [&](double a) { return Vec2{R * std::cos(a), R * std::sin(a)}; };
    const auto add_arc = [&](double a0, double a1) {
        if (a1 <= a0) a1 += 2.0 * M_PI;
        const int steps = std::max(3, static_cast<int>((a1 - a0) / (2.0 * M_PI / 72)));
        for (int s = 0; s < steps; ++s) verts.push_back(circle_pt(a0 + (a1 - a0) * s / steps));
    };
    const auto loop_pt = [&](double psi) {
        return Vec2{O.x + rho0 * (std::cos(psi) * tau.x + std::sin(psi) * north.x),
                    O.y + rho0 * (std::cos(psi) * tau.y + std::sin(psi) * north.y)};
    };
    const auto add_loop_arc = [&](double p0, double p1) {
        const int steps = std::max(2, static_cast<int>((p1 - p0) / (M_PI / 24)));
        for (int s = 0; s < steps; ++s) verts.push_back(loop_pt(p0 + (p1 - p0) * s / steps));
    };

    add_arc(bottom, M_PI / 2 - beta0);
    verts.push_back(circle_pt(M_PI / 2 - beta0));   // E: strand into the main loop

    // main loop arc psi in [0, pi] with k sub-curls on [40deg, 140deg]
    const double span0 = M_PI * 40.0 / 180.0, span1 = M_PI * 140.0 / 180.0;
    const double dsub = (span1 - span0) / std::max(k, 1);
    const double beta1 = std::min(0.3 * dsub, 0.26);
    const double a1 = rho0 * std::sin(beta1);
    const double rho1 = 0.8 * a1, height1 = 2.2 * a1;
    double prev_psi = 0.0;
    for (int j = 0; j < k; ++j) {
        const double psi = span0 + (span1 - span0) * (j + 0.5) / k;
        // traversal direction and outward normal of the loop at psi
        const Vec2 d{-std::sin(psi) * tau.x + std::cos(psi) * north.x,
                     -std::sin(psi) * tau.y + std::cos(psi) * north.y};
        const Vec2 out = normalized(loop_pt(psi) - O);
        add_loop_arc(prev_psi, psi - beta1);
        balloon(verts, loop_pt(psi - beta1), loop_pt(psi), d, out, rho1, height1, 8);
        prev_psi = psi + beta1;
    }
    add_loop_arc(prev_psi, M_PI);
    verts.push_back(loop_pt(M_PI));   // T': strand back to the circle
    add_arc(M_PI / 2 + beta0, bottom + 2.0 * M_PI);
    return verts;
}

}  // namespace detail

// Generic polyline realization of a family word, with the canonical basepoint
// chosen by the deterministic rule. Fits in a unit-order box at the origin.
inline PlanarCurve realize(const CurveWord& word) {
    validate_word(word);
    std::vector<Vec2> verts;
    bool reverse = false;
    switch (word.family) {
        case Family::C:
            // C-_k: counterclockwise circle with k counterclockwise inner curls
            verts = detail::circle_with_curls(word.k, /*outward=*/false);
            reverse = word.positive;
            break;
        case Family::A:
            // A+_k: counterclockwise circle with k clockwise outer curls
            verts = detail::circle_with_curls(word.k, /*outward=*/true);
            reverse = !word.positive;
            break;
        case Family::B:
            verts = detail::b_plus_curve(word.k);
            reverse = !word.positive;
            break;
    }
    if (reverse) std::reverse(verts.begin(), verts.end());
    PlanarCurve curve;
    curve.components.push_back(CurveComponent{std::move(verts), 0});
    curve.components[0].basepoint = choose_basepoint(curve.components[0]);
    return curve;
}

inline PlanarCurve realize(const std::string& word_text) { return realize(parse_word(word_text)); }

// Disjoint side-by-side layout of several word realizations: words are placed
// left to right with 3-unit spacing, so bounding boxes cannot meet and the
// collection has no inter-component crossings.
inline PlanarCurve realize_all(const WordMultiset& words) {
    PlanarCurve out;
    double offset = 0.0;
    for (const auto& w : words.words) {
        PlanarCurve one = realize(w);
        CurveComponent comp = std::move(one.components[0]);
        for (Vec2& v : comp.vertices) v.x += offset;
        out.components.push_back(std::move(comp));
        offset += 3.0;
    }
    return out;
}

}  // namespace foldatlas
