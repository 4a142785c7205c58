#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "foldatlas/arrangement.hpp"
#include "foldatlas/curve.hpp"

namespace foldatlas {

// Total turning of the tangent divided by one full turn. Equals the degree of
// the coorienting Gauss map, since the coorientation is the tangent rotated by
// a fixed quarter turn.
inline int winding_number(const CurveComponent& comp) {
    const ComponentGeometry g(comp);
    const std::size_t n = g.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += turn_angle(g.dir[i], g.dir[(i + 1) % n]);
    const double w = total / (2.0 * M_PI);
    const double nearest = std::round(w);
    if (std::abs(w - nearest) > kEpsWind)
        throw NumericalInstability("turning sum residual " + std::to_string(w - nearest));
    return static_cast<int>(nearest);
}

struct BoundaryArc {
    std::vector<Vec2> points;
    double param_begin = 0.0;   // arclength from the basepoint
    double param_end = 0.0;
    PointClass cls = PointClass::Outer;
};

// Maximal sections of the unbounded-face boundary between double points,
// labelled Outer iff the derived coorientation points into U along them.
inline std::vector<BoundaryArc> classify_arcs(const CurveComponent& comp) {
    const ComponentArrangement arr(comp);
    std::vector<BoundaryArc> out;
    if (arr.embedded()) {
        BoundaryArc a;
        a.points = comp.vertices;
        a.points.push_back(comp.vertices.front());
        a.param_begin = 0.0;
        a.param_end = arr.geometry().total;
        a.cls = arr.component_class();
        out.push_back(std::move(a));
        return out;
    }
    for (const auto& arc : arr.arcs()) {
        if (arc.du_side < 0) continue;
        BoundaryArc a;
        a.points = arc.pts;
        a.param_begin = arr.geometry().from_basepoint(std::fmod(arc.raw_begin, arr.geometry().total));
        a.param_end = a.param_begin + (arc.raw_end - arc.raw_begin);
        a.cls = arc.du_side == 0 ? PointClass::Inner : PointClass::Outer;
        out.push_back(std::move(a));
    }
    return out;
}

namespace detail {

// Base-point lemma, polyline form: a point with the unbounded region straight
// below it is outer exactly when the coorientation heads downward. Checked at
// several ray-cast hits; a violation means the face walk disagrees with the
// geometry.
inline bool lowest_point_lemma_holds(const ComponentArrangement& arr) {
    if (arr.embedded()) return true;   // the embedded class is defined by this very probe
    for (const auto& probe : arr.lemma_probes()) {
        const bool down = coorientation(probe.dir).y < 0.0;
        if (down != (arr.class_at(probe.raw_param) == PointClass::Outer)) return false;
    }
    return true;
}

}  // namespace detail

// Outer iff every boundary arc of U is outer. Cross-checked against the
// lowest-point lemma.
inline PointClass inner_outer(const CurveComponent& comp) {
    const ComponentArrangement arr(comp);
    if (!detail::lowest_point_lemma_holds(arr))
        throw std::logic_error("lowest-point lemma violated by arrangement");
    return arr.component_class();
}

// Deterministic basepoint: among vertices that are not double points and lie
// on a boundary arc of U whose class matches the component class, pick the
// lexicographically smallest by (y, x).
inline std::size_t choose_basepoint(const CurveComponent& comp) {
    const ComponentArrangement arr(comp);
    const PointClass cls = arr.component_class();
    const auto& g = arr.geometry();
    bool found = false;
    std::size_t best = 0;
    for (std::size_t vi = 0; vi < g.size(); ++vi) {
        const Vec2 v = g.vertex(vi);
        bool near_crossing = false;
        for (const auto& c : arr.self_crossings())
            if (dist(v, c.location) <= kEpsGeom) near_crossing = true;
        if (near_crossing) continue;
        if (!arr.embedded()) {
            const auto& arc = arr.arcs()[arr.arc_of(g.cum[vi])];
            if (arc.du_side < 0) continue;
            const PointClass vc = arc.du_side == 0 ? PointClass::Inner : PointClass::Outer;
            if (vc != cls) continue;
        }
        if (!found) {
            best = vi;
            found = true;
        } else {
            const Vec2 b = g.vertex(best);
            if (v.y < b.y || (v.y == b.y && v.x < b.x)) best = vi;
        }
    }
    if (!found) throw NoValidBasepoint("no qualifying vertex on the unbounded-face boundary");
    return best;
}

struct ComponentTally {
    int w = 0;
    PointClass inner_outer = PointClass::Outer;
    int n_plus = 0;
    int n_minus = 0;
};

struct InvariantRecord {
    std::vector<ComponentTally> per_component;
    int I_plus = 0;
    int I_minus = 0;
    int N_plus = 0;
    int N_minus = 0;
    int N_ij_plus = 0;
    int N_ij_minus = 0;
    int Delta = 0;

    int collection_winding() const {
        int w = 0;
        for (const auto& t : per_component) w += t.w;
        return w;
    }
};

// All curve-collection tallies, with the Whitney identity asserted per component
// and for the whole collection. Both sides are computed by independent code
// paths (turning-angle sum vs. crossing-sign tally), so a violation signals
// an implementation bug, never a valid input.
inline InvariantRecord invariants(const PlanarCurve& curve) {
    const auto crossings = find_crossings(curve);
    InvariantRecord rec;
    for (std::size_t ci = 0; ci < curve.components.size(); ++ci) {
        const auto& comp = curve.components[ci];
        const ComponentArrangement arr(comp);
        const auto& g = arr.geometry();
        if (comp.basepoint >= comp.vertices.size())
            throw InvalidBasepoint("basepoint index out of range");
        const Vec2 bp = comp.vertices[comp.basepoint];
        for (const auto& c : crossings)
            if (dist(bp, c.location) <= kEpsGeom)
                throw InvalidBasepoint("basepoint coincides with a double point");
        const PointClass cls = arr.component_class();
        if (!arr.embedded()) {
            const auto& arc = arr.arcs()[arr.arc_of(g.cum[comp.basepoint])];
            if (arc.du_side < 0)
                throw InvalidBasepoint("basepoint not on the unbounded-face boundary");
            const PointClass vc = arc.du_side == 0 ? PointClass::Inner : PointClass::Outer;
            if (vc != cls)
                throw InvalidBasepoint("basepoint class does not match the component class");
        }
        if (!detail::lowest_point_lemma_holds(arr))
            throw std::logic_error("lowest-point lemma violated by arrangement");

        ComponentTally t;
        t.w = winding_number(comp);
        t.inner_outer = cls;
        for (const auto& c : crossings) {
            if (c.comp_a == ci && c.comp_b == ci) (c.sign > 0 ? t.n_plus : t.n_minus)++;
        }
        const int i_plus = cls == PointClass::Outer ? 1 : 0;
        const int i_minus = 1 - i_plus;
        if (t.w != i_plus - i_minus + t.n_minus - t.n_plus)
            throw WhitneyViolation("per-component Whitney identity failed: w=" + std::to_string(t.w) +
                                   " i+=" + std::to_string(i_plus) + " i-=" + std::to_string(i_minus) +
                                   " n-=" + std::to_string(t.n_minus) + " n+=" + std::to_string(t.n_plus));
        rec.per_component.push_back(t);
        rec.I_plus += i_plus;
        rec.I_minus += i_minus;
        rec.N_plus += t.n_plus;
        rec.N_minus += t.n_minus;
    }
    for (const auto& c : crossings) {
        if (c.comp_a != c.comp_b) (c.sign > 0 ? rec.N_ij_plus : rec.N_ij_minus)++;
    }
    if (rec.N_ij_plus != rec.N_ij_minus)
        throw WhitneyViolation("inter-component crossings are not balanced");
    if (rec.collection_winding() != rec.I_plus - rec.I_minus + rec.N_minus - rec.N_plus)
        throw WhitneyViolation("collection Whitney identity failed");
    rec.Delta = rec.N_plus + rec.N_minus + rec.N_ij_plus + rec.N_ij_minus;
    return rec;
}

}  // namespace foldatlas
