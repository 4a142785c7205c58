#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "foldatlas/geometry.hpp"

namespace foldatlas {

// A closed oriented polyline. The last vertex connects back to the first.
// The basepoint must be a vertex that is not a double point and lies on the
// boundary of the unbounded complement region of this component alone.
struct CurveComponent {
    std::vector<Vec2> vertices;
    std::size_t basepoint = 0;
};

// One or more components; the order is significant (it fixes the i<j
// inter-component sign convention).
struct PlanarCurve {
    std::vector<CurveComponent> components;
};

enum class DefectKind { Tangency, TriplePoint, VertexIncidence, NearCoincidence };

inline const char* to_string(DefectKind k) {
    switch (k) {
        case DefectKind::Tangency: return "Tangency";
        case DefectKind::TriplePoint: return "TriplePoint";
        case DefectKind::VertexIncidence: return "VertexIncidence";
        case DefectKind::NearCoincidence: return "NearCoincidence";
    }
    return "?";
}

class NonGenericCurve : public std::runtime_error {
  public:
    NonGenericCurve(DefectKind kind, Vec2 location)
        : std::runtime_error(std::string("non-generic curve: ") + to_string(kind) +
                             " near (" + std::to_string(location.x) + ", " +
                             std::to_string(location.y) + ")"),
          kind(kind),
          location(location) {}

    DefectKind kind;
    Vec2 location;
};

class InvalidBasepoint : public std::runtime_error {
  public:
    explicit InvalidBasepoint(const std::string& what) : std::runtime_error(what) {}
};

class NoValidBasepoint : public std::runtime_error {
  public:
    explicit NoValidBasepoint(const std::string& what) : std::runtime_error(what) {}
};

class WhitneyViolation : public std::logic_error {
  public:
    explicit WhitneyViolation(const std::string& what) : std::logic_error(what) {}
};

class NumericalInstability : public std::runtime_error {
  public:
    explicit NumericalInstability(const std::string& what) : std::runtime_error(what) {}
};

// A transverse double point. comp_a <= comp_b; for a self-crossing
// param_a < param_b. Parameters are arclength measured from the basepoint.
struct Crossing {
    std::size_t comp_a = 0;
    std::size_t comp_b = 0;
    double param_a = 0.0;
    double param_b = 0.0;
    Vec2 location;
    int sign = 0;
};

// Cached per-component segment data: directions, lengths, cumulative
// arclength from vertex 0.
struct ComponentGeometry {
    const CurveComponent* comp = nullptr;
    std::vector<Vec2> dir;     // unit direction of segment i
    std::vector<double> len;   // length of segment i
    std::vector<double> cum;   // cum[i] = arclength of vertex i from vertex 0
    double total = 0.0;

    explicit ComponentGeometry(const CurveComponent& c) : comp(&c) {
        const auto& v = c.vertices;
        if (v.size() < 3) throw std::invalid_argument("curve component needs at least 3 vertices");
        const std::size_t n = v.size();
        dir.resize(n);
        len.resize(n);
        cum.resize(n + 1);
        cum[0] = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 d = v[(i + 1) % n] - v[i];
            len[i] = norm(d);
            if (len[i] < kEpsGeom) throw NonGenericCurve(DefectKind::NearCoincidence, v[i]);
            dir[i] = {d.x / len[i], d.y / len[i]};
            cum[i + 1] = cum[i] + len[i];
        }
        total = cum[n];
        for (std::size_t i = 0; i < n; ++i) {
            // A turn of +-pi means the polyline doubles back on itself.
            const double turn = turn_angle(dir[i], dir[(i + 1) % n]);
            if (M_PI - std::abs(turn) < 1e-9)
                throw NonGenericCurve(DefectKind::NearCoincidence, v[(i + 1) % n]);
        }
    }

    std::size_t size() const { return comp->vertices.size(); }
    Vec2 vertex(std::size_t i) const { return comp->vertices[i]; }

    double param_at(std::size_t seg, double t) const { return cum[seg] + t * len[seg]; }

    // Segment index containing the given raw parameter (from vertex 0).
    std::size_t segment_of(double param) const {
        auto it = std::upper_bound(cum.begin(), cum.end(), param);
        std::size_t i = static_cast<std::size_t>(it - cum.begin());
        if (i > 0) --i;
        if (i >= size()) i = size() - 1;
        return i;
    }

    Vec2 tangent_at(double param) const { return dir[segment_of(param)]; }

    Vec2 point_at(double param) const {
        const std::size_t i = segment_of(param);
        const double t = (param - cum[i]) / len[i];
        return comp->vertices[i] + (t * len[i]) * dir[i];
    }

    // Shift a raw parameter so it is measured from the basepoint.
    double from_basepoint(double param) const {
        const double bp = cum[comp->basepoint];
        double p = param - bp;
        if (p < 0) p += total;
        return p;
    }
};

namespace detail {

struct SegRef {
    std::size_t comp;
    std::size_t seg;
};

struct RawCrossing {
    std::size_t comp_a, comp_b;
    double raw_a, raw_b;   // arclength from vertex 0 of the respective component
    Vec2 location;
};

// Examines one candidate segment pair; records a crossing or throws on a
// genericity defect. Adjacent segments of the same component are skipped.
inline void check_pair(const std::vector<ComponentGeometry>& geo, SegRef a, SegRef b,
                       std::vector<RawCrossing>& out) {
    if (a.comp == b.comp) {
        const std::size_t n = geo[a.comp].size();
        const std::size_t i = a.seg, j = b.seg;
        if (i == j || (i + 1) % n == j || (j + 1) % n == i) return;
    }
    const auto& ga = geo[a.comp];
    const auto& gb = geo[b.comp];
    const Vec2 p1 = ga.vertex(a.seg), p2 = ga.vertex((a.seg + 1) % ga.size());
    const Vec2 q1 = gb.vertex(b.seg), q2 = gb.vertex((b.seg + 1) % gb.size());
    const double sin_angle = std::abs(cross(ga.dir[a.seg], gb.dir[b.seg]));

    // A vertex on (or nearly on) the other strand covers both endpoint
    // incidences and near-parallel overlaps, whose closest approach is always
    // attained at an endpoint.
    const double d4 = std::min(
        std::min(point_segment_distance(p1, q1, q2), point_segment_distance(p2, q1, q2)),
        std::min(point_segment_distance(q1, p1, p2), point_segment_distance(q2, p1, p2)));
    if (d4 < kEpsGeom) {
        if (sin_angle < 1e-6) throw NonGenericCurve(DefectKind::NearCoincidence, p1);
        throw NonGenericCurve(DefectKind::VertexIncidence, p1);
    }

    const Vec2 r = p2 - p1, s = q2 - q1;
    if (sin_angle < 1e-9) return;   // parallel and, by the check above, apart
    const double den = cross(r, s);
    const Vec2 pq = q1 - p1;
    const double t = cross(pq, s) / den;
    const double u = cross(pq, r) / den;
    const double tol_t = kEpsGeom / ga.len[a.seg];
    const double tol_u = kEpsGeom / gb.len[b.seg];
    if (t < -tol_t || t > 1.0 + tol_t || u < -tol_u || u > 1.0 + tol_u) return;
    const Vec2 x = p1 + t * r;
    const bool interior_t = t > tol_t && t < 1.0 - tol_t;
    const bool interior_u = u > tol_u && u < 1.0 - tol_u;
    if (interior_t && interior_u) {
        if (sin_angle < 1e-6) throw NonGenericCurve(DefectKind::Tangency, x);
        out.push_back({a.comp, b.comp, ga.param_at(a.seg, t), gb.param_at(b.seg, u), x});
        return;
    }
    // The line intersection sits within eps of a segment endpoint.
    throw NonGenericCurve(DefectKind::VertexIncidence, x);
}

// All candidate pairs via a uniform grid over padded segment boxes. This is
// the production path; tests compare it against a quadratic oracle.
inline std::vector<RawCrossing> collect_crossings(const std::vector<ComponentGeometry>& geo) {
    std::vector<SegRef> segs;
    double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
    double total_len = 0.0;
    std::size_t nseg = 0;
    for (std::size_t c = 0; c < geo.size(); ++c) {
        for (std::size_t s = 0; s < geo[c].size(); ++s) {
            segs.push_back({c, s});
            total_len += geo[c].len[s];
            ++nseg;
        }
        for (const Vec2& v : geo[c].comp->vertices) {
            min_x = std::min(min_x, v.x);
            min_y = std::min(min_y, v.y);
            max_x = std::max(max_x, v.x);
            max_y = std::max(max_y, v.y);
        }
    }
    std::vector<RawCrossing> out;
    if (nseg == 0) return out;

    const double cell = std::max(2.0 * total_len / static_cast<double>(nseg), 1e-6);
    const auto cell_of = [&](double x, double y) {
        const auto ix = static_cast<std::int64_t>(std::floor((x - min_x) / cell));
        const auto iy = static_cast<std::int64_t>(std::floor((y - min_y) / cell));
        return static_cast<std::uint64_t>(ix) << 32 | static_cast<std::uint32_t>(iy);
    };

    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> grid;
    grid.reserve(nseg * 2);
    for (std::uint32_t id = 0; id < segs.size(); ++id) {
        const auto& g = geo[segs[id].comp];
        Vec2 p = g.vertex(segs[id].seg);
        Vec2 q = g.vertex((segs[id].seg + 1) % g.size());
        const double pad = 2.0 * kEpsGeom;
        const double x0 = std::min(p.x, q.x) - pad, x1 = std::max(p.x, q.x) + pad;
        const double y0 = std::min(p.y, q.y) - pad, y1 = std::max(p.y, q.y) + pad;
        for (double x = x0;; x += cell) {
            for (double y = y0;; y += cell) {
                grid[cell_of(std::min(x, x1), std::min(y, y1))].push_back(id);
                if (y >= y1) break;
            }
            if (x >= x1) break;
        }
    }

    std::unordered_set<std::uint64_t> seen;
    for (const auto& [key, bucket] : grid) {
        for (std::size_t i = 0; i < bucket.size(); ++i) {
            for (std::size_t j = i + 1; j < bucket.size(); ++j) {
                std::uint32_t a = bucket[i], b = bucket[j];
                if (a > b) std::swap(a, b);
                const std::uint64_t pk = static_cast<std::uint64_t>(a) << 32 | b;
                if (!seen.insert(pk).second) continue;
                check_pair(geo, segs[a], segs[b], out);
            }
        }
    }

    // Distinct double points: two crossings closer than eps mean a strand
    // passes through (or almost through) an existing double point.
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (dist(out[i].location, out[j].location) < kEpsGeom)
                throw NonGenericCurve(DefectKind::TriplePoint, out[i].location);
    return out;
}

inline std::vector<ComponentGeometry> make_geometry(const PlanarCurve& curve) {
    std::vector<ComponentGeometry> geo;
    geo.reserve(curve.components.size());
    for (const auto& c : curve.components) geo.emplace_back(c);
    return geo;
}

}  // namespace detail

// Succeeds iff all intersection incidences are pairwise-transverse interior
// double points separated by more than kEpsGeom.
inline void validate_genericity(const PlanarCurve& curve) {
    const auto geo = detail::make_geometry(curve);
    detail::collect_crossings(geo);
}

// Every double point exactly once, with the two sign conventions:
//   self-crossing (comp_a == comp_b): +1 iff (tangent at param_a, tangent at
//     param_b) is a positive basis, params ordered from the basepoint;
//   inter-component (comp_a < comp_b): +1 iff the tangent of the lower-indexed
//     component followed by the tangent of the higher-indexed one is positive.
inline std::vector<Crossing> find_crossings(const PlanarCurve& curve) {
    const auto geo = detail::make_geometry(curve);
    const auto raw = detail::collect_crossings(geo);
    std::vector<Crossing> out;
    out.reserve(raw.size());
    for (const auto& rc : raw) {
        Crossing c;
        c.comp_a = rc.comp_a;
        c.comp_b = rc.comp_b;
        c.location = rc.location;
        if (rc.comp_a == rc.comp_b) {
            const auto& g = geo[rc.comp_a];
            double pa = g.from_basepoint(rc.raw_a);
            double pb = g.from_basepoint(rc.raw_b);
            if (pa > pb) std::swap(pa, pb);
            c.param_a = pa;
            c.param_b = pb;
            const Vec2 t1 = g.tangent_at(std::fmod(pa + g.cum[g.comp->basepoint], g.total));
            const Vec2 t2 = g.tangent_at(std::fmod(pb + g.cum[g.comp->basepoint], g.total));
            c.sign = cross(t1, t2) > 0 ? +1 : -1;
        } else {
            std::size_t ca = rc.comp_a, cb = rc.comp_b;
            double ra = rc.raw_a, rb = rc.raw_b;
            if (ca > cb) {
                std::swap(ca, cb);
                std::swap(ra, rb);
            }
            c.comp_a = ca;
            c.comp_b = cb;
            c.param_a = geo[ca].from_basepoint(ra);
            c.param_b = geo[cb].from_basepoint(rb);
            const Vec2 t1 = geo[ca].tangent_at(ra);
            const Vec2 t2 = geo[cb].tangent_at(rb);
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

}  // namespace foldatlas
