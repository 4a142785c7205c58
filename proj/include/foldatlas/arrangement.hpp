#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "foldatlas/curve.hpp"
#include "foldatlas/geometry.hpp"

namespace foldatlas {

enum class PointClass { Inner, Outer };

inline const char* to_string(PointClass c) { return c == PointClass::Inner ? "Inner" : "Outer"; }

// Planar arrangement of a single component: the curve split at its double
// points, the faces of the resulting 4-valent graph, and the boundary of the
// unbounded face U with its inner/outer labelling. All other components are
// ignored: U(gamma_i) is the complement of this component alone.
class ComponentArrangement {
  public:
    struct Arc {
        double raw_begin = 0.0;          // arclength from vertex 0
        double raw_end = 0.0;            // may run past the total length
        std::vector<Vec2> pts;           // crossing, interior vertices..., crossing
        int start_node = -1;
        int end_node = -1;
        // -1: not on dU; 0: U on the left of traversal (inner);
        // 1: U on the right (outer; also used when U touches both sides)
        int du_side = -1;
    };

    // Lowest clean intersection of a vertical line with the curve. The open
    // ray below the hit reaches infinity without meeting the curve, so the
    // region just below belongs to U and the inner/outer dichotomy at the hit
    // is decided by the sign of the coorientation's y-component.
    struct RayHit {
        std::size_t arc = 0;     // meaningless for embedded curves
        Vec2 point;
        Vec2 dir;                // direction of the hit segment
        double raw_param = 0.0;
    };

    explicit ComponentArrangement(const CurveComponent& comp) : geo_(comp) {
        PlanarCurve single;
        single.components.push_back(comp);
        const auto sgeo = detail::make_geometry(single);
        crossings_ = detail::collect_crossings(sgeo);
        for (const Vec2& v : comp.vertices) {
            min_x_ = std::min(min_x_, v.x);
            max_x_ = std::max(max_x_, v.x);
        }
        if (crossings_.empty()) {
            embedded_class_ = classify_embedded();
            return;
        }
        build_arcs();
        walk_faces();
        mark_unbounded();
    }

    bool embedded() const { return crossings_.empty(); }
    const ComponentGeometry& geometry() const { return geo_; }
    const std::vector<detail::RawCrossing>& self_crossings() const { return crossings_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    PointClass component_class() const {
        if (embedded()) return embedded_class_;
        for (const Arc& a : arcs_)
            if (a.du_side == 0) return PointClass::Inner;
        return PointClass::Outer;
    }

    // Arc index containing a raw parameter (undefined for embedded curves).
    std::size_t arc_of(double raw_param) const {
        const double p = std::fmod(raw_param, geo_.total);
        auto it = std::upper_bound(events_.begin(), events_.end(), p);
        std::size_t k = static_cast<std::size_t>(it - events_.begin());
        return (k + events_.size() - 1) % events_.size();
    }

    bool vertex_on_du(std::size_t vi) const {
        if (embedded()) return true;
        return arcs_[arc_of(geo_.cum[vi])].du_side >= 0;
    }

    PointClass class_at(double raw_param) const {
        if (embedded()) return embedded_class_;
        const Arc& a = arcs_[arc_of(raw_param)];
        if (a.du_side < 0) throw std::logic_error("point not on the unbounded-face boundary");
        return a.du_side == 0 ? PointClass::Inner : PointClass::Outer;
    }

    // Lowest clean hit of the vertical line at abscissa xhat, or nullopt when
    // the line misses the curve or grazes a vertex or crossing.
    std::optional<RayHit> ray_hit(double xhat) const {
        if (embedded()) {
            const auto hit = detail_ray_hit_chain(geo_.comp->vertices, true, xhat);
            if (!hit || hit->grazing) return std::nullopt;
            RayHit out;
            out.point = hit->point;
            out.dir = hit->dir;
            out.raw_param = geo_.param_at(hit->seg, hit->t);
            return out;
        }
        std::optional<RayHit> best;
        for (std::size_t ai = 0; ai < arcs_.size(); ++ai) {
            const auto hit = detail_ray_hit_chain(arcs_[ai].pts, false, xhat);
            if (!hit) continue;
            if (hit->grazing) return std::nullopt;
            if (!best || hit->point.y < best->point.y) {
                RayHit out;
                out.arc = ai;
                out.point = hit->point;
                out.dir = hit->dir;
                double along = 0.0;
                const auto& p = arcs_[ai].pts;
                for (std::size_t i = 0; i < hit->seg; ++i) along += dist(p[i], p[i + 1]);
                along += hit->t * dist(p[hit->seg], p[hit->seg + 1]);
                out.raw_param = std::fmod(arcs_[ai].raw_begin + along, geo_.total);
                best = out;
            }
        }
        return best;
    }

    // Probe points for the lowest-point lemma: clean ray hits at a spread of
    // abscissas. Each hit sees U straight below it.
    std::vector<RayHit> lemma_probes() const {
        std::vector<RayHit> out;
        const double span = max_x_ - min_x_;
        for (const double f : {0.2, 0.35, 0.5, 0.65, 0.8}) {
            const auto hit = ray_hit(min_x_ + f * span);
            if (hit && std::abs(hit->dir.x) > 1e-9) out.push_back(*hit);
        }
        return out;
    }

  private:
    ComponentGeometry geo_;
    std::vector<detail::RawCrossing> crossings_;
    std::vector<Arc> arcs_;
    std::vector<double> events_;          // sorted passage params, one per arc start
    std::vector<int> orbit_;              // orbit id per half-edge (2 per arc)
    int unbounded_orbit_ = -1;
    PointClass embedded_class_ = PointClass::Outer;
    double min_x_ = 1e300, max_x_ = -1e300;

    static int he_index(std::size_t arc, bool fwd) {
        return static_cast<int>(arc) * 2 + (fwd ? 0 : 1);
    }

    struct ChainHit {
        std::size_t seg;
        double t;
        Vec2 point;
        Vec2 dir;
        bool grazing = false;
    };

    // Lowest intersection of the vertical line x = xhat with a point chain
    // (closed when wrap is set). A hit within 1e-12 of a chain vertex is
    // reported as grazing.
    static std::optional<ChainHit> detail_ray_hit_chain(const std::vector<Vec2>& pts, bool wrap,
                                                        double xhat) {
        std::optional<ChainHit> best;
        const std::size_t n = pts.size();
        const std::size_t segs = wrap ? n : n - 1;
        for (std::size_t i = 0; i < segs; ++i) {
            const Vec2 p = pts[i], q = pts[(i + 1) % n];
            if (std::abs(p.x - xhat) < 1e-12 || std::abs(q.x - xhat) < 1e-12) {
                // a chain vertex sits on the line; the hit would be ambiguous
                ChainHit g;
                g.grazing = true;
                g.seg = i;
                g.t = 0.0;
                g.point = p;
                g.dir = normalized(q - p);
                return g;
            }
            if ((p.x - xhat) * (q.x - xhat) >= 0.0) continue;
            const double t = (xhat - p.x) / (q.x - p.x);
            const Vec2 hit{xhat, p.y + t * (q.y - p.y)};
            if (!best || hit.y < best->point.y) best = ChainHit{i, t, hit, normalized(q - p), false};
        }
        return best;
    }

    PointClass classify_embedded() const {
        // outer iff the coorientation at a lowest ray hit heads downward,
        // i.e. the curve runs eastbound over the unbounded region below
        const double span = max_x_ - min_x_;
        for (const double f : {0.5, 0.37, 0.63, 0.25, 0.75, 0.44, 0.56, 0.31, 0.69}) {
            const auto hit = detail_ray_hit_chain(geo_.comp->vertices, true, min_x_ + f * span);
            if (!hit || hit->grazing || std::abs(hit->dir.x) < 1e-9) continue;
            return coorientation(hit->dir).y < 0 ? PointClass::Outer : PointClass::Inner;
        }
        throw NumericalInstability("no clean vertical line through the embedded curve");
    }

    void build_arcs() {
        struct Event {
            double param;
            int cid;
        };
        std::vector<Event> ev;
        for (std::size_t c = 0; c < crossings_.size(); ++c) {
            ev.push_back({crossings_[c].raw_a, static_cast<int>(c)});
            ev.push_back({crossings_[c].raw_b, static_cast<int>(c)});
        }
        std::sort(ev.begin(), ev.end(),
                  [](const Event& a, const Event& b) { return a.param < b.param; });
        const std::size_t m = ev.size();
        events_.resize(m);
        for (std::size_t k = 0; k < m; ++k) events_[k] = ev[k].param;

        const std::size_t n = geo_.size();
        for (std::size_t k = 0; k < m; ++k) {
            const Event& e0 = ev[k];
            const Event& e1 = ev[(k + 1) % m];
            Arc a;
            a.raw_begin = e0.param;
            a.raw_end = e1.param + (k + 1 == m ? geo_.total : 0.0);
            a.start_node = e0.cid;
            a.end_node = e1.cid;
            a.pts.push_back(crossings_[e0.cid].location);
            std::size_t seg = geo_.segment_of(e0.param);
            double par = e0.param;
            double remaining = a.raw_end - a.raw_begin;
            while (true) {
                const double step = geo_.cum[seg + 1] - par;
                if (step >= remaining - 1e-12) break;
                remaining -= step;
                seg = (seg + 1) % n;
                par = geo_.cum[seg];
                a.pts.push_back(geo_.vertex(seg));
            }
            a.pts.push_back(crossings_[e1.cid].location);
            arcs_.push_back(std::move(a));
        }
    }

    void walk_faces() {
        // four outgoing stubs per node, sorted by direction angle
        struct Stub {
            double angle;
            int he;   // the half-edge leaving the node
        };
        std::vector<std::vector<Stub>> stubs(crossings_.size());
        const auto out_dir = [&](std::size_t ai, bool fwd) {
            const auto& p = arcs_[ai].pts;
            const Vec2 d = fwd ? p[1] - p[0] : p[p.size() - 2] - p[p.size() - 1];
            return normalized(d);
        };
        for (std::size_t ai = 0; ai < arcs_.size(); ++ai) {
            const Vec2 df = out_dir(ai, true);
            const Vec2 db = out_dir(ai, false);
            stubs[arcs_[ai].start_node].push_back({std::atan2(df.y, df.x), he_index(ai, true)});
            stubs[arcs_[ai].end_node].push_back({std::atan2(db.y, db.x), he_index(ai, false)});
        }
        std::vector<int> pos(arcs_.size() * 2, -1);
        for (auto& v : stubs) {
            if (v.size() != 4) throw std::logic_error("crossing is not 4-valent");
            std::sort(v.begin(), v.end(), [](const Stub& a, const Stub& b) { return a.angle < b.angle; });
            for (int i = 0; i < 4; ++i) pos[v[i].he] = i;
        }
        const auto head = [&](int he) {
            const Arc& a = arcs_[he / 2];
            return he % 2 == 0 ? a.end_node : a.start_node;
        };
        const auto next = [&](int he) {
            // the twin leaves the head node backwards along the same arc; the
            // face on the left continues on the stub clockwise from the twin
            const int twin = he ^ 1;
            const auto& s = stubs[head(he)];
            return s[(pos[twin] + 3) % 4].he;
        };
        orbit_.assign(arcs_.size() * 2, -1);
        int oid = 0;
        for (int h0 = 0; h0 < static_cast<int>(orbit_.size()); ++h0) {
            if (orbit_[h0] >= 0) continue;
            int h = h0;
            while (orbit_[h] < 0) {
                orbit_[h] = oid;
                h = next(h);
            }
            ++oid;
        }
    }

    void mark_unbounded() {
        // seed the unbounded orbit from a lowest ray hit: the strand there
        // borders U on its underside
        double xhat0 = 0.0;
        {
            double best_y = 1e300;
            for (const Arc& a : arcs_)
                for (std::size_t i = 0; i + 1 < a.pts.size(); ++i) {
                    const Vec2 m = 0.5 * (a.pts[i] + a.pts[i + 1]);
                    if (m.y < best_y) {
                        best_y = m.y;
                        xhat0 = m.x;
                    }
                }
        }
        const double span = max_x_ - min_x_;
        for (int attempt = 0; attempt < 64; ++attempt) {
            const double xhat = xhat0 + span * 1e-3 * attempt * (attempt % 2 ? 1 : -1);
            const auto hit = ray_hit_raw(xhat);
            if (!hit || std::abs(hit->dir.x) < 1e-9) continue;
            // the region below the hit is unbounded; it lies left of the
            // strand iff the strand runs westward
            const int he = he_index(hit->arc, hit->dir.x < 0);
            unbounded_orbit_ = orbit_[he];
            for (std::size_t ai = 0; ai < arcs_.size(); ++ai) {
                const bool fwd = orbit_[he_index(ai, true)] == unbounded_orbit_;
                const bool bwd = orbit_[he_index(ai, false)] == unbounded_orbit_;
                arcs_[ai].du_side = bwd ? 1 : (fwd ? 0 : -1);
            }
            return;
        }
        throw NumericalInstability("unbounded-face ray cast found no clean hit");
    }

    // ray_hit without raw_param bookkeeping, usable before marking finishes
    std::optional<RayHit> ray_hit_raw(double xhat) const {
        std::optional<RayHit> best;
        for (std::size_t ai = 0; ai < arcs_.size(); ++ai) {
            const auto hit = detail_ray_hit_chain(arcs_[ai].pts, false, xhat);
            if (!hit) continue;
            if (hit->grazing) return std::nullopt;
            if (!best || hit->point.y < best->point.y) {
                RayHit out;
                out.arc = ai;
                out.point = hit->point;
                out.dir = hit->dir;
                best = out;
            }
        }
        return best;
    }
};

}  // namespace foldatlas
