#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "foldatlas/words.hpp"

namespace foldatlas {

class MalformedSplitting : public std::runtime_error {
  public:
    explicit MalformedSplitting(const std::string& what) : std::runtime_error(what) {}
};

class UnbalancedSplitting : public std::runtime_error {
  public:
    UnbalancedSplitting(int chi_plus, int chi_minus)
        : std::runtime_error("no simple fold map exists: chi(S+) = " + std::to_string(chi_plus) +
                             " != chi(S-) = " + std::to_string(chi_minus)),
          chi_plus(chi_plus),
          chi_minus(chi_minus) {}
    int chi_plus;
    int chi_minus;
};

struct SurfaceComponent {
    std::string label;
    int genus = 1;
};

// Edge weight quadruple, attached when a geometric realization exists.
struct CircleWeight {
    int i_plus = 0;
    int i_minus = 0;
    int n_plus = 0;
    int n_minus = 0;
};

// One fold circle joining a plus and a minus component.
struct SigmaCircle {
    std::string plus_ref;
    std::string minus_ref;
    std::optional<CircleWeight> weight;
};

// A splitting S = S+ u S-: surface components on each side plus the fold
// circles joining them. Boundary slots are implicit: a component's boundary
// count is its circle-incidence count.
struct SplitSurface {
    std::vector<SurfaceComponent> plus_components;
    std::vector<SurfaceComponent> minus_components;
    std::vector<SigmaCircle> sigma_circles;
};

struct SplitSummary {
    int num_plus = 0;
    int num_minus = 0;
    int sigma_count = 0;
    int n_diff = 0;     // | #|S+| - #|S-| |
    int rho = 0;        // spanning-tree edge count = num_plus + num_minus - 1
    int chi_plus = 0;
    int chi_minus = 0;
    int chi_s = 0;
    int genus_s = 0;
};

namespace detail {

struct SideIndex {
    std::map<std::string, std::size_t> plus, minus;
    std::vector<int> plus_slots, minus_slots;
};

inline SideIndex index_splitting(const SplitSurface& s) {
    SideIndex idx;
    for (std::size_t i = 0; i < s.plus_components.size(); ++i) {
        if (!idx.plus.emplace(s.plus_components[i].label, i).second)
            throw MalformedSplitting("duplicate plus label '" + s.plus_components[i].label + "'");
    }
    for (std::size_t j = 0; j < s.minus_components.size(); ++j) {
        if (!idx.minus.emplace(s.minus_components[j].label, j).second)
            throw MalformedSplitting("duplicate minus label '" + s.minus_components[j].label + "'");
    }
    idx.plus_slots.assign(s.plus_components.size(), 0);
    idx.minus_slots.assign(s.minus_components.size(), 0);
    for (const auto& c : s.sigma_circles) {
        const auto p = idx.plus.find(c.plus_ref);
        const auto m = idx.minus.find(c.minus_ref);
        if (p == idx.plus.end()) throw MalformedSplitting("circle references unknown plus component '" + c.plus_ref + "'");
        if (m == idx.minus.end()) throw MalformedSplitting("circle references unknown minus component '" + c.minus_ref + "'");
        idx.plus_slots[p->second]++;
        idx.minus_slots[m->second]++;
    }
    return idx;
}

inline void check_structure(const SplitSurface& s, const SideIndex& idx) {
    if (s.plus_components.empty() || s.minus_components.empty())
        throw MalformedSplitting("both sides of a splitting must be non-empty");
    if (s.sigma_circles.empty()) throw MalformedSplitting("the fold set must be non-empty");
    for (const auto& c : s.plus_components)
        if (c.genus < 1) throw MalformedSplitting("planar component '" + c.label + "'");
    for (const auto& c : s.minus_components)
        if (c.genus < 1) throw MalformedSplitting("planar component '" + c.label + "'");
    for (std::size_t i = 0; i < idx.plus_slots.size(); ++i)
        if (idx.plus_slots[i] == 0)
            throw MalformedSplitting("component '" + s.plus_components[i].label + "' touches no fold circle");
    for (std::size_t j = 0; j < idx.minus_slots.size(); ++j)
        if (idx.minus_slots[j] == 0)
            throw MalformedSplitting("component '" + s.minus_components[j].label + "' touches no fold circle");
    // connectivity of the bipartite multigraph (S is connected)
    const std::size_t np = s.plus_components.size(), nm = s.minus_components.size();
    std::vector<std::vector<std::size_t>> adj(np + nm);
    for (const auto& c : s.sigma_circles) {
        const std::size_t p = idx.plus.at(c.plus_ref);
        const std::size_t m = np + idx.minus.at(c.minus_ref);
        adj[p].push_back(m);
        adj[m].push_back(p);
    }
    std::vector<char> seen(np + nm, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t visited = 0;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        ++visited;
        for (std::size_t w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    if (visited != np + nm) throw MalformedSplitting("splitting graph is disconnected");
}

}  // namespace detail

inline SplitSummary summarize(const SplitSurface& s) {
    const auto idx = detail::index_splitting(s);
    detail::check_structure(s, idx);
    SplitSummary out;
    out.num_plus = static_cast<int>(s.plus_components.size());
    out.num_minus = static_cast<int>(s.minus_components.size());
    out.sigma_count = static_cast<int>(s.sigma_circles.size());
    out.n_diff = std::abs(out.num_plus - out.num_minus);
    out.rho = out.num_plus + out.num_minus - 1;
    for (std::size_t i = 0; i < s.plus_components.size(); ++i)
        out.chi_plus += 2 - 2 * s.plus_components[i].genus - idx.plus_slots[i];
    for (std::size_t j = 0; j < s.minus_components.size(); ++j)
        out.chi_minus += 2 - 2 * s.minus_components[j].genus - idx.minus_slots[j];
    out.chi_s = out.chi_plus + out.chi_minus;
    if (out.chi_s % 2 != 0) throw MalformedSplitting("chi(S) must be even");
    out.genus_s = (2 - out.chi_s) / 2;
    return out;
}

// Eliashberg's condition chi(S+) = chi(S-), plus the equivalent
// component/genus identity #|S+| - #|S-| = sum g+ - sum g-.
inline void check_balance(const SplitSurface& s) {
    const SplitSummary sum = summarize(s);
    if (sum.chi_plus != sum.chi_minus) throw UnbalancedSplitting(sum.chi_plus, sum.chi_minus);
    int genus_plus = 0, genus_minus = 0;
    for (const auto& c : s.plus_components) genus_plus += c.genus;
    for (const auto& c : s.minus_components) genus_minus += c.genus;
    if (sum.num_plus - sum.num_minus != genus_plus - genus_minus)
        throw std::logic_error("balanced splitting violates the component/genus identity");
}

struct AdmissibilityVerdict {
    bool genus_at_least_two = false;       // (i)   g >= 2
    bool sigma_below_genus = false;        // (ii)  g > |Sigma| >= 1
    bool sigma_spans_components = false;   // (iii) |Sigma| >= #|S+| + #|S-| - 1 >= 1
    bool parity = false;                   // (iv)  |Sigma| - g odd

    bool admissible() const {
        return genus_at_least_two && sigma_below_genus && sigma_spans_components && parity;
    }
};

inline AdmissibilityVerdict check_admissible(int g, int sigma_count, int num_plus, int num_minus) {
    AdmissibilityVerdict v;
    v.genus_at_least_two = g >= 2;
    v.sigma_below_genus = g > sigma_count && sigma_count >= 1;
    v.sigma_spans_components =
        num_plus >= 1 && num_minus >= 1 && sigma_count >= num_plus + num_minus - 1;
    v.parity = ((sigma_count - g) % 2 + 2) % 2 == 1;
    return v;
}

// The weighted bipartite multigraph of a splitting.
struct SplitGraph {
    struct Vertex {
        std::string label;
        bool plus = true;
        int chi = 0;   // 2 - 2g - k
    };
    struct Edge {
        std::size_t plus_vertex;
        std::size_t minus_vertex;
        int multiplicity = 1;
        std::vector<CircleWeight> weights;   // one entry per weighted parallel circle
    };
    std::vector<Vertex> vertices;   // plus components first, then minus
    std::vector<Edge> edges;
    int rho = 0;
};

inline SplitGraph to_graph(const SplitSurface& s) {
    const auto idx = detail::index_splitting(s);
    detail::check_structure(s, idx);
    SplitGraph g;
    for (std::size_t i = 0; i < s.plus_components.size(); ++i)
        g.vertices.push_back({s.plus_components[i].label, true,
                              2 - 2 * s.plus_components[i].genus - idx.plus_slots[i]});
    const std::size_t np = s.plus_components.size();
    for (std::size_t j = 0; j < s.minus_components.size(); ++j)
        g.vertices.push_back({s.minus_components[j].label, false,
                              2 - 2 * s.minus_components[j].genus - idx.minus_slots[j]});
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_of;
    for (const auto& c : s.sigma_circles) {
        const std::size_t p = idx.plus.at(c.plus_ref);
        const std::size_t m = np + idx.minus.at(c.minus_ref);
        const auto key = std::make_pair(p, m);
        auto it = edge_of.find(key);
        if (it == edge_of.end()) {
            it = edge_of.emplace(key, g.edges.size()).first;
            g.edges.push_back({p, m, 0, {}});
        }
        auto& e = g.edges[it->second];
        e.multiplicity++;
        if (c.weight) e.weights.push_back(*c.weight);
    }
    g.rho = static_cast<int>(g.vertices.size()) - 1;
    return g;
}

// DOT export with chi vertex weights and edge multiplicities.
inline std::string to_dot(const SplitGraph& g) {
    std::ostringstream os;
    os << "graph splitting {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const auto& v = g.vertices[i];
        os << "  v" << i << " [label=\"" << v.label << "\\nchi=" << v.chi << "\" side=\""
           << (v.plus ? "plus" : "minus") << "\"];\n";
    }
    for (const auto& e : g.edges) {
        os << "  v" << e.plus_vertex << " -- v" << e.minus_vertex << " [multiplicity="
           << e.multiplicity << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace foldatlas
