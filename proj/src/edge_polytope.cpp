#include "mupoly/edge_polytope.hpp"

#include "mupoly/errors.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace mupoly {

SimpleGraph SimpleGraph::from_edges(int vertex_count, std::vector<std::pair<int, int>> edges) {
    if (vertex_count < 1) throw BadParameters("graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u < 1 || u > vertex_count || v < 1 || v > vertex_count)
            throw BadParameters("vertex label out of range");
        if (u == v) throw BadParameters("loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw BadParameters("repeated edge");
    SimpleGraph g{vertex_count, std::move(edges)};

    std::vector<std::vector<int>> adj = g.adjacency();
    std::vector<char> seen(static_cast<std::size_t>(vertex_count) + 1, 0);
    std::vector<int> stack = {1};
    seen[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != vertex_count) throw Disconnected("graph is not connected");
    return g;
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count) + 1);
    for (const auto& [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

Polytope edge_polytope(const SimpleGraph& g) {
    std::vector<IntVec> pts;
    for (const auto& [u, v] : g.edges) {
        IntVec p(static_cast<std::size_t>(g.vertex_count), Int(0));
        p[static_cast<std::size_t>(u) - 1] = 1;
        p[static_cast<std::size_t>(v) - 1] = 1;
        pts.push_back(std::move(p));
    }
    return Polytope::from_points(pts);
}

namespace {

std::vector<std::vector<char>> adjacency_matrix(const SimpleGraph& g) {
    std::size_t n = static_cast<std::size_t>(g.vertex_count) + 1;
    std::vector<std::vector<char>> am(n, std::vector<char>(n, 0));
    for (const auto& [u, v] : g.edges) {
        am[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        am[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    return am;
}

} // namespace

std::vector<OddCycle> minimal_odd_cycles(const SimpleGraph& g, Budget& budget) {
    std::vector<std::vector<int>> adj = g.adjacency();
    std::vector<std::vector<char>> am = adjacency_matrix(g);
    std::vector<OddCycle> out;
    std::vector<int> path;
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count) + 1, 0);

    // Grow chordless paths from the smallest cycle vertex. A candidate w must
    // avoid every non-tip path vertex; a neighbor of the start closes a cycle
    // and is never extended through (the closing edge would become a chord).
    std::function<void()> extend = [&]() {
        budget.charge_point();
        int s = path.front();
        int tip = path.back();
        for (int w : adj[static_cast<std::size_t>(tip)]) {
            if (w <= s || on_path[static_cast<std::size_t>(w)]) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (am[static_cast<std::size_t>(w)][static_cast<std::size_t>(path[i])]) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            // The second vertex is adjacent to the start by construction; from
            // depth two on, a neighbor of the start either closes a cycle or
            // would leave the closing edge as a chord, so it is never extended.
            if (path.size() >= 2 && am[static_cast<std::size_t>(w)][static_cast<std::size_t>(s)]) {
                if (path[1] < w && (path.size() + 1) % 2 == 1) {
                    OddCycle c;
                    c.vertices = path;
                    c.vertices.push_back(w);
                    out.push_back(std::move(c));
                }
                continue;
            }
            path.push_back(w);
            on_path[static_cast<std::size_t>(w)] = 1;
            extend();
            on_path[static_cast<std::size_t>(w)] = 0;
            path.pop_back();
        }
    };

    for (int s = 1; s <= g.vertex_count; ++s) {
        path.assign(1, s);
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[static_cast<std::size_t>(s)] = 1;
        extend();
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ExceptionalPair> exceptional_pairs(const SimpleGraph& g, Budget& budget) {
    std::vector<OddCycle> cycles = minimal_odd_cycles(g, budget);
    std::vector<ExceptionalPair> out;
    std::size_t n = static_cast<std::size_t>(g.vertex_count);
    std::vector<char> in_a(n + 1, 0), in_b(n + 1, 0);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        std::fill(in_a.begin(), in_a.end(), 0);
        for (int v : cycles[i].vertices) in_a[static_cast<std::size_t>(v)] = 1;
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            budget.charge_subset();
            std::fill(in_b.begin(), in_b.end(), 0);
            for (int v : cycles[j].vertices) in_b[static_cast<std::size_t>(v)] = 1;
            bool bridge = false;
            for (const auto& [u, v] : g.edges) {
                std::size_t a = static_cast<std::size_t>(u), b = static_cast<std::size_t>(v);
                if ((in_a[a] && in_b[b]) || (in_a[b] && in_b[a])) {
                    bridge = true;
                    break;
                }
            }
            if (bridge) continue;
            ExceptionalPair p;
            p.first = cycles[i];
            p.second = cycles[j];
            p.m = (cycles[i].length() + cycles[j].length()) / 2;
            p.e.assign(n, Int(0));
            for (int v : cycles[i].vertices) p.e[static_cast<std::size_t>(v) - 1] = 1;
            for (int v : cycles[j].vertices) p.e[static_cast<std::size_t>(v) - 1] = 1;
            out.push_back(std::move(p));
        }
    }
    return out;
}

bool odd_cycle_condition(const SimpleGraph& g, Budget& budget) {
    return exceptional_pairs(g, budget).empty();
}

int mu_va_hilb_graph(const SimpleGraph& g, Budget& budget) {
    int best = 1;
    for (const ExceptionalPair& p : exceptional_pairs(g, budget)) best = std::max(best, p.m);
    return best;
}

namespace {

// Exhaustive matching search over the cycle-pairing graph. Cycle counts stay
// tiny (the reference graphs have 8-9 minimal odd cycles), so plain
// branch-and-bound with no relaxation is already instant.
int best_matching(const std::vector<OddCycle>& cycles, const std::vector<ExceptionalPair>& pairs,
                  int vertex_count, HoleMatchingMode mode, Budget& budget) {
    std::size_t n = cycles.size();
    auto index_of = [&](const OddCycle& c) {
        auto it = std::lower_bound(cycles.begin(), cycles.end(), c);
        return static_cast<std::size_t>(it - cycles.begin());
    };
    // partners[i] = (j, weight, pair index) with j > i
    struct Edge {
        std::size_t j;
        int w;
        std::size_t pair;
    };
    std::vector<std::vector<Edge>> partners(n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        std::size_t i = index_of(pairs[p].first);
        std::size_t j = index_of(pairs[p].second);
        partners[std::min(i, j)].push_back({std::max(i, j), pairs[p].m, p});
    }
    std::vector<char> used(n, 0);
    std::vector<char> used_vertex(static_cast<std::size_t>(vertex_count) + 1, 0);
    int best = 0;

    auto mark_vertices = [&](std::size_t p, char flag) {
        for (std::size_t v = 0; v < pairs[p].e.size(); ++v)
            if (pairs[p].e[v] != 0) used_vertex[v + 1] = flag;
    };
    auto vertices_free = [&](std::size_t p) {
        for (std::size_t v = 0; v < pairs[p].e.size(); ++v)
            if (pairs[p].e[v] != 0 && used_vertex[v + 1]) return false;
        return true;
    };

    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int acc) {
        budget.charge_subset();
        best = std::max(best, acc);
        while (i < n && used[i]) ++i;
        if (i == n) return;
        used[i] = 1;
        rec(i + 1, acc); // leave cycle i unmatched
        for (const Edge& e : partners[i]) {
            if (used[e.j]) continue;
            if (mode == HoleMatchingMode::VertexDisjoint) {
                if (!vertices_free(e.pair)) continue;
                mark_vertices(e.pair, 1);
            }
            used[e.j] = 1;
            rec(i + 1, acc + e.w);
            used[e.j] = 0;
            if (mode == HoleMatchingMode::VertexDisjoint) mark_vertices(e.pair, 0);
        }
        used[i] = 0;
    };
    rec(0, 0);
    return best;
}

} // namespace

int mu_hole_graph(const SimpleGraph& g, Budget& budget, HoleMatchingMode mode) {
    std::vector<OddCycle> cycles = minimal_odd_cycles(g, budget);
    std::vector<ExceptionalPair> pairs = exceptional_pairs(g, budget);
    if (pairs.empty()) return 1;
    return best_matching(cycles, pairs, g.vertex_count, mode, budget);
}

GraphProfile graph_profile(const SimpleGraph& g, const RunConfig& cfg) {
    GraphProfile out;
    Budget closed_form = cfg.budget.fresh();
    out.cycles = minimal_odd_cycles(g, closed_form);
    out.pairs = exceptional_pairs(g, closed_form);
    for (const ExceptionalPair& p : out.pairs) out.va = std::max(out.va, p.m);
    out.hilb = out.va;
    out.hole = out.pairs.empty()
                   ? 1
                   : best_matching(out.cycles, out.pairs, g.vertex_count,
                                   HoleMatchingMode::DistinctCycles, closed_form);

    Polytope P = edge_polytope(g);

    int first_unknown = 1;
    try {
        Budget b = cfg.budget.fresh();
        for (int k = 1; k <= out.hole; ++k) {
            if (is_idp(P, Int(k), b, cfg.threads, out.hilb).idp) {
                out.midp_exact = true;
                out.midp_lower = out.midp_upper = k;
                break;
            }
            first_unknown = k + 1;
        }
        if (!out.midp_exact)
            throw ConsistencyViolation("no IDP dilation up to the hole threshold");
    } catch (const BudgetExceeded&) {
        out.midp_lower = std::max(first_unknown, out.va);
        out.midp_upper = out.hole;
    }

    try {
        Budget b = cfg.budget.fresh();
        int v = mu_idp(P, b, cfg.threads, out.hilb, out.hole);
        out.idp_exact = true;
        out.idp_lower = out.idp_upper = v;
    } catch (const BudgetExceeded&) {
        out.idp_lower = std::max(out.va, out.midp_lower);
        out.idp_upper = out.hole;
    }
    return out;
}

} // namespace mupoly
