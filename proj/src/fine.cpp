// SPDX-License-Identifier: MIT
#include "hypcone/fine.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace hypcone {

const std::vector<std::uint16_t>& DeletedMetric::row(int iv, int ia) const {
    const std::uint64_t key =
        static_cast<std::uint64_t>(iv) * static_cast<std::uint64_t>(g_.num_vertices()) +
        static_cast<std::uint64_t>(ia);
    auto it = rows_.find(key);
    if (it != rows_.end()) return it->second;

    const int n = g_.num_vertices();
    std::vector<std::uint16_t> dist(static_cast<std::size_t>(n),
                                    static_cast<std::uint16_t>(kUnreachable16));
    if (ia != iv) {
        dist[static_cast<std::size_t>(ia)] = 0;
        std::queue<int> q;
        q.push(ia);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int w : g_.neighbors_by_index(x)) {
                if (w == iv) continue;
                if (dist[static_cast<std::size_t>(w)] == kUnreachable16) {
                    dist[static_cast<std::size_t>(w)] =
                        static_cast<std::uint16_t>(dist[static_cast<std::size_t>(x)] + 1);
                    q.push(w);
                }
            }
        }
    }
    return rows_.emplace(key, std::move(dist)).first->second;
}

int DeletedMetric::dist_without_idx(int iv, int ia, int ib) const {
    if (ia == iv || ib == iv) return -1;
    if (ia == ib) return 0;
    int d = row(iv, ia)[static_cast<std::size_t>(ib)];
    return d == kUnreachable16 ? -1 : d;
}

int DeletedMetric::dist_without(int v, int a, int b) const {
    return dist_without_idx(g_.the_index(v), g_.the_index(a), g_.the_index(b));
}

DistanceMatrix deleted_matrix(const Graph& g, int v) {
    const int n = g.num_vertices();
    const int iv = g.the_index(v);
    DistanceMatrix m(n);
    std::vector<int> dist(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnreachable16);
        if (s != iv) {
            dist[static_cast<std::size_t>(s)] = 0;
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int w : g.neighbors_by_index(x)) {
                    if (w == iv) continue;
                    if (dist[static_cast<std::size_t>(w)] == kUnreachable16) {
                        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(x)] + 1;
                        q.push(w);
                    }
                }
            }
        }
        for (int t = 0; t < n; ++t) m.set(s, t, dist[static_cast<std::size_t>(t)]);
    }
    return m;
}

AngleValue angle_edges(const Graph& g, const DeletedMetric& dm, int v, Edge e1, Edge e2) {
    auto other = [v](Edge e) -> int {
        if (e.first == v) return e.second;
        if (e.second == v) return e.first;
        throw VertexNotOnEdges("vertex " + std::to_string(v) + " not on edge {" +
                               std::to_string(e.first) + "," + std::to_string(e.second) + "}");
    };
    int w1 = other(e1), w2 = other(e2);
    if (!g.has_edge(e1.first, e1.second) || !g.has_edge(e2.first, e2.second))
        throw Error("angle_edges: edge not in graph");
    if (w1 == w2) return AngleValue::finite(0);  // e1 == e2
    int d = dm.dist_without(v, w1, w2);
    return d < 0 ? AngleValue::infinite() : AngleValue::finite(d);
}

bool angle_vertices_gt(const Graph& g, const DeletedMetric& dm, int v, int a, int b, int theta) {
    if (v == a || v == b)
        throw Error("angle_vertices_gt: endpoint coincides with apex vertex " + std::to_string(v));
    const DistanceMatrix& d = g.distances();
    const int iv = g.the_index(v), ia = g.the_index(a), ib = g.the_index(b);
    std::vector<int> toward_a, toward_b;
    for (int w : g.neighbors_by_index(iv)) {
        if (d(w, ia) == d(iv, ia) - 1) toward_a.push_back(w);
        if (d(w, ib) == d(iv, ib) - 1) toward_b.push_back(w);
    }
    for (int w1 : toward_a)
        for (int w2 : toward_b) {
            if (w1 == w2) {  // same edge: angle 0
                if (theta < 0) return true;
                continue;
            }
            int dd = dm.dist_without_idx(iv, w1, w2);
            if (dd < 0 || dd > theta) return true;
        }
    return false;
}

Cone cone(const Graph& g, const DeletedMetric& dm, Edge e, int theta) {
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second)) throw Error("cone: anchor edge not in graph");
    if (theta < 0) throw Error("cone: negative theta");

    Cone c;
    c.anchor = e;
    c.theta = theta;

    std::set<Edge> seen{e};
    std::queue<std::pair<Edge, int>> frontier;  // (edge, chain length so far)
    frontier.emplace(e, 0);
    while (!frontier.empty()) {
        auto [ec, depth] = frontier.front();
        frontier.pop();
        if (depth == theta) continue;
        for (int v : {ec.first, ec.second}) {
            for (int w : g.neighbors(v)) {
                Edge en = make_edge(v, w);
                if (seen.count(en)) continue;
                if (angle_edges(g, dm, v, ec, en).le(theta)) {
                    seen.insert(en);
                    frontier.emplace(en, depth + 1);
                }
            }
        }
    }

    std::set<int> verts;
    for (const Edge& m : seen) {
        c.edges.push_back(m);
        verts.insert(m.first);
        verts.insert(m.second);
    }
    std::sort(c.edges.begin(), c.edges.end());
    c.vertices.assign(verts.begin(), verts.end());
    return c;
}

namespace {

struct LoopDfs {
    const Graph& g;
    int target;                      // index of u
    int skip_u, skip_v;              // the removed edge, as indices
    int max_len;                     // edges allowed (L-1)
    const std::vector<int>& dist_u;  // distance to target in G minus e
    std::vector<char> on_path;
    std::uint64_t nodes = 0;
    std::uint64_t budget;
    int found = 0;

    void run(int cur, int len) {
        if (++nodes > budget)
            throw BudgetExceeded("simple-loop DFS past " + std::to_string(budget) + " nodes");
        if (cur == target) {
            if (len >= 2) ++found;  // len+1 >= 3: a genuine cycle through e
            return;
        }
        if (len >= max_len) return;
        on_path[static_cast<std::size_t>(cur)] = 1;
        for (int w : g.neighbors_by_index(cur)) {
            if (on_path[static_cast<std::size_t>(w)]) continue;
            if ((cur == skip_u && w == skip_v) || (cur == skip_v && w == skip_u)) continue;
            if (dist_u[static_cast<std::size_t>(w)] < 0 ||
                len + 1 + dist_u[static_cast<std::size_t>(w)] > max_len)
                continue;
            run(w, len + 1);
        }
        on_path[static_cast<std::size_t>(cur)] = 0;
    }
};

} // namespace

int count_simple_loops_through(const Graph& g, Edge e, int L, std::uint64_t node_budget) {
    if (L < 3) return 0;
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second)) throw Error("count_simple_loops_through: edge not in graph");
    const int n = g.num_vertices();
    const int iu = g.the_index(e.first), iv = g.the_index(e.second);

    /* distances to u in G minus e, for pruning */
    std::vector<int> dist_u(static_cast<std::size_t>(n), -1);
    dist_u[static_cast<std::size_t>(iu)] = 0;
    std::queue<int> q;
    q.push(iu);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int w : g.neighbors_by_index(x)) {
            if ((x == iu && w == iv) || (x == iv && w == iu)) continue;
            if (dist_u[static_cast<std::size_t>(w)] < 0) {
                dist_u[static_cast<std::size_t>(w)] = dist_u[static_cast<std::size_t>(x)] + 1;
                q.push(w);
            }
        }
    }

    LoopDfs dfs{g, iu, iu, iv, L - 1, dist_u, std::vector<char>(static_cast<std::size_t>(n), 0),
                0, node_budget, 0};
    if (dist_u[static_cast<std::size_t>(iv)] >= 0) dfs.run(iv, 0);
    return dfs.found;
}

FinenessReport fineness_report(const Graph& g, int L, std::uint64_t node_budget) {
    FinenessReport r;
    r.L = L;
    for (const Edge& e : g.edges()) {
        int c = count_simple_loops_through(g, e, L, node_budget);
        r.per_edge_loop_counts[e] = c;
        r.phi_of_L = std::max(r.phi_of_L, c);
    }
    return r;
}

} // namespace hypcone
