// SPDX-License-Identifier: MIT
#include "hypcone/graph.hpp"

#include <algorithm>
#include <queue>

namespace hypcone {

bool Graph::has_vertex(int id) const {
    if (dense_) return id >= 0 && id < num_vertices();
    return id2idx_.find(id) != id2idx_.end();
}

int Graph::the_index(int id) const {
    if (dense_) {
        if (id < 0 || id >= num_vertices()) throw Error("unknown vertex id " + std::to_string(id));
        return id;
    }
    auto it = id2idx_.find(id);
    if (it == id2idx_.end()) throw Error("unknown vertex id " + std::to_string(id));
    return it->second;
}

std::vector<int> Graph::neighbors(int id) const {
    const auto& a = adj_[static_cast<std::size_t>(the_index(id))];
    std::vector<int> out;
    out.reserve(a.size());
    for (int w : a) out.push_back(ids_[static_cast<std::size_t>(w)]);
    return out;
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[static_cast<std::size_t>(the_index(u))];
    int iv = the_index(v);
    return std::binary_search(a.begin(), a.end(), iv);
}

int Graph::dist(int u, int v) const { return distances()(the_index(u), the_index(v)); }

const DistanceMatrix& Graph::distances() const {
    if (!apd_) {
        const int n = num_vertices();
        auto m = std::make_unique<DistanceMatrix>(n);
        std::vector<int> dist(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            dist[static_cast<std::size_t>(s)] = 0;
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int w : adj_[static_cast<std::size_t>(u)]) {
                    if (dist[static_cast<std::size_t>(w)] < 0) {
                        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                        q.push(w);
                    }
                }
            }
            for (int t = 0; t < n; ++t) m->set(s, t, dist[static_cast<std::size_t>(t)]);
        }
        apd_ = std::move(m);
    }
    return *apd_;
}

Graph build_graph(const std::vector<std::pair<int, std::string>>& vertices,
                  const std::vector<std::pair<int, int>>& edges) {
    if (vertices.empty()) throw Error("graph needs at least one vertex");

    Graph g;
    std::vector<std::pair<int, std::string>> vs = vertices;
    std::sort(vs.begin(), vs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        if (vs[i].first == vs[i + 1].first)
            throw Error("duplicate vertex id " + std::to_string(vs[i].first));

    const int n = static_cast<int>(vs.size());
    g.ids_.reserve(vs.size());
    g.labels_.reserve(vs.size());
    for (auto& v : vs) {
        g.ids_.push_back(v.first);
        g.labels_.push_back(std::move(v.second));
    }
    g.dense_ = (g.ids_.front() == 0 && g.ids_.back() == n - 1);
    if (!g.dense_)
        for (int i = 0; i < n; ++i) g.id2idx_.emplace(g.ids_[static_cast<std::size_t>(i)], i);

    g.adj_.assign(static_cast<std::size_t>(n), {});
    std::vector<std::pair<int, int>> canon;
    canon.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a == b) throw SelfLoop("vertex " + std::to_string(a));
        int ia = g.the_index(a), ib = g.the_index(b);
        canon.emplace_back(std::min(g.ids_[static_cast<std::size_t>(ia)], g.ids_[static_cast<std::size_t>(ib)]),
                           std::max(g.ids_[static_cast<std::size_t>(ia)], g.ids_[static_cast<std::size_t>(ib)]));
        g.adj_[static_cast<std::size_t>(ia)].push_back(ib);
        g.adj_[static_cast<std::size_t>(ib)].push_back(ia);
    }
    std::sort(canon.begin(), canon.end());
    for (std::size_t i = 0; i + 1 < canon.size(); ++i)
        if (canon[i] == canon[i + 1])
            throw DuplicateEdge("{" + std::to_string(canon[i].first) + "," +
                                std::to_string(canon[i].second) + "}");
    g.edges_ = std::move(canon);
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());

    /* connectivity check: one BFS from index 0 */
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.adj_[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != n) throw DisconnectedGraph(std::to_string(n - reached) + " vertices unreachable");
    return g;
}

Graph build_graph(const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> ids;
    ids.reserve(edges.size() * 2);
    for (auto [a, b] : edges) {
        ids.push_back(a);
        ids.push_back(b);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<std::pair<int, std::string>> vs;
    vs.reserve(ids.size());
    for (int id : ids) vs.emplace_back(id, std::string());
    return build_graph(vs, edges);
}

const DistanceMatrix& all_pairs_distances(const Graph& g) { return g.distances(); }

std::vector<int> interval(const Graph& g, int x, int y) {
    const DistanceMatrix& d = g.distances();
    const int ix = g.the_index(x), iy = g.the_index(y);
    const int dxy = d(ix, iy);
    std::vector<int> out;
    for (int m = 0; m < g.num_vertices(); ++m)
        if (d(ix, m) + d(m, iy) == dxy) out.push_back(g.of_index(m));
    return out;  // ids_ ascending by construction
}

std::vector<int> some_geodesic(const Graph& g, int x, int y) {
    const DistanceMatrix& d = g.distances();
    int cur = g.the_index(x);
    const int iy = g.the_index(y);
    std::vector<int> path{g.of_index(cur)};
    while (cur != iy) {
        int r = d(cur, iy);
        for (int w : g.neighbors_by_index(cur)) {  // ascending, first hit = smallest id
            if (d(w, iy) == r - 1) {
                cur = w;
                break;
            }
        }
        path.push_back(g.of_index(cur));
    }
    return path;
}

namespace {

void geodesic_dfs(const Graph& g, const DistanceMatrix& d, int u, int iy,
                  std::vector<int>& path, std::vector<std::vector<int>>& out,
                  std::size_t cap) {
    if (u == iy) {
        if (out.size() >= cap)
            throw EnumerationCapExceeded("more than " + std::to_string(cap) + " geodesics");
        std::vector<int> ids;
        ids.reserve(path.size());
        for (int idx : path) ids.push_back(g.of_index(idx));
        out.push_back(std::move(ids));
        return;
    }
    int r = d(u, iy);
    for (int w : g.neighbors_by_index(u)) {
        if (d(w, iy) == r - 1) {
            path.push_back(w);
            geodesic_dfs(g, d, w, iy, path, out, cap);
            path.pop_back();
        }
    }
}

} // namespace

std::vector<std::vector<int>> all_geodesics(const Graph& g, int x, int y, std::size_t cap) {
    const DistanceMatrix& d = g.distances();
    std::vector<std::vector<int>> out;
    std::vector<int> path{g.the_index(x)};
    geodesic_dfs(g, d, g.the_index(x), g.the_index(y), path, out, cap);
    return out;
}

int gromov_product2(const Graph& g, int x, int y, int z) {
    const DistanceMatrix& d = g.distances();
    const int ix = g.the_index(x), iy = g.the_index(y), iz = g.the_index(z);
    return d(ix, iz) + d(iy, iz) - d(ix, iy);
}

int hyperbolicity_delta(const Graph& g, const HyperbolicityBudget& budget) {
    const int n = g.num_vertices();
    if (n > budget.max_vertices)
        throw BudgetExceeded("hyperbolicity sweep needs " + std::to_string(n) +
                             " vertices, cap is " + std::to_string(budget.max_vertices));
    if (n <= 2) return 0;
    const DistanceMatrix& d = g.distances();

    /* Distance-to-interval table: D[(p*n+q)*n + m] = dist(m, I(p,q)),
     * saturated at 255, plus the interval member lists for p < q. */
    const std::size_t nn = static_cast<std::size_t>(n);
    std::vector<std::uint8_t> D(nn * nn * nn, 0);
    std::vector<std::vector<int>> members(nn * nn / 2 + nn);
    auto pair_slot = [n](int p, int q) {  // p < q
        return static_cast<std::size_t>(p) * n - static_cast<std::size_t>(p) * (p + 1) / 2 +
               static_cast<std::size_t>(q - p - 1);
    };

    std::vector<int> level(nn);
    std::queue<int> bfs;
    for (int p = 0; p < n; ++p) {
        /* p == q: interval is {p}, distances are the matrix row */
        for (int m = 0; m < n; ++m)
            D[(static_cast<std::size_t>(p) * n + p) * nn + m] =
                static_cast<std::uint8_t>(std::min(d(p, m), 255));
        for (int q = p + 1; q < n; ++q) {
            auto& mem = members[pair_slot(p, q)];
            const int dpq = d(p, q);
            std::fill(level.begin(), level.end(), -1);
            for (int m = 0; m < n; ++m)
                if (d(p, m) + d(m, q) == dpq) {
                    mem.push_back(m);
                    level[static_cast<std::size_t>(m)] = 0;
                    bfs.push(m);
                }
            while (!bfs.empty()) {
                int u = bfs.front();
                bfs.pop();
                for (int w : g.neighbors_by_index(u))
                    if (level[static_cast<std::size_t>(w)] < 0) {
                        level[static_cast<std::size_t>(w)] = level[static_cast<std::size_t>(u)] + 1;
                        bfs.push(w);
                    }
            }
            std::uint8_t* row_pq = &D[(static_cast<std::size_t>(p) * n + q) * nn];
            std::uint8_t* row_qp = &D[(static_cast<std::size_t>(q) * n + p) * nn];
            for (int m = 0; m < n; ++m) {
                std::uint8_t v = static_cast<std::uint8_t>(std::min(level[static_cast<std::size_t>(m)], 255));
                row_pq[m] = v;
                row_qp[m] = v;
            }
        }
    }

    int delta = 0;
    std::uint64_t work = 0;
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const auto& mem = members[pair_slot(p, q)];
            for (int z = 0; z < n; ++z) {
                if (z == p || z == q) continue;
                if (++work > budget.max_triples)
                    throw BudgetExceeded("hyperbolicity sweep past " +
                                         std::to_string(budget.max_triples) + " triples");
                const std::uint8_t* dz_p = &D[(static_cast<std::size_t>(p) * n + z) * nn];
                const std::uint8_t* dz_q = &D[(static_cast<std::size_t>(q) * n + z) * nn];
                for (int m : mem) {
                    int v = std::min<int>(dz_p[m], dz_q[m]);
                    if (v > delta) delta = v;
                }
            }
        }
    }
    if (delta >= 255)
        throw BudgetExceeded("hyperbolicity delta saturated the distance table");
    return delta;
}

QuasiCenter quasi_center(const Graph& g, int x, int y, int z) {
    const DistanceMatrix& d = g.distances();
    /* equiradial arc lengths: floor of the Gromov products based at x and y */
    const int at_x = gromov_product2(g, y, z, x) / 2;
    const int at_y = gromov_product2(g, x, z, y) / 2;

    std::vector<int> side_xz = some_geodesic(g, x, z);
    std::vector<int> side_yz = some_geodesic(g, y, z);
    std::vector<int> side_xy = some_geodesic(g, x, y);

    QuasiCenter qc;
    qc.u = side_xz[static_cast<std::size_t>(at_x)];
    qc.v = side_yz[static_cast<std::size_t>(at_y)];
    qc.w = side_xy[static_cast<std::size_t>(at_x)];

    const int iu = g.the_index(qc.u), iv = g.the_index(qc.v), iw = g.the_index(qc.w);
    int best = -1, best_r = 0;
    for (int t = 0; t < g.num_vertices(); ++t) {
        int r = std::max({d(t, iu), d(t, iv), d(t, iw)});
        if (best < 0 || r < best_r) {
            best = t;
            best_r = r;
        }
    }
    qc.t = g.of_index(best);
    qc.radius = best_r;
    return qc;
}

bool is_tree(const Graph& g) { return g.num_edges() == g.num_vertices() - 1; }

} // namespace hypcone
