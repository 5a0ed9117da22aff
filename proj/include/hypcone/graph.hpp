// SPDX-License-Identifier: MIT
#ifndef HYPCONE_GRAPH_HPP
#define HYPCONE_GRAPH_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hypcone/errors.hpp"

namespace hypcone {

/** Dense all-pairs distance table over vertex *indices* 0..n-1.
 *  Entries are exact hop counts; the graphs handled here are connected, so
 *  every entry is finite.  uint16 keeps the table compact for sweep-heavy
 *  callers. */
class DistanceMatrix {
public:
    DistanceMatrix() : n_(0) {}
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0) {}

    int n() const { return n_; }
    int operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, int v) { d_[static_cast<std::size_t>(i) * n_ + j] = static_cast<std::uint16_t>(v); }

private:
    int n_;
    std::vector<std::uint16_t> d_;
};

/** Undirected simple connected graph.
 *
 *  Vertices carry external integer ids (arbitrary, not necessarily
 *  contiguous) plus an optional string label.  Internally vertices are
 *  remapped to indices 0..n-1 in ascending id order; when the ids already
 *  are 0..n-1 the mapping is the identity and dense_ids() is true.
 *
 *  All public graph operations speak external ids.  Hot loops that sweep a
 *  whole fixture can work on indices via the_index/of_index and the
 *  DistanceMatrix. */
class Graph {
public:
    Graph() = default;

    int num_vertices() const { return static_cast<int>(ids_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    bool dense_ids() const { return dense_; }
    bool has_vertex(int id) const;

    /** index (0..n-1) of an external id; throws Error on unknown id. */
    int the_index(int id) const;
    /** external id of an index. */
    int of_index(int idx) const { return ids_[static_cast<std::size_t>(idx)]; }

    const std::string& label(int id) const { return labels_[static_cast<std::size_t>(the_index(id))]; }
    const std::vector<int>& ids() const { return ids_; }

    /** neighbor ids of `id`, ascending. */
    std::vector<int> neighbors(int id) const;
    /** neighbor indices of index `idx`, ascending (same order as ids). */
    const std::vector<int>& neighbors_by_index(int idx) const { return adj_[static_cast<std::size_t>(idx)]; }

    int degree(int id) const { return static_cast<int>(adj_[static_cast<std::size_t>(the_index(id))].size()); }

    bool has_edge(int u, int v) const;

    /** canonical edge list as (min id, max id) pairs, sorted. */
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /** shortest-path distance between two ids (cached all-pairs table). */
    int dist(int u, int v) const;

    /** the cached all-pairs table, built on first use (index-based). */
    const DistanceMatrix& distances() const;

    friend Graph build_graph(const std::vector<std::pair<int, std::string>>& vertices,
                             const std::vector<std::pair<int, int>>& edges);

private:
    std::vector<int> ids_;                       // index -> id, ascending
    std::vector<std::string> labels_;            // index -> label
    std::vector<std::vector<int>> adj_;          // index-based adjacency, ascending
    std::vector<std::pair<int, int>> edges_;     // canonical (min,max) id pairs, sorted
    std::unordered_map<int, int> id2idx_;        // empty when dense_
    bool dense_ = false;
    mutable std::unique_ptr<DistanceMatrix> apd_;
};

/** Validating constructor.  Rejects self-loops, duplicate edges, edges with
 *  unknown endpoints and disconnected inputs. */
Graph build_graph(const std::vector<std::pair<int, std::string>>& vertices,
                  const std::vector<std::pair<int, int>>& edges);

/** Convenience overload: vertex set inferred from edge endpoints. */
Graph build_graph(const std::vector<std::pair<int, int>>& edges);

/** The cached all-pairs table of g (index-based). */
const DistanceMatrix& all_pairs_distances(const Graph& g);

/** I(x,y): all vertices on some geodesic from x to y, ids ascending. */
std::vector<int> interval(const Graph& g, int x, int y);

/** Deterministic geodesic from x to y: repeatedly step to the smallest-id
 *  neighbor closer to y.  Returns the full vertex sequence x..y. */
std::vector<int> some_geodesic(const Graph& g, int x, int y);

/** Every geodesic from x to y as vertex sequences in lexicographic id
 *  order; throws EnumerationCapExceeded past `cap` paths. */
std::vector<std::vector<int>> all_geodesics(const Graph& g, int x, int y,
                                            std::size_t cap = 100000);

/** Doubled Gromov product 2*(x,y)_z = d(x,z)+d(y,z)-d(x,y); always an
 *  exact integer, so half-integral products never touch floating point. */
int gromov_product2(const Graph& g, int x, int y, int z);

struct HyperbolicityBudget {
    std::uint64_t max_triples = 200000000ull;  // triple sweep cap
    int max_vertices = 800;                    // interval-distance table guard
};

/** Minimal integer delta such that every side of every geodesic triangle
 *  lies in the delta-neighbourhood of the union of the other two sides
 *  (interval version: sides are the full intervals). */
int hyperbolicity_delta(const Graph& g, const HyperbolicityBudget& budget = {});

struct QuasiCenter {
    int t;       // the quasi-center vertex
    int u;       // equiradial point on [x,z]
    int v;       // equiradial point on [y,z]
    int w;       // equiradial point on [x,y]
    int radius;  // max(d(t,u), d(t,v), d(t,w)), minimized over all vertices
};

/** Equiradial points u,v,w at (floored) Gromov-product distances along the
 *  deterministic sides, plus the vertex minimizing the max distance to the
 *  three (ties broken by smallest id). */
QuasiCenter quasi_center(const Graph& g, int x, int y, int z);

/** True iff g is a tree (connected with n-1 edges). */
bool is_tree(const Graph& g);

} // namespace hypcone

#endif // HYPCONE_GRAPH_HPP
