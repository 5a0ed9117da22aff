// SPDX-License-Identifier: MIT
#ifndef HYPCONE_FINE_HPP
#define HYPCONE_FINE_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <unordered_map>
#include <vector>

#include "hypcone/graph.hpp"

namespace hypcone {

/** Undirected edge as a canonical (min id, max id) pair. */
using Edge = std::pair<int, int>;

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/** Non-negative integer angle with a distinguished Infinite value that
 *  dominates every finite value; addition saturates. */
class AngleValue {
public:
    static AngleValue infinite() { return AngleValue(kInf); }
    static AngleValue finite(int v) { return AngleValue(v); }

    bool is_infinite() const { return v_ == kInf; }
    int value() const {
        if (is_infinite()) throw Error("AngleValue: Infinite has no finite value");
        return v_;
    }

    friend bool operator==(AngleValue a, AngleValue b) { return a.v_ == b.v_; }
    friend bool operator<(AngleValue a, AngleValue b) { return a.v_ < b.v_; }
    friend bool operator<=(AngleValue a, AngleValue b) { return a.v_ <= b.v_; }
    friend bool operator>(AngleValue a, AngleValue b) { return a.v_ > b.v_; }
    friend bool operator>=(AngleValue a, AngleValue b) { return a.v_ >= b.v_; }

    /** saturating: Infinite + anything = Infinite */
    friend AngleValue operator+(AngleValue a, AngleValue b) {
        if (a.is_infinite() || b.is_infinite()) return infinite();
        return finite(a.v_ + b.v_);
    }

    bool gt(int theta) const { return is_infinite() || v_ > theta; }
    bool le(int theta) const { return !gt(theta); }

private:
    explicit AngleValue(int v) : v_(v) {}
    static constexpr int kInf = std::numeric_limits<int>::max();
    int v_;
};

/** Cache of vertex-deleted BFS distances d_{X minus {v}}(a,b).  Rows are
 *  memoized per (deleted vertex, source); sweep-style callers can request a
 *  full uncached matrix instead.  Not safe for concurrent use. */
class DeletedMetric {
public:
    explicit DeletedMetric(const Graph& g) : g_(g) {}

    /** distance in X minus {v}; -1 when b is unreachable from a there. */
    int dist_without(int v, int a, int b) const;
    int dist_without_idx(int iv, int ia, int ib) const;

    const Graph& graph() const { return g_; }
    std::size_t cached_rows() const { return rows_.size(); }

private:
    const std::vector<std::uint16_t>& row(int iv, int ia) const;

    const Graph& g_;
    mutable std::unordered_map<std::uint64_t, std::vector<std::uint16_t>> rows_;
};

/** Full vertex-deleted distance matrix (index-based, 65535 = unreachable);
 *  uncached, intended for v-major sweeps. */
DistanceMatrix deleted_matrix(const Graph& g, int v);

constexpr int kUnreachable16 = 65535;

/** Angle between two edges at their shared vertex v:
 *  the distance between the non-v endpoints in X minus {v} (Prop-level
 *  definition; Infinite when they are disconnected there, 0 iff e1 = e2). */
AngleValue angle_edges(const Graph& g, const DeletedMetric& dm, int v, Edge e1, Edge e2);

/** Angle between two vertices seen from v, thresholded: true iff there are
 *  neighbors w1, w2 of v with d(w1,a) = d(v,a)-1, d(w2,b) = d(v,b)-1 and
 *  angle_edges(v, {v,w1}, {v,w2}) > theta. */
bool angle_vertices_gt(const Graph& g, const DeletedMetric& dm, int v, int a, int b, int theta);

struct Cone {
    Edge anchor;
    int theta = 0;
    std::vector<Edge> edges;    // sorted
    std::vector<int> vertices;  // sorted; endpoints of member edges
    int size() const { return static_cast<int>(edges.size() + vertices.size()); }
};

/** Cone_theta(e): edges reachable from e by chains e_0 = e, ..., e_m with
 *  m <= theta and every consecutive angle <= theta at the shared vertex,
 *  plus the endpoints of those edges. */
Cone cone(const Graph& g, const DeletedMetric& dm, Edge e, int theta);

/** Count of simple cycles of length 3..L through edge e, each unoriented
 *  cycle counted once. */
int count_simple_loops_through(const Graph& g, Edge e, int L,
                               std::uint64_t node_budget = 50000000ull);

struct FinenessReport {
    int L = 0;
    std::map<Edge, int> per_edge_loop_counts;
    int phi_of_L = 0;  // max over edges
};

FinenessReport fineness_report(const Graph& g, int L,
                               std::uint64_t node_budget = 50000000ull);

} // namespace hypcone

#endif // HYPCONE_FINE_HPP
