// SPDX-License-Identifier: MIT
#ifndef HYPCONE_PARTITION_HPP
#define HYPCONE_PARTITION_HPP

#include <vector>

#include "hypcone/fine.hpp"
#include "hypcone/graph.hpp"

namespace hypcone {

/** One cell I_i^{n,k,x} of the sphere S_x^n: the members share every
 *  distance to the ball B(x,k), and `profile` is that shared distance
 *  vector over the sorted vertices of B(x,k). */
struct SphereClass {
    int basepoint = 0;
    int n = 0;
    int k = 0;
    std::vector<int> members;  // sorted ids
    std::vector<int> profile;  // distances to ball(k), ball sorted by id
};

/** Partition of S_x^n by distance profiles to B(x,k), classes ordered
 *  lexicographically by profile. */
std::vector<SphereClass> sphere_partition(const Graph& g, int x, int n, int k);

/** All partitions of the spheres around x for n <= max_n, k <= n, with a
 *  member -> class lookup.  Everything is materialized eagerly; the index
 *  is immutable afterwards. */
class ClassIndex {
public:
    ClassIndex(const Graph& g, int x, int max_n);

    const Graph& graph() const { return *g_; }
    int basepoint() const { return x_; }
    int max_n() const { return max_n_; }

    const std::vector<SphereClass>& at(int n, int k) const;

    /** position of a's class within at(n,k); throws if a is not on S_x^n. */
    int class_pos(int a, int n, int k) const;

    /** sorted ids of B(x,k), k <= max_n. */
    const std::vector<int>& ball(int k) const;

    /** sorted ids of S_x^n. */
    const std::vector<int>& sphere(int n) const;

    /** total number of classes over all (n,k), n <= max_n. */
    int total_classes() const;

private:
    const Graph* g_;
    int x_;
    int max_n_;
    std::vector<std::vector<std::vector<SphereClass>>> classes_;  // [n][k]
    std::vector<std::vector<int>> class_pos_;  // [n][k] flat: index in sphere(n) -> pos
    std::vector<std::vector<int>> balls_;      // [k]
    std::vector<std::vector<int>> spheres_;    // [n]
};

/** The vertices of B(x,k) at minimal distance n-k from the class (the set
 *  is the same for every member). */
std::vector<int> min_distance_points(const Graph& g, const SphereClass& c);

enum class LocalDeterminationVariant {
    BallIntersection,  // agreement on B(x,k) with B(z,3*delta)
    ConeAtEdge         // agreement on the vertices of Cone_{50*delta}(e)
};

/** Exhaustive check that membership in a class is determined by distances
 *  to the local window around any min-distance point z (k = 0 holds
 *  vacuously). */
bool local_determination_check(const Graph& g, const DeletedMetric& dm, int x, int n, int k,
                               int delta, LocalDeterminationVariant variant);

/** Debug check of the laminar-family property across every pair of classes
 *  of the index (same n, any k): disjoint or nested. */
bool check_laminar(const ClassIndex& idx);

} // namespace hypcone

#endif // HYPCONE_PARTITION_HPP
