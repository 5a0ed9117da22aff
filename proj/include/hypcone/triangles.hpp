// SPDX-License-Identifier: MIT
#ifndef HYPCONE_TRIANGLES_HPP
#define HYPCONE_TRIANGLES_HPP

#include <vector>

#include "hypcone/fine.hpp"
#include "hypcone/graph.hpp"

namespace hypcone {

/** True iff every geodesic from x to y passes through v: v lies in I(x,y)
 *  and removing v strictly increases (or disconnects) the x-y distance.
 *  Endpoints count as lying on every geodesic. */
bool on_every_geodesic(const Graph& g, const DeletedMetric& dm, int v, int x, int y);

struct TildePoint {
    int base;                // a
    int other1, other2;      // b, c
    int point;               // the tilde point of a
    int distance_from_base;  // d(a, point)
};

/** The furthest vertex from a lying on every geodesic a-b and a-c with both
 *  vertex angles > 50*delta; a itself when no vertex qualifies.  A candidate
 *  equal to b (resp. c) satisfies the corresponding angle condition
 *  trivially, which is what makes the tree specialization (tilde = tripod
 *  center) come out right for collinear triples.  A tie at maximal distance
 *  contradicts the uniqueness property and raises ConstructionFailed. */
TildePoint tilde_point(const Graph& g, const DeletedMetric& dm, int delta, int a, int b, int c);

struct NormalTriangle {
    int a, b, c;
    int ta, tb, tc;  // tilde points of the three corners
    std::vector<int> side_ab, side_ac, side_bc;
    int u, v, w;  // equiradial Gromov-product points on [a,c], [b,c], [a,b]
};

struct NormalTriangleCheck {
    bool prefix_a = false;       // [a,b] and [a,c] coincide between a and ta
    bool prefix_b = false;       // [b,a] and [b,c] coincide between b and tb
    bool prefix_c = false;       // [c,a] and [c,b] coincide between c and tc
    bool middle_angles = false;  // every interior angle of the three middle
                                 // segments is <= 100*delta
    bool all() const { return prefix_a && prefix_b && prefix_c && middle_angles; }
};

/** Construct the normal-form triangle: shared deterministic corner prefixes
 *  [a,ta], [b,tb], [c,tc] joined by deterministic middle geodesics.  The
 *  result is checked before being returned; ConstructionFailed signals a
 *  violated invariant (wrong delta or a genuine counterexample). */
NormalTriangle normal_triangle(const Graph& g, const DeletedMetric& dm, int delta,
                               int a, int b, int c);

/** Independent verification of the four normal-form properties for any
 *  well-formed geodesic triangle (sides must be geodesics between the
 *  corners; that much is a precondition, not one of the four bullets). */
NormalTriangleCheck check_normal_triangle(const Graph& g, const DeletedMetric& dm, int delta,
                                          const NormalTriangle& t);

} // namespace hypcone

#endif // HYPCONE_TRIANGLES_HPP
