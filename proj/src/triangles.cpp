// SPDX-License-Identifier: MIT
#include "hypcone/triangles.hpp"

#include <algorithm>

namespace hypcone {

bool on_every_geodesic(const Graph& g, const DeletedMetric& dm, int v, int x, int y) {
    if (v == x || v == y) return true;
    const int dxy = g.dist(x, y);
    if (g.dist(x, v) + g.dist(v, y) != dxy) return false;
    int dd = dm.dist_without(v, x, y);
    return dd < 0 || dd > dxy;
}

namespace {

/* Angle condition of the tilde definition at candidate m toward t, with the
 * endpoint convention: at m == t the condition holds trivially, while the
 * base corner itself never qualifies through its own angle. */
bool tilde_angle_cond(const Graph& g, const DeletedMetric& dm, int m, int a, int t, int theta) {
    if (m == t) return true;
    if (m == a) return false;
    return angle_vertices_gt(g, dm, m, a, t, theta);
}

} // namespace

TildePoint tilde_point(const Graph& g, const DeletedMetric& dm, int delta, int a, int b, int c) {
    const int theta = 50 * delta;
    const DistanceMatrix& d = g.distances();
    const int ia = g.the_index(a), ib = g.the_index(b), ic = g.the_index(c);

    TildePoint tp{a, b, c, a, 0};
    int best = -1, best_dist = -1;
    bool tie = false;
    for (int m = 0; m < g.num_vertices(); ++m) {
        /* necessary: m on some geodesic a-b and some geodesic a-c */
        if (d(ia, m) + d(m, ib) != d(ia, ib)) continue;
        if (d(ia, m) + d(m, ic) != d(ia, ic)) continue;
        int id = g.of_index(m);
        if (!tilde_angle_cond(g, dm, id, a, b, theta)) continue;
        if (!tilde_angle_cond(g, dm, id, a, c, theta)) continue;
        if (!on_every_geodesic(g, dm, id, a, b)) continue;
        if (!on_every_geodesic(g, dm, id, a, c)) continue;
        int dist = d(ia, m);
        if (dist > best_dist) {
            best = id;
            best_dist = dist;
            tie = false;
        } else if (dist == best_dist) {
            tie = true;
        }
    }
    if (best >= 0) {
        if (tie)
            throw ConstructionFailed("tilde point not unique for (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
        tp.point = best;
        tp.distance_from_base = best_dist;
    }
    return tp;
}

namespace {

/* path concatenation dropping the repeated joint vertex */
void append_tail(std::vector<int>& out, const std::vector<int>& seg) {
    out.insert(out.end(), seg.begin() + 1, seg.end());
}

std::vector<int> reversed(std::vector<int> p) {
    std::reverse(p.begin(), p.end());
    return p;
}

bool shares_prefix(const std::vector<int>& s1, const std::vector<int>& s2, int upto, int point) {
    if (upto >= static_cast<int>(s1.size()) || upto >= static_cast<int>(s2.size())) return false;
    for (int i = 0; i <= upto; ++i)
        if (s1[static_cast<std::size_t>(i)] != s2[static_cast<std::size_t>(i)]) return false;
    return s1[static_cast<std::size_t>(upto)] == point;
}

/* interior angles of side[from..to] all <= theta */
bool middle_segment_ok(const Graph& g, const DeletedMetric& dm, const std::vector<int>& side,
                       int from, int to, int pt_from, int pt_to, int theta) {
    if (from < 0 || to >= static_cast<int>(side.size()) || from > to) return false;
    if (side[static_cast<std::size_t>(from)] != pt_from ||
        side[static_cast<std::size_t>(to)] != pt_to)
        return false;
    for (int i = from + 1; i < to; ++i) {
        Edge e1 = make_edge(side[static_cast<std::size_t>(i - 1)], side[static_cast<std::size_t>(i)]);
        Edge e2 = make_edge(side[static_cast<std::size_t>(i)], side[static_cast<std::size_t>(i + 1)]);
        if (angle_edges(g, dm, side[static_cast<std::size_t>(i)], e1, e2).gt(theta)) return false;
    }
    return true;
}

} // namespace

NormalTriangle normal_triangle(const Graph& g, const DeletedMetric& dm, int delta,
                               int a, int b, int c) {
    NormalTriangle t;
    t.a = a;
    t.b = b;
    t.c = c;
    t.ta = tilde_point(g, dm, delta, a, b, c).point;
    t.tb = tilde_point(g, dm, delta, b, a, c).point;
    t.tc = tilde_point(g, dm, delta, c, a, b).point;

    const std::vector<int> pa = some_geodesic(g, a, t.ta);
    const std::vector<int> pb = some_geodesic(g, b, t.tb);
    const std::vector<int> pc = some_geodesic(g, c, t.tc);

    auto assemble = [&](const std::vector<int>& from_pfx, int mid_from, int mid_to,
                        const std::vector<int>& to_pfx) {
        std::vector<int> side = from_pfx;
        append_tail(side, some_geodesic(g, mid_from, mid_to));
        append_tail(side, reversed(to_pfx));
        return side;
    };
    t.side_ab = assemble(pa, t.ta, t.tb, pb);
    t.side_ac = assemble(pa, t.ta, t.tc, pc);
    t.side_bc = assemble(pb, t.tb, t.tc, pc);

    auto check_len = [&](const std::vector<int>& side, int from, int to) {
        if (static_cast<int>(side.size()) != g.dist(from, to) + 1)
            throw ConstructionFailed("side " + std::to_string(from) + "-" + std::to_string(to) +
                                     " is not geodesic for (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
    };
    check_len(t.side_ab, a, b);
    check_len(t.side_ac, a, c);
    check_len(t.side_bc, b, c);

    /* equiradial points from the doubled Gromov products, floored onto the
     * triangle's own sides */
    const int at_a = gromov_product2(g, b, c, a) / 2;
    const int at_b = gromov_product2(g, a, c, b) / 2;
    t.u = t.side_ac[static_cast<std::size_t>(at_a)];
    t.v = t.side_bc[static_cast<std::size_t>(at_b)];
    t.w = t.side_ab[static_cast<std::size_t>(at_a)];

    NormalTriangleCheck chk = check_normal_triangle(g, dm, delta, t);
    if (!chk.all())
        throw ConstructionFailed("normal-triangle invariant violated for (" + std::to_string(a) +
                                 "," + std::to_string(b) + "," + std::to_string(c) + "): " +
                                 (chk.prefix_a ? "" : "prefix_a ") + (chk.prefix_b ? "" : "prefix_b ") +
                                 (chk.prefix_c ? "" : "prefix_c ") +
                                 (chk.middle_angles ? "" : "middle_angles"));
    return t;
}

NormalTriangleCheck check_normal_triangle(const Graph& g, const DeletedMetric& dm, int delta,
                                          const NormalTriangle& t) {
    /* well-formedness precondition: sides are geodesic walks between the
     * corners */
    auto is_geodesic = [&](const std::vector<int>& side, int from, int to) {
        if (side.empty() || side.front() != from || side.back() != to) return false;
        if (static_cast<int>(side.size()) != g.dist(from, to) + 1) return false;
        for (std::size_t i = 0; i + 1 < side.size(); ++i)
            if (!g.has_edge(side[i], side[i + 1])) return false;
        return true;
    };
    if (!is_geodesic(t.side_ab, t.a, t.b) || !is_geodesic(t.side_ac, t.a, t.c) ||
        !is_geodesic(t.side_bc, t.b, t.c))
        throw Error("check_normal_triangle: sides are not geodesics between the corners");

    NormalTriangleCheck chk;
    const int da = g.dist(t.a, t.ta);
    const int db = g.dist(t.b, t.tb);
    const int dc = g.dist(t.c, t.tc);

    chk.prefix_a = shares_prefix(t.side_ab, t.side_ac, da, t.ta);
    chk.prefix_b = shares_prefix(reversed(t.side_ab), t.side_bc, db, t.tb);
    chk.prefix_c = shares_prefix(reversed(t.side_ac), reversed(t.side_bc), dc, t.tc);

    const int theta = 100 * delta;
    const int len_ab = static_cast<int>(t.side_ab.size()) - 1;
    const int len_ac = static_cast<int>(t.side_ac.size()) - 1;
    const int len_bc = static_cast<int>(t.side_bc.size()) - 1;
    chk.middle_angles =
        middle_segment_ok(g, dm, t.side_ab, da, len_ab - db, t.ta, t.tb, theta) &&
        middle_segment_ok(g, dm, t.side_ac, da, len_ac - dc, t.ta, t.tc, theta) &&
        middle_segment_ok(g, dm, t.side_bc, db, len_bc - dc, t.tb, t.tc, theta);
    return chk;
}

} // namespace hypcone
