// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypcone/errors.hpp"
#include "hypcone/generators.hpp"
#include "hypcone/triangles.hpp"
#include "oracles.hpp"

using namespace hypcone;

namespace {

Graph tripod() {
    // legs of length 2 from center 0, leaves 2, 4, 6
    return build_graph({{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

int tree_median(const Graph& g, int a, int b, int c) {
    auto pab = oracle::tree_path(g.edges(), a, b);
    auto pac = oracle::tree_path(g.edges(), a, c);
    int m = a;
    for (std::size_t i = 0; i < std::min(pab.size(), pac.size()) && pab[i] == pac[i]; ++i)
        m = pab[i];
    return m;
}

} // namespace

TEST_CASE("on_every_geodesic") {
    Graph t = tripod();
    DeletedMetric dmt(t);
    CHECK(on_every_geodesic(t, dmt, 1, 2, 0));   // interior of the unique path
    CHECK(on_every_geodesic(t, dmt, 2, 2, 0));   // endpoints count
    CHECK(!on_every_geodesic(t, dmt, 3, 2, 0));  // off the path entirely

    Graph c4 = cycle(4);
    DeletedMetric dmc(c4);
    CHECK(!on_every_geodesic(c4, dmc, 1, 0, 2));  // the other geodesic avoids 1
    CHECK(on_every_geodesic(c4, dmc, 1, 1, 3));
}

TEST_CASE("tilde point in a tree is the median") {
    Graph t = tripod();
    DeletedMetric dm(t);
    int delta = hyperbolicity_delta(t);
    REQUIRE(delta == 0);
    TildePoint tp = tilde_point(t, dm, delta, 2, 4, 6);
    CHECK(tp.point == 0);
    CHECK(tp.distance_from_base == 2);

    // random trees: every distinct triple
    for (unsigned seed : {3u, 4u}) {
        Graph g = random_tree(14, seed);
        DeletedMetric dmg(g);
        for (int a : g.ids())
            for (int b : g.ids())
                for (int c : g.ids()) {
                    if (a == b || a == c || b == c) continue;
                    CHECK(tilde_point(g, dmg, 0, a, b, c).point == tree_median(g, a, b, c));
                }
    }
}

TEST_CASE("tilde point collinear conventions") {
    Graph p = path(5);  // 0-1-2-3-4
    DeletedMetric dm(p);
    // median(0,4,2) = 2: the far corner on the segment is the tilde point
    CHECK(tilde_point(p, dm, 0, 0, 4, 2).point == 2);
    // median(2,0,4) = 2 = base: no valid candidate, falls back to the base
    TildePoint tp = tilde_point(p, dm, 0, 2, 0, 4);
    CHECK(tp.point == 2);
    CHECK(tp.distance_from_base == 0);
}

TEST_CASE("normal triangle on a tree is the tripod spanned by the corners") {
    Graph t = tripod();
    DeletedMetric dm(t);
    NormalTriangle tri = normal_triangle(t, dm, 0, 2, 4, 6);
    CHECK(tri.ta == 0);
    CHECK(tri.tb == 0);
    CHECK(tri.tc == 0);
    CHECK(tri.u == 0);
    CHECK(tri.v == 0);
    CHECK(tri.w == 0);
    CHECK(tri.side_ab == std::vector<int>{2, 1, 0, 3, 4});
    NormalTriangleCheck chk = check_normal_triangle(t, dm, 0, tri);
    CHECK(chk.all());
}

TEST_CASE("normal triangles certify on trees, cycles and coned-off balls") {
    struct Fixture {
        const char* name;
        Graph g;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({"tree16", random_tree(16, 8)});
    fixtures.push_back({"C5", cycle(5)});
    fixtures.push_back({"C8", cycle(8)});
    fixtures.push_back({"Z2*Z3 R2", coned_off_ball(parse_free_product("Z2*Z3"), 2).graph});

    for (const auto& fx : fixtures) {
        CAPTURE(fx.name);
        const Graph& g = fx.g;
        int delta = hyperbolicity_delta(g);
        DeletedMetric dm(g);
        const auto& ids = g.ids();
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                for (std::size_t k = j + 1; k < ids.size(); ++k) {
                    NormalTriangle tri = normal_triangle(g, dm, delta, ids[i], ids[j], ids[k]);
                    NormalTriangleCheck chk = check_normal_triangle(g, dm, delta, tri);
                    CAPTURE(ids[i]);
                    CAPTURE(ids[j]);
                    CAPTURE(ids[k]);
                    CHECK(chk.prefix_a);
                    CHECK(chk.prefix_b);
                    CHECK(chk.prefix_c);
                    CHECK(chk.middle_angles);
                }
    }
}

TEST_CASE("normal triangle sides are geodesics with the right endpoints") {
    Graph g = cycle(7);
    int delta = hyperbolicity_delta(g);
    DeletedMetric dm(g);
    NormalTriangle tri = normal_triangle(g, dm, delta, 0, 2, 5);
    auto is_geodesic = [&g](const std::vector<int>& side, int from, int to) {
        if (side.empty() || side.front() != from || side.back() != to) return false;
        if (static_cast<int>(side.size()) != g.dist(from, to) + 1) return false;
        for (std::size_t i = 0; i + 1 < side.size(); ++i)
            if (g.dist(side[i], side[i + 1]) != 1) return false;
        return true;
    };
    CHECK(is_geodesic(tri.side_ab, tri.a, tri.b));
    CHECK(is_geodesic(tri.side_ac, tri.a, tri.c));
    CHECK(is_geodesic(tri.side_bc, tri.b, tri.c));
    // the equiradial points live on their sides
    CHECK(std::find(tri.side_ac.begin(), tri.side_ac.end(), tri.u) != tri.side_ac.end());
    CHECK(std::find(tri.side_bc.begin(), tri.side_bc.end(), tri.v) != tri.side_bc.end());
    CHECK(std::find(tri.side_ab.begin(), tri.side_ab.end(), tri.w) != tri.side_ab.end());
}

TEST_CASE("degenerate triangles (repeated corners) still certify") {
    Graph g = cycle(6);
    int delta = hyperbolicity_delta(g);
    DeletedMetric dm(g);
    for (int a : g.ids())
        for (int b : g.ids()) {
            NormalTriangle tri = normal_triangle(g, dm, delta, a, a, b);
            CHECK(check_normal_triangle(g, dm, delta, tri).all());
        }
}
