// SPDX-License-Identifier: MIT
#include "hypcone/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "hypcone/errors.hpp"

namespace hypcone {

namespace {

std::uint64_t fnv1a(const std::vector<int>& v) {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : v) {
        for (int b = 0; b < 4; ++b) {
            h ^= static_cast<std::uint64_t>((static_cast<std::uint32_t>(x) >> (8 * b)) & 0xff);
            h *= 1099511628211ull;
        }
    }
    return h;
}

std::vector<int> ids_at_distance_le(const Graph& g, int x, int k) {
    std::vector<int> out;
    for (int id : g.ids())
        if (g.dist(x, id) <= k) out.push_back(id);
    return out;  // g.ids() ascending, so out is sorted
}

std::vector<int> ids_at_distance_eq(const Graph& g, int x, int n) {
    std::vector<int> out;
    for (int id : g.ids())
        if (g.dist(x, id) == n) out.push_back(id);
    return out;
}

std::vector<SphereClass> sphereClassesOf(const Graph& g, int x, int n, int k,
                                         const std::vector<int>& ball,
                                         const std::vector<int>& sphere) {
    // Group the sphere by distance profile to the ball.  Profiles are
    // fingerprinted first; a fingerprint collision falls back to a full
    // vector comparison.
    std::vector<SphereClass> classes;
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    for (int a : sphere) {
        std::vector<int> prof(ball.size());
        for (std::size_t i = 0; i < ball.size(); ++i) prof[i] = g.dist(a, ball[i]);
        std::uint64_t h = fnv1a(prof);
        int slot = -1;
        for (int cand : buckets[h])
            if (classes[cand].profile == prof) { slot = cand; break; }
        if (slot < 0) {
            slot = static_cast<int>(classes.size());
            SphereClass c;
            c.basepoint = x;
            c.n = n;
            c.k = k;
            c.profile = std::move(prof);
            classes.push_back(std::move(c));
            buckets[h].push_back(slot);
        }
        classes[slot].members.push_back(a);  // sphere ascending -> members sorted
    }
    std::sort(classes.begin(), classes.end(),
              [](const SphereClass& l, const SphereClass& r) { return l.profile < r.profile; });
    return classes;
}

} // namespace

std::vector<SphereClass> sphere_partition(const Graph& g, int x, int n, int k) {
    if (!g.has_vertex(x)) throw Error("sphere_partition: unknown basepoint");
    if (n < 0 || k < 0 || k > n) throw Error("sphere_partition: need 0 <= k <= n");
    return sphereClassesOf(g, x, n, k, ids_at_distance_le(g, x, k), ids_at_distance_eq(g, x, n));
}

ClassIndex::ClassIndex(const Graph& g, int x, int max_n) : g_(&g), x_(x), max_n_(max_n) {
    if (!g.has_vertex(x)) throw Error("ClassIndex: unknown basepoint");
    if (max_n < 0) throw Error("ClassIndex: max_n must be >= 0");
    balls_.resize(max_n + 1);
    spheres_.resize(max_n + 1);
    for (int k = 0; k <= max_n; ++k) balls_[k] = ids_at_distance_le(g, x, k);
    for (int n = 0; n <= max_n; ++n) spheres_[n] = ids_at_distance_eq(g, x, n);
    classes_.resize(max_n + 1);
    class_pos_.resize(static_cast<std::size_t>(max_n + 1) * (max_n + 1));
    for (int n = 0; n <= max_n; ++n) {
        classes_[n].resize(n + 1);
        for (int k = 0; k <= n; ++k) {
            classes_[n][k] = sphereClassesOf(g, x, n, k, balls_[k], spheres_[n]);
            auto& lookup = class_pos_[static_cast<std::size_t>(n) * (max_n + 1) + k];
            lookup.assign(spheres_[n].size(), -1);
            for (std::size_t p = 0; p < classes_[n][k].size(); ++p)
                for (int a : classes_[n][k][p].members) {
                    auto it = std::lower_bound(spheres_[n].begin(), spheres_[n].end(), a);
                    lookup[static_cast<std::size_t>(it - spheres_[n].begin())] =
                        static_cast<int>(p);
                }
        }
    }
}

const std::vector<SphereClass>& ClassIndex::at(int n, int k) const {
    if (n < 0 || n > max_n_ || k < 0 || k > n) throw Error("ClassIndex::at: bad (n, k)");
    return classes_[n][k];
}

int ClassIndex::class_pos(int a, int n, int k) const {
    if (n < 0 || n > max_n_ || k < 0 || k > n) throw Error("ClassIndex::class_pos: bad (n, k)");
    const auto& sph = spheres_[n];
    auto it = std::lower_bound(sph.begin(), sph.end(), a);
    if (it == sph.end() || *it != a)
        throw Error("ClassIndex::class_pos: vertex is not on the requested sphere");
    return class_pos_[static_cast<std::size_t>(n) * (max_n_ + 1) + k]
                     [static_cast<std::size_t>(it - sph.begin())];
}

const std::vector<int>& ClassIndex::ball(int k) const {
    if (k < 0 || k > max_n_) throw Error("ClassIndex::ball: bad k");
    return balls_[k];
}

const std::vector<int>& ClassIndex::sphere(int n) const {
    if (n < 0 || n > max_n_) throw Error("ClassIndex::sphere: bad n");
    return spheres_[n];
}

int ClassIndex::total_classes() const {
    int total = 0;
    for (const auto& per_n : classes_)
        for (const auto& per_k : per_n) total += static_cast<int>(per_k.size());
    return total;
}

std::vector<int> min_distance_points(const Graph& g, const SphereClass& c) {
    if (c.members.empty()) return {};
    std::vector<int> out;
    int a0 = c.members.front();
    for (int z : g.ids())
        if (g.dist(c.basepoint, z) <= c.k && g.dist(z, a0) == c.n - c.k) out.push_back(z);
    return out;
}

bool local_determination_check(const Graph& g, const DeletedMetric& dm, int x, int n, int k,
                               int delta, LocalDeterminationVariant variant) {
    if (k == 0) return true;
    auto classes = sphere_partition(g, x, n, k);
    std::unordered_map<int, int> class_of;
    for (std::size_t p = 0; p < classes.size(); ++p)
        for (int a : classes[p].members) class_of[a] = static_cast<int>(p);
    std::vector<int> sphere = ids_at_distance_eq(g, x, n);

    auto agrees = [&](int a, int b, const std::vector<int>& window) {
        for (int t : window)
            if (g.dist(a, t) != g.dist(b, t)) return false;
        return true;
    };

    for (std::size_t p = 0; p < classes.size(); ++p) {
        const SphereClass& c = classes[p];
        for (int z : min_distance_points(g, c)) {
            std::vector<int> window;
            if (variant == LocalDeterminationVariant::BallIntersection) {
                for (int t : g.ids())
                    if (g.dist(x, t) <= k && g.dist(z, t) <= 3 * delta) window.push_back(t);
            } else {
                // Edge of a geodesic from x through z ending at the class,
                // taken on the x-side of z.
                auto seg = some_geodesic(g, x, z);
                Edge e = make_edge(seg[seg.size() - 2], z);
                window = cone(g, dm, e, 50 * delta).vertices;
            }
            // Within the class all members agree on B(x,k); for the cone
            // variant the window can leave the ball, so quantify over every
            // member rather than a representative.
            bool per_member = variant == LocalDeterminationVariant::ConeAtEdge;
            std::size_t reps = per_member ? c.members.size() : 1;
            for (std::size_t mi = 0; mi < reps; ++mi) {
                int a = c.members[mi];
                for (int ap : sphere)
                    if (agrees(a, ap, window) && class_of[ap] != static_cast<int>(p))
                        return false;
            }
        }
    }
    return true;
}

bool check_laminar(const ClassIndex& idx) {
    for (int n = 0; n <= idx.max_n(); ++n) {
        // Collect every class of the sphere S^n across all k.
        std::vector<const SphereClass*> all;
        for (int k = 0; k <= n; ++k)
            for (const auto& c : idx.at(n, k)) all.push_back(&c);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                std::vector<int> common;
                std::set_intersection(all[i]->members.begin(), all[i]->members.end(),
                                      all[j]->members.begin(), all[j]->members.end(),
                                      std::back_inserter(common));
                std::size_t small = std::min(all[i]->members.size(), all[j]->members.size());
                if (!common.empty() && common.size() != small) return false;
            }
    }
    return true;
}

} // namespace hypcone
