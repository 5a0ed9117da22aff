// SPDX-License-Identifier: MIT
#include "hypcone/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <random>
#include <set>
#include <unordered_set>

#include "hypcone/errors.hpp"

namespace hypcone {

namespace {

constexpr int kMaxFactors = 4;
constexpr int kMaxRadius = 6;
constexpr int kVertexBudget = 200000;

char factor_letter(int f) { return static_cast<char>('a' + f); }

int reduce_exponent(const FreeProductSpec& spec, int factor, long long e) {
    int m = spec.orders[factor];
    if (m == 0) return static_cast<int>(e);
    long long r = ((e % m) + m) % m;
    return static_cast<int>(r);
}

void check_factor(const FreeProductSpec& spec, int factor) {
    if (factor < 0 || factor >= static_cast<int>(spec.orders.size()))
        throw Error("normal form: factor index out of range");
}

} // namespace

FreeProductSpec parse_free_product(const std::string& text) {
    FreeProductSpec spec;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) throw Error("free product spec: empty factor in '" + text + "'");
        if (token[0] != 'Z') throw Error("free product spec: factor must be Z or Zm, got '" + token + "'");
        if (token.size() == 1) {
            spec.orders.push_back(0);
        } else {
            int m = std::atoi(token.c_str() + 1);
            if (m < 2 || token.find_first_not_of("0123456789", 1) != std::string::npos)
                throw Error("free product spec: bad finite order in '" + token + "'");
            spec.orders.push_back(m);
        }
        token.clear();
    };
    for (char ch : text) {
        if (ch == ' ') continue;
        if (ch == '*') flush();
        else token.push_back(ch);
    }
    flush();
    if (static_cast<int>(spec.orders.size()) > kMaxFactors)
        throw Error("free product spec: at most 4 factors");
    if (spec.orders.size() < 2 && !(spec.orders.size() == 1 && spec.orders[0] == 0))
        throw Error("free product spec: need at least two factors or a single Z");
    return spec;
}

NormalForm nf_identity() { return {}; }

NormalForm nf_syllable(const FreeProductSpec& spec, int factor, int exponent) {
    check_factor(spec, factor);
    NormalForm w;
    int e = reduce_exponent(spec, factor, exponent);
    if (e != 0) w.syllables.push_back({factor, e});
    return w;
}

NormalForm nf_multiply(const FreeProductSpec& spec, const NormalForm& u, const NormalForm& v) {
    NormalForm out = u;
    for (auto [f, e] : v.syllables) {
        if (!out.syllables.empty() && out.syllables.back().first == f) {
            int merged = reduce_exponent(spec, f, static_cast<long long>(out.syllables.back().second) + e);
            if (merged == 0) out.syllables.pop_back();
            else out.syllables.back().second = merged;
        } else {
            out.syllables.push_back({f, e});
        }
    }
    return out;
}

NormalForm nf_inverse(const FreeProductSpec& spec, const NormalForm& w) {
    NormalForm out;
    for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
        out.syllables.push_back({it->first, reduce_exponent(spec, it->first, -static_cast<long long>(it->second))});
    return out;
}

int nf_cost(const FreeProductSpec& spec, const NormalForm& w) {
    int cost = 0;
    for (auto [f, e] : w.syllables) {
        int m = spec.orders[f];
        long long len = m == 0 ? std::llabs(e) : std::min(e, m - e);
        cost += len <= 1 ? 1 : 2;  // one generator edge, or two edges through the cone
    }
    return cost;
}

std::string nf_to_string(const NormalForm& w) {
    if (w.is_identity()) return "e";
    std::string s;
    for (std::size_t i = 0; i < w.syllables.size(); ++i) {
        if (i) s += '*';
        s += factor_letter(w.syllables[i].first);
        if (w.syllables[i].second != 1) s += "^" + std::to_string(w.syllables[i].second);
    }
    return s;
}

NormalForm parse_word(const FreeProductSpec& spec, const std::string& text) {
    if (text.empty() || text == "e") return nf_identity();
    NormalForm out;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) throw Error("word: empty syllable in '" + text + "'");
        int f = token[0] - 'a';
        check_factor(spec, f);
        int e = 1;
        if (token.size() > 1) {
            if (token[1] != '^') throw Error("word: expected '^' in '" + token + "'");
            e = std::atoi(token.c_str() + 2);
            if (e == 0 && token.substr(2) != "0") throw Error("word: bad exponent in '" + token + "'");
        }
        out = nf_multiply(spec, out, nf_syllable(spec, f, e));
        token.clear();
    };
    for (char ch : text) {
        if (ch == ' ') continue;
        if (ch == '*') flush();
        else token.push_back(ch);
    }
    flush();
    return out;
}

int TruncatedSpace::id_of(const NormalForm& w) const {
    auto it = group_id.find(nf_to_string(w));
    return it == group_id.end() ? -1 : it->second;
}

namespace {

using VertexSpec = std::pair<int, std::string>;

/** Shared assembly state for ball materialization. */
struct SpaceBuilder {
    TruncatedSpace space;
    std::vector<int> depth;
    std::set<std::pair<int, int>> edge_set;
    std::unordered_map<std::string, int> cone_id;  // "f:rep" -> id

    int new_vertex(VertexKind kind, NormalForm elem, int factor, int d) {
        int id = static_cast<int>(space.elements.size());
        if (id >= kVertexBudget) throw BudgetExceeded("materialization vertex budget exhausted");
        space.kinds.push_back(kind);
        space.elements.push_back(std::move(elem));
        space.cone_factor.push_back(factor);
        space.cone_complete.push_back(kind == VertexKind::Group);
        depth.push_back(d);
        return id;
    }

    void add_edge(int u, int v) {
        if (u != v) edge_set.insert({std::min(u, v), std::max(u, v)});
    }

    Graph finish_graph(std::vector<std::string> labels) {
        std::vector<VertexSpec> verts;
        for (std::size_t i = 0; i < labels.size(); ++i)
            verts.push_back({static_cast<int>(i), std::move(labels[i])});
        std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
        return build_graph(verts, edges);
    }
};

NormalForm coset_rep(const NormalForm& w, int factor) {
    NormalForm rep = w;
    if (!rep.syllables.empty() && rep.syllables.back().first == factor) rep.syllables.pop_back();
    return rep;
}

std::string cone_key(int factor, const NormalForm& rep) {
    return std::to_string(factor) + ":" + nf_to_string(rep);
}

} // namespace

TruncatedSpace regular_tree_ball(int q, int R) {
    if (q < 2) throw Error("regular_tree_ball: valence must be >= 2");
    if (q > 12) throw BudgetExceeded("regular_tree_ball: valence cap is 12");
    if (R < 0) throw Error("regular_tree_ball: radius must be >= 0");

    SpaceBuilder b;
    b.space.spec.orders.assign(q, 2);
    b.space.base = 0;
    b.space.radius = R;
    b.space.exponent_cap = 0;
    b.new_vertex(VertexKind::Group, nf_identity(), -1, 0);
    b.space.group_id[nf_to_string(nf_identity())] = 0;

    std::deque<int> queue{0};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (b.depth[u] == R) continue;
        const NormalForm h = b.space.elements[u];
        for (int f = 0; f < q; ++f) {
            NormalForm nh = nf_multiply(b.space.spec, h, nf_syllable(b.space.spec, f, 1));
            std::string key = nf_to_string(nh);
            auto it = b.space.group_id.find(key);
            int v;
            if (it == b.space.group_id.end()) {
                v = b.new_vertex(VertexKind::Group, nh, -1, b.depth[u] + 1);
                b.space.group_id[key] = v;
                queue.push_back(v);
            } else {
                v = it->second;
            }
            b.add_edge(u, v);
        }
    }

    std::vector<std::string> labels;
    for (const auto& w : b.space.elements) labels.push_back("group:" + nf_to_string(w));
    b.space.graph = b.finish_graph(std::move(labels));
    return std::move(b.space);
}

TruncatedSpace coned_off_ball(const FreeProductSpec& spec, int R, int exponent_cap) {
    if (spec.orders.empty()) throw Error("coned_off_ball: empty spec");
    if (static_cast<int>(spec.orders.size()) > kMaxFactors)
        throw Error("coned_off_ball: at most 4 factors");
    if (R < 0) throw Error("coned_off_ball: radius must be >= 0");
    if (R > kMaxRadius) throw BudgetExceeded("coned_off_ball: radius cap is 6");
    if (exponent_cap < 1) throw Error("coned_off_ball: exponent cap must be >= 1");
    int F = static_cast<int>(spec.orders.size());

    SpaceBuilder b;
    b.space.spec = spec;
    b.space.base = 0;
    b.space.radius = R;
    b.space.exponent_cap = exponent_cap;
    b.new_vertex(VertexKind::Group, nf_identity(), -1, 0);
    b.space.group_id[nf_to_string(nf_identity())] = 0;

    auto cap_ok = [&](const NormalForm& w) {
        for (auto [f, e] : w.syllables)
            if (spec.orders[f] == 0 && std::abs(e) > exponent_cap) return false;
        return true;
    };

    std::deque<int> queue{0};
    auto visit_group = [&](const NormalForm& w, int from) {
        std::string key = nf_to_string(w);
        auto it = b.space.group_id.find(key);
        int v;
        if (it == b.space.group_id.end()) {
            v = b.new_vertex(VertexKind::Group, w, -1, b.depth[from] + 1);
            b.space.group_id[key] = v;
            queue.push_back(v);
        } else {
            v = it->second;
        }
        b.add_edge(from, v);
    };
    auto visit_cone = [&](int factor, const NormalForm& rep, int from) {
        std::string key = cone_key(factor, rep);
        auto it = b.cone_id.find(key);
        int v;
        if (it == b.cone_id.end()) {
            v = b.new_vertex(VertexKind::Cone, rep, factor, b.depth[from] + 1);
            b.cone_id[key] = v;
            queue.push_back(v);
        } else {
            v = it->second;
        }
        b.add_edge(from, v);
    };
    auto coset_members = [&](int factor, const NormalForm& rep) {
        std::vector<NormalForm> members;
        int m = spec.orders[factor];
        if (m == 0) {
            for (int e = -exponent_cap; e <= exponent_cap; ++e)
                members.push_back(nf_multiply(spec, rep, nf_syllable(spec, factor, e)));
        } else {
            for (int e = 0; e < m; ++e)
                members.push_back(nf_multiply(spec, rep, nf_syllable(spec, factor, e)));
        }
        return members;
    };

    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (b.depth[u] == R) continue;
        if (b.space.kinds[u] == VertexKind::Group) {
            const NormalForm h = b.space.elements[u];
            for (int f = 0; f < F; ++f) {
                for (int step : {1, -1}) {
                    if (step == -1 && spec.orders[f] == 2) break;  // involution: one edge
                    NormalForm nh = nf_multiply(spec, h, nf_syllable(spec, f, step));
                    if (cap_ok(nh)) visit_group(nh, u);
                }
            }
            for (int f = 0; f < F; ++f) visit_cone(f, coset_rep(h, f), u);
        } else {
            int f = b.space.cone_factor[u];
            for (const NormalForm& w : coset_members(f, b.space.elements[u]))
                if (cap_ok(w)) visit_group(w, u);
        }
    }

    // Every coset with a materialized member gets its cone vertex, and every
    // cone vertex is wired to every materialized member of its coset (depth-R
    // fringe vertices never expanded, so both can be missing).
    int group_count = static_cast<int>(b.space.elements.size());
    for (int u = 0; u < group_count; ++u) {
        if (b.space.kinds[u] != VertexKind::Group) continue;
        for (int f = 0; f < F; ++f) {
            NormalForm rep = coset_rep(b.space.elements[u], f);
            std::string key = cone_key(f, rep);
            if (!b.cone_id.count(key)) {
                int v = b.new_vertex(VertexKind::Cone, rep, f, b.depth[u] + 1);
                b.cone_id[key] = v;
            }
        }
    }
    std::vector<int> cone_ids;
    for (std::size_t i = 0; i < b.space.kinds.size(); ++i)
        if (b.space.kinds[i] == VertexKind::Cone) cone_ids.push_back(static_cast<int>(i));
    for (int cid : cone_ids) {
        int f = b.space.cone_factor[cid];
        bool complete = spec.orders[f] != 0;
        std::vector<int> member_ids;  // in coset_members order, -1 for absent members
        for (const NormalForm& w : coset_members(f, b.space.elements[cid])) {
            int gid = b.space.id_of(w);
            member_ids.push_back(gid);
            if (gid >= 0) b.add_edge(cid, gid);
            else complete = false;
        }
        if (spec.orders[f] == 0) complete = false;  // an infinite coset is never complete
        b.space.cone_complete[cid] = complete;
        // A Cayley edge between two fringe vertices is expanded from neither
        // endpoint, but every such edge joins consecutive powers inside one
        // coset (cyclically for a finite factor).  Adding them here keeps the
        // ball an induced subgraph of the coned-off Cayley graph, so partial
        // actions built on it preserve adjacency.
        int n = static_cast<int>(member_ids.size());
        for (int i = 0; i < n; ++i) {
            int j = i + 1;
            if (j == n) {
                if (spec.orders[f] == 0) break;  // no wrap-around on a Z factor
                j = 0;
            }
            if (member_ids[i] >= 0 && member_ids[j] >= 0 && member_ids[i] != member_ids[j])
                b.add_edge(member_ids[i], member_ids[j]);
        }
    }

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < b.space.elements.size(); ++i) {
        if (b.space.kinds[i] == VertexKind::Group) {
            labels.push_back("group:" + nf_to_string(b.space.elements[i]));
        } else {
            std::string lab = std::string("cone:") + factor_letter(b.space.cone_factor[i]) + ":" +
                              nf_to_string(b.space.elements[i]);
            if (!b.space.cone_complete[i]) lab += ":incomplete";
            labels.push_back(lab);
        }
    }
    b.space.graph = b.finish_graph(std::move(labels));
    return std::move(b.space);
}

PartialGroupAction left_translation(const TruncatedSpace& space, const NormalForm& word) {
    const FreeProductSpec& spec = space.spec;
    int n = space.graph.num_vertices();

    std::unordered_map<std::string, int> cone_lookup;
    for (int v = 0; v < n; ++v)
        if (space.kinds[v] == VertexKind::Cone)
            cone_lookup[cone_key(space.cone_factor[v], space.elements[v])] = v;

    // Image of every vertex, or -1 where the image was never materialized.
    std::vector<int> img(n, -1);
    for (int v = 0; v < n; ++v) {
        NormalForm moved = nf_multiply(spec, word, space.elements[v]);
        if (space.kinds[v] == VertexKind::Group) {
            img[v] = space.id_of(moved);
        } else {
            int f = space.cone_factor[v];
            auto it = cone_lookup.find(cone_key(f, coset_rep(moved, f)));
            img[v] = it == cone_lookup.end() ? -1 : it->second;
        }
    }
    if (img[space.base] < 0) throw EmptyDomain("left_translation: word leaves the materialized ball");

    int r_dom = space.radius;
    for (int v = 0; v < n; ++v)
        if (img[v] < 0) r_dom = std::min(r_dom, space.graph.dist(space.base, space.graph.of_index(v)) - 1);
    if (r_dom < 0) throw EmptyDomain("left_translation: empty feasible domain");

    PartialGroupAction act;
    act.base = space.base;
    act.radius = r_dom;
    act.displacement = space.graph.dist(space.base, space.graph.of_index(img[space.base]));
    std::unordered_set<int> seen;
    for (int v = 0; v < n; ++v) {
        int vid = space.graph.of_index(v);
        if (space.graph.dist(space.base, vid) > r_dom) continue;
        act.vertex_map[vid] = space.graph.of_index(img[v]);
        if (!seen.insert(img[v]).second)
            throw Error("left_translation: image map is not injective");
    }
    return act;
}

Graph cycle(int n) {
    if (n < 3) throw Error("cycle: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return build_graph(edges);
}

Graph path(int n) {
    if (n < 1) throw Error("path: need n >= 1");
    std::vector<VertexSpec> verts;
    for (int i = 0; i < n; ++i) verts.push_back({i, ""});
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return build_graph(verts, edges);
}

Graph random_tree(int n, unsigned seed) {
    if (n < 1) throw Error("random_tree: need n >= 1");
    std::vector<VertexSpec> verts;
    for (int i = 0; i < n; ++i) verts.push_back({i, ""});
    std::mt19937 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
        edges.push_back({static_cast<int>(rng() % static_cast<unsigned>(i)), i});
    return build_graph(verts, edges);
}

} // namespace hypcone
