// SPDX-License-Identifier: MIT
#include "hypcone/report.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hypcone/action.hpp"
#include "hypcone/errors.hpp"
#include "hypcone/graph_io.hpp"

namespace hypcone {

using ordered_json = nlohmann::ordered_json;

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

int exit_code(const Report& r) { return r.all_pass() ? 0 : 1; }

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

std::string json_number(double v) { return ordered_json(v).dump(); }

struct StepBudget {
    long long left;
    void tick(long long n = 1) {
        left -= n;
        if (left < 0) throw BudgetExceeded("sweep step budget exhausted");
    }
};

std::string ids2(const char* an, int a, const char* bn, int b) {
    std::ostringstream os;
    os << an << "=" << a << "," << bn << "=" << b;
    return os.str();
}

std::string ids3(const char* an, int a, const char* bn, int b, const char* cn, int c) {
    std::ostringstream os;
    os << an << "=" << a << "," << bn << "=" << b << "," << cn << "=" << c;
    return os.str();
}

struct LoadedInput {
    Graph own;                             // set when reading a file
    std::optional<TruncatedSpace> space;   // set when generating
    const Graph& g() const { return space ? space->graph : own; }
};

LoadedInput load_input(const RunConfig& cfg) {
    bool has_file = !cfg.graph_file.empty();
    bool has_gen = !cfg.gen_spec.empty();
    if (has_file == has_gen)
        throw Error("exactly one graph source required (--graph or --gen)");
    LoadedInput in;
    if (has_file)
        in.own = read_graph_file(cfg.graph_file);
    else
        in.space = coned_off_ball(parse_free_product(cfg.gen_spec), cfg.radius);
    if (in.g().num_vertices() > cfg.budget_vertices)
        throw BudgetExceeded("graph exceeds --budget-vertices");
    return in;
}

std::vector<std::pair<std::string, std::string>> echo_config(const RunConfig& cfg) {
    return {
        {"graph", cfg.graph_file},
        {"gen", cfg.gen_spec},
        {"radius", std::to_string(cfg.radius)},
        {"base", std::to_string(cfg.base)},
        {"word", cfg.word},
        {"delta", std::to_string(cfg.delta_override)},
        {"format", cfg.format},
        {"seed", std::to_string(cfg.seed)},
        {"budget_vertices", std::to_string(cfg.budget_vertices)},
        {"budget_loops", std::to_string(cfg.budget_loops)},
        {"tree_oracle", cfg.tree_oracle ? "true" : "false"},
    };
}

int measured_delta(const RunConfig& cfg, const Graph& g) {
    if (cfg.delta_override >= 0) return cfg.delta_override;
    HyperbolicityBudget budget;
    budget.max_vertices = cfg.budget_vertices;
    budget.max_triples = static_cast<std::uint64_t>(cfg.budget_loops);
    return hyperbolicity_delta(g, budget);
}

int eccentricity(const Graph& g, int x) {
    int e = 0;
    for (int id : g.ids()) e = std::max(e, g.dist(x, id));
    return e;
}

// The angle, triangle and decomposition statements are quantified over a
// positive thinness constant; a 0-thin graph (a tree, or tree-like after
// coning) is in particular 1-thin, so checks run with at least 1.
int positive_delta(int delta) { return delta > 0 ? delta : 1; }

// ---- audit sweeps ---------------------------------------------------------

void audit_angle_forcing(const Graph& g, const DeletedMetric& dm, int delta, StepBudget& budget,
                         Report& rep, const std::string& prefix) {
    delta = positive_delta(delta);
    CheckResult check{prefix + "angle-forcing-12delta", true, ""};
    const auto& ids = g.ids();
    for (int c : ids) {
        for (std::size_t i = 0; i < ids.size() && check.pass; ++i) {
            int a = ids[i];
            if (a == c) continue;
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                int b = ids[j];
                if (b == c) continue;
                budget.tick();
                if (!angle_vertices_gt(g, dm, c, a, b, 12 * delta)) continue;
                int plain = g.dist(a, b);
                int without = dm.dist_without(c, a, b);
                if (without >= 0 && without <= plain) {
                    check.pass = false;
                    check.witness = ids3("c", c, "a", a, "b", b);
                    break;
                }
            }
        }
        if (!check.pass) break;
    }
    rep.checks.push_back(std::move(check));
}

void audit_angle_triangle(const Graph& g, const DeletedMetric& dm, StepBudget& budget, Report& rep,
                          const std::string& prefix) {
    CheckResult check{prefix + "angle-triangle-inequality", true, ""};
    for (int v : g.ids()) {
        std::vector<Edge> at;
        for (int w : g.neighbors(v)) at.push_back(make_edge(v, w));
        std::size_t deg = at.size();
        for (std::size_t i = 0; i < deg && check.pass; ++i)
            for (std::size_t j = 0; j < deg && check.pass; ++j)
                for (std::size_t k = 0; k < deg; ++k) {
                    if (i == j || j == k || i == k) continue;
                    budget.tick();
                    AngleValue left = angle_edges(g, dm, v, at[i], at[k]);
                    AngleValue mid1 = angle_edges(g, dm, v, at[i], at[j]);
                    AngleValue mid2 = angle_edges(g, dm, v, at[j], at[k]);
                    if (left > mid1 + mid2) {
                        check.pass = false;
                        check.witness = ids3("v", v, "e1", at[i].second, "e3", at[k].second);
                        break;
                    }
                }
        if (!check.pass) break;
    }
    rep.checks.push_back(std::move(check));
}

void audit_cone_monotone(const Graph& g, const DeletedMetric& dm, int delta, StepBudget& budget,
                         Report& rep, const std::string& prefix) {
    delta = positive_delta(delta);
    CheckResult check{prefix + "cone-monotonicity", true, ""};
    int limit = 40;
    for (const auto& [u, v] : g.edges()) {
        if (limit-- == 0) break;
        budget.tick(100);
        Edge e{u, v};
        int s0 = cone(g, dm, e, 0).size();
        int s1 = cone(g, dm, e, delta).size();
        int s2 = cone(g, dm, e, 12 * delta).size();
        if (!(s0 <= s1 && s1 <= s2) || s0 < 3) {  // theta=0 cone is the edge + endpoints
            check.pass = false;
            check.witness = ids2("u", u, "v", v);
            break;
        }
    }
    rep.checks.push_back(std::move(check));
}

// ---- verify helpers -------------------------------------------------------

std::vector<int> sample_distinct(std::mt19937& rng, const std::vector<int>& ids, int count) {
    std::vector<int> out;
    while (static_cast<int>(out.size()) < count) {
        int cand = ids[rng() % ids.size()];
        if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
    }
    return out;
}

void verify_triangles(const Graph& g, const DeletedMetric& dm, int delta, unsigned seed,
                      StepBudget& budget, Report& rep, const std::string& prefix) {
    delta = positive_delta(delta);
    CheckResult tri{prefix + "normal-triangles", true, ""};
    CheckResult qc{prefix + "quasi-center-4delta", true, ""};
    const auto& ids = g.ids();
    if (ids.size() >= 3) {
        std::mt19937 rng(seed);
        int samples = std::min<long long>(2000, static_cast<long long>(ids.size()) * 40);
        for (int s = 0; s < samples; ++s) {
            budget.tick(50);
            auto abc = sample_distinct(rng, ids, 3);
            int a = abc[0], b = abc[1], c = abc[2];
            if (tri.pass) {
                try {
                    NormalTriangle t = normal_triangle(g, dm, delta, a, b, c);
                    if (!check_normal_triangle(g, dm, delta, t).all()) {
                        tri.pass = false;
                        tri.witness = ids3("a", a, "b", b, "c", c);
                    }
                } catch (const ConstructionFailed&) {
                    tri.pass = false;
                    tri.witness = ids3("a", a, "b", b, "c", c) + " (construction failed)";
                }
            }
            if (qc.pass) {
                QuasiCenter q = quasi_center(g, a, b, c);
                if (q.radius > 4 * delta) {
                    qc.pass = false;
                    qc.witness = ids3("x", a, "y", b, "z", c);
                }
            }
            if (!tri.pass && !qc.pass) break;
        }
    }
    rep.checks.push_back(std::move(tri));
    rep.checks.push_back(std::move(qc));
}

void verify_partitions(const Graph& g, int x, bool tree_oracle, StepBudget& budget, Report& rep,
                       const std::string& prefix) {
    int ecc = eccentricity(g, x);
    int max_n = std::min(4, ecc);
    ClassIndex idx(g, x, max_n);
    CheckResult refine{prefix + "partition-refinement", true, ""};
    for (int n = 0; n <= max_n && refine.pass; ++n)
        for (int k = 0; k + 1 <= n && refine.pass; ++k)
            for (const auto& c : idx.at(n, k + 1)) {
                budget.tick(static_cast<long long>(c.members.size()));
                int pos0 = idx.class_pos(c.members.front(), n, k);
                for (int a : c.members)
                    if (idx.class_pos(a, n, k) != pos0) {
                        refine.pass = false;
                        refine.witness = ids2("x", x, "a", a) + ",n=" + std::to_string(n);
                        break;
                    }
            }
    rep.checks.push_back(std::move(refine));

    if (tree_oracle && is_tree(g)) {
        CheckResult oracle{prefix + "partition-tree-oracle", true, ""};
        int cap = std::min(5, ecc);
        for (int n = 1; n <= cap && oracle.pass; ++n)
            for (int k = 0; k <= n && oracle.pass; ++k) {
                auto classes = sphere_partition(g, x, n, k);
                for (const auto& c : classes) {
                    budget.tick(static_cast<long long>(c.members.size()));
                    // In a tree the class of a is determined by the vertex at
                    // distance k on the unique path from x.
                    int key = some_geodesic(g, x, c.members.front())[k];
                    for (int a : c.members)
                        if (some_geodesic(g, x, a)[k] != key) {
                            oracle.pass = false;
                            oracle.witness = ids3("x", x, "a", a, "z", key);
                            break;
                        }
                }
            }
        rep.checks.push_back(std::move(oracle));
    }
}

struct DecompositionStats {
    int fallbacks = 0;
    int clamps = 0;
    int nondisjoint = 0;
};

void verify_decompositions(const Graph& g, const DeletedMetric& dm, int delta, int x,
                           unsigned seed, StepBudget& budget, Report& rep,
                           const std::string& prefix, bool is_tree_graph) {
    delta = positive_delta(delta);
    int ecc = eccentricity(g, x);
    int max_n = std::min(3, ecc);
    ClassIndex idx_x(g, x, max_n);

    std::vector<int> candidates;
    for (int id : g.ids())
        if (id != x && g.dist(x, id) <= 2) candidates.push_back(id);
    std::mt19937 rng(seed + 17);
    while (static_cast<int>(candidates.size()) > 8)
        candidates.erase(candidates.begin() + static_cast<long>(rng() % candidates.size()));

    // Measured counting constant (skipped on edge-heavy graphs).
    long long edge_count = static_cast<long long>(g.edges().size());
    int L = measure_L(idx_x);
    long long K = -1;
    if (edge_count <= 2000) {
        K = measure_K(g, dm, delta, L);
    } else {
        rep.notes.push_back(prefix + "K measurement skipped (edge budget)");
    }

    CheckResult identity{prefix + "decomposition-identity", true, ""};
    CheckResult counting{prefix + "decomposition-counting", true, ""};
    DecompositionStats stats;

    std::optional<BasepointMatrix> matrix;
    std::optional<ClassIndex> matrix_idx;
    int matrix_d = 0;

    for (int xp : candidates) {
        int d = g.dist(x, xp);
        ClassIndex idx_xp(g, xp, max_n + d);
        std::vector<SignedDecomposition> all;
        bool complete = true;
        for (int n = 0; n <= max_n; ++n)
            for (int k = 0; k <= n; ++k)
                for (const auto& c : idx_x.at(n, k)) {
                    budget.tick(10 * static_cast<long long>(c.members.size()));
                    try {
                        SignedDecomposition dec = decompose_class_general(g, dm, delta, idx_x, idx_xp, c);
                        if (dec.fallback) ++stats.fallbacks;
                        if (dec.clamped) ++stats.clamps;
                        if (!dec.positives_disjoint) ++stats.nondisjoint;
                        if (K >= 0) {
                            long long bound = K * (d + 1);
                            if (static_cast<long long>(dec.positives.size()) > bound ||
                                static_cast<long long>(dec.negatives.size()) > bound) {
                                counting.pass = false;
                                counting.witness =
                                    ids2("x", x, "xp", xp) + ",n=" + std::to_string(n) + ",k=" + std::to_string(k);
                            }
                        }
                        all.push_back(std::move(dec));
                    } catch (const DecompositionMismatch&) {
                        identity.pass = false;
                        identity.witness =
                            ids2("x", x, "xp", xp) + ",n=" + std::to_string(n) + ",k=" + std::to_string(k);
                        complete = false;
                    }
                }
        if (!matrix && complete && identity.pass) {
            matrix = basepoint_matrix(idx_x, idx_xp, all, max_n);
            matrix_idx = std::move(idx_xp);
            matrix_d = d;
        }
    }
    rep.checks.push_back(identity);
    if (K >= 0) rep.checks.push_back(counting);
    rep.measured.push_back({prefix.empty() ? "L" : prefix + "L", L});
    if (K >= 0) rep.measured.push_back({prefix.empty() ? "K" : prefix + "K", K});
    if (stats.fallbacks)
        rep.notes.push_back(prefix + "decomposition fallbacks: " + std::to_string(stats.fallbacks));
    if (stats.clamps)
        rep.notes.push_back(prefix + "k' clamps: " + std::to_string(stats.clamps));
    if (stats.nondisjoint)
        rep.notes.push_back(prefix + "non-disjoint positives: " + std::to_string(stats.nondisjoint));

    if (matrix) {
        CheckResult exact{prefix + "matrix-identity-exact", true, ""};
        std::mt19937 frng(seed + 99);
        const auto& ids = g.ids();
        std::vector<int> ball;
        for (int id : ids)
            if (g.dist(x, id) <= max_n) ball.push_back(id);
        for (int trial = 0; trial < 20 && exact.pass; ++trial) {
            FinSuppInt f;
            for (int id : ball)
                if (frng() % 2) f[id] = static_cast<long long>(frng() % 7) - 3;
            auto lhs = apply_exact(*matrix, *matrix_idx, f);
            auto rhs = theta_rows_exact(*matrix, idx_x, f);
            if (lhs != rhs) {
                exact.pass = false;
                exact.witness = "trial=" + std::to_string(trial) + ",x=" + std::to_string(x);
            }
        }
        rep.checks.push_back(std::move(exact));

        double norm = operator_norm(*matrix);
        rep.measured_real.push_back({prefix + "matrix-norm", norm});
        double bound;
        if (is_tree_graph) {
            bound = std::sqrt(2.0 * matrix_d + 2.0) * std::sqrt(2.0 * matrix_d + 3.0) * (matrix_d + 1);
        } else if (K >= 0) {
            bound = static_cast<double>(K) * matrix_d * (matrix_d + 1) +
                    static_cast<double>(K) * (matrix_d + 1);
        } else {
            bound = -1.0;
        }
        if (bound >= 0.0) {
            rep.measured_real.push_back({prefix + "matrix-norm-bound", bound});
            CheckResult nb{prefix + "matrix-norm-bounded", norm <= bound + 1e-9, ""};
            if (!nb.pass) nb.witness = "norm=" + json_number(norm);
            rep.checks.push_back(std::move(nb));
        }
    }
}

void verify_action(const Graph& g, const TruncatedSpace& space, const RunConfig& cfg, int delta,
                   const DeletedMetric& dm, Report& rep, const std::string& prefix) {
    delta = positive_delta(delta);
    int e = space.base;
    std::vector<NormalForm> words;
    if (!cfg.word.empty()) {
        words.push_back(parse_word(space.spec, cfg.word));
    } else {
        for (int v = 0; v < g.num_vertices(); ++v)
            if (space.kinds[v] == VertexKind::Group && v != e && g.dist(e, v) <= 2)
                words.push_back(space.elements[v]);
    }
    if (words.empty()) return;

    // One index deep enough for every sampled action.
    int ecc = eccentricity(g, e);
    std::vector<std::pair<std::string, PartialGroupAction>> actions;
    int need = 0;
    for (const auto& w : words) {
        try {
            PartialGroupAction act = left_translation(space, w);
            need = std::max(need, std::min(act.radius + act.displacement, ecc));
            actions.emplace_back(nf_to_string(w), std::move(act));
        } catch (const EmptyDomain&) {
            rep.notes.push_back(prefix + "word skipped (empty domain): " + nf_to_string(w));
        }
    }
    if (actions.empty()) return;
    ClassIndex idx(g, e, need);

    int L = measure_L(idx);
    long long K = -1;
    if (static_cast<long long>(g.edges().size()) <= 2000) K = measure_K(g, dm, delta, L);

    CheckResult pi_bound{prefix + "pi-norm-bounded", true, ""};
    CheckResult cocycle{prefix + "cocycle-growth", true, ""};
    for (const auto& [wname, act] : actions) {
        int d = act.displacement;
        double norm = pi_operator_norm(idx, act, act.radius);
        rep.measured_real.push_back({prefix + "pi-norm:" + wname, norm});
        if (K >= 0 && pi_bound.pass) {
            double bound = static_cast<double>(K) * d * (d + 1) + static_cast<double>(K) * (d + 1);
            if (norm > bound + 1e-9) {
                pi_bound.pass = false;
                pi_bound.witness = wname + ",norm=" + json_number(norm);
            }
        }
        int ge = act.vertex_map.at(e);
        if (ge != e && cocycle.pass) {
            double csq = cocycle_norm_sq(idx, act);
            double lower = static_cast<double>(d + 1) * (d + 1) + 4.0;
            if (csq < lower - 1e-9) {
                cocycle.pass = false;
                cocycle.witness = wname + ",csq=" + json_number(csq);
            }
        }
    }
    if (K >= 0) rep.checks.push_back(std::move(pi_bound));
    rep.checks.push_back(std::move(cocycle));
}

} // namespace

Report cmd_delta(const RunConfig& cfg) {
    Report rep;
    rep.command = "delta";
    rep.config = echo_config(cfg);
    LoadedInput in = load_input(cfg);
    rep.measured.push_back({"vertices", in.g().num_vertices()});
    rep.measured.push_back({"edges", static_cast<long long>(in.g().edges().size())});
    rep.measured.push_back({"delta", measured_delta(cfg, in.g())});
    return rep;
}

Report cmd_audit(const RunConfig& cfg) {
    Report rep;
    rep.command = "audit";
    rep.config = echo_config(cfg);
    LoadedInput in = load_input(cfg);
    int delta = measured_delta(cfg, in.g());
    rep.measured.push_back({"delta", delta});
    DeletedMetric dm(in.g());
    StepBudget budget{cfg.budget_loops};

    const int loop_len = 6;
    FinenessReport fr = fineness_report(in.g(), loop_len, cfg.budget_loops);
    rep.measured.push_back({"fineness_L", fr.L});
    rep.measured.push_back({"phi_L", fr.phi_of_L});

    audit_angle_forcing(in.g(), dm, delta, budget, rep, "");
    audit_angle_triangle(in.g(), dm, budget, rep, "");
    audit_cone_monotone(in.g(), dm, delta, budget, rep, "");
    return rep;
}

Report cmd_verify(const RunConfig& cfg) {
    Report rep;
    rep.command = "verify";
    rep.config = echo_config(cfg);
    LoadedInput in = load_input(cfg);
    if (!in.g().has_vertex(cfg.base)) throw Error("verify: --base vertex does not exist");
    int delta = measured_delta(cfg, in.g());
    rep.measured.push_back({"delta", delta});
    DeletedMetric dm(in.g());
    StepBudget budget{cfg.budget_loops};

    verify_triangles(in.g(), dm, delta, cfg.seed, budget, rep, "");
    verify_partitions(in.g(), cfg.base, cfg.tree_oracle, budget, rep, "");
    verify_decompositions(in.g(), dm, delta, cfg.base, cfg.seed, budget, rep, "", is_tree(in.g()));
    if (in.space) verify_action(in.g(), *in.space, cfg, delta, dm, rep, "");
    return rep;
}

Report cmd_report(const RunConfig& cfg) {
    Report rep;
    rep.command = "report";
    rep.config = echo_config(cfg);
    StepBudget budget{cfg.budget_loops};

    struct Fixture {
        std::string name;
        Graph own;
        std::optional<TruncatedSpace> space;
        const Graph& g() const { return space ? space->graph : own; }
    };
    std::vector<Fixture> fixtures;
    auto add_graph = [&fixtures](std::string name, Graph g) {
        Fixture fx;
        fx.name = std::move(name);
        fx.own = std::move(g);
        fixtures.push_back(std::move(fx));
    };
    auto add_space = [&fixtures](std::string name, TruncatedSpace sp) {
        Fixture fx;
        fx.name = std::move(name);
        fx.space = std::move(sp);
        fixtures.push_back(std::move(fx));
    };
    add_graph("tree20", random_tree(20, cfg.seed));
    add_graph("tree35", random_tree(35, cfg.seed + 1));
    add_graph("cycle6", cycle(6));
    add_graph("cycle8", cycle(8));
    add_space("Z2xZ3-R3", coned_off_ball(parse_free_product("Z2*Z3"), 3));
    add_space("ZxZ-R3", coned_off_ball(parse_free_product("Z*Z"), 3));

    for (const auto& fx : fixtures) {
        std::string prefix = fx.name + "/";
        const Graph& g = fx.g();
        int delta = hyperbolicity_delta(g);
        rep.measured.push_back({prefix + "delta", delta});
        DeletedMetric dm(g);
        audit_angle_forcing(g, dm, delta, budget, rep, prefix);
        verify_triangles(g, dm, delta, cfg.seed, budget, rep, prefix);
        verify_partitions(g, 0, true, budget, rep, prefix);
        verify_decompositions(g, dm, delta, 0, cfg.seed, budget, rep, prefix, is_tree(g));
        if (fx.space) {
            RunConfig sub = cfg;
            sub.word.clear();
            verify_action(g, *fx.space, sub, delta, dm, rep, prefix);
        }
    }
    return rep;
}

// ---- rendering ------------------------------------------------------------

std::string render_report(const Report& r, const std::string& format) {
    if (format != "json" && format != "csv") throw Error("unknown report format: " + format);
    if (format == "csv") {
        std::ostringstream os;
        os << "section,name,value,witness\n";
        auto row = [&os](const std::string& section, const std::string& name,
                         const std::string& value, const std::string& witness) {
            os << section << "," << csv_escape(name) << "," << csv_escape(value) << ","
               << csv_escape(witness) << "\n";
        };
        std::vector<std::pair<std::string, std::string>> cfg = r.config;
        std::stable_sort(cfg.begin(), cfg.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [k, v] : cfg) row("config", k, v, "");
        auto meas = r.measured;
        std::stable_sort(meas.begin(), meas.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [k, v] : meas) row("measured", k, std::to_string(v), "");
        auto measr = r.measured_real;
        std::stable_sort(measr.begin(), measr.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [k, v] : measr) row("measured_real", k, json_number(v), "");
        auto checks = r.checks;
        std::stable_sort(checks.begin(), checks.end(),
                         [](const auto& a, const auto& b) { return a.name < b.name; });
        for (const auto& c : checks) row("check", c.name, c.pass ? "pass" : "fail", c.witness);
        auto notes = r.notes;
        std::stable_sort(notes.begin(), notes.end());
        for (const auto& n : notes) row("note", n, "", "");
        row("summary", "all_pass", r.all_pass() ? "true" : "false", "");
        return os.str();
    }

    ordered_json j;
    j["command"] = r.command;
    ordered_json cfg = ordered_json::object();
    for (const auto& [k, v] : r.config) cfg[k] = v;
    j["config"] = cfg;
    ordered_json meas = ordered_json::object();
    for (const auto& [k, v] : r.measured) meas[k] = v;
    j["measured"] = meas;
    ordered_json measr = ordered_json::object();
    for (const auto& [k, v] : r.measured_real) measr[k] = v;
    j["measured_real"] = measr;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["witness"] = c.witness;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    j["notes"] = r.notes;
    j["all_pass"] = r.all_pass();
    return j.dump(2) + "\n";
}

// ---- value-type dumps -----------------------------------------------------

namespace {

ordered_json edge_json(const Edge& e) { return ordered_json::array({e.first, e.second}); }

} // namespace

std::string to_json_string(const Cone& c) {
    ordered_json j;
    j["anchor"] = edge_json(c.anchor);
    j["theta"] = c.theta;
    ordered_json edges = ordered_json::array();
    for (const auto& e : c.edges) edges.push_back(edge_json(e));
    j["edges"] = edges;
    j["vertices"] = c.vertices;
    j["size"] = c.size();
    return j.dump(2) + "\n";
}

std::string to_json_string(const FinenessReport& r) {
    ordered_json j;
    j["L"] = r.L;
    j["phi_L"] = r.phi_of_L;
    ordered_json per = ordered_json::array();
    for (const auto& [e, count] : r.per_edge_loop_counts) {
        ordered_json row;
        row["edge"] = edge_json(e);
        row["loops"] = count;
        per.push_back(row);
    }
    j["per_edge"] = per;
    return j.dump(2) + "\n";
}

std::string to_json_string(const NormalTriangle& t) {
    ordered_json j;
    j["a"] = t.a;
    j["b"] = t.b;
    j["c"] = t.c;
    j["tilde_a"] = t.ta;
    j["tilde_b"] = t.tb;
    j["tilde_c"] = t.tc;
    j["side_ab"] = t.side_ab;
    j["side_ac"] = t.side_ac;
    j["side_bc"] = t.side_bc;
    j["u"] = t.u;
    j["v"] = t.v;
    j["w"] = t.w;
    return j.dump(2) + "\n";
}

std::string to_json_string(const SphereClass& c) {
    ordered_json j;
    j["basepoint"] = c.basepoint;
    j["n"] = c.n;
    j["k"] = c.k;
    j["profile"] = c.profile;
    j["members"] = c.members;
    return j.dump(2) + "\n";
}

std::string to_json_string(const SignedDecomposition& d) {
    auto ref_json = [](const ClassRef& r) {
        ordered_json j;
        j["n"] = r.n;
        j["k"] = r.k;
        j["pos"] = r.pos;
        return j;
    };
    ordered_json j;
    j["x"] = d.x;
    j["xprime"] = d.xprime;
    j["target"] = ref_json(d.target);
    ordered_json pos = ordered_json::array();
    for (const auto& r : d.positives) pos.push_back(ref_json(r));
    j["positives"] = pos;
    ordered_json neg = ordered_json::array();
    for (const auto& r : d.negatives) neg.push_back(ref_json(r));
    j["negatives"] = neg;
    j["max_nprime"] = d.max_nprime;
    j["clamped"] = d.clamped;
    j["fallback"] = d.fallback;
    j["positives_disjoint"] = d.positives_disjoint;
    j["case_count"] = d.case_count;
    return j.dump(2) + "\n";
}

std::string matrix_to_csv(const BasepointMatrix& m) {
    std::ostringstream os;
    os << "row,col,value\n";
    for (const auto& e : m.entries)
        os << e.row << "," << e.col << "," << json_number(e.value) << "\n";
    return os.str();
}

} // namespace hypcone
