// SPDX-License-Identifier: MIT
#include "hypcone/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "hypcone/errors.hpp"
#include "hypcone/triangles.hpp"

namespace hypcone {

namespace {

/** Flat offsets of the (n, k) class blocks in enumeration order. */
std::vector<std::vector<int>> block_offsets(const ClassIndex& idx, int max_n, int* total) {
    std::vector<std::vector<int>> off(max_n + 1);
    int at = 0;
    for (int n = 0; n <= max_n; ++n) {
        off[n].resize(n + 1);
        for (int k = 0; k <= n; ++k) {
            off[n][k] = at;
            at += static_cast<int>(idx.at(n, k).size());
        }
    }
    if (total) *total = at;
    return off;
}

/** Distance from the basepoint, throwing when outside the index range. */
int support_sphere(const ClassIndex& idx, int a) {
    const Graph& g = idx.graph();
    if (!g.has_vertex(a)) throw SupportOutsideIndex("support vertex is not in the graph");
    int n = g.dist(idx.basepoint(), a);
    if (n > idx.max_n())
        throw SupportOutsideIndex("support vertex beyond the materialized radius");
    return n;
}

template <typename Scalar, typename Fn>
void for_each_class_sum(const ClassIndex& idx, const std::map<int, Scalar>& f, Fn&& fn) {
    // Accumulate class sums of f for every (n, k) block; only blocks whose
    // sphere actually meets supp(f) contribute.
    for (int n = 0; n <= idx.max_n(); ++n) {
        for (int k = 0; k <= n; ++k) {
            std::map<int, Scalar> sums;  // class pos -> sum, ordered
            for (const auto& [a, val] : f) {
                if (idx.graph().dist(idx.basepoint(), a) != n) continue;
                sums[idx.class_pos(a, n, k)] += val;
            }
            for (const auto& [pos, s] : sums) fn(n, k, pos, s);
        }
    }
}

} // namespace

double h_norm_sq(const ClassIndex& idx, const FinSupp& f) {
    for (const auto& [a, v] : f) support_sphere(idx, a);
    double total = 0.0;
    for_each_class_sum(idx, f, [&](int n, int, int, std::complex<double> s) {
        double w = static_cast<double>(n + 1);
        total += w * w * std::norm(s);
    });
    return total;
}

long long h_norm_sq_exact(const ClassIndex& idx, const FinSuppInt& f) {
    for (const auto& [a, v] : f) support_sphere(idx, a);
    long long total = 0;
    for_each_class_sum(idx, f, [&](int n, int, int, long long s) {
        long long w = n + 1;
        total += w * w * s * s;
    });
    return total;
}

std::vector<std::complex<double>> theta(const ClassIndex& idx, const FinSupp& f) {
    for (const auto& [a, v] : f) support_sphere(idx, a);
    int total = 0;
    auto off = block_offsets(idx, idx.max_n(), &total);
    std::vector<std::complex<double>> out(total, 0.0);
    for_each_class_sum(idx, f, [&](int n, int k, int pos, std::complex<double> s) {
        out[off[n][k] + pos] = static_cast<double>(n + 1) * s;
    });
    return out;
}

std::vector<long long> theta_exact(const ClassIndex& idx, const FinSuppInt& f) {
    for (const auto& [a, v] : f) support_sphere(idx, a);
    int total = 0;
    auto off = block_offsets(idx, idx.max_n(), &total);
    std::vector<long long> out(total, 0);
    for_each_class_sum(idx, f, [&](int n, int k, int pos, long long s) {
        out[off[n][k] + pos] = static_cast<long long>(n + 1) * s;
    });
    return out;
}

std::complex<double> phi(const FinSupp& f) {
    std::complex<double> s = 0.0;
    for (const auto& [a, v] : f) s += v;
    return s;
}

namespace {

/** Members of the class a ClassRef points at. */
const std::vector<int>& members_of(const ClassIndex& idx, const ClassRef& r) {
    return idx.at(r.n, r.k)[r.pos].members;
}

/** Position of the class with min-distance point z within idx.at(n, k);
 *  -1 when no class has that profile entry (empty class). */
int find_class_by_min_point(const ClassIndex& idx, int z, int n, int k) {
    if (n < 0 || k < 0 || k > n) return -1;
    if (n > idx.max_n())
        throw MissingTruncationData("decomposition touches spheres beyond the index radius");
    const auto& ball = idx.ball(k);
    auto it = std::lower_bound(ball.begin(), ball.end(), z);
    if (it == ball.end() || *it != z) return -1;
    std::size_t zpos = static_cast<std::size_t>(it - ball.begin());
    const auto& classes = idx.at(n, k);
    for (std::size_t p = 0; p < classes.size(); ++p)
        if (classes[p].profile[zpos] == n - k) return static_cast<int>(p);
    return -1;
}

/** Signed multiplicity check: sum of positive indicators minus negative
 *  ones must equal the indicator of `target` exactly. */
bool indicator_identity_holds(const ClassIndex& idx, const std::vector<ClassRef>& positives,
                              const std::vector<ClassRef>& negatives,
                              const std::vector<int>& target) {
    std::map<int, int> mult;
    for (const auto& r : positives)
        for (int a : members_of(idx, r)) mult[a] += 1;
    for (const auto& r : negatives)
        for (int a : members_of(idx, r)) mult[a] -= 1;
    for (int a : target) mult[a] -= 1;
    for (const auto& [a, m] : mult)
        if (m != 0) return false;
    return true;
}

bool pairwise_disjoint(const ClassIndex& idx, const std::vector<ClassRef>& refs) {
    for (std::size_t i = 0; i < refs.size(); ++i)
        for (std::size_t j = i + 1; j < refs.size(); ++j) {
            const auto& mi = members_of(idx, refs[i]);
            const auto& mj = members_of(idx, refs[j]);
            std::vector<int> common;
            std::set_intersection(mi.begin(), mi.end(), mj.begin(), mj.end(),
                                  std::back_inserter(common));
            if (!common.empty()) return false;
        }
    return true;
}

SignedDecomposition identity_decomposition(const ClassIndex& idx_xprime, const SphereClass& c) {
    SignedDecomposition d;
    d.x = c.basepoint;
    d.xprime = idx_xprime.basepoint();
    d.target = {c.n, c.k, -1};
    d.positives = {{c.n, c.k, idx_xprime.class_pos(c.members.front(), c.n, c.k)}};
    d.max_nprime = c.n;
    return d;
}

} // namespace

SignedDecomposition decompose_class_tree(const Graph& tree, const ClassIndex& idx_x,
                                         const ClassIndex& idx_xprime, const SphereClass& c) {
    if (!is_tree(tree)) throw NotATree("decompose_class_tree: input graph is not a tree");
    int x = idx_x.basepoint();
    int xp = idx_xprime.basepoint();
    if (c.basepoint != x) throw Error("decompose_class_tree: class does not belong to idx_x");
    if (x == xp) {
        auto d = identity_decomposition(idx_xprime, c);
        d.target.pos = idx_x.class_pos(c.members.front(), c.n, c.k);
        return d;
    }

    int n = c.n, k = c.k;
    int d_xx = tree.dist(x, xp);
    auto mdp = min_distance_points(tree, c);
    if (mdp.size() != 1)
        throw Error("decompose_class_tree: tree class must have a unique min-distance point");
    int z = mdp.front();

    SignedDecomposition out;
    out.x = x;
    out.xprime = xp;
    out.target = {n, k, idx_x.class_pos(c.members.front(), n, k)};

    if (tree.dist(x, z) + tree.dist(z, xp) != d_xx) {
        // z off the geodesic [x, x']: the class is a single class at x'.
        int kp = tree.dist(xp, z);
        int np = n - k + kp;
        if (np > idx_xprime.max_n())
            throw MissingTruncationData("decompose_class_tree: sphere beyond index radius");
        out.positives.push_back({np, kp, idx_xprime.class_pos(c.members.front(), np, kp)});
        out.max_nprime = np;
    } else {
        // z = x_{i0} on [x, x']; telescope along the geodesic.
        auto side = some_geodesic(tree, x, xp);
        int i0 = k;
        for (int i = i0; i <= d_xx; ++i) {
            int ni = n - 2 * i + d_xx;
            int pos = find_class_by_min_point(idx_xprime, side[i], ni, d_xx - i);
            if (pos >= 0) {
                out.positives.push_back({ni, d_xx - i, pos});
                out.max_nprime = std::max(out.max_nprime, ni);
            }
            if (i >= 1) {  // i = 0 negative is empty by convention
                int neg = find_class_by_min_point(idx_xprime, side[i - 1], ni, d_xx - i + 1);
                if (neg >= 0) out.negatives.push_back({ni, d_xx - i + 1, neg});
            }
        }
    }

    if (!indicator_identity_holds(idx_xprime, out.positives, out.negatives, c.members))
        throw DecompositionMismatch("decompose_class_tree: indicator identity failed");
    out.positives_disjoint = pairwise_disjoint(idx_xprime, out.positives);
    return out;
}

namespace {

struct Contribution {
    ClassRef pos;
    std::vector<ClassRef> negs;  // sorted

    bool operator<(const Contribution& o) const {
        if (!(pos == o.pos)) return pos < o.pos;
        return negs < o.negs;
    }
    bool operator==(const Contribution& o) const { return pos == o.pos && negs == o.negs; }
};

std::vector<int> contribution_set(const ClassIndex& idx, const Contribution& c) {
    std::vector<int> out = members_of(idx, c.pos);
    for (const auto& r : c.negs) {
        std::vector<int> rest;
        const auto& neg = members_of(idx, r);
        std::set_difference(out.begin(), out.end(), neg.begin(), neg.end(),
                            std::back_inserter(rest));
        out = std::move(rest);
    }
    return out;
}

/** Tilde point of a member a for the change of basepoint x -> x': the
 *  furthest vertex from a lying on every geodesic [a,x] and every [a,x']
 *  with the vertex angle toward x above 50*delta.  The case analysis reads
 *  angles at this point between x and class members, so the old basepoint
 *  never qualifies as a candidate; the new basepoint does, its own angle
 *  clause being empty.  Falls back to a itself when nothing qualifies. */
int decomposition_tilde(const Graph& g, const DeletedMetric& dm, int delta,
                        int x, int xp, int a) {
    int best = a, best_d = 0;
    for (int v : g.ids()) {
        if (v == a || v == x) continue;
        if (g.dist(a, v) + g.dist(v, x) != g.dist(a, x)) continue;
        if (g.dist(a, v) + g.dist(v, xp) != g.dist(a, xp)) continue;
        if (!on_every_geodesic(g, dm, v, a, x) || !on_every_geodesic(g, dm, v, a, xp)) continue;
        if (!angle_vertices_gt(g, dm, v, a, x, 50 * delta)) continue;
        if (v != xp && !angle_vertices_gt(g, dm, v, a, xp, 50 * delta)) continue;
        if (g.dist(a, v) > best_d) {
            best = v;
            best_d = g.dist(a, v);
        }
    }
    return best;
}

/** Smallest k' whose class around a at x' sits inside the target set. */
Contribution contained_class_contribution(const ClassIndex& idx_xprime, int a, int np,
                                          const std::vector<int>& target) {
    for (int kp = 0; kp <= np; ++kp) {
        int pos = idx_xprime.class_pos(a, np, kp);
        const auto& mem = members_of(idx_xprime, {np, kp, pos});
        if (std::includes(target.begin(), target.end(), mem.begin(), mem.end()))
            return {{np, kp, pos}, {}};
    }
    throw DecompositionMismatch("fallback: no contained class found (singleton level failed)");
}

} // namespace

SignedDecomposition decompose_class_general(const Graph& g, const DeletedMetric& dm, int delta,
                                            const ClassIndex& idx_x, const ClassIndex& idx_xprime,
                                            const SphereClass& c) {
    int x = idx_x.basepoint();
    int xp = idx_xprime.basepoint();
    if (c.basepoint != x) throw Error("decompose_class_general: class does not belong to idx_x");

    SignedDecomposition out;
    out.x = x;
    out.xprime = xp;
    out.target = {c.n, c.k, idx_x.class_pos(c.members.front(), c.n, c.k)};

    if (x == xp) {
        auto d = identity_decomposition(idx_xprime, c);
        d.target = out.target;
        return d;
    }

    int n = c.n, k = c.k;
    std::vector<Contribution> contributions;
    bool any_fallback = false;

    for (int a : c.members) {
        int np = g.dist(xp, a);
        if (np > idx_xprime.max_n())
            throw MissingTruncationData("decompose_class_general: sphere beyond index radius");
        out.max_nprime = std::max(out.max_nprime, np);

        Contribution contrib;
        int case_id = 0;
        try {
            NormalTriangle tri = normal_triangle(g, dm, delta, x, xp, a);
            int z = tri.side_ac[k];
            int ta = decomposition_tilde(g, dm, delta, x, xp, a);
            int d_x_ta = g.dist(x, ta);
            int du = gromov_product2(g, a, xp, x) / 2;           // u on [x, a]
            int dv = gromov_product2(g, a, x, xp) / 2;           // v on [x', a]
            int dz_xp = g.dist(xp, z);
            int dta_xp = g.dist(xp, ta);

            if (k > d_x_ta) {
                // (1) z strictly inside [ta, a]: the class transports as is.
                case_id = 1;
                contrib.pos = {np, dz_xp, idx_xprime.class_pos(a, np, dz_xp)};
            } else if (k <= du && dta_xp >= dv + 8 * delta) {
                case_id = 2;
                int kp = dv + 8 * delta;
                if (kp > np) { kp = np; out.clamped = true; }
                contrib.pos = {np, kp, idx_xprime.class_pos(a, np, kp)};
            } else if (k > du && dta_xp >= dz_xp + 3 * delta) {
                case_id = 3;
                int kp = dz_xp + 3 * delta;
                if (kp > np) { kp = np; out.clamped = true; }
                contrib.pos = {np, kp, idx_xprime.class_pos(a, np, kp)};
            } else {
                case_id = 4;
                int kp = dta_xp;
                if (kp > np) { kp = np; out.clamped = true; }
                contrib.pos = {np, kp, idx_xprime.class_pos(a, np, kp)};
                if (kp + 1 <= np) {
                    std::set<ClassRef> negs;
                    for (int ap : members_of(idx_xprime, contrib.pos)) {
                        if (ap == ta) continue;  // the tilde itself always stays in the class
                        if (!angle_vertices_gt(g, dm, ta, x, ap, 24 * delta))
                            negs.insert({np, kp + 1, idx_xprime.class_pos(ap, np, kp + 1)});
                    }
                    contrib.negs.assign(negs.begin(), negs.end());
                }
            }
        } catch (const ConstructionFailed&) {
            contrib = contained_class_contribution(idx_xprime, a, np, c.members);
            case_id = 0;
            any_fallback = true;
        }
        out.case_count[static_cast<std::size_t>(case_id)] += 1;
        contributions.push_back(std::move(contrib));
    }

    auto assemble = [&](const std::vector<Contribution>& raw) {
        // Dedupe identical contributions, then keep only those whose net set
        // is maximal (nested duplicates double-count members).
        std::vector<Contribution> uniq = raw;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<std::vector<int>> sets;
        for (const auto& ct : uniq) sets.push_back(contribution_set(idx_xprime, ct));
        std::vector<Contribution> kept;
        for (std::size_t i = 0; i < uniq.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < uniq.size() && !dominated; ++j) {
                if (i == j) continue;
                bool subset = std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(),
                                            sets[i].end());
                if (subset && (sets[i].size() < sets[j].size() || j < i)) dominated = true;
            }
            if (!dominated) kept.push_back(uniq[i]);
        }
        std::vector<ClassRef> pos, neg;
        for (const auto& ct : kept) {
            pos.push_back(ct.pos);
            neg.insert(neg.end(), ct.negs.begin(), ct.negs.end());
        }
        return std::make_pair(pos, neg);
    };

    auto [pos, neg] = assemble(contributions);
    if (!indicator_identity_holds(idx_xprime, pos, neg, c.members)) {
        // Constructive geometry missed: laminar set-algebra fallback.
        std::vector<Contribution> plain;
        for (int a : c.members)
            plain.push_back(contained_class_contribution(idx_xprime, a, g.dist(xp, a), c.members));
        std::tie(pos, neg) = assemble(plain);
        if (!indicator_identity_holds(idx_xprime, pos, neg, c.members))
            throw DecompositionMismatch("decompose_class_general: fallback identity failed");
        out.fallback = true;
        out.case_count = {};
        out.case_count[0] = static_cast<int>(c.members.size());
    } else if (any_fallback) {
        out.fallback = true;
    }
    out.positives = std::move(pos);
    out.negatives = std::move(neg);
    out.positives_disjoint = pairwise_disjoint(idx_xprime, out.positives);
    return out;
}

BasepointMatrix basepoint_matrix(const ClassIndex& idx_x, const ClassIndex& idx_xprime,
                                 const std::vector<SignedDecomposition>& decompositions,
                                 int max_n_rows) {
    if (max_n_rows > idx_x.max_n()) throw Error("basepoint_matrix: max_n_rows beyond index");
    BasepointMatrix m;
    auto row_off = block_offsets(idx_x, max_n_rows, &m.rows);
    auto col_off = block_offsets(idx_xprime, idx_xprime.max_n(), &m.cols);
    for (int n = 0; n <= max_n_rows; ++n)
        for (int kk = 0; kk <= n; ++kk)
            for (std::size_t p = 0; p < idx_x.at(n, kk).size(); ++p)
                m.row_classes.push_back({n, kk, static_cast<int>(p)});
    for (int n = 0; n <= idx_xprime.max_n(); ++n)
        for (int kk = 0; kk <= n; ++kk)
            for (std::size_t p = 0; p < idx_xprime.at(n, kk).size(); ++p)
                m.col_classes.push_back({n, kk, static_cast<int>(p)});

    std::map<ClassRef, const SignedDecomposition*> by_target;
    for (const auto& d : decompositions) {
        if (!by_target.emplace(d.target, &d).second)
            throw Error("basepoint_matrix: duplicate decomposition for one class");
    }

    std::map<std::pair<int, int>, long long> num;  // (row, col) -> signed sum of (n+1)
    for (int r = 0; r < m.rows; ++r) {
        ClassRef rc = m.row_classes[static_cast<std::size_t>(r)];
        auto it = by_target.find(rc);
        if (it == by_target.end())
            throw IncompleteCover("basepoint_matrix: class without decomposition");
        const SignedDecomposition& d = *it->second;
        for (const auto& ref : d.positives)
            num[{r, col_off[ref.n][ref.k] + ref.pos}] += rc.n + 1;
        for (const auto& ref : d.negatives)
            num[{r, col_off[ref.n][ref.k] + ref.pos}] -= rc.n + 1;
    }
    for (const auto& [key, v] : num) {
        if (v == 0) continue;
        BasepointMatrix::Entry e;
        e.row = key.first;
        e.col = key.second;
        e.num = v;
        e.den = m.col_classes[static_cast<std::size_t>(key.second)].n + 1;
        e.value = static_cast<double>(v) / static_cast<double>(e.den);
        m.entries.push_back(e);
    }
    return m;
}

std::vector<long long> apply_exact(const BasepointMatrix& m, const ClassIndex& idx_xprime,
                                   const FinSuppInt& f) {
    // theta_{x'} coordinate of column c is (n'+1) * S_c, so each term
    // num/(n'+1) * theta_c = num * S_c stays integral.
    std::vector<long long> class_sum(m.col_classes.size(), 0);
    {
        int total = 0;
        auto off = block_offsets(idx_xprime, idx_xprime.max_n(), &total);
        if (total != m.cols) throw Error("apply_exact: index does not match matrix columns");
        for (const auto& [a, v] : f) {
            int n = idx_xprime.graph().dist(idx_xprime.basepoint(), a);
            if (n > idx_xprime.max_n())
                throw SupportOutsideIndex("apply_exact: support beyond index radius");
            for (int k = 0; k <= n; ++k)
                class_sum[static_cast<std::size_t>(off[n][k] + idx_xprime.class_pos(a, n, k))] += v;
        }
    }
    std::vector<long long> out(static_cast<std::size_t>(m.rows), 0);
    for (const auto& e : m.entries)
        out[static_cast<std::size_t>(e.row)] += e.num * class_sum[static_cast<std::size_t>(e.col)];
    return out;
}

std::vector<std::complex<double>> apply(const BasepointMatrix& m,
                                        const std::vector<std::complex<double>>& v) {
    if (static_cast<int>(v.size()) != m.cols) throw Error("apply: dimension mismatch");
    std::vector<std::complex<double>> out(static_cast<std::size_t>(m.rows), 0.0);
    for (const auto& e : m.entries) out[static_cast<std::size_t>(e.row)] += e.value * v[static_cast<std::size_t>(e.col)];
    return out;
}

std::vector<long long> theta_rows_exact(const BasepointMatrix& m, const ClassIndex& idx_x,
                                        const FinSuppInt& f) {
    std::vector<long long> out(m.row_classes.size(), 0);
    for (const auto& [a, v] : f) {
        int n = idx_x.graph().dist(idx_x.basepoint(), a);
        if (n > idx_x.max_n()) throw SupportOutsideIndex("theta_rows_exact: support beyond index");
    }
    for (std::size_t r = 0; r < m.row_classes.size(); ++r) {
        const ClassRef& rc = m.row_classes[r];
        long long s = 0;
        for (const auto& [a, v] : f) {
            if (idx_x.graph().dist(idx_x.basepoint(), a) != rc.n) continue;
            if (idx_x.class_pos(a, rc.n, rc.k) == rc.pos) s += v;
        }
        out[r] = static_cast<long long>(rc.n + 1) * s;
    }
    return out;
}

double operator_norm(const BasepointMatrix& m, double tol) {
    if (m.entries.empty() || m.rows == 0 || m.cols == 0) return 0.0;
    std::mt19937 rng(12345u);
    std::vector<double> v(static_cast<std::size_t>(m.cols));
    for (auto& e : v) e = static_cast<double>(rng() >> 11) / 4194304.0 + 0.5;  // deterministic start
    double nv = 0.0;
    for (double e : v) nv += e * e;
    nv = std::sqrt(nv);
    for (auto& e : v) e /= nv;

    double lambda = 0.0;
    const int cap = 10000;
    for (int it = 0; it < cap; ++it) {
        std::vector<double> w(static_cast<std::size_t>(m.rows), 0.0);
        for (const auto& e : m.entries)
            w[static_cast<std::size_t>(e.row)] += e.value * v[static_cast<std::size_t>(e.col)];
        double new_lambda = 0.0;
        for (double e : w) new_lambda += e * e;  // = ||A v||^2, the Rayleigh quotient of A^T A
        std::vector<double> u(static_cast<std::size_t>(m.cols), 0.0);
        for (const auto& e : m.entries)
            u[static_cast<std::size_t>(e.col)] += e.value * w[static_cast<std::size_t>(e.row)];
        double nu = 0.0;
        for (double e : u) nu += e * e;
        nu = std::sqrt(nu);
        if (nu == 0.0) return 0.0;  // start vector fell in the kernel
        for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i] / nu;
        if (it > 0 && std::abs(new_lambda - lambda) <= tol * std::max(new_lambda, 1e-300)) {
            return std::sqrt(new_lambda);
        }
        lambda = new_lambda;
    }
    throw NonConvergence("operator_norm: power iteration did not converge");
}

int measure_L(const ClassIndex& idx) {
    int best = 0;
    for (int n = 0; n <= idx.max_n(); ++n)
        for (int k = 0; k <= n; ++k) {
            std::map<int, int> per_z;
            for (const auto& c : idx.at(n, k))
                for (int z : min_distance_points(idx.graph(), c)) best = std::max(best, ++per_z[z]);
        }
    return best;
}

int measure_K(const Graph& g, const DeletedMetric& dm, int delta, int L) {
    int biggest = 0;
    for (const auto& [u, v] : g.edges())
        biggest = std::max(biggest, cone(g, dm, {u, v}, 224 * delta).size());
    return L * biggest;
}

} // namespace hypcone
