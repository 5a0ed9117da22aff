// SPDX-License-Identifier: MIT
#include "hypcone/action.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "hypcone/errors.hpp"

namespace hypcone {

int PartialGroupAction::image(int v) const {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end())
        throw SupportOutsideDomain("partial action: vertex outside the mapped ball");
    return it->second;
}

FinSupp pi_apply(const PartialGroupAction& action, const FinSupp& f) {
    FinSupp out;
    for (const auto& [a, v] : f) out[action.image(a)] += v;
    return out;
}

namespace {

/** <delta_a, delta_b> in H_x: (n+1)^2 times the number of scales k at which
 *  a and b share a class (zero across different spheres). */
double delta_inner(const ClassIndex& idx, int a, int b) {
    const Graph& g = idx.graph();
    int x = idx.basepoint();
    int n = g.dist(x, a);
    if (n != g.dist(x, b)) return 0.0;
    int shared = 0;
    for (int k = 0; k <= n; ++k)
        if (idx.class_pos(a, n, k) == idx.class_pos(b, n, k)) ++shared;
    double w = static_cast<double>(n + 1);
    return w * w * static_cast<double>(shared);
}

} // namespace

double pi_operator_norm(const ClassIndex& idx, const PartialGroupAction& action, int R_dom) {
    const Graph& g = idx.graph();
    int x = idx.basepoint();
    if (x != action.base) throw Error("pi_operator_norm: index and action basepoints differ");
    if (R_dom < 0) throw Error("pi_operator_norm: R_dom must be >= 0");

    std::vector<int> domain;
    for (int id : g.ids())
        if (g.dist(x, id) <= R_dom) domain.push_back(id);
    std::vector<int> images;
    for (int a : domain) {
        auto it = action.vertex_map.find(a);
        if (it == action.vertex_map.end())
            throw MissingTruncationData("pi_operator_norm: action not defined on B(x, R_dom)");
        images.push_back(it->second);
    }
    for (int a : domain)
        if (g.dist(x, a) > idx.max_n())
            throw MissingTruncationData("pi_operator_norm: domain beyond index radius");
    for (int b : images)
        if (g.dist(x, b) > idx.max_n())
            throw MissingTruncationData("pi_operator_norm: image beyond index radius");

    int m = static_cast<int>(domain.size());
    Eigen::MatrixXd gram(m, m), gram_moved(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            gram(i, j) = gram(j, i) = delta_inner(idx, domain[i], domain[j]);
            gram_moved(i, j) = gram_moved(j, i) = delta_inner(idx, images[i], images[j]);
        }

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram_moved, gram);
    if (solver.info() != Eigen::Success)
        throw NonConvergence("pi_operator_norm: generalized eigensolver failed");
    double lambda = solver.eigenvalues().maxCoeff();
    return std::sqrt(std::max(lambda, 0.0));
}

double cocycle_norm_sq(const ClassIndex& idx, const PartialGroupAction& action) {
    int e = idx.basepoint();
    if (e != action.base) throw Error("cocycle_norm_sq: index and action basepoints differ");
    auto it = action.vertex_map.find(e);
    if (it == action.vertex_map.end())
        throw MissingTruncationData("cocycle_norm_sq: basepoint image not materialized");
    int ge = it->second;
    if (ge == e) return 0.0;
    if (idx.graph().dist(e, ge) > idx.max_n())
        throw MissingTruncationData("cocycle_norm_sq: g.e beyond index radius");
    FinSuppInt f;
    f[e] = 1;
    f[ge] = -1;
    return static_cast<double>(h_norm_sq_exact(idx, f));
}

} // namespace hypcone
