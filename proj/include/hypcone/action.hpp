// SPDX-License-Identifier: MIT
#ifndef HYPCONE_ACTION_HPP
#define HYPCONE_ACTION_HPP

#include <unordered_map>

#include "hypcone/hilbert.hpp"
#include "hypcone/partition.hpp"

namespace hypcone {

/** Restriction of a graph automorphism (a group element acting on a
 *  materialized space) to a ball around `base`: an injective, adjacency-
 *  preserving vertex map defined on B(base, radius). */
struct PartialGroupAction {
    int base = 0;
    int radius = 0;
    int displacement = 0;  // d(base, image of base)
    std::unordered_map<int, int> vertex_map;

    bool in_domain(int v) const { return vertex_map.count(v) != 0; }
    int image(int v) const;  // throws SupportOutsideDomain when v is unmapped
};

/** pi(g) f = f after precomposition with the inverse map: support moves
 *  forward along the action. */
FinSupp pi_apply(const PartialGroupAction& action, const FinSupp& f);

/** Largest singular value of pi(g) on functions supported in B(x, R_dom),
 *  measured in the H_x norm of `idx` via Gram matrices of the delta basis
 *  and its image. */
double pi_operator_norm(const ClassIndex& idx, const PartialGroupAction& action, int R_dom);

/** h_norm_sq(delta_e - pi(g) delta_e) for e the basepoint of idx. */
double cocycle_norm_sq(const ClassIndex& idx, const PartialGroupAction& action);

} // namespace hypcone

#endif // HYPCONE_ACTION_HPP
