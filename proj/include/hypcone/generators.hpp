// SPDX-License-Identifier: MIT
#ifndef HYPCONE_GENERATORS_HPP
#define HYPCONE_GENERATORS_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "hypcone/action.hpp"
#include "hypcone/graph.hpp"

namespace hypcone {

/** Free product of cyclic groups; order 0 stands for a Z factor, otherwise
 *  the order is finite (>= 2).  One canonical generator per factor. */
struct FreeProductSpec {
    std::vector<int> orders;
};

/** Parse strings like "Z*Z", "Z2*Z3", "Z*Z3*Z3" (at most four factors). */
FreeProductSpec parse_free_product(const std::string& text);

/** Reduced word of a free product: alternating (factor, exponent) syllables,
 *  exponents nonzero and reduced into [1, m-1] for a finite factor of
 *  order m.  Empty = identity. */
struct NormalForm {
    std::vector<std::pair<int, int>> syllables;

    bool is_identity() const { return syllables.empty(); }
    bool operator==(const NormalForm& o) const { return syllables == o.syllables; }
};

NormalForm nf_identity();
NormalForm nf_syllable(const FreeProductSpec& spec, int factor, int exponent);
NormalForm nf_multiply(const FreeProductSpec& spec, const NormalForm& u, const NormalForm& v);
NormalForm nf_inverse(const FreeProductSpec& spec, const NormalForm& w);

/** Distance from the identity in the coned-off graph: one per syllable
 *  whose coset step is a single generator edge, two otherwise (through the
 *  cone vertex). */
int nf_cost(const FreeProductSpec& spec, const NormalForm& w);

/** "e", or syllables like "a^2*b^-1" with letters a.. per factor. */
std::string nf_to_string(const NormalForm& w);

/** Parse the nf_to_string format (also accepts bare letters: "a*b" ). */
NormalForm parse_word(const FreeProductSpec& spec, const std::string& text);

enum class VertexKind { Group, Cone };

/** A ball of a (coned-off) Cayley graph, materialized around the identity.
 *  Ids are breadth-first discovery order, base = 0. */
struct TruncatedSpace {
    Graph graph;
    FreeProductSpec spec;
    int base = 0;
    int radius = 0;
    int exponent_cap = 0;             // |exponent| bound applied to Z-syllables
    std::vector<VertexKind> kinds;    // by vertex id
    std::vector<NormalForm> elements; // group element, or coset representative for cones
    std::vector<int> cone_factor;     // factor of a cone vertex, -1 on group vertices
    std::vector<bool> cone_complete;  // all coset members materialized (true on group vertices)
    std::unordered_map<std::string, int> group_id; // nf_to_string -> vertex id

    int id_of(const NormalForm& w) const; // -1 if not materialized
};

/** Ball of radius R of the q-regular tree, as the Cayley ball of the free
 *  product of q copies of Z/2 in the word metric (no cone vertices). */
TruncatedSpace regular_tree_ball(int q, int R);

/** Ball of coned-off radius R around the identity of the coned-off Cayley
 *  graph of the free product, one cone vertex per coset meeting the ball.
 *  Z-cosets are truncated at |exponent| <= exponent_cap; cone vertices
 *  carry a completeness flag. */
TruncatedSpace coned_off_ball(const FreeProductSpec& spec, int R, int exponent_cap = 2);

/** Left translation by `word` restricted to the largest ball around base
 *  whose image is fully materialized.  Throws EmptyDomain when even the
 *  basepoint has no materialized image. */
PartialGroupAction left_translation(const TruncatedSpace& space, const NormalForm& word);

Graph cycle(int n);
Graph path(int n);
Graph random_tree(int n, unsigned seed);

} // namespace hypcone

#endif // HYPCONE_GENERATORS_HPP
