#pragma once

#include <utility>
#include <vector>

#include "qlim/laurent.hpp"
#include "qlim/quiver.hpp"

namespace qlim {

/*
 * Admissible pair sets: k ordered pairs (i,j) of vertices, all j distinct,
 * whose directed graph i->j has no cycle (a loop i=i counts as a 1-cycle).
 * Pairs are 0-based and each set is kept sorted; the list of sets is
 * lexicographic, so enumeration order is deterministic.
 */
using VertexPair = std::pair<int, int>;
using AdmissibleSet = std::vector<VertexPair>;

std::vector<AdmissibleSet> enumerate_admissible(int m, int k);

/*
 * Numerator polynomial A(l) of the closed-form coefficient, with every level
 * uniformly shifted n_j -> n_j + eps:
 *   A = prod_j (n_j+eps) * (1 + sum_{k=1}^{m-1} sum_{admissible} prod_u
 *         C_{i_u j_u} l_{i_u} (n_{j_u}+eps)^{-1}),
 * cleared of the inverses (each target j_u is distinct, so its factor cancels
 * exactly once against the front product).
 */
EpsPoly coeff_A(const QuiverSpec& spec, const MultiIndex& l);

/*
 * Closed-form series coefficient
 *   b_l = (-1)^{sum (C_ii+1) l_i} A(l) prod_j (1/T_j) binom(T_j, l_j),
 *   T_j = n_j + sum_i C_ij l_i,
 * evaluated with the eps-shifted levels and eps -> 0 taken last, which cures
 * every removable 0/0 (and keeps zero levels meaningful).
 * Throws RegularizationFailure if a genuine pole survives.
 */
BigRational coeff_b(const QuiverSpec& spec, const MultiIndex& l);

}  // namespace qlim
