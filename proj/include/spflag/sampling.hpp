#pragma once

#include <vector>

#include "spflag/geometry.hpp"
#include "spflag/random.hpp"

namespace spflag {

// sum c_alpha f_alpha with integer c_alpha drawn from [-bound, bound].
QMatrix random_radical_element(Rng& rng, int n, int bound = 3);

// V_k = span{ w_c + sum_{r>k} x_{r,c} w_r : c <= k }, the column span of (I; A; B; C)
// for the k-th truncation of x.
Subspace open_cell_space(const QMatrix& x, int k);
FlagPoint open_cell_flag(const QMatrix& x, const std::vector<int>& d);
// The same spaces for k = 1..2n-1, a point of the degenerate sl_2n flag variety.
std::vector<Subspace> open_cell_sl_flag(const QMatrix& x);

FlagPoint random_open_cell_flag(Rng& rng, const Parabolic& p);

// Walks the P^1 tower in root order, choosing each V_{i,j} at random in its
// fiber. Small coefficients make special positions common.
ResolutionPoint random_resolution_point(Rng& rng, const Parabolic& p);

// Image of span(w_1..w_k) under random symplectic transvections.
Subspace random_isotropic(Rng& rng, int n, int k, int steps = 4);

Subspace random_subspace(Rng& rng, int ambient, int dim, int bound = 3);

// Random nonzero rational with small numerator and denominator.
mpq_class random_small_rational(Rng& rng, int bound = 5);

}  // namespace spflag
