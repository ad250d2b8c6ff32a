#pragma once

#include <cstddef>

#include "jacksep/partition.hpp"
#include "jacksep/rational.hpp"
#include "jacksep/sympoly.hpp"

namespace jacksep {

// Applies the degenerate Calogero-Sutherland operator
//   H_g = sum_i (x_i d/dx_i)^2
//       + g sum_{i<j} (x_i + x_j)/(x_i - x_j) (x_i d/dx_i - x_j d/dx_j)
// to a symmetric polynomial (the result is again symmetric; the divided
// difference acts polynomially on symmetric input).
sym_poly apply_hg(const sym_poly& p, const coupling& g);

// Its eigenvalue on the Jack polynomial indexed by lambda in n variables:
//   E = sum_i lambda_i [lambda_i + g (n + 1 - 2i)].
rational hg_eigenvalue(const partition& lam, std::size_t nvars, const coupling& g);

// The monic Jack polynomial P_lambda in nvars variables, built by
// back-substitution from the eigenvalue problem H_g P = E P with the
// normalization [m_lambda] P = 1. Independent of every hypergeometric
// construction in this library, so it serves as the reference value in the
// verification suites. Throws eigenvalue_collision if two partitions in the
// dominance cone share an eigenvalue at this coupling.
sym_poly jack_oracle(const partition& lam, std::size_t nvars, const coupling& g);

// Constant-term pairing <p, q> = CT[ p(1/x) q(x) prod_{i != j} (1 - x_i/x_j)^g ]
// for a nonnegative integer coupling g (the weight is a Laurent polynomial
// exactly when g is a nonnegative integer). Distinct Jack polynomials are
// orthogonal under this pairing. Requires p, q in the same number of
// variables.
rational constant_term_inner(const sym_poly& p, const sym_poly& q, long g);

}  // namespace jacksep
