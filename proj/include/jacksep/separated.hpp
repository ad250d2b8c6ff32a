#pragma once

#include <cstddef>
#include <vector>

#include "jacksep/partition.hpp"
#include "jacksep/rational.hpp"
#include "jacksep/unipoly.hpp"

namespace jacksep {

// Value of the separated polynomial at y = 1,
//   b_lambda = prod_{i=1}^{n-1} ((n-i+1) g)_{lambda_i - lambda_n}
//            / ((n-i) g)_{lambda_i - lambda_n}.
// Requires lambda to fit in n = nvars variables.
rational b_lambda(const partition& lam, std::size_t nvars, const coupling& g);

// Value of the n-variable Jack polynomial at (1, ..., 1),
//   c_lambda = prod_{i<j} ((j-i+1) g)_{lambda_i - lambda_j}
//            / ((j-i) g)_{lambda_i - lambda_j}.
rational c_lambda(const partition& lam, std::size_t nvars, const coupling& g);

// The separated polynomial f_lambda of degree lambda_1 and order lambda_n,
// from its hypergeometric product form
//   f = y^{lambda_n} (1-y)^{1-ng} nFn-1(a_1..a_n; b_1..b_{n-1}; y),
//   a_i = lambda_n - lambda_i + 1 - (n-i+1) g,  b_j = a_j + g.
// The two series are multiplied out to degree lambda_1 - lambda_n + margin;
// the coefficients above lambda_1 - lambda_n must all vanish (the series
// telescopes to a polynomial), otherwise truncation_failure is thrown.
uni_poly f_lambda_product_form(const partition& lam, std::size_t nvars, const coupling& g,
                               long margin = 5);

// The same polynomial from the terminating nested-sum form
//   f = b_lambda y^{lambda_n} sum_{k_1=0}^{lambda_1-lambda_2} ...
//       sum_{k_{n-1}=0}^{lambda_{n-1}-lambda_n}
//       prod_i (1-y)^{k_i} (lambda_{i+1}-lambda_i)_{k_i} / k_i!
//              * (i g)_{K_i} / ((i+1) g)_{K_i},   K_i = k_1 + ... + k_i,
// which is defined for every coupling g > 0.
uni_poly f_lambda_sum_form(const partition& lam, std::size_t nvars, const coupling& g);

// Coefficient window of f_lambda: the lambda_1 - lambda_n + 1 coefficients
// of y^{lambda_n} .. y^{lambda_1}, computed from the sum form. The first
// entry is always 1.
std::vector<rational> xi_coeffs(const partition& lam, std::size_t nvars, const coupling& g);

}  // namespace jacksep
