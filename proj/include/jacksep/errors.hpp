#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "jacksep/rational.hpp"

namespace jacksep {

// A terminating hypergeometric sum was requested but no upper parameter is a
// non-positive integer, so the series has no termination witness.
class non_terminating : public std::invalid_argument {
public:
    explicit non_terminating(const std::string& what) : std::invalid_argument(what) {}
};

// A lower Pochhammer symbol (b)_k vanishes for some k inside the summation
// range, so the expression is undefined at this parameter point. Carries the
// offending parameter, the first index at which its Pochhammer symbol
// vanishes, and (when one exists) a hint naming the sibling formula that may
// still apply.
class degenerate_parameter : public std::domain_error {
public:
    degenerate_parameter(const rational& parameter, long index,
                         const std::string& context, const std::string& hint = "");

    const rational& parameter() const { return parameter_; }
    long index() const { return index_; }
    const std::string& hint() const { return hint_; }

private:
    rational parameter_;
    long index_;
    std::string hint_;
};

// The product-form series kept nonzero coefficients beyond the expected
// degree: either an arithmetic bug or a coupling value where the closed form
// does not truncate.
class truncation_failure : public std::logic_error {
public:
    explicit truncation_failure(const std::string& what) : std::logic_error(what) {}
};

// Two distinct partitions share an operator eigenvalue at this coupling, so
// the eigenvector normalization used by the oracle is ill-posed. The caller
// should move to a different coupling value.
class eigenvalue_collision : public std::domain_error {
public:
    eigenvalue_collision(const std::vector<long>& lambda, const std::vector<long>& mu,
                         const rational& g);

    const std::vector<long>& lambda() const { return lambda_; }
    const std::vector<long>& mu() const { return mu_; }
    const rational& g() const { return g_; }

private:
    std::vector<long> lambda_;
    std::vector<long> mu_;
    rational g_;
};

}  // namespace jacksep
