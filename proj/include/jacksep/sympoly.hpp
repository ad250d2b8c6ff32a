#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "jacksep/partition.hpp"
#include "jacksep/rational.hpp"

namespace jacksep {

// Expansion into raw monomials: exponent vector (one entry per variable) to
// coefficient. Exponents may be negative, which is how Laurent expansions for
// the constant-term pairing are represented.
using exponent_vec = std::vector<long>;
using raw_poly = std::map<exponent_vec, rational>;

void raw_add(raw_poly& p, const exponent_vec& e, const rational& c);
raw_poly raw_mul(const raw_poly& a, const raw_poly& b);

// Symmetric polynomial in a fixed number of variables, stored in the
// monomial basis: a map from partitions mu (length <= nvars) to the
// coefficient of the monomial symmetric polynomial m_mu.
class sym_poly {
public:
    explicit sym_poly(std::size_t nvars) : nvars_(nvars) {}

    std::size_t nvars() const { return nvars_; }
    const std::map<partition, rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Total degree; -1 for the zero polynomial.
    long degree() const;

    rational coeff(const partition& mu) const;
    void add(const partition& mu, const rational& c);

    // Full monomial expansion (all distinct permutations of each key).
    raw_poly expand() const;

    // Collects a raw expansion back into the monomial basis. Verifies that
    // the input really is symmetric (every orbit present in full, with equal
    // coefficients); throws std::logic_error otherwise. This doubles as a
    // strong internal consistency check for constructions that produce
    // symmetric output only when their coefficient formulas are right.
    static sym_poly collect(std::size_t nvars, const raw_poly& p);

    rational evaluate(const std::vector<rational>& point) const;

    sym_poly& operator+=(const sym_poly& o);
    sym_poly& operator-=(const sym_poly& o);
    friend sym_poly operator+(sym_poly a, const sym_poly& b) { return a += b; }
    friend sym_poly operator-(sym_poly a, const sym_poly& b) { return a -= b; }
    friend sym_poly operator*(const sym_poly& a, const sym_poly& b);
    sym_poly& operator*=(const rational& c);
    friend sym_poly operator*(const rational& c, sym_poly p) { return p *= c; }

    friend bool operator==(const sym_poly& a, const sym_poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const sym_poly& a, const sym_poly& b) { return !(a == b); }

    // Human-readable form, terms in reverse-lexicographic partition order,
    // e.g. "m_(2,1) + 2*m_(1,1,1)".
    std::string str() const;

private:
    std::size_t nvars_;
    std::map<partition, rational> terms_;
};

// Constant polynomial c in nvars variables.
sym_poly sym_const(std::size_t nvars, const rational& c);

// The elementary symmetric polynomial e_k in nvars variables (e_0 = 1,
// e_k = 0 for k > nvars).
sym_poly elementary(std::size_t nvars, long k);

// Expresses p in the elementary basis: the result maps a partition mu (whose
// parts are subscript sizes) to the coefficient of e_mu = prod_i e_{mu_i}.
std::map<partition, rational> monomial_to_elementary(const sym_poly& p);

// Inverse of monomial_to_elementary: expands a combination of e_mu products
// into the monomial basis.
sym_poly elementary_to_monomial(const std::map<partition, rational>& e, std::size_t nvars);

// Substitutes x_last = 1, producing a (generally inhomogeneous) symmetric
// polynomial in one fewer variable.
sym_poly reduce_last_var(const sym_poly& p);

// Inverse of reduce_last_var on homogeneous input: multiplies each monomial
// x_1^a x_2^b ... by the power of the extra last variable that brings the
// total degree to weight. Throws std::invalid_argument if some monomial
// already exceeds weight.
sym_poly homogenize(const sym_poly& p, long weight);

}  // namespace jacksep
