#pragma once

#include <map>
#include <string>
#include <utility>

#include "jacksep/rational.hpp"
#include "jacksep/sympoly.hpp"

namespace jacksep {

// Expansion of a symmetric polynomial in two variables over the basis
//
//   p_{m,n} = (x1 x2)^m [(1 - x1)(1 - x2)]^n,
//
// together with an overall factor (x1 x2)^prefactor_power. The terms map
// (m, n) with m, n >= 0 to the coefficient of p_{m,n}; zero coefficients are
// not stored. Two expansions are equal iff they denote the same polynomial
// (the prefactor power is folded in before comparing).
struct pmn_expansion {
    long prefactor_power = 0;
    std::map<std::pair<long, long>, rational> terms;

    bool is_zero() const { return terms.empty(); }
    rational coeff(long m, long n) const;
    void add(long m, long n, const rational& c);

    // Canonical form: the prefactor power absorbs the largest power of
    // (x1 x2) dividing the whole expansion, i.e. min m over stored terms is
    // zero (the zero expansion normalizes to prefactor 0).
    pmn_expansion normalized() const;

    // e.g. "(x1*x2)^2 * (3/2*p_(0,0) - 1/2*p_(0,1))", terms by (m+n, m).
    std::string str() const;
};

bool operator==(const pmn_expansion& a, const pmn_expansion& b);
bool operator!=(const pmn_expansion& a, const pmn_expansion& b);

// Expands the basis combination into the monomial basis (2 variables).
sym_poly pmn_to_sympoly(const pmn_expansion& p);

// Inverse of pmn_to_sympoly; defined for every symmetric polynomial in two
// variables since (x1 x2, (1-x1)(1-x2)) generate the symmetric algebra. The
// result is normalized.
pmn_expansion sympoly_to_pmn(const sym_poly& p);

}  // namespace jacksep
