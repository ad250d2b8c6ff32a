#pragma once

#include <string>
#include <vector>

#include "jacksep/rational.hpp"
#include "jacksep/sympoly.hpp"

namespace jacksep {

// Dense univariate polynomial with exact rational coefficients, stored
// ascending by degree with trailing zeros trimmed (so equality is
// structural).
class uni_poly {
public:
    uni_poly() = default;
    explicit uni_poly(std::vector<rational> coeffs);

    // c * y^k. Requires k >= 0.
    static uni_poly monomial(long k, const rational& c = rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    // Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    // Lowest degree with a nonzero coefficient; -1 for the zero polynomial.
    long order() const;
    rational coeff(long k) const;
    const std::vector<rational>& coeffs() const { return coeffs_; }

    rational evaluate(const rational& y) const;
    // Multiplication by y^k. Requires k >= 0.
    uni_poly shifted(long k) const;

    uni_poly& operator+=(const uni_poly& o);
    uni_poly& operator-=(const uni_poly& o);
    uni_poly& operator*=(const rational& c);
    friend uni_poly operator+(uni_poly a, const uni_poly& b) { return a += b; }
    friend uni_poly operator-(uni_poly a, const uni_poly& b) { return a -= b; }
    friend uni_poly operator*(const uni_poly& a, const uni_poly& b);
    friend uni_poly operator*(const rational& c, uni_poly p) { return p *= c; }

    friend bool operator==(const uni_poly& a, const uni_poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const uni_poly& a, const uni_poly& b) { return !(a == b); }

    // Comma-separated coefficient list ascending from degree 0, e.g.
    // "1, 1/2". The zero polynomial prints as "0".
    std::string str() const;

private:
    void trim();
    std::vector<rational> coeffs_;
};

// f(x1) * f(x2) as a symmetric polynomial in two variables.
sym_poly tensor_square(const uni_poly& f);

}  // namespace jacksep
