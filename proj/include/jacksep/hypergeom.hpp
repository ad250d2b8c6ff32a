#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jacksep/errors.hpp"
#include "jacksep/rational.hpp"
#include "jacksep/unipoly.hpp"

namespace jacksep {

// Number of the last nonzero term of a terminating hypergeometric series:
// the minimum of -a over upper parameters a that are non-positive integers.
// Throws non_terminating when no upper parameter terminates the series.
long pfq_termination_bound(const std::vector<rational>& upper);

// Throws degenerate_parameter if some lower parameter b is a non-positive
// integer whose Pochhammer symbol (b)_k first vanishes at an index
// k = 1 - b <= kmax (i.e. division by zero somewhere in the first kmax + 1
// series terms). context/hint feed the error message.
void check_lower_parameters(const std::vector<rational>& lower, long kmax,
                            const std::string& context, const std::string& hint = "");

// First `count` Taylor coefficients t_k = prod (a_i)_k / (prod (b_j)_k k!)
// of pFq(upper; lower; y), k = 0 .. count-1, with no termination
// requirement. Throws degenerate_parameter when a lower Pochhammer vanishes
// within that window.
std::vector<rational> pfq_coefficients(const std::vector<rational>& upper,
                                       const std::vector<rational>& lower, long count,
                                       const std::string& context, const std::string& hint = "");

// Terminating series as a polynomial in its argument.
uni_poly pfq_polynomial(const std::vector<rational>& upper, const std::vector<rational>& lower,
                        const std::string& context, const std::string& hint = "");

// Terminating series evaluated at argument 1.
rational pfq_at_one(const std::vector<rational>& upper, const std::vector<rational>& lower,
                    const std::string& context, const std::string& hint = "");

// Saalschuetz evaluation of the balanced terminating series
// 3F2(a, b, -n; c, 1 + a + b - c - n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n).
// Requires n >= 0; throws degenerate_parameter when (c)_n or (c-a-b)_n
// vanishes.
rational saalschutz_3f2(const rational& a, const rational& b, long n, const rational& c);

// Coefficient table of the terminating double series
// F4(a, b; c, d; u, v) = sum (a)_{m+n} (b)_{m+n} / ((c)_m (d)_n m! n!) u^m v^n
// over 0 <= m + n <= N. Requires a = -N with N >= 0.
std::map<std::pair<long, long>, rational> appell_f4_terminating(const rational& a,
                                                                const rational& b,
                                                                const rational& c,
                                                                const rational& d, long N);

// Gegenbauer polynomial C_n^g by the three-term recurrence
// n C_n = 2 x (n + g - 1) C_{n-1} - (n + 2g - 2) C_{n-2}, C_0 = 1, C_1 = 2gx.
uni_poly gegenbauer(long n, const rational& g);

}  // namespace jacksep
