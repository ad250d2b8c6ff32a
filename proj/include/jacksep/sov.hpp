#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jacksep/partition.hpp"
#include "jacksep/pmn.hpp"
#include "jacksep/rational.hpp"
#include "jacksep/sympoly.hpp"
#include "jacksep/unipoly.hpp"

namespace jacksep {

// Index data for a coefficient table: the two nonnegative differences
// r1 >= r2 >= 0 of a three-part partition (lambda_1 - lambda_3 and
// lambda_2 - lambda_3) plus the coupling.
struct coeff_problem {
    long r1;
    long r2;
    rational g;

    coeff_problem(long r1_, long r2_, const coupling& g_);
    coupling coupling_value() const { return coupling(g); }
};

enum class table_kind { c_table, a_table };

// Triangular table of exact coefficients over 0 <= m + n <= r1. Zero values
// are not stored.
struct coeff_table {
    long r1 = 0;
    long r2 = 0;
    rational g;
    table_kind kind = table_kind::c_table;
    std::map<std::pair<long, long>, rational> entries;

    rational coeff(long m, long n) const;
};

bool operator==(const coeff_table& a, const coeff_table& b);
bool operator!=(const coeff_table& a, const coeff_table& b);

// ---- Two-variable constructions -----------------------------------------

// P_lambda(x1, x2) = x2^{|lambda|} f(x1/x2) with
// f(x) = x^{lambda_2} 2F1(-(lambda_1 - lambda_2), g; -(lambda_1 - lambda_2) + 1 - g; x).
sym_poly jack_a1_standard(const partition& lam, const coupling& g);

// The same polynomial as an expansion over p_{m,n} with prefactor
// (x1 x2)^{lambda_2}: entry (m, n) is
// (-d)_{m+n} (g)_{m+n} / ((-d + 1 - g)_m (g)_n m! n!), d = lambda_1 - lambda_2.
pmn_expansion jack_a1_pmn_table(const partition& lam, const coupling& g);
sym_poly jack_a1_pmn(const partition& lam, const coupling& g);

// Elementary-basis form: e2^{lambda_2} (-1)^d d!/(g)_d
// sum_{i+2j=d} (g)_{i+j} (-1)^{i+j} e1^i e2^j / (i! j!).
sym_poly jack_a1_elementary(const partition& lam, const coupling& g);

// Gegenbauer form: (x1 x2)^{|lambda|/2} d!/(g)_d C_d^g((z + 1/z)/2) with
// z = (x1/x2)^{1/2}; the half-integer powers cancel by parity.
sym_poly jack_a1_gegenbauer(const partition& lam, const coupling& g);

// ---- Separating operators on the p_{m,n} basis ---------------------------

// The two-variable separating operator: diagonal on p_{m,n} with eigenvalue
// (g)_n / (2g)_n. inverse applies the reciprocal.
pmn_expansion s2_apply(const pmn_expansion& p, const coupling& g, bool inverse = false);

// The three-variable separating operator (reduced to two variables):
// diagonal with eigenvalue (2g)_n / (3g)_n.
pmn_expansion s3hat_apply(const pmn_expansion& p, const coupling& g, bool inverse = false);

// ---- Closed forms for the c/a coefficient tables -------------------------

// The coefficients c_{m,n} of f_lambda(x1) f_lambda(x2) =
// (x1 x2)^{lambda_3} sum c_{m,n} p_{m,n} for a three-part partition, by the
// first 4F3 closed form. Throws degenerate_parameter when a Pochhammer
// denominator vanishes at this coupling.
rational cmn_closed_form_1(const coeff_problem& pr, long m, long n);
// Sibling closed form (a different 4F3).
rational cmn_closed_form_2(const coeff_problem& pr, long m, long n);

struct branch_value {
    rational value;
    int branch;  // 1 or 2: which closed form produced the value
};

// Tries closed form 1, falling back to 2 when the first is degenerate at
// this coupling; throws only when both are.
branch_value cmn_auto(const coeff_problem& pr, long m, long n);

// Whole table from one branch (formula = 1 or 2) or with per-entry fallback
// (formula = 0).
coeff_table cmn_table(const coeff_problem& pr, int formula);

// Ground-truth table: multiply out f_lambda(x1) f_lambda(x2) from the
// terminating sum form and change basis to p_{m,n}. Defined for every
// coupling g > 0. The partition must fit in three variables.
coeff_table cmn_by_expansion(const partition& lam, const coupling& g);

// First column a_{m,0} of the companion table (formula = 1, 2, or 0 = auto).
rational amn_first_column(const coeff_problem& pr, long m, int formula);

// Whole companion table via a_{m,n} = sum_l (-1)^l C(n,l) a_{m+l,0}.
coeff_table amn_table(const coeff_problem& pr);

// The substitution connecting the two tables, cross-multiplied so it is
// checkable even where the conversion factor has a vanishing numerator or
// denominator:
//   lhs = a_{m,n} (2g)_{m+n} (-r1)_{m+n} (g - r2)_{m+n}
//   rhs = c_{m,n} m! n! (3g-1)_n (3g)_n (1-2g-r1)_m (1-g-r2)_m.
std::pair<rational, rational> ca_substitution_sides(const coeff_table& c, const coeff_table& a,
                                                    long m, long n);

// ---- Three-variable representations --------------------------------------

// Reduced polynomial P_lambda(x1, x2, 1) as a p_{m,n} expansion with
// prefactor (x1 x2)^{lambda_3}, from representation `which` (1 or 2).
pmn_expansion jack_a2_reduced_pmn(const partition& lam, const coupling& g, int which);

// The monic three-variable Jack polynomial from each triple-sum
// representation (homogenized back from the reduced polynomial).
sym_poly jack_a2_repr1(const partition& lam, const coupling& g);
sym_poly jack_a2_repr2(const partition& lam, const coupling& g);

// ---- Specializations ------------------------------------------------------

// One-row partitions (r, 0, ..., 0) in any number of variables:
// r!/(g)_r sum_{|mu| = r} e_mu (g)_{l(mu)} (-1)^{r - l(mu)} / prod_i mult_i!.
sym_poly jack_one_row(long r, std::size_t nvars, const coupling& g);

// Reduced one-row table over p_{m,n}: entry (m, n) is
// (2g)_r/(g)_r (-r)_{m+n} (g)_{m+n} / ((1-2g-r)_m (2g)_n m! n!).
pmn_expansion one_row_pmn_table(long r, const coupling& g);

// Reduced one-row polynomial in powers of (x1 + x2) and x1 x2.
sym_poly one_row_power_form(long r, const coupling& g);

// Three-variable one-row polynomial written over e1, e2, e3 directly.
sym_poly one_row_elementary_form(long r, const coupling& g);

// Two-row partitions (r, r, 0) in three variables.
sym_poly jack_two_row(long r, const coupling& g);

// Near-rectangular partitions (r, ..., r, 0) in nvars variables (the
// conjectural closed form audited against the operator oracle).
sym_poly jack_rectangular(long r, std::size_t nvars, const coupling& g);

// Separated-polynomial coefficients recovered from the first table column:
// xi_{lambda_3 + m} = c_{m,0} / b_lambda for a three-part partition.
std::vector<rational> xi_coeffs_via_cmn(const partition& lam, const coupling& g);

}  // namespace jacksep
