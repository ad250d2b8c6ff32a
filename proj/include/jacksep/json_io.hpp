#pragma once

#include <map>
#include <string>

#include "jacksep/partition.hpp"
#include "jacksep/pmn.hpp"
#include "jacksep/rational.hpp"
#include "jacksep/sov.hpp"
#include "jacksep/sympoly.hpp"
#include "jacksep/unipoly.hpp"
#include "jacksep/verify.hpp"

namespace jacksep {

// All serializers emit canonical JSON: object keys in alphabetical order,
// fixed term orderings, exact rationals as "p/q" strings ("p" when the
// denominator is one). Parsing a serialized value and serializing it again
// reproduces the input byte for byte.

// {"basis":"monomial","nvars":N,"terms":[{"coeff":"p/q","mu":[...]}, ...]}
// with terms in reverse-lexicographic partition order.
std::string sym_poly_to_json(const sym_poly& p);
sym_poly sym_poly_from_json(const std::string& text);

// Same schema with "basis":"elementary"; mu lists the subscript partition of
// each product of elementary polynomials.
std::string elementary_map_to_json(const std::map<partition, rational>& emap, std::size_t nvars);
std::map<partition, rational> elementary_map_from_json(const std::string& text,
                                                       std::size_t& nvars_out);

// {"coeffs":["c0","c1",...]} ascending dense from degree zero.
std::string uni_poly_to_json(const uni_poly& f);
uni_poly uni_poly_from_json(const std::string& text);

// {"entries":[{"m":M,"n":N,"value":"p/q"},...],"g":"p/q","kind":"c"|"a",
//  "r1":R1,"r2":R2} with entries sorted by (m+n, m).
std::string coeff_table_to_json(const coeff_table& t);
coeff_table coeff_table_from_json(const std::string& text);

// {"cases_passed":..,"cases_run":..,"failures":[...],"skipped":[...],
//  "suite":"...","wall_time_ms":..}
std::string suite_report_to_json(const suite_report& r);

}  // namespace jacksep
