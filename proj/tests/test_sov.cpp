#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacksep/errors.hpp"
#include "jacksep/json_io.hpp"
#include "jacksep/oracle.hpp"
#include "jacksep/partition.hpp"
#include "jacksep/pmn.hpp"
#include "jacksep/rational.hpp"
#include "jacksep/separated.hpp"
#include "jacksep/sov.hpp"
#include "jacksep/sympoly.hpp"
#include "jacksep/unipoly.hpp"
#include "jacksep/verify.hpp"

using namespace jacksep;

TEST_CASE("two-variable forms agree at a worked point") {
    // P_(2) at g = 2: m_(2) + 4/3 m_(1,1)
    const coupling g{rational(2)};
    sym_poly expect(2);
    expect.add(partition({2}), rational(1));
    expect.add(partition({1, 1}), rational(4, 3));
    const partition lam({2});
    CHECK(jack_a1_standard(lam, g) == expect);
    CHECK(jack_a1_pmn(lam, g) == expect);
    CHECK(jack_a1_elementary(lam, g) == expect);
    CHECK(jack_a1_gegenbauer(lam, g) == expect);
}

TEST_CASE("two-variable forms agree across shapes and couplings") {
    for (const rational& gv : {rational(1, 3), rational(1), rational(3, 2)}) {
        const coupling g(gv);
        for (const partition& lam : partitions_in_box(4, 2)) {
            const sym_poly standard = jack_a1_standard(lam, g);
            CHECK(jack_a1_pmn(lam, g) == standard);
            CHECK(jack_a1_elementary(lam, g) == standard);
            CHECK(jack_a1_gegenbauer(lam, g) == standard);
            CHECK(jack_oracle(lam, 2, g) == standard);
        }
    }
}

TEST_CASE("separating operators are diagonal with the stated ratios") {
    const coupling g(rational(1, 3));
    pmn_expansion t;
    t.add(0, 1, rational(1));
    // (g)_1 / (2g)_1 = 1/2 at every coupling
    CHECK(s2_apply(t, g).coeff(0, 1) == rational(1, 2));
    // (2g)_1 / (3g)_1 = 2/3 at every coupling
    CHECK(s3hat_apply(t, g).coeff(0, 1) == rational(2, 3));
    // n = 0 entries are fixed
    pmn_expansion c;
    c.add(3, 0, rational(7));
    CHECK(s2_apply(c, g).coeff(3, 0) == rational(7));

    // inverse really inverts
    pmn_expansion mixed;
    mixed.prefactor_power = 1;
    mixed.add(0, 0, rational(3, 2));
    mixed.add(1, 2, rational(-5, 7));
    mixed.add(0, 3, rational(11));
    CHECK(s2_apply(s2_apply(mixed, g, true), g) == mixed);
    CHECK(s3hat_apply(s3hat_apply(mixed, g, true), g) == mixed);
}

TEST_CASE("two-variable separation: operator image factorizes") {
    for (const rational& gv : {rational(1, 3), rational(2, 5), rational(1)}) {
        const coupling g(gv);
        for (const partition& lam : partitions_in_box(3, 2)) {
            const long d = lam.diff(0, 1);
            const sym_poly p = jack_a1_standard(lam, g);
            const sym_poly lhs = pmn_to_sympoly(s2_apply(sympoly_to_pmn(p), g));
            sym_poly rhs = tensor_square(f_lambda_sum_form(lam, 2, g));
            rhs *= pochhammer(gv, d) / pochhammer(rational(2) * gv, d);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("coefficient table: worked anchor") {
    // (r1, r2) = (1, 0): {c00, c10, c01} = {3/2, 3/4, -1/2} at every coupling
    for (const rational& gv : {rational(1, 3), rational(2, 5), rational(7, 3)}) {
        const coupling g(gv);
        const coeff_problem pr(1, 0, g);
        for (const int formula : {1, 2}) {
            const coeff_table t = cmn_table(pr, formula);
            CHECK(t.coeff(0, 0) == rational(3, 2));
            CHECK(t.coeff(1, 0) == rational(3, 4));
            CHECK(t.coeff(0, 1) == rational(-1, 2));
        }
        const coeff_table e = cmn_by_expansion(partition({1}), g);
        CHECK(e.coeff(0, 0) == rational(3, 2));
        CHECK(e.coeff(1, 0) == rational(3, 4));
        CHECK(e.coeff(0, 1) == rational(-1, 2));
    }
}

TEST_CASE("coefficient table: trivial and branch-equality cases") {
    const coupling g(rational(2, 5));
    const coeff_table unit = cmn_by_expansion(partition(), g);
    CHECK(unit.entries.size() == 1);
    CHECK(unit.coeff(0, 0) == rational(1));

    const coeff_problem pr(2, 1, g);
    CHECK(cmn_table(pr, 1) == cmn_table(pr, 2));
    CHECK(cmn_table(pr, 1) == cmn_by_expansion(partition({2, 1}), g));
    // auto matches either branch
    const coeff_table e = cmn_by_expansion(partition({2, 1}), g);
    for (const auto& [mn, v] : e.entries) {
        CHECK(cmn_auto(pr, mn.first, mn.second).value == v);
    }
}

TEST_CASE("closed-form branches degenerate exactly as documented at unit coupling") {
    const coupling one{rational(1)};
    // first branch: at g = 1 only (r2 = 0, m = 0) entries survive
    CHECK(cmn_closed_form_1(coeff_problem(1, 0, one), 0, 0) == rational(3, 2));
    CHECK(cmn_closed_form_1(coeff_problem(1, 0, one), 0, 1) == rational(-1, 2));
    CHECK_THROWS_AS(cmn_closed_form_1(coeff_problem(1, 0, one), 1, 0), degenerate_parameter);
    CHECK_THROWS_AS(cmn_closed_form_1(coeff_problem(2, 1, one), 0, 0), degenerate_parameter);
    // second branch: at g = 1 degenerate iff m > r2
    CHECK(cmn_closed_form_2(coeff_problem(2, 1, one), 1, 0) ==
          cmn_by_expansion(partition({2, 1}), one).coeff(1, 0));
    CHECK_THROWS_AS(cmn_closed_form_2(coeff_problem(2, 1, one), 2, 0), degenerate_parameter);
    // fallback picks the surviving branch
    const branch_value bv = cmn_auto(coeff_problem(2, 1, one), 0, 0);
    CHECK(bv.branch == 2);
    CHECK(bv.value == cmn_by_expansion(partition({2, 1}), one).coeff(0, 0));
    // both degenerate: the combined error names both branches
    CHECK_THROWS_AS(cmn_auto(coeff_problem(2, 1, one), 2, 0), degenerate_parameter);
}

TEST_CASE("companion table anchors") {
    // a00 = 3/2 at every coupling; a10 = (3/2)(1-g)/(2g); a01 = 3(3g-1)/(4g)
    for (const rational& gv : {rational(1, 3), rational(2, 5), rational(7, 3)}) {
        const coupling g(gv);
        const coeff_problem pr(1, 0, g);
        const coeff_table a = amn_table(pr);
        CHECK(a.coeff(0, 0) == rational(3, 2));
        CHECK(a.coeff(1, 0) ==
              rational(3, 2) * (rational(1) - gv) / (rational(2) * gv));
        CHECK(a.coeff(0, 1) ==
              rational(3) * (rational(3) * gv - rational(1)) / (rational(4) * gv));
        // first-column closed forms agree
        CHECK(amn_first_column(pr, 0, 1) == rational(3, 2));
        CHECK(amn_first_column(pr, 0, 2) == rational(3, 2));
        CHECK(amn_first_column(pr, 1, 0) == a.coeff(1, 0));
    }
    // at g = 1/3 the (0,1) companion entry vanishes exactly
    CHECK(amn_table(coeff_problem(1, 0, coupling(rational(1, 3)))).coeff(0, 1) == rational(0));
}

TEST_CASE("table substitution holds cross-multiplied") {
    for (const rational& gv : {rational(1, 3), rational(2, 5), rational(3, 2)}) {
        const coupling g(gv);
        for (long r1 = 0; r1 <= 3; ++r1) {
            for (long r2 = 0; r2 <= r1; ++r2) {
                const coeff_problem pr(r1, r2, g);
                const coeff_table c = cmn_by_expansion(partition({r1, r2}), g);
                const coeff_table a = amn_table(pr);
                for (long m = 0; m <= r1; ++m) {
                    for (long n = 0; m + n <= r1; ++n) {
                        const auto sides = ca_substitution_sides(c, a, m, n);
                        CHECK(sides.first == sides.second);
                    }
                }
            }
        }
    }
}

TEST_CASE("separated coefficients from the first table column") {
    for (const rational& gv : {rational(2, 5), rational(3, 2)}) {
        const coupling g(gv);
        for (const partition& lam :
             {partition({2, 1}), partition({3, 1, 1}), partition({2, 2})}) {
            CHECK(xi_coeffs_via_cmn(lam, g) == xi_coeffs(lam, 3, g));
        }
    }
}

TEST_CASE("three-variable representations: single box") {
    for (const rational& gv : {rational(1, 3), rational(2, 5), rational(3, 2)}) {
        const coupling g(gv);
        const sym_poly e1 = elementary(3, 1);
        CHECK(jack_a2_repr1(partition({1}), g) == e1);
        CHECK(jack_a2_repr2(partition({1}), g) == e1);
        const sym_poly e2 = elementary(3, 2);
        CHECK(jack_a2_repr1(partition({1, 1}), g) == e2);
        CHECK(jack_a2_repr2(partition({1, 1}), g) == e2);
    }
}

TEST_CASE("three-variable representations match the reference") {
    for (const rational& gv : {rational(1, 3), rational(2, 5)}) {
        const coupling g(gv);
        for (const partition& lam : partitions_in_box(2, 3)) {
            const sym_poly p = jack_oracle(lam, 3, g);
            CHECK(jack_a2_repr1(lam, g) == p);
            CHECK(jack_a2_repr2(lam, g) == p);
        }
        const sym_poly q = jack_oracle(partition({3, 1}), 3, g);
        CHECK(jack_a2_repr1(partition({3, 1}), g) == q);
        CHECK(jack_a2_repr2(partition({3, 1}), g) == q);
    }
}

TEST_CASE("representations are degenerate at unit coupling, with hints") {
    const coupling one{rational(1)};
    CHECK_THROWS_AS(jack_a2_repr1(partition({2, 1}), one), degenerate_parameter);
    CHECK_THROWS_AS(jack_a2_repr2(partition({2, 1}), one), degenerate_parameter);
    try {
        jack_a2_repr1(partition({2, 1}), one);
        CHECK(false);
    } catch (const degenerate_parameter& e) {
        CHECK_FALSE(e.hint().empty());
    }
    // the second representation survives when the top two rows are equal
    CHECK(jack_a2_repr2(partition({2, 2}), one) == jack_oracle(partition({2, 2}), 3, one));
}

TEST_CASE("one-row specialization") {
    for (const rational& gv : {rational(1, 3), rational(1), rational(7, 3)}) {
        const coupling g(gv);
        CHECK(jack_one_row(0, 3, g) == sym_const(3, rational(1)));
        for (long r = 1; r <= 4; ++r) {
            const sym_poly p = jack_one_row(r, 3, g);
            CHECK(p == jack_oracle(partition({r}), 3, g));
            CHECK(p == one_row_elementary_form(r, g));
            CHECK(reduce_last_var(p) == pmn_to_sympoly(one_row_pmn_table(r, g)));
            CHECK(reduce_last_var(p) == one_row_power_form(r, g));
        }
        // other variable counts
        CHECK(jack_one_row(2, 2, g) == jack_oracle(partition({2}), 2, g));
        CHECK(jack_one_row(2, 4, g) == jack_oracle(partition({2}), 4, g));
    }
}

TEST_CASE("two-row and rectangular specializations") {
    for (const rational& gv : {rational(1, 3), rational(2, 5)}) {
        const coupling g(gv);
        CHECK(jack_two_row(1, g) == elementary(3, 2));
        CHECK(jack_rectangular(1, 4, g) == elementary(4, 3));
        for (long r = 0; r <= 3; ++r) {
            CHECK(jack_rectangular(r, 3, g) == jack_two_row(r, g));
            CHECK(jack_two_row(r, g) == jack_oracle(partition({r, r}), 3, g));
        }
        CHECK(jack_rectangular(2, 4, g) == jack_oracle(partition({2, 2, 2}), 4, g));
    }
    // Schur check: s_(2,2) = e2^2 - e1 e3
    const coupling one{rational(1)};
    CHECK(jack_two_row(2, one) ==
          elementary(3, 2) * elementary(3, 2) - elementary(3, 1) * elementary(3, 3));
}

TEST_CASE("three-variable factorization through the separating operator") {
    for (const rational& gv : {rational(1, 3), rational(2, 5), rational(1)}) {
        const coupling g(gv);
        for (const partition& lam : {partition({2, 1}), partition({2, 2}), partition({3, 1, 1})}) {
            const sym_poly p = jack_oracle(lam, 3, g);
            const sym_poly lhs = pmn_to_sympoly(s3hat_apply(sympoly_to_pmn(reduce_last_var(p)), g));
            sym_poly rhs = tensor_square(f_lambda_sum_form(lam, 3, g));
            const rational b = b_lambda(lam, 3, g);
            rhs *= c_lambda(lam, 3, g) / (b * b);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("JSON round-trips are byte-identical") {
    const coupling g(rational(2, 5));

    const sym_poly p = jack_oracle(partition({2, 1}), 3, g);
    const std::string pj = sym_poly_to_json(p);
    CHECK(sym_poly_from_json(pj) == p);
    CHECK(sym_poly_to_json(sym_poly_from_json(pj)) == pj);

    const auto emap = monomial_to_elementary(p);
    const std::string ej = elementary_map_to_json(emap, 3);
    std::size_t nv = 0;
    CHECK(elementary_map_from_json(ej, nv) == emap);
    CHECK(nv == 3);
    std::size_t nv2 = 0;
    const auto emap2 = elementary_map_from_json(ej, nv2);
    CHECK(elementary_map_to_json(emap2, nv2) == ej);

    const uni_poly f = f_lambda_sum_form(partition({3, 1}), 3, g);
    const std::string fj = uni_poly_to_json(f);
    CHECK(uni_poly_from_json(fj) == f);
    CHECK(uni_poly_to_json(uni_poly_from_json(fj)) == fj);
    CHECK(uni_poly_to_json(uni_poly()) == "{\"coeffs\":[]}");

    const coeff_table t = cmn_by_expansion(partition({2, 1}), g);
    const std::string tj = coeff_table_to_json(t);
    CHECK(coeff_table_from_json(tj) == t);
    CHECK(coeff_table_to_json(coeff_table_from_json(tj)) == tj);

    const coeff_table a = amn_table(coeff_problem(2, 1, g));
    const std::string aj = coeff_table_to_json(a);
    CHECK(coeff_table_from_json(aj) == a);
    CHECK(coeff_table_to_json(coeff_table_from_json(aj)) == aj);
}

TEST_CASE("verify plumbing: suite names, dispatch, reports") {
    CHECK(suite_names().size() == 9);
    CHECK_THROWS_AS(run_suite("bogus", default_verify_options()), std::invalid_argument);

    verify_options opts = default_verify_options();
    opts.max_size = 2;
    const suite_report rep = run_suite("watson", opts);
    CHECK(rep.suite == "watson");
    CHECK(rep.ok());
    CHECK(rep.cases_run > 0);
    CHECK(rep.cases_passed == rep.cases_run);

    // report serialization is canonical JSON
    const std::string rj = suite_report_to_json(rep);
    CHECK(rj.find("\"suite\":\"watson\"") != std::string::npos);
    CHECK(rj.find("\"cases_run\":") != std::string::npos);

    // tiny panel exercise of a suite with skip-and-log behaviour
    verify_options small = default_verify_options();
    small.max_size = 1;
    const suite_report cmn = run_suite("cmn", small);
    CHECK(cmn.ok());
    CHECK(cmn.cases_run > 0);
}
