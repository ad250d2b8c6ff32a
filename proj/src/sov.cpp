#include "jacksep/sov.hpp"

#include <stdexcept>

#include "jacksep/errors.hpp"
#include "jacksep/hypergeom.hpp"
#include "jacksep/separated.hpp"

namespace jacksep {

namespace {

constexpr const char* kHintF2 = "the sibling closed form (--formula f2) or the expansion table";
constexpr const char* kHintF1 = "the sibling closed form (--formula f1) or the expansion table";
constexpr const char* kHintRepr2 = "the sibling representation (repr2) or the oracle form";
constexpr const char* kHintRepr1 = "the sibling representation (repr1) or the oracle form";

// Divides by (base)_n, throwing degenerate_parameter when that Pochhammer
// symbol vanishes.
rational div_poch(const rational& value, const rational& base, long n, const std::string& context,
                  const std::string& hint) {
    if (base.is_nonpositive_integer() && (-base).to_long() < n)
        throw degenerate_parameter(base, 1 + (-base).to_long(), context, hint);
    return value / pochhammer(base, n);
}

void require_three_parts(const partition& lam, const char* who) {
    if (lam.length() > 3)
        throw std::invalid_argument(std::string(who) + ": partition has more than three parts");
}

void require_two_parts(const partition& lam, const char* who) {
    if (lam.length() > 2)
        throw std::invalid_argument(std::string(who) + ": partition has more than two parts");
}

pmn_expansion diagonal_apply(const pmn_expansion& p, const coupling& g, const rational& num_base,
                             const rational& den_base, bool inverse) {
    pmn_expansion out;
    out.prefactor_power = p.prefactor_power;
    for (const auto& [mn, c] : p.terms) {
        rational ratio =
            pochhammer(num_base, mn.second) / pochhammer(den_base, mn.second);
        out.add(mn.first, mn.second, inverse ? c / ratio : c * ratio);
    }
    (void)g;
    return out;
}

}  // namespace

coeff_problem::coeff_problem(long r1_, long r2_, const coupling& g_)
    : r1(r1_), r2(r2_), g(g_.value()) {
    if (r2 < 0 || r1 < r2) throw std::invalid_argument("coeff_problem: requires r1 >= r2 >= 0");
}

rational coeff_table::coeff(long m, long n) const {
    auto it = entries.find({m, n});
    return it == entries.end() ? rational(0) : it->second;
}

bool operator==(const coeff_table& a, const coeff_table& b) {
    return a.r1 == b.r1 && a.r2 == b.r2 && a.g == b.g && a.kind == b.kind &&
           a.entries == b.entries;
}

bool operator!=(const coeff_table& a, const coeff_table& b) { return !(a == b); }

// ---- Two-variable constructions -----------------------------------------

sym_poly jack_a1_standard(const partition& lam, const coupling& g) {
    require_two_parts(lam, "jack_a1_standard");
    const long d = lam.diff(0, 1);
    const long w = lam.weight();
    uni_poly f = pfq_polynomial({rational(-d), g.value()}, {rational(1 - d) - g.value()},
                                "standard two-variable form")
                     .shifted(lam.part(1));
    raw_poly raw;
    for (long k = f.order(); k <= f.degree(); ++k) {
        const rational c = f.coeff(k);
        if (!c.is_zero()) raw_add(raw, {k, w - k}, c);
    }
    return sym_poly::collect(2, raw);
}

pmn_expansion jack_a1_pmn_table(const partition& lam, const coupling& g) {
    require_two_parts(lam, "jack_a1_pmn_table");
    const long d = lam.diff(0, 1);
    const std::string ctx = "two-variable p_(m,n) table";
    pmn_expansion out;
    out.prefactor_power = lam.part(1);
    for (long m = 0; m <= d; ++m) {
        for (long n = 0; m + n <= d; ++n) {
            rational v = pochhammer(rational(-d), m + n) * pochhammer(g.value(), m + n) /
                         (pochhammer(g.value(), n) * factorial(m) * factorial(n));
            v = div_poch(v, rational(1 - d) - g.value(), m, ctx, "");
            out.add(m, n, v);
        }
    }
    return out;
}

sym_poly jack_a1_pmn(const partition& lam, const coupling& g) {
    return pmn_to_sympoly(jack_a1_pmn_table(lam, g));
}

sym_poly jack_a1_elementary(const partition& lam, const coupling& g) {
    require_two_parts(lam, "jack_a1_elementary");
    const long d = lam.diff(0, 1);
    rational pref = factorial(d) / pochhammer(g.value(), d);
    if (d % 2) pref = -pref;
    std::map<partition, rational> emap;
    for (long j = 0; 2 * j <= d; ++j) {
        const long i = d - 2 * j;
        rational c = pref * pochhammer(g.value(), i + j) / (factorial(i) * factorial(j));
        if ((i + j) % 2) c = -c;
        std::vector<long> idx(static_cast<std::size_t>(j + lam.part(1)), 2);
        idx.insert(idx.end(), static_cast<std::size_t>(i), 1);
        emap[partition(idx)] += c;
    }
    return elementary_to_monomial(emap, 2);
}

sym_poly jack_a1_gegenbauer(const partition& lam, const coupling& g) {
    require_two_parts(lam, "jack_a1_gegenbauer");
    const long d = lam.diff(0, 1);
    const long w = lam.weight();
    const uni_poly c_poly = gegenbauer(d, g.value());
    const rational pref = factorial(d) / pochhammer(g.value(), d);
    raw_poly raw;
    for (long deg = 0; deg <= c_poly.degree(); ++deg) {
        const rational gamma = c_poly.coeff(deg);
        if (gamma.is_zero()) continue;
        // z^deg at z = (x1/x2 + x2/x1 + 2...) -- substitute
        // ((x1/x2)^{1/2} + (x2/x1)^{1/2})/2 and clear the square roots:
        // the binomial expansion lands on integer exponents because deg has
        // the parity of |lambda|.
        rational scale = pref * gamma;
        for (long t = 0; t < deg; ++t) scale *= rational(1, 2);
        for (long k = 0; k <= deg; ++k) {
            const long e1 = (w + deg) / 2 - k;
            const long e2 = (w - deg) / 2 + k;
            raw_add(raw, {e1, e2}, scale * rational(binomial(deg, k)));
        }
    }
    return sym_poly::collect(2, raw);
}

// ---- Separating operators -------------------------------------------------

pmn_expansion s2_apply(const pmn_expansion& p, const coupling& g, bool inverse) {
    return diagonal_apply(p, g, g.value(), rational(2) * g.value(), inverse);
}

pmn_expansion s3hat_apply(const pmn_expansion& p, const coupling& g, bool inverse) {
    return diagonal_apply(p, g, rational(2) * g.value(), rational(3) * g.value(), inverse);
}

// ---- Closed forms ----------------------------------------------------------

rational cmn_closed_form_1(const coeff_problem& pr, long m, long n) {
    if (m < 0 || n < 0 || m + n > pr.r1)
        throw std::invalid_argument("cmn_closed_form_1: index outside the table");
    const std::string ctx = "closed form f1 for the coefficient table";
    const rational& g = pr.g;
    const rational g2 = rational(2) * g, g3 = rational(3) * g;

    rational alpha = factorial(pr.r1 - pr.r2) / factorial(pr.r1) * pochhammer(g3, pr.r1) *
                     pochhammer(g2, pr.r2);
    alpha = div_poch(alpha, g2, pr.r1 - pr.r2, ctx, kHintF2);
    alpha = div_poch(alpha, rational(1) - g, pr.r2, ctx, kHintF2);

    rational term = pochhammer(rational(-pr.r1), m + n) *
                    pochhammer(g - rational(pr.r2), m + n) * pochhammer(rational(1) - g, m) /
                    (factorial(m) * factorial(n));
    term = div_poch(term, rational(1 - pr.r1) - g2, m, ctx, kHintF2);
    term = div_poch(term, rational(1 - pr.r2) - g, m, ctx, kHintF2);
    term = div_poch(term, g3, n, ctx, kHintF2);

    const rational f = pfq_at_one(
        {rational(-pr.r2), g, -g - rational(pr.r1), rational(1 - m - n) - g2},
        {rational(1 - pr.r2) - g, rational(1 - pr.r1) - g2, g - rational(m)}, ctx, kHintF2);
    return alpha * term * f;
}

rational cmn_closed_form_2(const coeff_problem& pr, long m, long n) {
    if (m < 0 || n < 0 || m + n > pr.r1)
        throw std::invalid_argument("cmn_closed_form_2: index outside the table");
    const std::string ctx = "closed form f2 for the coefficient table";
    const rational& g = pr.g;
    const rational g2 = rational(2) * g, g3 = rational(3) * g;

    rational alpha = factorial(pr.r2) / factorial(pr.r1) * pochhammer(rational(1) + g, pr.r1) *
                     pochhammer(g, pr.r1 - pr.r2) * pochhammer(g3, pr.r1) * pochhammer(g2, pr.r2);
    alpha = div_poch(alpha, rational(1) + g, pr.r2, ctx, kHintF1);
    alpha = div_poch(alpha, g2, pr.r1 - pr.r2, ctx, kHintF1);
    alpha = div_poch(alpha, g2, pr.r1, ctx, kHintF1);
    alpha = div_poch(alpha, g, pr.r2, ctx, kHintF1);

    rational term = pochhammer(rational(1 - pr.r2) - g2, m) *
                    pochhammer(rational(-pr.r1), m + n) * pochhammer(g2, m + n) /
                    (factorial(m) * factorial(n));
    term = div_poch(term, rational(1 - pr.r1) - g2, m, ctx, kHintF1);
    term = div_poch(term, rational(1 - pr.r2) - g, m, ctx, kHintF1);
    term = div_poch(term, g3, n, ctx, kHintF1);

    const rational f = pfq_at_one(
        {rational(pr.r2 - pr.r1), g, g2 + rational(pr.r2), rational(1 + pr.r2 - m - n) - g},
        {rational(1 + pr.r2 - pr.r1) - g, rational(1 + pr.r2) + g, g2 + rational(pr.r2 - m)},
        ctx, kHintF1);
    return alpha * term * f;
}

branch_value cmn_auto(const coeff_problem& pr, long m, long n) {
    try {
        return {cmn_closed_form_1(pr, m, n), 1};
    } catch (const degenerate_parameter&) {
    }
    try {
        return {cmn_closed_form_2(pr, m, n), 2};
    } catch (const degenerate_parameter& e) {
        throw degenerate_parameter(e.parameter(), e.index(),
                                   "both closed-form branches for the coefficient table",
                                   "the expansion table or a different coupling g");
    }
}

coeff_table cmn_table(const coeff_problem& pr, int formula) {
    if (formula < 0 || formula > 2) throw std::invalid_argument("cmn_table: formula must be 0, 1 or 2");
    coeff_table out;
    out.r1 = pr.r1;
    out.r2 = pr.r2;
    out.g = pr.g;
    out.kind = table_kind::c_table;
    for (long m = 0; m <= pr.r1; ++m) {
        for (long n = 0; m + n <= pr.r1; ++n) {
            rational v;
            if (formula == 1)
                v = cmn_closed_form_1(pr, m, n);
            else if (formula == 2)
                v = cmn_closed_form_2(pr, m, n);
            else
                v = cmn_auto(pr, m, n).value;
            if (!v.is_zero()) out.entries.emplace(std::make_pair(m, n), v);
        }
    }
    return out;
}

coeff_table cmn_by_expansion(const partition& lam, const coupling& g) {
    require_three_parts(lam, "cmn_by_expansion");
    const uni_poly f = f_lambda_sum_form(lam, 3, g);
    const pmn_expansion pe = sympoly_to_pmn(tensor_square(f));
    if (pe.prefactor_power != lam.part(2) && !pe.is_zero())
        throw std::logic_error("cmn_by_expansion: unexpected prefactor power");
    coeff_table out;
    out.r1 = lam.diff(0, 2);
    out.r2 = lam.diff(1, 2);
    out.g = g.value();
    out.kind = table_kind::c_table;
    for (const auto& [mn, c] : pe.terms) {
        if (mn.first + mn.second > out.r1)
            throw std::logic_error("cmn_by_expansion: entry outside the triangular table");
        out.entries.emplace(mn, c);
    }
    return out;
}

rational amn_first_column(const coeff_problem& pr, long m, int formula) {
    if (m < 0 || m > pr.r1) throw std::invalid_argument("amn_first_column: index outside the table");
    const rational& g = pr.g;
    const rational g2 = rational(2) * g, g3 = rational(3) * g;
    if (formula == 0) {
        try {
            return amn_first_column(pr, m, 1);
        } catch (const degenerate_parameter&) {
        }
        try {
            return amn_first_column(pr, m, 2);
        } catch (const degenerate_parameter& e) {
            throw degenerate_parameter(e.parameter(), e.index(),
                                       "both closed-form branches for the companion table",
                                       "a different coupling g");
        }
    }
    if (formula == 1) {
        const std::string ctx = "closed form f1 for the companion table column";
        rational alpha = factorial(pr.r1 - pr.r2) / factorial(pr.r1) * pochhammer(g3, pr.r1) *
                         pochhammer(g2, pr.r2);
        alpha = div_poch(alpha, g2, pr.r1 - pr.r2, ctx, kHintF2);
        alpha = div_poch(alpha, rational(1) - g, pr.r2, ctx, kHintF2);
        rational term = pochhammer(rational(1) - g, m);
        term = div_poch(term, g2, m, ctx, kHintF2);
        const rational f = pfq_at_one(
            {rational(-pr.r2), g, -g - rational(pr.r1), rational(1 - m) - g2},
            {rational(1 - pr.r2) - g, rational(1 - pr.r1) - g2, g - rational(m)}, ctx, kHintF2);
        return alpha * term * f;
    }
    if (formula == 2) {
        const std::string ctx = "closed form f2 for the companion table column";
        rational alpha = factorial(pr.r2) / factorial(pr.r1) * pochhammer(rational(1) + g, pr.r1) *
                         pochhammer(g, pr.r1 - pr.r2) * pochhammer(g3, pr.r1) *
                         pochhammer(g2, pr.r2);
        alpha = div_poch(alpha, rational(1) + g, pr.r2, ctx, kHintF1);
        alpha = div_poch(alpha, g2, pr.r1 - pr.r2, ctx, kHintF1);
        alpha = div_poch(alpha, g2, pr.r1, ctx, kHintF1);
        alpha = div_poch(alpha, g, pr.r2, ctx, kHintF1);
        rational term = pochhammer(rational(1 - pr.r2) - g2, m);
        term = div_poch(term, g - rational(pr.r2), m, ctx, kHintF1);
        const rational f = pfq_at_one(
            {rational(pr.r2 - pr.r1), g, g2 + rational(pr.r2), rational(1 + pr.r2 - m) - g},
            {rational(1 + pr.r2 - pr.r1) - g, rational(1 + pr.r2) + g, g2 + rational(pr.r2 - m)},
            ctx, kHintF1);
        return alpha * term * f;
    }
    throw std::invalid_argument("amn_first_column: formula must be 0, 1 or 2");
}

coeff_table amn_table(const coeff_problem& pr) {
    std::vector<rational> col;
    col.reserve(static_cast<std::size_t>(pr.r1) + 1);
    for (long m = 0; m <= pr.r1; ++m) col.push_back(amn_first_column(pr, m, 0));
    coeff_table out;
    out.r1 = pr.r1;
    out.r2 = pr.r2;
    out.g = pr.g;
    out.kind = table_kind::a_table;
    for (long m = 0; m <= pr.r1; ++m) {
        for (long n = 0; m + n <= pr.r1; ++n) {
            rational v(0);
            for (long l = 0; l <= n; ++l) {
                rational t = rational(binomial(n, l)) * col[static_cast<std::size_t>(m + l)];
                v += (l % 2) ? -t : t;
            }
            if (!v.is_zero()) out.entries.emplace(std::make_pair(m, n), v);
        }
    }
    return out;
}

std::pair<rational, rational> ca_substitution_sides(const coeff_table& c, const coeff_table& a,
                                                    long m, long n) {
    if (c.kind != table_kind::c_table || a.kind != table_kind::a_table || c.r1 != a.r1 ||
        c.r2 != a.r2 || c.g != a.g)
        throw std::invalid_argument("ca_substitution_sides: mismatched tables");
    const rational& g = c.g;
    const rational g2 = rational(2) * g, g3 = rational(3) * g;
    rational lhs = a.coeff(m, n) * pochhammer(g2, m + n) * pochhammer(rational(-c.r1), m + n) *
                   pochhammer(g - rational(c.r2), m + n);
    rational rhs = c.coeff(m, n) * factorial(m) * factorial(n) * pochhammer(g3 - rational(1), n) *
                   pochhammer(g3, n) * pochhammer(rational(1 - c.r1) - g2, m) *
                   pochhammer(rational(1 - c.r2) - g, m);
    return {lhs, rhs};
}

// ---- Three-variable representations --------------------------------------

pmn_expansion jack_a2_reduced_pmn(const partition& lam, const coupling& g, int which) {
    require_three_parts(lam, "jack_a2_reduced_pmn");
    if (which != 1 && which != 2)
        throw std::invalid_argument("jack_a2_reduced_pmn: representation must be 1 or 2");
    const long r1 = lam.diff(0, 2), r2 = lam.diff(1, 2), d12 = lam.diff(0, 1);
    const rational& gv = g.value();
    const rational g2 = rational(2) * gv;

    pmn_expansion out;
    out.prefactor_power = lam.part(2);

    if (which == 1) {
        const std::string ctx = "representation repr1";
        rational pref = pochhammer(gv, r2) * pochhammer(g2, r1) * factorial(d12) / factorial(r1);
        pref = div_poch(pref, gv, d12, ctx, kHintRepr2);
        pref = div_poch(pref, rational(1) - gv, r2, ctx, kHintRepr2);
        for (long m = 0; m <= r1; ++m) {
            for (long n = 0; m + n <= r1; ++n) {
                rational v = pref * pochhammer(rational(-r1), m + n) *
                             pochhammer(gv - rational(r2), m + n) *
                             pochhammer(rational(1) - gv, m) / (factorial(m) * factorial(n));
                v = div_poch(v, rational(1 - r1) - g2, m, ctx, kHintRepr2);
                v = div_poch(v, rational(1 - r2) - gv, m, ctx, kHintRepr2);
                v = div_poch(v, g2, n, ctx, kHintRepr2);
                v *= pfq_at_one(
                    {rational(-r2), gv, -gv - rational(r1), rational(1 - m - n) - g2},
                    {rational(1 - r2) - gv, rational(1 - r1) - g2, gv - rational(m)}, ctx,
                    kHintRepr2);
                out.add(m, n, v);
            }
        }
        return out;
    }

    const std::string ctx = "representation repr2";
    const rational pref =
        pochhammer(gv, r1 + 1) / pochhammer(gv, r2 + 1) * factorial(r2) / factorial(r1);
    for (long m = 0; m <= r1; ++m) {
        for (long n = 0; m + n <= r1; ++n) {
            rational v = pref * pochhammer(rational(-r1), m + n) *
                         pochhammer(rational(1 - r2) - g2, m) * pochhammer(g2, m + n) /
                         (factorial(m) * factorial(n));
            v = div_poch(v, rational(1 - r1) - g2, m, ctx, kHintRepr1);
            v = div_poch(v, rational(1 - r2) - gv, m, ctx, kHintRepr1);
            v = div_poch(v, g2, n, ctx, kHintRepr1);
            v *= pfq_at_one(
                {rational(-d12), gv, g2 + rational(r2), rational(1 + r2 - m - n) - gv},
                {rational(1 + r2) + gv, rational(1) - gv - rational(d12), g2 + rational(r2 - m)},
                ctx, kHintRepr1);
            out.add(m, n, v);
        }
    }
    return out;
}

sym_poly jack_a2_repr1(const partition& lam, const coupling& g) {
    return homogenize(pmn_to_sympoly(jack_a2_reduced_pmn(lam, g, 1)), lam.weight());
}

sym_poly jack_a2_repr2(const partition& lam, const coupling& g) {
    return homogenize(pmn_to_sympoly(jack_a2_reduced_pmn(lam, g, 2)), lam.weight());
}

// ---- Specializations -------------------------------------------------------

sym_poly jack_one_row(long r, std::size_t nvars, const coupling& g) {
    if (r < 0) throw std::invalid_argument("jack_one_row: negative row");
    const rational pref = factorial(r) / pochhammer(g.value(), r);
    std::map<partition, rational> emap;
    for (const auto& mu : partitions_of_weight(r, static_cast<std::size_t>(r < 1 ? 1 : r),
                                               static_cast<long>(nvars))) {
        const long len = static_cast<long>(mu.length());
        rational c = pref * pochhammer(g.value(), len);
        if ((r - len) % 2) c = -c;
        long run = 1;
        for (std::size_t i = 1; i <= mu.length(); ++i) {
            if (i < mu.length() && mu.part(i) == mu.part(i - 1)) {
                ++run;
            } else {
                c /= factorial(run);
                run = 1;
            }
        }
        emap[mu] += c;
    }
    if (r == 0) emap[partition()] = rational(1);
    return elementary_to_monomial(emap, nvars);
}

pmn_expansion one_row_pmn_table(long r, const coupling& g) {
    if (r < 0) throw std::invalid_argument("one_row_pmn_table: negative row");
    const std::string ctx = "reduced one-row p_(m,n) table";
    const rational& gv = g.value();
    const rational g2 = rational(2) * gv;
    const rational pref = pochhammer(g2, r) / pochhammer(gv, r);
    pmn_expansion out;
    for (long m = 0; m <= r; ++m) {
        for (long n = 0; m + n <= r; ++n) {
            rational v = pref * pochhammer(rational(-r), m + n) * pochhammer(gv, m + n) /
                         (factorial(m) * factorial(n));
            v = div_poch(v, rational(1 - r) - g2, m, ctx, "");
            v = div_poch(v, g2, n, ctx, "");
            out.add(m, n, v);
        }
    }
    return out;
}

sym_poly one_row_power_form(long r, const coupling& g) {
    if (r < 0) throw std::invalid_argument("one_row_power_form: negative row");
    const rational& gv = g.value();
    raw_poly raw;
    for (long j = 0; 2 * j <= r; ++j) {
        for (long i = 0; i + 2 * j <= r; ++i) {
            rational c = pochhammer(rational(-r), i + 2 * j) * pochhammer(gv, i + j) *
                         pochhammer(gv, r - i - 2 * j) /
                         (pochhammer(gv, r) * factorial(i) * factorial(j));
            if ((i + j) % 2) c = -c;
            for (long t = 0; t <= i; ++t)
                raw_add(raw, {t + j, i - t + j}, c * rational(binomial(i, t)));
        }
    }
    return sym_poly::collect(2, raw);
}

sym_poly one_row_elementary_form(long r, const coupling& g) {
    if (r < 0) throw std::invalid_argument("one_row_elementary_form: negative row");
    rational pref = factorial(r) / pochhammer(g.value(), r);
    if (r % 2) pref = -pref;
    std::map<partition, rational> emap;
    for (long k = 0; 3 * k <= r; ++k) {
        for (long j = 0; 3 * k + 2 * j <= r; ++j) {
            const long i = r - 3 * k - 2 * j;
            rational c = pref * pochhammer(g.value(), i + j + k) /
                         (factorial(i) * factorial(j) * factorial(k));
            if ((i + j + k) % 2) c = -c;
            std::vector<long> idx(static_cast<std::size_t>(k), 3);
            idx.insert(idx.end(), static_cast<std::size_t>(j), 2);
            idx.insert(idx.end(), static_cast<std::size_t>(i), 1);
            emap[partition(idx)] += c;
        }
    }
    return elementary_to_monomial(emap, 3);
}

sym_poly jack_two_row(long r, const coupling& g) {
    if (r < 0) throw std::invalid_argument("jack_two_row: negative row");
    const rational pref = factorial(r) / pochhammer(g.value(), r);
    std::map<partition, rational> emap;
    for (long m3 = 0; 3 * m3 <= 2 * r; ++m3) {
        for (long m2 = 0; 3 * m3 + 2 * m2 <= 2 * r; ++m2) {
            const long m1 = 2 * r - 3 * m3 - 2 * m2;
            const long s = m1 + m2 + m3;
            if (s > r) continue;
            rational c = pref * pochhammer(g.value(), r - m3) /
                         (factorial(r - s) * factorial(m1) * factorial(m2));
            if (m3 % 2) c = -c;
            std::vector<long> idx(static_cast<std::size_t>(m3), 3);
            idx.insert(idx.end(), static_cast<std::size_t>(m2), 2);
            idx.insert(idx.end(), static_cast<std::size_t>(m1), 1);
            emap[partition(idx)] += c;
        }
    }
    if (r == 0) emap[partition()] = rational(1);
    return elementary_to_monomial(emap, 3);
}

sym_poly jack_rectangular(long r, std::size_t nvars, const coupling& g) {
    if (r < 0) throw std::invalid_argument("jack_rectangular: negative row");
    if (nvars < 2) throw std::invalid_argument("jack_rectangular: needs at least two variables");
    const long n = static_cast<long>(nvars);
    const long w = (n - 1) * r;
    const rational pref = factorial(r) / pochhammer(g.value(), r);
    std::map<partition, rational> emap;
    for (const auto& mu : partitions_of_weight(w, static_cast<std::size_t>(w < 1 ? 1 : w), n)) {
        std::vector<long> mult(static_cast<std::size_t>(n) + 1, 0);
        for (long part : mu.parts()) ++mult[static_cast<std::size_t>(part)];
        long s = static_cast<long>(mu.length());
        if (s > r) continue;
        rational c = pref * pochhammer(g.value(), r - mult[static_cast<std::size_t>(n)]) /
                     factorial(r - s);
        for (long i = 1; i < n; ++i) c /= factorial(mult[static_cast<std::size_t>(i)]);
        if (mult[static_cast<std::size_t>(n)] % 2) c = -c;
        emap[mu] += c;
    }
    if (w == 0) emap[partition()] = rational(1);
    return elementary_to_monomial(emap, nvars);
}

std::vector<rational> xi_coeffs_via_cmn(const partition& lam, const coupling& g) {
    require_three_parts(lam, "xi_coeffs_via_cmn");
    const coeff_problem pr(lam.diff(0, 2), lam.diff(1, 2), g);
    const rational b = b_lambda(lam, 3, g);
    std::vector<rational> out;
    out.reserve(static_cast<std::size_t>(pr.r1) + 1);
    for (long m = 0; m <= pr.r1; ++m) out.push_back(cmn_auto(pr, m, 0).value / b);
    return out;
}

}  // namespace jacksep
