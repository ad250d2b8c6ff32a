#include "jacksep/separated.hpp"

#include <map>
#include <stdexcept>

#include "jacksep/hypergeom.hpp"

namespace jacksep {

namespace {

void require_fits(const partition& lam, std::size_t nvars, const char* who) {
    if (lam.length() > nvars)
        throw std::invalid_argument(std::string(who) + ": partition has more parts than variables");
    if (nvars == 0) throw std::invalid_argument(std::string(who) + ": need at least one variable");
}

}  // namespace

rational b_lambda(const partition& lam, std::size_t nvars, const coupling& g) {
    require_fits(lam, nvars, "b_lambda");
    const long n = static_cast<long>(nvars);
    rational out(1);
    for (long i = 1; i < n; ++i) {
        long d = lam.diff(static_cast<std::size_t>(i - 1), nvars - 1);
        out *= pochhammer(rational(n - i + 1) * g.value(), d) /
               pochhammer(rational(n - i) * g.value(), d);
    }
    return out;
}

rational c_lambda(const partition& lam, std::size_t nvars, const coupling& g) {
    require_fits(lam, nvars, "c_lambda");
    const long n = static_cast<long>(nvars);
    rational out(1);
    for (long i = 1; i <= n; ++i) {
        for (long j = i + 1; j <= n; ++j) {
            long d = lam.diff(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
            out *= pochhammer(rational(j - i + 1) * g.value(), d) /
                   pochhammer(rational(j - i) * g.value(), d);
        }
    }
    return out;
}

uni_poly f_lambda_product_form(const partition& lam, std::size_t nvars, const coupling& g,
                               long margin) {
    require_fits(lam, nvars, "f_lambda_product_form");
    if (margin < 0) throw std::invalid_argument("f_lambda_product_form: negative margin");
    const long n = static_cast<long>(nvars);
    const long low = lam.part(nvars - 1);
    const long span = lam.part(0) - low;
    const long window = span + margin;

    std::vector<rational> upper, lower;
    for (long i = 1; i <= n; ++i) {
        rational a = rational(low - lam.part(static_cast<std::size_t>(i - 1)) + 1) -
                     rational(n - i + 1) * g.value();
        upper.push_back(a);
        if (i < n) lower.push_back(a + g.value());
    }
    std::vector<rational> series =
        pfq_coefficients(upper, lower, window + 1, "product form of the separated polynomial",
                         "the terminating sum form, or a coupling g where no lower parameter "
                         "is a non-positive integer");

    // (1 - y)^{1 - ng}: coefficient of y^k is (ng - 1)_k / k!.
    const rational c0 = rational(n) * g.value() - rational(1);
    std::vector<rational> binom(static_cast<std::size_t>(window) + 1);
    binom[0] = rational(1);
    for (long k = 0; k < window; ++k)
        binom[static_cast<std::size_t>(k + 1)] =
            binom[static_cast<std::size_t>(k)] * (c0 + rational(k)) / rational(k + 1);

    std::vector<rational> prod(static_cast<std::size_t>(window) + 1);
    for (long i = 0; i <= window; ++i) {
        if (series[static_cast<std::size_t>(i)].is_zero()) continue;
        for (long j = 0; i + j <= window; ++j)
            prod[static_cast<std::size_t>(i + j)] +=
                series[static_cast<std::size_t>(i)] * binom[static_cast<std::size_t>(j)];
    }

    for (long k = span + 1; k <= window; ++k) {
        if (!prod[static_cast<std::size_t>(k)].is_zero())
            throw truncation_failure(
                "product form of the separated polynomial did not truncate: coefficient of "
                "degree " +
                std::to_string(low + k) + " is nonzero");
    }
    prod.resize(static_cast<std::size_t>(span) + 1);
    return uni_poly(std::move(prod)).shifted(low);
}

uni_poly f_lambda_sum_form(const partition& lam, std::size_t nvars, const coupling& g) {
    require_fits(lam, nvars, "f_lambda_sum_form");
    const long n = static_cast<long>(nvars);
    const long low = lam.part(nvars - 1);
    const long span = lam.part(0) - low;

    // Accumulate the coefficient of each power of (1 - y).
    std::map<long, rational> by_power;
    std::vector<long> k(static_cast<std::size_t>(n > 0 ? n - 1 : 0), 0);
    std::vector<long> kmax(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) kmax[i] = lam.diff(i, i + 1);
    while (true) {
        rational term(1);
        long K = 0;
        for (std::size_t i = 0; i < k.size(); ++i) {
            K += k[i];
            term *= pochhammer(rational(-kmax[i]), k[i]) / factorial(k[i]);
            term *= pochhammer(rational(static_cast<long>(i) + 1) * g.value(), K) /
                    pochhammer(rational(static_cast<long>(i) + 2) * g.value(), K);
        }
        by_power[K] += term;
        // Odometer over 0 <= k_i <= kmax_i.
        std::size_t pos = 0;
        while (pos < k.size() && k[pos] == kmax[pos]) k[pos++] = 0;
        if (pos == k.size()) break;
        ++k[pos];
    }

    // Expand sum_K coef_K (1 - y)^K; max K is span, so the result fits in
    // the coefficient window by construction.
    std::vector<rational> out(static_cast<std::size_t>(span) + 1);
    for (const auto& [K, coef] : by_power) {
        if (coef.is_zero()) continue;
        for (long j = 0; j <= K; ++j) {
            rational c = coef * rational(binomial(K, j));
            if (j % 2) c = -c;
            out[static_cast<std::size_t>(j)] += c;
        }
    }
    uni_poly result(std::move(out));
    result *= b_lambda(lam, nvars, g);
    return result.shifted(low);
}

std::vector<rational> xi_coeffs(const partition& lam, std::size_t nvars, const coupling& g) {
    uni_poly f = f_lambda_sum_form(lam, nvars, g);
    const long low = lam.part(nvars - 1);
    const long span = lam.part(0) - low;
    std::vector<rational> out;
    out.reserve(static_cast<std::size_t>(span) + 1);
    for (long k = 0; k <= span; ++k) out.push_back(f.coeff(low + k));
    return out;
}

}  // namespace jacksep
