#include "jacksep/hypergeom.hpp"

#include <stdexcept>

namespace jacksep {

long pfq_termination_bound(const std::vector<rational>& upper) {
    long best = -1;
    for (const auto& a : upper) {
        if (!a.is_nonpositive_integer()) continue;
        long n = (-a).to_long();
        if (best < 0 || n < best) best = n;
    }
    if (best < 0)
        throw non_terminating(
            "hypergeometric series does not terminate: no upper parameter is a "
            "non-positive integer");
    return best;
}

void check_lower_parameters(const std::vector<rational>& lower, long kmax,
                            const std::string& context, const std::string& hint) {
    for (const auto& b : lower) {
        if (!b.is_nonpositive_integer()) continue;
        long first_vanish = 1 + (-b).to_long();  // (b)_k = 0 first at k = 1 - b
        if (first_vanish <= kmax) throw degenerate_parameter(b, first_vanish, context, hint);
    }
}

std::vector<rational> pfq_coefficients(const std::vector<rational>& upper,
                                       const std::vector<rational>& lower, long count,
                                       const std::string& context, const std::string& hint) {
    if (count < 0) throw std::invalid_argument("pfq_coefficients: negative count");
    check_lower_parameters(lower, count - 1, context, hint);
    std::vector<rational> t;
    t.reserve(static_cast<std::size_t>(count));
    if (count == 0) return t;
    t.push_back(rational(1));
    for (long k = 0; k + 1 < count; ++k) {
        rational num(1), den(k + 1);
        for (const auto& a : upper) num *= a + rational(k);
        for (const auto& b : lower) den *= b + rational(k);
        t.push_back(t.back() * num / den);
    }
    return t;
}

uni_poly pfq_polynomial(const std::vector<rational>& upper, const std::vector<rational>& lower,
                        const std::string& context, const std::string& hint) {
    long bound = pfq_termination_bound(upper);
    return uni_poly(pfq_coefficients(upper, lower, bound + 1, context, hint));
}

rational pfq_at_one(const std::vector<rational>& upper, const std::vector<rational>& lower,
                    const std::string& context, const std::string& hint) {
    long bound = pfq_termination_bound(upper);
    rational sum(0);
    for (const auto& t : pfq_coefficients(upper, lower, bound + 1, context, hint)) sum += t;
    return sum;
}

rational saalschutz_3f2(const rational& a, const rational& b, long n, const rational& c) {
    if (n < 0) throw std::invalid_argument("saalschutz_3f2: negative n");
    // (c)_n and (c-a-b)_n appear in the denominator, so their Pochhammer
    // symbols must not vanish up to index n.
    check_lower_parameters({c, c - a - b}, n, "saalschutz_3f2");
    return pochhammer(c - a, n) * pochhammer(c - b, n) /
           (pochhammer(c, n) * pochhammer(c - a - b, n));
}

std::map<std::pair<long, long>, rational> appell_f4_terminating(const rational& a,
                                                                const rational& b,
                                                                const rational& c,
                                                                const rational& d, long N) {
    if (N < 0 || a != rational(-N))
        throw std::invalid_argument("appell_f4_terminating: requires a = -N with N >= 0");
    check_lower_parameters({c, d}, N, "appell_f4_terminating");
    std::map<std::pair<long, long>, rational> out;
    for (long m = 0; m <= N; ++m) {
        for (long n = 0; m + n <= N; ++n) {
            rational val = pochhammer(a, m + n) * pochhammer(b, m + n) /
                           (pochhammer(c, m) * pochhammer(d, n) * factorial(m) * factorial(n));
            if (!val.is_zero()) out.emplace(std::make_pair(m, n), val);
        }
    }
    return out;
}

uni_poly gegenbauer(long n, const rational& g) {
    if (n < 0) throw std::invalid_argument("gegenbauer: negative degree");
    uni_poly prev2(std::vector<rational>{rational(1)});
    if (n == 0) return prev2;
    uni_poly prev1(std::vector<rational>{rational(0), rational(2) * g});
    if (n == 1) return prev1;
    uni_poly x = uni_poly::monomial(1);
    for (long k = 2; k <= n; ++k) {
        uni_poly cur = (rational(2) * (rational(k) + g - rational(1))) * (x * prev1);
        cur -= (rational(k) + rational(2) * g - rational(2)) * prev2;
        cur *= rational(1, k);
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

}  // namespace jacksep
