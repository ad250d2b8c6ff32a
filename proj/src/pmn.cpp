#include "jacksep/pmn.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace jacksep {

rational pmn_expansion::coeff(long m, long n) const {
    auto it = terms.find({m, n});
    return it == terms.end() ? rational(0) : it->second;
}

void pmn_expansion::add(long m, long n, const rational& c) {
    if (m < 0 || n < 0) throw std::invalid_argument("pmn_expansion::add: negative index");
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(std::make_pair(m, n), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

pmn_expansion pmn_expansion::normalized() const {
    if (terms.empty()) return pmn_expansion{};
    long shift = -1;
    for (const auto& [mn, c] : terms) {
        (void)c;
        if (shift < 0 || mn.first < shift) shift = mn.first;
    }
    pmn_expansion out;
    out.prefactor_power = prefactor_power + shift;
    for (const auto& [mn, c] : terms) out.terms.emplace(std::make_pair(mn.first - shift, mn.second), c);
    return out;
}

std::string pmn_expansion::str() const {
    if (terms.empty()) return "0";
    // Order by total index, then m.
    std::vector<std::pair<std::pair<long, long>, rational>> flat(terms.begin(), terms.end());
    std::sort(flat.begin(), flat.end(), [](const auto& a, const auto& b) {
        long ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta < tb;
        return a.first.first < b.first.first;
    });
    std::string body;
    bool first = true;
    for (const auto& [mn, c] : flat) {
        rational a = c;
        if (first) {
            if (a.sign() < 0) {
                body += "-";
                a = -a;
            }
        } else {
            body += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        if (a != rational(1)) body += a.str() + "*";
        body += "p_(" + std::to_string(mn.first) + "," + std::to_string(mn.second) + ")";
        first = false;
    }
    if (prefactor_power == 0) return body;
    std::string pre = "(x1*x2)";
    if (prefactor_power != 1) pre += "^" + std::to_string(prefactor_power);
    return pre + " * (" + body + ")";
}

bool operator==(const pmn_expansion& a, const pmn_expansion& b) {
    pmn_expansion na = a.normalized(), nb = b.normalized();
    return na.prefactor_power == nb.prefactor_power && na.terms == nb.terms;
}

bool operator!=(const pmn_expansion& a, const pmn_expansion& b) { return !(a == b); }

sym_poly pmn_to_sympoly(const pmn_expansion& p) {
    if (p.prefactor_power < 0)
        throw std::invalid_argument("pmn_to_sympoly: negative prefactor power");
    // v = (1 - x1)(1 - x2) as a raw expansion; cache its powers.
    raw_poly v;
    raw_add(v, {0, 0}, rational(1));
    raw_add(v, {1, 0}, rational(-1));
    raw_add(v, {0, 1}, rational(-1));
    raw_add(v, {1, 1}, rational(1));
    std::vector<raw_poly> vpow;
    vpow.push_back({{{0, 0}, rational(1)}});
    raw_poly out;
    for (const auto& [mn, c] : p.terms) {
        const long m = p.prefactor_power + mn.first;
        const long n = mn.second;
        while (static_cast<long>(vpow.size()) <= n) vpow.push_back(raw_mul(vpow.back(), v));
        for (const auto& [e, a] : vpow[static_cast<std::size_t>(n)])
            raw_add(out, {e[0] + m, e[1] + m}, c * a);
    }
    return sym_poly::collect(2, out);
}

pmn_expansion sympoly_to_pmn(const sym_poly& p) {
    if (p.nvars() != 2) throw std::invalid_argument("sympoly_to_pmn: expected 2 variables");
    pmn_expansion out;
    if (p.is_zero()) return out;
    // Strip the largest power of x1*x2 dividing p: t = min over terms of the
    // second part of mu.
    long t = -1;
    for (const auto& [mu, c] : p.terms()) {
        (void)c;
        if (t < 0 || mu.part(1) < t) t = mu.part(1);
    }
    sym_poly stripped(2);
    for (const auto& [mu, c] : p.terms())
        stripped.add(partition({mu.part(0) - t, mu.part(1) - t}), c);
    out.prefactor_power = t;
    // In two variables e1 = x1 + x2 = 1 + u - v and e2 = x1 x2 = u, where
    // u = x1 x2 and v = (1 - x1)(1 - x2). Expand each e1^a e2^b by the
    // trinomial theorem.
    for (const auto& [mu, d] : monomial_to_elementary(stripped)) {
        long a = 0, b = 0;
        for (long idx : mu.parts()) {
            if (idx == 1)
                ++a;
            else if (idx == 2)
                ++b;
            else
                throw std::logic_error("sympoly_to_pmn: unexpected elementary index");
        }
        for (long q = 0; q <= a; ++q) {
            for (long pw = 0; pw + q <= a; ++pw) {
                // term (1)^(a-p-q) u^p (-v)^q of (1 + u - v)^a, times u^b
                rational c = d * (factorial(a) / (factorial(pw) * factorial(q) * factorial(a - pw - q)));
                if (q % 2) c = -c;
                out.add(pw + b, q, c);
            }
        }
    }
    return out.normalized();
}

}  // namespace jacksep
