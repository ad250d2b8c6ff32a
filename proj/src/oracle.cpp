#include "jacksep/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "jacksep/errors.hpp"

namespace jacksep {

sym_poly apply_hg(const sym_poly& p, const coupling& g) {
    const std::size_t n = p.nvars();
    raw_poly out;
    for (const auto& [alpha, c] : p.expand()) {
        // Euler part: sum_i (x_i d/dx_i)^2 scales the monomial by
        // sum_i alpha_i^2.
        rational e2(0);
        for (long a : alpha) e2 += rational(a) * rational(a);
        if (!e2.is_zero()) raw_add(out, alpha, c * e2);

        // Interaction part. For the pair (i, j) the operator maps the
        // symmetric pair x_i^a x_j^b + x_i^b x_j^a (a > b) to
        //   (a-b) (x_i x_j)^b (x_i + x_j) sum_{k=0}^{a-b-1} x_i^{a-b-1-k} x_j^k,
        // so each raw monomial with alpha_i > alpha_j carries the whole
        // contribution of its orbit partner as well (the partner is skipped).
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const long a = alpha[i], b = alpha[j];
                if (a <= b) continue;
                const rational w = c * g.value() * rational(a - b);
                exponent_vec e = alpha;
                for (long k = 0; k < a - b; ++k) {
                    e[i] = a - k;
                    e[j] = b + k;
                    raw_add(out, e, w);
                    e[i] = a - 1 - k;
                    e[j] = b + 1 + k;
                    raw_add(out, e, w);
                }
            }
        }
    }
    return sym_poly::collect(n, out);
}

rational hg_eigenvalue(const partition& lam, std::size_t nvars, const coupling& g) {
    if (lam.length() > nvars)
        throw std::invalid_argument("hg_eigenvalue: partition has more parts than variables");
    rational e(0);
    const long n = static_cast<long>(nvars);
    for (long i = 1; i <= n; ++i) {
        rational li(lam.part(static_cast<std::size_t>(i - 1)));
        e += li * (li + g.value() * rational(n + 1 - 2 * i));
    }
    return e;
}

sym_poly jack_oracle(const partition& lam, std::size_t nvars, const coupling& g) {
    if (lam.length() > nvars)
        throw std::invalid_argument("jack_oracle: partition has more parts than variables");

    // Work inside the dominance cone below lambda, in lexicographically
    // descending order (a linear extension of dominance, so every partition
    // is handled after all partitions above it).
    std::vector<partition> cone;
    for (const auto& mu : partitions_of_weight(lam.weight(), nvars)) {
        if (dominance_leq(mu, lam)) cone.push_back(mu);
    }
    std::sort(cone.begin(), cone.end());
    std::reverse(cone.begin(), cone.end());
    if (cone.empty() || cone.front() != lam)
        throw std::logic_error("jack_oracle: dominance cone must start at lambda");

    const rational e_top = hg_eigenvalue(lam, nvars, g);
    std::map<partition, rational> u;
    u[lam] = rational(1);
    // Columns of the operator in the monomial basis, for the partitions
    // whose coefficient is already known.
    std::map<partition, sym_poly> image;
    {
        sym_poly m_top(nvars);
        m_top.add(lam, rational(1));
        image.emplace(lam, apply_hg(m_top, g));
    }

    for (std::size_t idx = 1; idx < cone.size(); ++idx) {
        const partition& mu = cone[idx];
        rational rhs(0);
        for (std::size_t prev = 0; prev < idx; ++prev) {
            const partition& nu = cone[prev];
            rational unu = u[nu];
            if (unu.is_zero()) continue;
            rhs += unu * image.at(nu).coeff(mu);
        }
        const rational denom = e_top - hg_eigenvalue(mu, nvars, g);
        if (denom.is_zero()) throw eigenvalue_collision(lam.padded(nvars), mu.padded(nvars), g.value());
        const rational umu = rhs / denom;
        u[mu] = umu;
        if (!umu.is_zero()) {
            sym_poly m_mu(nvars);
            m_mu.add(mu, rational(1));
            image.emplace(mu, apply_hg(m_mu, g));
        }
    }

    sym_poly out(nvars);
    for (const auto& [mu, c] : u) out.add(mu, c);
    return out;
}

rational constant_term_inner(const sym_poly& p, const sym_poly& q, long g) {
    if (p.nvars() != q.nvars())
        throw std::invalid_argument("constant_term_inner: mismatched variable counts");
    if (g < 0) throw std::invalid_argument("constant_term_inner: coupling must be a nonnegative integer");
    const std::size_t n = p.nvars();

    raw_poly conj;
    for (const auto& [e, c] : p.expand()) {
        exponent_vec neg(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
        raw_add(conj, neg, c);
    }
    raw_poly prod = raw_mul(conj, q.expand());

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            raw_poly factor;
            exponent_vec e(n, 0);
            raw_add(factor, e, rational(1));
            e[i] = 1;
            e[j] = -1;
            raw_add(factor, e, rational(-1));
            for (long rep = 0; rep < g; ++rep) prod = raw_mul(prod, factor);
        }
    }

    exponent_vec zero(n, 0);
    auto it = prod.find(zero);
    return it == prod.end() ? rational(0) : it->second;
}

}  // namespace jacksep
