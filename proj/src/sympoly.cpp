#include "jacksep/sympoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jacksep {

void raw_add(raw_poly& p, const exponent_vec& e, const rational& c) {
    if (c.is_zero()) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
}

raw_poly raw_mul(const raw_poly& a, const raw_poly& b) {
    raw_poly out;
    exponent_vec e;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            raw_add(out, e, ca * cb);
        }
    }
    return out;
}

long sym_poly::degree() const {
    long d = -1;
    for (const auto& [mu, c] : terms_) d = std::max(d, mu.weight());
    return d;
}

rational sym_poly::coeff(const partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? rational(0) : it->second;
}

void sym_poly::add(const partition& mu, const rational& c) {
    if (c.is_zero()) return;
    if (mu.length() > nvars_)
        throw std::invalid_argument("sym_poly: partition " + mu.str() + " has more than " +
                                    std::to_string(nvars_) + " parts");
    auto it = terms_.find(mu);
    if (it == terms_.end()) {
        terms_.emplace(mu, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

raw_poly sym_poly::expand() const {
    raw_poly out;
    for (const auto& [mu, c] : terms_) {
        exponent_vec e = mu.padded(nvars_);
        std::sort(e.begin(), e.end());  // ascending start for next_permutation
        do {
            out.emplace(e, c);
        } while (std::next_permutation(e.begin(), e.end()));
    }
    return out;
}

namespace {

// Number of distinct permutations of the padded exponent vector.
long orbit_size(const std::vector<long>& sorted_desc, std::size_t nvars) {
    std::vector<long> padded(sorted_desc);
    padded.resize(nvars, 0);
    long total = 1;
    for (std::size_t i = 2; i <= nvars; ++i) total *= static_cast<long>(i);
    std::size_t i = 0;
    while (i < padded.size()) {
        std::size_t j = i;
        while (j < padded.size() && padded[j] == padded[i]) ++j;
        long run = 1;
        for (std::size_t k = 2; k <= j - i; ++k) run *= static_cast<long>(k);
        total /= run;
        i = j;
    }
    return total;
}

}  // namespace

sym_poly sym_poly::collect(std::size_t nvars, const raw_poly& p) {
    sym_poly out(nvars);
    std::map<partition, long> seen;
    for (const auto& [e, c] : p) {
        if (c.is_zero()) continue;
        if (e.size() != nvars) throw std::logic_error("sym_poly::collect: exponent arity mismatch");
        std::vector<long> sorted = e;
        std::sort(sorted.begin(), sorted.end(), std::greater<long>());
        if (!sorted.empty() && sorted.back() < 0)
            throw std::logic_error("sym_poly::collect: negative exponent");
        partition mu(sorted);
        if (e == exponent_vec(mu.padded(nvars))) out.add(mu, c);
        ++seen[mu];
    }
    // Symmetry check: every orbit must be present in full and carry a single
    // coefficient (that of its canonical, sorted representative).
    for (const auto& [mu, count] : seen) {
        if (count != orbit_size(mu.parts(), nvars))
            throw std::logic_error("sym_poly::collect: input is not symmetric (incomplete orbit of " +
                                   mu.str() + ")");
    }
    for (const auto& [e, c] : p) {
        if (c.is_zero()) continue;
        std::vector<long> sorted = e;
        std::sort(sorted.begin(), sorted.end(), std::greater<long>());
        partition mu(sorted);
        if (c != out.coeff(mu))
            throw std::logic_error("sym_poly::collect: input is not symmetric (mixed coefficients on " +
                                   mu.str() + ")");
    }
    return out;
}

rational sym_poly::evaluate(const std::vector<rational>& point) const {
    if (point.size() != nvars_)
        throw std::invalid_argument("sym_poly::evaluate: point arity mismatch");
    rational total(0);
    for (const auto& [e, c] : expand()) {
        rational term = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            for (long k = 0; k < e[i]; ++k) term *= point[i];
        }
        total += term;
    }
    return total;
}

sym_poly& sym_poly::operator+=(const sym_poly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("sym_poly: variable count mismatch");
    for (const auto& [mu, c] : o.terms_) add(mu, c);
    return *this;
}

sym_poly& sym_poly::operator-=(const sym_poly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("sym_poly: variable count mismatch");
    for (const auto& [mu, c] : o.terms_) add(mu, -c);
    return *this;
}

sym_poly operator*(const sym_poly& a, const sym_poly& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("sym_poly: variable count mismatch");
    return sym_poly::collect(a.nvars(), raw_mul(a.expand(), b.expand()));
}

sym_poly& sym_poly::operator*=(const rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mu, v] : terms_) v *= c;
    return *this;
}

std::string sym_poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [mu, c] = *it;
        const bool negative = c.sign() < 0;
        const rational abs = negative ? -c : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        const bool unit = abs == rational(1);
        if (mu.empty()) {
            os << abs.str();
        } else if (unit) {
            os << "m_" << mu.str();
        } else {
            os << abs.str() << "*m_" << mu.str();
        }
    }
    return os.str();
}

sym_poly sym_const(std::size_t nvars, const rational& c) {
    sym_poly p(nvars);
    p.add(partition(), c);
    return p;
}

sym_poly elementary(std::size_t nvars, long k) {
    if (k < 0) throw std::invalid_argument("elementary: negative index");
    sym_poly p(nvars);
    if (static_cast<std::size_t>(k) > nvars) return p;  // identically zero
    p.add(partition(std::vector<long>(static_cast<std::size_t>(k), 1)), rational(1));
    return p;
}

std::map<partition, rational> monomial_to_elementary(const sym_poly& p) {
    std::map<partition, rational> out;
    sym_poly rest = p;
    // Peel the lexicographically greatest monomial term: the product of
    // elementary polynomials indexed by the conjugate partition has exactly
    // that leading term with unit coefficient, so subtraction strictly
    // reduces the leading term and the loop terminates.
    while (!rest.is_zero()) {
        const auto& [mu, c] = *rest.terms().rbegin();
        const partition conj = mu.conjugate();
        sym_poly e_prod = sym_const(rest.nvars(), rational(1));
        for (long part : conj.parts()) e_prod = e_prod * elementary(rest.nvars(), part);
        out[conj] = c;
        e_prod *= c;
        rest -= e_prod;
    }
    return out;
}

sym_poly elementary_to_monomial(const std::map<partition, rational>& e, std::size_t nvars) {
    sym_poly out(nvars);
    for (const auto& [mu, c] : e) {
        sym_poly prod = sym_const(nvars, rational(1));
        for (long part : mu.parts()) prod = prod * elementary(nvars, part);
        prod *= c;
        out += prod;
    }
    return out;
}

sym_poly reduce_last_var(const sym_poly& p) {
    if (p.nvars() == 0) throw std::invalid_argument("reduce_last_var: no variables");
    const std::size_t m = p.nvars() - 1;
    raw_poly out;
    for (const auto& [e, c] : p.expand()) {
        exponent_vec reduced(e.begin(), e.end() - 1);
        raw_add(out, reduced, c);
    }
    return sym_poly::collect(m, out);
}

sym_poly homogenize(const sym_poly& p, long weight) {
    const std::size_t n = p.nvars() + 1;
    raw_poly out;
    for (const auto& [e, c] : p.expand()) {
        long total = 0;
        for (long x : e) total += x;
        if (total > weight)
            throw std::invalid_argument("homogenize: monomial degree exceeds target weight");
        exponent_vec lifted = e;
        lifted.push_back(weight - total);
        raw_add(out, lifted, c);
    }
    return sym_poly::collect(n, out);
}

}  // namespace jacksep
