#include "jacksep/unipoly.hpp"

#include <stdexcept>
#include <utility>

namespace jacksep {

uni_poly::uni_poly(std::vector<rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

uni_poly uni_poly::monomial(long k, const rational& c) {
    if (k < 0) throw std::invalid_argument("uni_poly::monomial: negative degree");
    std::vector<rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return uni_poly(std::move(v));
}

void uni_poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

long uni_poly::order() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return static_cast<long>(k);
    return -1;
}

rational uni_poly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

rational uni_poly::evaluate(const rational& y) const {
    rational acc(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * y + coeffs_[k];
    return acc;
}

uni_poly uni_poly::shifted(long k) const {
    if (k < 0) throw std::invalid_argument("uni_poly::shifted: negative shift");
    if (is_zero()) return uni_poly();
    std::vector<rational> v(static_cast<std::size_t>(k), rational(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return uni_poly(std::move(v));
}

uni_poly& uni_poly::operator+=(const uni_poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

uni_poly& uni_poly::operator-=(const uni_poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

uni_poly& uni_poly::operator*=(const rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

uni_poly operator*(const uni_poly& a, const uni_poly& b) {
    if (a.is_zero() || b.is_zero()) return uni_poly();
    std::vector<rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return uni_poly(std::move(v));
}

std::string uni_poly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) out += ", ";
        out += coeffs_[k].str();
    }
    return out;
}

sym_poly tensor_square(const uni_poly& f) {
    raw_poly raw;
    const auto& c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j].is_zero()) continue;
            raw_add(raw, {static_cast<long>(i), static_cast<long>(j)}, c[i] * c[j]);
        }
    }
    return sym_poly::collect(2, raw);
}

}  // namespace jacksep
