#include "jacksep/rational.hpp"

#include "jacksep/errors.hpp"

#include <ostream>
#include <sstream>

namespace jacksep {

namespace {

mpq_class make_canonical(const integer& num, const integer& den) {
    if (sgn(den) == 0) throw std::domain_error("rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

rational::rational(long num, long den) : v_(make_canonical(integer(num), integer(den))) {}

rational::rational(const integer& num, const integer& den) : v_(make_canonical(num, den)) {}

rational rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return rational(integer(s));
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw std::invalid_argument("rational: malformed");
        return rational(integer(num), integer(den));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    } catch (const std::domain_error&) {  // zero denominator
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    }
}

rational& rational::operator/=(const rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

rational rational::operator-() const {
    rational r;
    r.v_ = -v_;
    return r;
}

long rational::to_long() const {
    if (!is_integer()) throw std::domain_error("rational: " + str() + " is not an integer");
    const integer n = num();
    if (!n.fits_slong_p()) throw std::domain_error("rational: " + str() + " does not fit in long");
    return n.get_si();
}

std::string rational::str() const {
    std::ostringstream os;
    os << num().get_str();
    if (!is_integer()) os << '/' << den().get_str();
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const rational& r) { return os << r.str(); }

rational pochhammer(const rational& a, long n) {
    if (n < 0) throw std::invalid_argument("pochhammer: negative length");
    rational result(1);
    rational term = a;
    for (long k = 0; k < n; ++k) {
        result *= term;
        term += rational(1);
    }
    return result;
}

rational factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return rational(f);
}

integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("binomial: need 0 <= k <= n");
    integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

coupling::coupling(rational g) : g_(std::move(g)) {
    if (g_.sign() <= 0) throw std::invalid_argument("coupling: g must be positive, got " + g_.str());
}

degenerate_parameter::degenerate_parameter(const rational& parameter, long index,
                                           const std::string& context, const std::string& hint)
    : std::domain_error("degenerate parameter in " + context + ": (" + parameter.str() + ")_" +
                        std::to_string(index) + " = 0 inside the summation range" +
                        (hint.empty() ? "" : "; try " + hint)),
      parameter_(parameter),
      index_(index),
      hint_(hint) {}

namespace {

std::string parts_str(const std::vector<long>& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

}  // namespace

eigenvalue_collision::eigenvalue_collision(const std::vector<long>& lambda,
                                           const std::vector<long>& mu, const rational& g)
    : std::domain_error("eigenvalue collision between " + parts_str(lambda) + " and " +
                        parts_str(mu) + " at g = " + g.str() +
                        "; choose a different coupling value"),
      lambda_(lambda),
      mu_(mu),
      g_(g) {}

}  // namespace jacksep
