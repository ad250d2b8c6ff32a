#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace jacksep {

using integer = mpz_class;

// Exact rational scalar. Values are always stored in lowest terms with a
// positive denominator, so equality is structural and serialization is
// canonical ("p/q", or just "p" when the denominator is 1, sign on the
// numerator).
class rational {
public:
    rational() : v_(0) {}
    rational(int n) : v_(n) {}
    rational(long n) : v_(static_cast<signed long>(n)) {}
    rational(const integer& n) : v_(n) {}
    rational(long num, long den);
    rational(const integer& num, const integer& den);

    // Parses "p/q" or "p". Throws std::invalid_argument on malformed input
    // or a zero denominator.
    static rational parse(const std::string& s);

    integer num() const { return v_.get_num(); }
    integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    // True iff the value is an integer <= 0 (the values whose Pochhammer
    // symbols eventually vanish).
    bool is_nonpositive_integer() const { return is_integer() && sgn(v_) <= 0; }
    int sign() const { return sgn(v_); }

    // Requires an integer value that fits in long.
    long to_long() const;

    std::string str() const;

    rational& operator+=(const rational& o) { v_ += o.v_; return *this; }
    rational& operator-=(const rational& o) { v_ -= o.v_; return *this; }
    rational& operator*=(const rational& o) { v_ *= o.v_; return *this; }
    rational& operator/=(const rational& o);

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }
    rational operator-() const;

    friend bool operator==(const rational& a, const rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const rational& a, const rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const rational& a, const rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const rational& a, const rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const rational& a, const rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const rational& a, const rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const rational& r);

private:
    mpq_class v_;
};

// Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
// Requires n >= 0.
rational pochhammer(const rational& a, long n);

// n! as an exact rational. Requires n >= 0.
rational factorial(long n);

// Binomial coefficient C(n, k). Requires 0 <= k <= n.
integer binomial(long n, long k);

// The coupling constant of the model. Construction enforces g > 0; all
// public entry points that depend on the coupling take this type so the
// positivity contract is checked once, at the boundary.
class coupling {
public:
    explicit coupling(rational g);
    const rational& value() const { return g_; }

private:
    rational g_;
};

}  // namespace jacksep
