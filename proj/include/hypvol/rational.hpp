#ifndef HYPVOL_RATIONAL_HPP_
#define HYPVOL_RATIONAL_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hypvol {

using Integer = mpz_class;

/// Exact reduced fraction. The denominator is always positive and coprime
/// to the numerator; zero is stored as 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}
    Rational(Integer const& v) : value_(v) {}
    /// Throws std::domain_error when den == 0.
    Rational(Integer const& num, Integer const& den);

    /// Parses "a" or "a/b" (optional leading sign).
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    mpq_class const& mpq() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    Rational abs() const;
    Rational inverse() const;

    Rational& operator+=(Rational const& o) { value_ += o.value_; return *this; }
    Rational& operator-=(Rational const& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(Rational const& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(Rational const& o);

    Rational operator-() const;

    friend Rational operator+(Rational a, Rational const& b) { return a += b; }
    friend Rational operator-(Rational a, Rational const& b) { return a -= b; }
    friend Rational operator*(Rational a, Rational const& b) { return a *= b; }
    friend Rational operator/(Rational a, Rational const& b) { return a /= b; }

    friend bool operator==(Rational const& a, Rational const& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(Rational const& a, Rational const& b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;

private:
    mpq_class value_;
};

/// Exact integer power; negative exponents invert (0^-k throws).
Rational pow(Rational const& base, long exponent);

Integer ipow(Integer const& base, unsigned long exponent);
Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// Number of decimal digits of |v| (1 for zero).
std::size_t decimal_digits(Integer const& v);

std::string to_string(Integer const& v);

} // namespace hypvol

#endif /* HYPVOL_RATIONAL_HPP_ */
