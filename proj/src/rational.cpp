#include "hypvol/rational.hpp"

#include <stdexcept>

namespace hypvol {

Rational::Rational(Integer const& num, Integer const& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s, 10));
        return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
    } catch (std::invalid_argument const&) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
}

Rational Rational::abs() const
{
    Rational r = *this;
    mpq_abs(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
}

Rational Rational::inverse() const
{
    return Rational(1) / *this;
}

Rational& Rational::operator/=(Rational const& o)
{
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational r = *this;
    mpq_neg(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
}

std::string Rational::to_string() const
{
    return value_.get_str(10);
}

Rational pow(Rational const& base, long exponent)
{
    if (exponent < 0) {
        if (base.is_zero())
            throw std::domain_error("zero raised to a negative power");
        return pow(base.inverse(), -exponent);
    }
    auto e = static_cast<unsigned long>(exponent);
    return Rational(ipow(base.numerator(), e), ipow(base.denominator(), e));
}

Integer ipow(Integer const& base, unsigned long exponent)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::size_t decimal_digits(Integer const& v)
{
    // mpz_sizeinbase may overshoot by one for base 10.
    std::string s = v.get_str(10);
    return s[0] == '-' ? s.size() - 1 : s.size();
}

std::string to_string(Integer const& v)
{
    return v.get_str(10);
}

} // namespace hypvol
