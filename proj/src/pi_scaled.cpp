#include "hypvol/pi_scaled.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hypvol {

PiScaled::PiScaled(Rational coefficient, long pi_exponent)
    : coefficient_(std::move(coefficient))
    , pi_exponent_(coefficient_.is_zero() ? 0 : pi_exponent)
{
}

PiScaled& PiScaled::operator*=(PiScaled const& o)
{
    coefficient_ *= o.coefficient_;
    pi_exponent_ = coefficient_.is_zero() ? 0 : pi_exponent_ + o.pi_exponent_;
    return *this;
}

PiScaled& PiScaled::operator/=(PiScaled const& o)
{
    coefficient_ /= o.coefficient_;
    pi_exponent_ = coefficient_.is_zero() ? 0 : pi_exponent_ - o.pi_exponent_;
    return *this;
}

std::string PiScaled::to_string() const
{
    return "(" + coefficient_.to_string() + ")*pi^" + std::to_string(pi_exponent_);
}

PiScaled pow(PiScaled const& x, long exponent)
{
    return PiScaled(pow(x.coefficient(), exponent), x.pi_exponent() * exponent);
}

Ball pi_scaled_eval(PiScaled const& x, mpfr_prec_t prec)
{
    if (prec < 64)
        throw std::invalid_argument("pi_scaled_eval needs at least 64 bits");
    if (x.pi_exponent() == 0)
        return Ball::from_rational(x.coefficient(), prec);
    // guard bits cover the error growth of repeated squaring
    long e = std::labs(x.pi_exponent());
    mpfr_prec_t guard = 16;
    while (e >>= 1)
        guard += 2;
    mpfr_prec_t wp = prec + guard;
    Ball v = pow(Ball::pi(wp), x.pi_exponent()) * x.coefficient();
    return v.rounded_to(prec);
}

} // namespace hypvol
