#ifndef HYPVOL_PI_SCALED_HPP_
#define HYPVOL_PI_SCALED_HPP_

#include <string>

#include "hypvol/ball.hpp"
#include "hypvol/rational.hpp"

namespace hypvol {

/// Exact value coefficient * pi^pi_exponent. Zero is normalized to 0 * pi^0.
class PiScaled {
public:
    PiScaled() = default;
    PiScaled(Rational coefficient, long pi_exponent);

    Rational const& coefficient() const { return coefficient_; }
    long pi_exponent() const { return pi_exponent_; }
    bool is_zero() const { return coefficient_.is_zero(); }

    PiScaled& operator*=(PiScaled const& o);
    PiScaled& operator/=(PiScaled const& o);
    friend PiScaled operator*(PiScaled a, PiScaled const& b) { return a *= b; }
    friend PiScaled operator/(PiScaled a, PiScaled const& b) { return a /= b; }

    friend bool operator==(PiScaled const&, PiScaled const&) = default;

    /// "(q)*pi^e"
    std::string to_string() const;

private:
    Rational coefficient_;
    long pi_exponent_ = 0;
};

PiScaled pow(PiScaled const& x, long exponent);

/// Ball containing x; requires prec >= 64. The radius is at most
/// 2^(3 - prec) * |midpoint|.
Ball pi_scaled_eval(PiScaled const& x, mpfr_prec_t prec);

} // namespace hypvol

#endif /* HYPVOL_PI_SCALED_HPP_ */
