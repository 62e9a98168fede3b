#ifndef HYPVOL_BALL_HPP_
#define HYPVOL_BALL_HPP_

#include <stdexcept>
#include <string>

#include <mpfr.h>

#include "hypvol/rational.hpp"

namespace hypvol {

inline constexpr mpfr_prec_t kDefaultPrecision = 512;
inline constexpr mpfr_prec_t kMaxPrecision = 4096;

/// Raised when an enclosure is too wide to decide a question or to meet a
/// radius contract at the current working precision.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when two independent evaluation routes disagree.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/*
 * Midpoint-radius real number. The midpoint carries the working precision,
 * the radius is a 64-bit float that is only ever rounded upwards. Every
 * operation returns a ball that contains all results of applying the exact
 * operation to points of the input balls.
 */
class Ball {
public:
    static constexpr mpfr_prec_t kRadiusPrecision = 64;

    explicit Ball(mpfr_prec_t prec = kDefaultPrecision);
    Ball(Ball const& o);
    Ball(Ball&& o) noexcept;
    Ball& operator=(Ball const& o);
    Ball& operator=(Ball&& o) noexcept;
    ~Ball();

    static Ball from_long(long v, mpfr_prec_t prec);
    static Ball from_integer(Integer const& v, mpfr_prec_t prec);
    static Ball from_rational(Rational const& v, mpfr_prec_t prec);
    static Ball pi(mpfr_prec_t prec);

    /// Smallest ball (up to rounding) containing both arguments.
    static Ball hull(Ball const& a, Ball const& b);

    mpfr_prec_t precision() const { return mpfr_get_prec(mid_); }
    mpfr_srcptr midpoint() const { return mid_; }
    mpfr_srcptr radius() const { return rad_; }

    /// Same enclosure with the midpoint rounded to `prec` bits.
    Ball rounded_to(mpfr_prec_t prec) const;
    /// Widens the radius by the upper end of `bound` (which must be >= 0).
    Ball& add_error(Ball const& bound);
    Ball& add_error(Rational const& bound);

    bool is_exact() const { return mpfr_zero_p(rad_) != 0; }
    bool contains_zero() const;
    bool is_positive() const;   // lower end > 0
    bool is_negative() const;   // upper end < 0

    bool contains(Rational const& q) const;
    bool contains(Ball const& o) const;
    bool intersects(Ball const& o) const;

    /// Rigorous outward-rounded endpoints as exact rationals.
    Rational lower_rational() const;
    Rational upper_rational() const;

    double mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
    double radius_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }
    /// Upper bound on radius / |value|; +inf if the ball contains zero.
    double relative_radius() const;

    /// Midpoint in scientific notation with `digits` significant digits.
    std::string mid_string(int digits) const;
    /// Radius rounded up to three significant digits.
    std::string radius_string() const;

    Ball operator-() const;
    Ball& operator+=(Ball const& o);
    Ball& operator-=(Ball const& o);
    Ball& operator*=(Ball const& o);
    Ball& operator/=(Ball const& o);

    friend Ball operator+(Ball a, Ball const& b) { return a += b; }
    friend Ball operator-(Ball a, Ball const& b) { return a -= b; }
    friend Ball operator*(Ball a, Ball const& b) { return a *= b; }
    friend Ball operator/(Ball a, Ball const& b) { return a /= b; }

    Ball& operator*=(Rational const& q);
    Ball& operator/=(Rational const& q);
    friend Ball operator*(Ball a, Rational const& q) { return a *= q; }
    friend Ball operator*(Rational const& q, Ball a) { return a *= q; }
    friend Ball operator/(Ball a, Rational const& q) { return a /= q; }

    friend Ball sqrt(Ball const& x);
    friend Ball exp(Ball const& x);
    friend Ball log(Ball const& x);

private:
    // Adds the rounding error of an MPFR operation with ternary value t.
    void account_rounding(int ternary);

    mpfr_t mid_;
    mpfr_t rad_;
};

Ball pow(Ball const& base, long exponent);
/// base^(twice_exponent / 2) for a positive rational base.
Ball half_power(Rational const& base, long twice_exponent, mpfr_prec_t prec);

enum class Ordering { Less, Greater, Undecided };

/// Greater only if a.lo > b.hi, Less only if a.hi < b.lo.
Ordering compare(Ball const& a, Ball const& b);

enum class Decision { Holds, Fails, Unresolved };

/// Decides a > b. Holds (resp. Fails) requires the gap between the balls
/// to exceed margin_factor times the sum of their radii.
Decision decide_greater(Ball const& a, Ball const& b, double margin_factor = 1e10);

char const* to_string(Ordering o);
char const* to_string(Decision d);

} // namespace hypvol

#endif /* HYPVOL_BALL_HPP_ */
