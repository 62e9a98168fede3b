#include "hypvol/ball.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hypvol {

namespace {

// Scratch value at radius precision, released on scope exit.
struct RadiusTemp {
    mpfr_t v;
    RadiusTemp() { mpfr_init2(v, Ball::kRadiusPrecision); mpfr_set_zero(v, 1); }
    ~RadiusTemp() { mpfr_clear(v); }
    RadiusTemp(RadiusTemp const&) = delete;
    RadiusTemp& operator=(RadiusTemp const&) = delete;
    operator mpfr_ptr() { return v; }
};

Rational exact_value(mpfr_srcptr x)
{
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), x);
    return Rational(Integer(q.get_num()), Integer(q.get_den()));
}

} // namespace

Ball::Ball(mpfr_prec_t prec)
{
    mpfr_init2(mid_, prec);
    mpfr_init2(rad_, kRadiusPrecision);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
}

Ball::Ball(Ball const& o)
{
    mpfr_init2(mid_, o.precision());
    mpfr_init2(rad_, kRadiusPrecision);
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& o) noexcept
{
    mpfr_init2(mid_, MPFR_PREC_MIN);
    mpfr_init2(rad_, kRadiusPrecision);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
}

Ball& Ball::operator=(Ball const& o)
{
    if (this != &o) {
        mpfr_set_prec(mid_, o.precision());
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
    }
    return *this;
}

Ball& Ball::operator=(Ball&& o) noexcept
{
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
    return *this;
}

Ball::~Ball()
{
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

void Ball::account_rounding(int ternary)
{
    if (ternary == 0)
        return;
    if (mpfr_zero_p(mid_) || !mpfr_number_p(mid_))
        throw PrecisionError("ball midpoint left the representable range");
    // |exact - rounded| <= ulp(rounded) = 2^(EXP - prec)
    RadiusTemp ulp;
    mpfr_set_ui_2exp(ulp, 1, mpfr_get_exp(mid_) - precision(), MPFR_RNDU);
    mpfr_add(rad_, rad_, ulp, MPFR_RNDU);
}

Ball Ball::from_long(long v, mpfr_prec_t prec)
{
    Ball b(prec);
    b.account_rounding(mpfr_set_si(b.mid_, v, MPFR_RNDN));
    return b;
}

Ball Ball::from_integer(Integer const& v, mpfr_prec_t prec)
{
    Ball b(prec);
    b.account_rounding(mpfr_set_z(b.mid_, v.get_mpz_t(), MPFR_RNDN));
    return b;
}

Ball Ball::from_rational(Rational const& v, mpfr_prec_t prec)
{
    Ball b(prec);
    b.account_rounding(mpfr_set_q(b.mid_, v.mpq().get_mpq_t(), MPFR_RNDN));
    return b;
}

Ball Ball::pi(mpfr_prec_t prec)
{
    Ball b(prec);
    b.account_rounding(mpfr_const_pi(b.mid_, MPFR_RNDN));
    return b;
}

Ball Ball::hull(Ball const& a, Ball const& b)
{
    Rational lo = std::min(a.lower_rational(), b.lower_rational());
    Rational hi = std::max(a.upper_rational(), b.upper_rational());
    Rational mid = (lo + hi) / Rational(2);
    Ball h = from_rational(mid, std::max(a.precision(), b.precision()));
    h.add_error((hi - lo) / Rational(2));
    return h;
}

Ball Ball::rounded_to(mpfr_prec_t prec) const
{
    Ball b(prec);
    mpfr_set(b.rad_, rad_, MPFR_RNDU);
    b.account_rounding(mpfr_set(b.mid_, mid_, MPFR_RNDN));
    return b;
}

Ball& Ball::add_error(Ball const& bound)
{
    RadiusTemp up;
    mpfr_add(up, bound.mid_, bound.rad_, MPFR_RNDU);
    if (mpfr_sgn(up.v) < 0)
        throw std::invalid_argument("negative error bound");
    mpfr_add(rad_, rad_, up, MPFR_RNDU);
    return *this;
}

Ball& Ball::add_error(Rational const& bound)
{
    if (bound.sign() < 0)
        throw std::invalid_argument("negative error bound");
    RadiusTemp up;
    mpfr_set_q(up, bound.mpq().get_mpq_t(), MPFR_RNDU);
    mpfr_add(rad_, rad_, up, MPFR_RNDU);
    return *this;
}

bool Ball::contains_zero() const
{
    return mpfr_cmpabs(mid_, rad_) <= 0;
}

bool Ball::is_positive() const
{
    return mpfr_sgn(mid_) > 0 && mpfr_cmpabs(mid_, rad_) > 0;
}

bool Ball::is_negative() const
{
    return mpfr_sgn(mid_) < 0 && mpfr_cmpabs(mid_, rad_) > 0;
}

Rational Ball::lower_rational() const
{
    return exact_value(mid_) - exact_value(rad_);
}

Rational Ball::upper_rational() const
{
    return exact_value(mid_) + exact_value(rad_);
}

bool Ball::contains(Rational const& q) const
{
    return (q - exact_value(mid_)).abs() <= exact_value(rad_);
}

bool Ball::contains(Ball const& o) const
{
    return lower_rational() <= o.lower_rational() && o.upper_rational() <= upper_rational();
}

bool Ball::intersects(Ball const& o) const
{
    return (exact_value(mid_) - exact_value(o.mid_)).abs() <= exact_value(rad_) + exact_value(o.rad_);
}

double Ball::relative_radius() const
{
    if (contains_zero())
        return std::numeric_limits<double>::infinity();
    RadiusTemp lo, q;
    mpfr_abs(lo, mid_, MPFR_RNDD);
    mpfr_sub(lo, lo, rad_, MPFR_RNDD);
    mpfr_div(q, rad_, lo, MPFR_RNDU);
    return mpfr_get_d(q, MPFR_RNDU);
}

std::string Ball::mid_string(int digits) const
{
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", std::max(digits, 1) - 1, mid_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

std::string Ball::radius_string() const
{
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.2RUe", rad_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

Ball Ball::operator-() const
{
    Ball r(*this);
    mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
    return r;
}

Ball& Ball::operator+=(Ball const& o)
{
    if (o.precision() > precision())
        mpfr_prec_round(mid_, o.precision(), MPFR_RNDN);
    mpfr_add(rad_, rad_, o.rad_, MPFR_RNDU);
    account_rounding(mpfr_add(mid_, mid_, o.mid_, MPFR_RNDN));
    return *this;
}

Ball& Ball::operator-=(Ball const& o)
{
    if (o.precision() > precision())
        mpfr_prec_round(mid_, o.precision(), MPFR_RNDN);
    mpfr_add(rad_, rad_, o.rad_, MPFR_RNDU);
    account_rounding(mpfr_sub(mid_, mid_, o.mid_, MPFR_RNDN));
    return *this;
}

Ball& Ball::operator*=(Ball const& o)
{
    if (o.precision() > precision())
        mpfr_prec_round(mid_, o.precision(), MPFR_RNDN);
    // |xy - ab| <= |a| rb + |b| ra + ra rb
    RadiusTemp abs_a, abs_b, r, t;
    mpfr_abs(abs_a, mid_, MPFR_RNDU);
    mpfr_abs(abs_b, o.mid_, MPFR_RNDU);
    mpfr_mul(r, abs_a, o.rad_, MPFR_RNDU);
    mpfr_mul(t, abs_b, rad_, MPFR_RNDU);
    mpfr_add(r, r, t, MPFR_RNDU);
    mpfr_mul(t, rad_, o.rad_, MPFR_RNDU);
    mpfr_add(r, r, t, MPFR_RNDU);
    mpfr_set(rad_, r.v, MPFR_RNDU);
    account_rounding(mpfr_mul(mid_, mid_, o.mid_, MPFR_RNDN));
    return *this;
}

Ball& Ball::operator/=(Ball const& o)
{
    if (o.contains_zero())
        throw PrecisionError("division by a ball containing zero");
    if (o.precision() > precision())
        mpfr_prec_round(mid_, o.precision(), MPFR_RNDN);
    // |x/y - a/b| <= (|a| rb + |b| ra) / (|b| (|b| - rb))
    RadiusTemp abs_a, abs_b_up, abs_b_lo, num, den, t;
    mpfr_abs(abs_a, mid_, MPFR_RNDU);
    mpfr_abs(abs_b_up, o.mid_, MPFR_RNDU);
    mpfr_abs(abs_b_lo, o.mid_, MPFR_RNDD);
    mpfr_mul(num, abs_a, o.rad_, MPFR_RNDU);
    mpfr_mul(t, abs_b_up, rad_, MPFR_RNDU);
    mpfr_add(num, num, t, MPFR_RNDU);
    mpfr_sub(den, abs_b_lo, o.rad_, MPFR_RNDD);
    if (mpfr_sgn(den.v) <= 0)
        throw PrecisionError("division by a ball too close to zero");
    mpfr_mul(den, den, abs_b_lo, MPFR_RNDD);
    mpfr_div(rad_, num, den, MPFR_RNDU);
    account_rounding(mpfr_div(mid_, mid_, o.mid_, MPFR_RNDN));
    return *this;
}

Ball& Ball::operator*=(Rational const& q)
{
    return *this *= from_rational(q, precision());
}

Ball& Ball::operator/=(Rational const& q)
{
    if (q.is_zero())
        throw std::domain_error("ball division by zero");
    return *this *= from_rational(q.inverse(), precision());
}

Ball sqrt(Ball const& x)
{
    if (mpfr_zero_p(x.mid_) && x.is_exact())
        return x;
    if (!x.is_positive())
        throw PrecisionError("square root of a ball not bounded away from zero");
    Ball r(x.precision());
    // |sqrt(A) - sqrt(a)| <= ra / (2 sqrt(lo))
    RadiusTemp lo;
    mpfr_sub(lo, x.mid_, x.rad_, MPFR_RNDD);
    mpfr_sqrt(lo, lo, MPFR_RNDD);
    mpfr_mul_2ui(lo, lo, 1, MPFR_RNDD);
    mpfr_div(r.rad_, x.rad_, lo, MPFR_RNDU);
    r.account_rounding(mpfr_sqrt(r.mid_, x.mid_, MPFR_RNDN));
    return r;
}

Ball exp(Ball const& x)
{
    Ball r(x.precision());
    int t = mpfr_exp(r.mid_, x.mid_, MPFR_RNDN);
    r.account_rounding(t);
    // |exp(A) - exp(a)| <= exp(a) expm1(ra), exp(a) <= |mid| + rounding error
    RadiusTemp bound, e;
    mpfr_abs(bound, r.mid_, MPFR_RNDU);
    mpfr_add(bound, bound, r.rad_, MPFR_RNDU);
    mpfr_expm1(e, x.rad_, MPFR_RNDU);
    mpfr_mul(bound, bound, e, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, bound, MPFR_RNDU);
    return r;
}

Ball log(Ball const& x)
{
    if (!x.is_positive())
        throw PrecisionError("logarithm of a ball not bounded away from zero");
    Ball r(x.precision());
    // |log A - log a| <= ra / lo
    RadiusTemp lo;
    mpfr_sub(lo, x.mid_, x.rad_, MPFR_RNDD);
    mpfr_div(r.rad_, x.rad_, lo, MPFR_RNDU);
    r.account_rounding(mpfr_log(r.mid_, x.mid_, MPFR_RNDN));
    return r;
}

Ball pow(Ball const& base, long exponent)
{
    if (exponent < 0)
        return Ball::from_long(1, base.precision()) / pow(base, -exponent);
    Ball result = Ball::from_long(1, base.precision());
    Ball sq = base;
    auto e = static_cast<unsigned long>(exponent);
    while (e) {
        if (e & 1)
            result *= sq;
        e >>= 1;
        if (e)
            sq *= sq;
    }
    return result;
}

Ball half_power(Rational const& base, long twice_exponent, mpfr_prec_t prec)
{
    if (base.sign() <= 0)
        throw std::domain_error("half_power needs a positive base");
    if (twice_exponent % 2 == 0)
        return Ball::from_rational(pow(base, twice_exponent / 2), prec);
    return sqrt(Ball::from_rational(pow(base, twice_exponent), prec));
}

Ordering compare(Ball const& a, Ball const& b)
{
    if (a.lower_rational() > b.upper_rational())
        return Ordering::Greater;
    if (a.upper_rational() < b.lower_rational())
        return Ordering::Less;
    return Ordering::Undecided;
}

Decision decide_greater(Ball const& a, Ball const& b, double margin_factor)
{
    mpq_class f(margin_factor);
    Rational factor(Integer(f.get_num()), Integer(f.get_den()));
    Rational radii = (a.upper_rational() - a.lower_rational()
                      + b.upper_rational() - b.lower_rational()) / Rational(2);
    Rational threshold = factor * radii;
    Rational gap = a.lower_rational() - b.upper_rational();
    if (gap.sign() > 0 && gap > threshold)
        return Decision::Holds;
    Rational rgap = b.lower_rational() - a.upper_rational();
    if (rgap.sign() > 0 && rgap > threshold)
        return Decision::Fails;
    return Decision::Unresolved;
}

char const* to_string(Ordering o)
{
    switch (o) {
    case Ordering::Less: return "LESS";
    case Ordering::Greater: return "GREATER";
    case Ordering::Undecided: return "UNDECIDED";
    }
    return "?";
}

char const* to_string(Decision d)
{
    switch (d) {
    case Decision::Holds: return "HOLDS";
    case Decision::Fails: return "FAILS";
    case Decision::Unresolved: return "UNRESOLVED";
    }
    return "?";
}

} // namespace hypvol
