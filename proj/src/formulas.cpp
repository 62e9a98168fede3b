#include "hypvol/formulas.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hypvol/bernoulli.hpp"
#include "hypvol/lfunctions.hpp"

namespace hypvol {

namespace {

void require(bool ok, char const* what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

Integer pow_l(long q, long e)
{
    return ipow(Integer(q), static_cast<unsigned long>(e));
}

Ball zeta_k_product(int r, mpfr_prec_t prec)
{
    Ball p = Ball::from_long(1, prec);
    for (int j = 1; j <= r; ++j)
        p *= zeta_k_numeric(Rational(2 * j), prec);
    return p;
}

Rational abs_zeta_k_neg_product(int r)
{
    Rational p(1);
    for (int j = 1; j <= r; ++j)
        p *= dedekind_zeta_neg_quad(static_cast<unsigned>(j)).abs();
    return p;
}

} // namespace

PiScaled sphere_volume_exact(int n)
{
    require(n >= 2, "sphere_volume needs n >= 2");
    if (n % 2 == 1) {
        long m = (n + 1) / 2;
        return PiScaled(Rational(2) / Rational(factorial(m - 1)), m);
    }
    long m = n / 2;
    // Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!)
    return PiScaled(Rational(2 * pow_l(4, m) * factorial(m), factorial(2 * m)), m);
}

Ball sphere_volume(int n, mpfr_prec_t prec)
{
    return pi_scaled_eval(sphere_volume_exact(n), prec);
}

PiScaled c_constant(int r)
{
    require(r >= 0, "c_constant needs r >= 0");
    Rational c(1);
    for (long j = 1; j <= r; ++j)
        c *= Rational(factorial(2 * j - 1), pow_l(2, 2 * j));
    return PiScaled(c, -static_cast<long>(r) * (r + 1));
}

Rational lambda(LambdaKind kind, long q, int r)
{
    require(q >= 2 && r >= 1, "lambda needs q >= 2 and r >= 1");
    switch (kind) {
    case LambdaKind::Plain:
        if (r % 4 == 0 || r % 4 == 1)
            return Rational(1);
        return Rational(pow_l(q, r) - 1);
    case LambdaKind::Prime:
        if (q == 2 && r % 4 == 3)
            return Rational((pow_l(q, r) - 1) * (pow_l(q, r - 1) - 1), Integer(q + 1));
        return Rational(1);
    case LambdaKind::Bar:
        if (r % 2 == 0)
            return Rational(1);
        return Rational(pow_l(q, r) - 1, Integer(2));
    }
    throw std::invalid_argument("unknown lambda kind");
}

Integer parahoric_index(IndexForm form, long q, int r)
{
    require(q >= 2 && r >= 2, "parahoric_index needs q >= 2 and r >= 2");
    auto even_powers = [](long base, int upto) {
        Integer p(1);
        for (int j = 1; j <= upto; ++j)
            p *= pow_l(base, 2 * j) - 1;
        return p;
    };
    switch (form) {
    case IndexForm::BrHyperspecial:
        return even_powers(q, r);
    case IndexForm::BrCombined:
        return even_powers(2, r);
    case IndexForm::DrOddCombined:
        return (pow_l(q, r) - 1) * even_powers(q, r - 1);
    case IndexForm::TwoDr:
        return (pow_l(q, r) + 1) * even_powers(q, r - 1);
    case IndexForm::BrMinus1:
        return even_powers(q, r - 1);
    }
    throw std::invalid_argument("unknown index form");
}

Rational euler_char_noncompact_even(int r)
{
    require(r >= 2, "euler_char_noncompact_even needs r >= 2");
    Rational chi(2);
    for (long j = 1; j <= r; ++j) {
        Integer f = (pow_l(4, j) - 1) * (pow_l(9, j) - 1);
        chi *= Rational(f) * bernoulli(2 * static_cast<unsigned>(j)).abs() / Rational(4 * j);
    }
    if (!chi.is_integer() || chi.numerator() % 2 != 0)
        throw ConsistencyError("chi(M^" + std::to_string(2 * r) + ") is not an even integer: "
                               + chi.to_string());
    return chi;
}

Rational noncompact_odd_product(int r)
{
    Rational p(1);
    for (long j = 1; j < r; ++j) {
        Integer f = (pow_l(4, j) - 1) * (pow_l(9, j) - 1);
        p *= Rational(f) * bernoulli(2 * static_cast<unsigned>(j)).abs() / Rational(8 * j);
    }
    return p;
}

Ball vol_noncompact(int n, mpfr_prec_t prec)
{
    require(n >= 4, "vol_noncompact needs n >= 4");
    mpfr_prec_t wp = prec + 32;
    Ball v(wp);
    if (n % 2 == 0) {
        PiScaled exact = sphere_volume_exact(n)
                         * PiScaled(euler_char_noncompact_even(n / 2) / Rational(2), 0);
        v = pi_scaled_eval(exact, wp);
    } else {
        int r = (n + 1) / 2;
        Rational p = noncompact_odd_product(r);
        if (r % 2 == 1) {
            Rational c = Rational((pow_l(2, r) - 1) * (pow_l(3, r) - 1)) * p;
            v = zeta_numeric(Rational(r), wp) * c;
        } else {
            Rational c = Rational(pow_l(2, r) + 1) * p;
            v = half_power(Rational(3), 2L * r - 1, wp)
                * dirichlet_L_numeric(kronecker_character(-3), Rational(r), wp) * c;
        }
    }
    Ball out = v.rounded_to(prec);
    if (!(out.relative_radius() <= 1e-30))
        throw PrecisionError("vol(M^" + std::to_string(n) + ") relative radius above 1e-30");
    return out;
}

Ball euler_char_compact_even_numeric(int r, Rational const& lam, mpfr_prec_t prec)
{
    require(r >= 2, "euler_char_compact_even needs r >= 2");
    mpfr_prec_t wp = prec + 32;
    PiScaled c = c_constant(r);
    Ball v = half_power(Rational(5), 2L * r * r + r, wp) * pi_scaled_eval(c * c, wp);
    v *= zeta_k_product(r, wp);
    v *= Rational(4) * lam;
    return v.rounded_to(prec);
}

Rational euler_char_compact_even(int r, std::optional<Rational> lambda_override,
                                 mpfr_prec_t validation_prec)
{
    require(r >= 2, "euler_char_compact_even needs r >= 2");
    Rational lam = lambda_override ? *lambda_override : lambda(LambdaKind::Bar, 4, r);
    require(lam.sign() > 0, "lambda must be positive");
    Rational chi = Rational(4) * lam / Rational(pow_l(4, r)) * abs_zeta_k_neg_product(r);

    Ball check = euler_char_compact_even_numeric(r, lam, validation_prec);
    if (!(check.relative_radius() <= 1e-25))
        throw PrecisionError("validation of chi(O^" + std::to_string(2 * r)
                             + ") needs more precision");
    if (!check.contains(chi))
        throw ConsistencyError("chi(O^" + std::to_string(2 * r)
                               + ") disagrees with the zeta_k(2j) form");
    return chi;
}

Ball vol_compact_even(int n, mpfr_prec_t prec)
{
    require(n >= 4 && n % 2 == 0, "vol_compact_even needs even n >= 4");
    Rational chi = euler_char_compact_even(n / 2, std::nullopt, std::max<mpfr_prec_t>(prec, 192));
    return pi_scaled_eval(sphere_volume_exact(n) * PiScaled(chi / Rational(2), 0), prec);
}

Ball vol_compact_odd(int n, NumericContext const& ctx)
{
    require(n >= 5 && n % 2 == 1, "vol_compact_odd needs odd n >= 5");
    long r = (n + 1) / 2;
    mpfr_prec_t wp = ctx.precision + 32;
    PiScaled c = c_constant(static_cast<int>(r - 1));
    PiScaled pi_part = c * c * PiScaled(Rational(factorial(r - 1), pow_l(2, 2 * r - 1)), -r);
    Ball v = half_power(Rational(5), 2 * r * r - r, wp) * half_power(Rational(11), 2 * r - 1, wp);
    v *= pi_scaled_eval(pi_part, wp);
    v *= L_rel_numeric(r, wp, ctx.l_mode, ctx.prime_cutoff);
    v *= zeta_k_product(static_cast<int>(r - 1), wp);
    return v.rounded_to(ctx.precision);
}

Rational euler_char_suborbifold_30()
{
    Rational f = Rational(pow_l(4, 15) - 1, Integer(2)) * Rational(pow_l(11, 15) + 1, Integer(2))
                 / Rational(pow_l(4, 14));
    return f * abs_zeta_k_neg_product(15);
}

Ball stirling_c_lower_bound(int r, mpfr_prec_t prec)
{
    require(r >= 1, "stirling_c_lower_bound needs r >= 1");
    mpfr_prec_t wp = prec + 32;
    Integer num(1);
    for (long j = 1; j <= r; ++j)
        num *= pow_l(2 * j - 1, 2 * j - 1);
    long sq = static_cast<long>(r) * r;
    // (2 pi)^r (2 pi e)^(r^2)
    Ball den = pow(Ball::pi(wp) * Rational(2), sq + r) * exp(Ball::from_long(sq, wp));
    return (Ball::from_integer(num, wp) / den).rounded_to(prec);
}

Ball principal_covolume_odd(int r, mpfr_prec_t prec, BernoulliIndexing indexing)
{
    require(r >= 3 && r % 2 == 1, "principal_covolume_odd needs odd r >= 3");
    mpfr_prec_t wp = prec + 32;
    Rational p = lambda(LambdaKind::Prime, 2, r);
    for (long j = 1; j < r; ++j) {
        unsigned m = indexing == BernoulliIndexing::Doubled ? 2 * static_cast<unsigned>(j)
                                                            : static_cast<unsigned>(j);
        p *= bernoulli(m).abs() / Rational(8 * j);
    }
    return (zeta_numeric(Rational(r), wp) * p).rounded_to(prec);
}

} // namespace hypvol
