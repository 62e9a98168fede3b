#include "hypvol/lfunctions.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace hypvol {

Rational zeta_neg(unsigned j)
{
    if (j == 0)
        throw std::invalid_argument("zeta_neg needs j >= 1");
    return -bernoulli(2 * j) / Rational(2 * j);
}

PiScaled zeta_even_exact(unsigned j)
{
    if (j == 0)
        throw std::invalid_argument("zeta_even_exact needs j >= 1");
    Rational c = bernoulli(2 * j) * Rational(ipow(2, 2 * j)) / Rational(2 * factorial(2 * j));
    if (j % 2 == 0)
        c = -c;
    return PiScaled(c, 2 * static_cast<long>(j));
}

Rational dirichlet_L_neg(unsigned n, DirichletCharacter const& chi)
{
    if (n == 0)
        throw std::invalid_argument("dirichlet_L_neg needs n >= 1");
    return -generalized_bernoulli(n, chi) / Rational(n);
}

Rational dedekind_zeta_neg_quad(unsigned j)
{
    return zeta_neg(j) * dirichlet_L_neg(2 * j, kronecker_character(5));
}

NumberField field_rationals()
{
    return {"Q", make_poly({0, 1}), 1, Integer(1), std::nullopt};
}

NumberField field_q_sqrt5()
{
    return {"Q(sqrt5)", make_poly({-1, -1, 1}), 2, Integer(5), std::nullopt};
}

NumberField field_q_sqrt_minus3()
{
    return {"Q(sqrt-3)", make_poly({1, 1, 1}), 2, Integer(-3), std::nullopt};
}

NumberField field_l0()
{
    return {"l0", make_poly({-1, 2, 0, -1, 1}), 4, Integer(-275), std::string("Q(sqrt5)")};
}

namespace {

void check_maximal_order(NumberField const& field)
{
    if (field.degree != degree(field.defining_polynomial))
        throw ConsistencyError("degree mismatch for field " + field.label);
    if (field.degree == 1)
        return;
    Integer d = poly_discriminant(field.defining_polynomial);
    if (d != field.discriminant)
        throw ConsistencyError("equation order of " + field.label + " is not maximal: disc(f) = "
                               + d.get_str() + ", field discriminant " + field.discriminant.get_str());
}

void check_series_argument(Rational const& s)
{
    if (s < Rational(2))
        throw std::invalid_argument("series evaluation needs s >= 2");
    if (s.denominator() != 1 && s.denominator() != 2)
        throw std::invalid_argument("series argument must be an integer or half-integer");
}

// x^-s for rational x > 0 and integral or half-integral s
Ball power_neg(Rational const& x, Rational const& s, mpfr_prec_t prec)
{
    if (s.is_integer())
        return Ball::from_rational(pow(x, -s.numerator().get_si()), prec);
    return half_power(x, -(s * Rational(2)).numerator().get_si(), prec);
}

// radius <= 2^(16 - prec) |midpoint|
bool radius_within(Ball const& b, mpfr_prec_t prec)
{
    if (b.contains_zero())
        return false;
    mpfr_t bound;
    mpfr_init2(bound, Ball::kRadiusPrecision);
    mpfr_abs(bound, b.midpoint(), MPFR_RNDD);
    mpfr_mul_2si(bound, bound, 16 - prec, MPFR_RNDD);
    bool ok = mpfr_cmp(b.radius(), bound) <= 0;
    mpfr_clear(bound);
    return ok;
}

// log2 of the Euler-Maclaurin remainder bound, estimated in doubles
double remainder_log2(double s, double x, int M)
{
    double log_b = std::log(4.0) - 2.0 * M * std::log(2.0 * M_PI);
    double log_rising = std::lgamma(s + 2.0 * M - 1.0) - std::lgamma(s);
    double log_pow = (1.0 - s - 2.0 * M) * std::log(x);
    return (log_b + log_rising + log_pow) / std::log(2.0);
}

Ball hurwitz_uncached(Rational const& s, Rational const& alpha, mpfr_prec_t prec)
{
    mpfr_prec_t wp = prec + 32;
    double sd = s.numerator().get_d() / s.denominator().get_d();
    int M = 2;
    long N = 8;
    while (remainder_log2(sd, static_cast<double>(N), M) > -static_cast<double>(wp + 8)) {
        ++M;
        N = 4L * M;
    }

    Ball sum(wp);
    for (long n = 0; n < N; ++n)
        sum += power_neg(Rational(n) + alpha, s, wp);

    Rational x = Rational(N) + alpha;
    Ball y = power_neg(x, s, wp);           // x^-s
    Ball t = y * x;                          // x^(1-s)
    sum += t / (s - Rational(1));
    sum += y / Rational(2);

    Ball inv_x2 = Ball::from_rational(pow(x, -2), wp);
    Rational rising = s;                     // (s)_(2k-1)
    Rational last_coeff;
    for (int k = 1; k <= M; ++k) {
        t *= inv_x2;                         // x^(1-s-2k)
        unsigned tk = 2 * static_cast<unsigned>(k);
        last_coeff = bernoulli(tk) * rising / Rational(factorial(tk));
        sum += t * last_coeff;
        rising *= (s + Rational(tk - 1)) * (s + Rational(tk));
    }
    // |R| <= |B_2M| / (2M)! (s)_(2M-1) x^(1-s-2M)
    sum.add_error(t * last_coeff.abs());

    Ball out = sum.rounded_to(prec);
    if (!radius_within(out, prec))
        throw PrecisionError("Hurwitz zeta enclosure wider than requested");
    return out;
}

} // namespace

void check_l0_maximality()
{
    static std::once_flag once;
    std::call_once(once, [] {
        NumberField l0 = field_l0();
        check_maximal_order(l0);
        if (abs(l0.discriminant) != 275)
            throw ConsistencyError("l0 must have absolute discriminant 275");
    });
}

Ball hurwitz_zeta(Rational const& s, Rational const& alpha, mpfr_prec_t prec)
{
    check_series_argument(s);
    if (alpha.sign() <= 0 || alpha > Rational(1))
        throw std::invalid_argument("hurwitz_zeta needs 0 < alpha <= 1");

    using Key = std::tuple<Rational, Rational, long>;
    static std::mutex lock;
    static std::map<Key, Ball> memo;
    Key key{s, alpha, static_cast<long>(prec)};
    {
        std::lock_guard<std::mutex> g(lock);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    Ball v = hurwitz_uncached(s, alpha, prec);
    std::lock_guard<std::mutex> g(lock);
    memo.emplace(key, v);
    return v;
}

Ball zeta_numeric(Rational const& s, mpfr_prec_t prec)
{
    return hurwitz_zeta(s, Rational(1), prec);
}

Ball dirichlet_L_numeric(DirichletCharacter const& chi, Rational const& s, mpfr_prec_t prec)
{
    check_series_argument(s);
    long f = chi.modulus();
    if (f == 1)
        return zeta_numeric(s, prec);
    mpfr_prec_t wp = prec + 16;
    Ball acc(wp);
    for (long a = 1; a <= f; ++a) {
        int c = chi(a);
        if (c == 1)
            acc += hurwitz_zeta(s, Rational(a, f), wp);
        else if (c == -1)
            acc -= hurwitz_zeta(s, Rational(a, f), wp);
    }
    acc *= power_neg(Rational(f), s, wp);
    Ball out = acc.rounded_to(prec);
    if (!radius_within(out, prec))
        throw PrecisionError("L-function enclosure wider than requested");
    return out;
}

Ball zeta_k_numeric(Rational const& s, mpfr_prec_t prec)
{
    mpfr_prec_t wp = prec + 8;
    return (zeta_numeric(s, wp) * dirichlet_L_numeric(kronecker_character(5), s, wp)).rounded_to(prec);
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n)
{
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i])
            continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i)
            composite[j] = true;
    }
    return primes;
}

namespace {

using SplittingData = std::vector<std::pair<std::uint32_t, std::vector<int>>>;

// Residue degrees of the distinct prime ideals above each p <= cutoff.
SplittingData const& splitting_data(IntPoly const& f, unsigned long cutoff)
{
    static std::mutex lock;
    static std::map<std::pair<std::string, unsigned long>, SplittingData> memo;
    std::lock_guard<std::mutex> g(lock);
    auto key = std::make_pair(to_string(f), cutoff);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;
    SplittingData data;
    for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(cutoff))) {
        std::vector<int> degs;
        for (auto const& fd : factor_degrees_mod_p(f, p))
            degs.push_back(fd.degree);
        data.emplace_back(p, std::move(degs));
    }
    return memo.emplace(key, std::move(data)).first->second;
}

} // namespace

Ball dedekind_zeta_numeric(NumberField const& field, long s, mpfr_prec_t prec,
                           unsigned long prime_cutoff)
{
    if (s < 2)
        throw std::invalid_argument("dedekind_zeta_numeric needs s >= 2");
    if (prime_cutoff < 2 || prime_cutoff > 100000000UL)
        throw std::invalid_argument("prime cutoff out of range");
    check_maximal_order(field);

    mpfr_prec_t wp = prec + 48;
    Ball partial = Ball::from_long(1, wp);
    for (auto const& [p, degs] : splitting_data(field.defining_polynomial, prime_cutoff)) {
        for (int d : degs) {
            Integer q = ipow(Integer(p), static_cast<unsigned long>(s * d));
            // (1 - q^-1)^-1 = q / (q - 1)
            partial *= Rational(q, q - 1);
        }
    }
    // log of the tail over p > P is at most deg P^(1-s) / ((s-1)(1-2^-s))
    Integer P(static_cast<unsigned long>(prime_cutoff));
    Rational two_s(ipow(2, static_cast<unsigned long>(s)));
    Rational tail = Rational(field.degree) / Rational(ipow(P, static_cast<unsigned long>(s - 1)))
                    / (Rational(s - 1) * (Rational(1) - two_s.inverse()));
    Ball upper = partial * exp(Ball::from_rational(tail, wp));
    return Ball::hull(partial, upper).rounded_to(prec);
}

Ball L_rel_numeric(long s, mpfr_prec_t prec, LMode mode, unsigned long prime_cutoff)
{
    if (s < 3)
        throw std::invalid_argument("L_rel_numeric needs s >= 3");
    if (mode == LMode::FixedLowerBound)
        return Ball::from_rational(Rational(973, 1000), prec);
    check_l0_maximality();
    mpfr_prec_t wp = prec + 16;
    Ball z_l0 = dedekind_zeta_numeric(field_l0(), s, wp, prime_cutoff);
    Ball z_k = zeta_k_numeric(Rational(s), wp);
    return (z_l0 / z_k).rounded_to(prec);
}

} // namespace hypvol
