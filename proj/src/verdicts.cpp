#include "hypvol/verdicts.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hypvol/formulas.hpp"
#include "hypvol/lfunctions.hpp"
#include "hypvol/polynomial.hpp"

namespace hypvol {

namespace {

Rational scientific(long mantissa, long scale, long exponent)
{
    // mantissa / 10^scale * 10^exponent
    return Rational(mantissa) * pow(Rational(10), exponent - scale);
}

Decision exact_greater(Rational const& a, Rational const& b)
{
    return a > b ? Decision::Holds : Decision::Fails;
}

std::string q_label(long q)
{
    return "q=" + std::to_string(q);
}

} // namespace

Rational q_sqrt2_chi_bound_30() { return scientific(3116, 3, 235); }
Rational q_sqrt2_chi_bound_32() { return scientific(9071, 3, 271); }
Rational suborbifold_volume_bound_31() { return scientific(7019, 3, 247); }
Rational ratio_31_lower_bound() { return Rational(7, 1000); }

Rational ratio_even_exact(int r)
{
    return euler_char_compact_even(r) / euler_char_noncompact_even(r);
}

Ball ratio_even(int r, mpfr_prec_t prec)
{
    return Ball::from_rational(ratio_even_exact(r), prec);
}

Ball ratio_even_lower_bound(int r, mpfr_prec_t prec)
{
    if (r < 2)
        throw std::invalid_argument("ratio_even_lower_bound needs r >= 2");
    mpfr_prec_t wp = prec + 32;
    Integer den(1);
    for (unsigned long j = 1; j <= static_cast<unsigned long>(r); ++j)
        den *= (ipow(4, j) - 1) * (ipow(9, j) - 1);
    Ball v = half_power(Rational(5), 2L * r * r + r, wp) * pi_scaled_eval(c_constant(r), wp);
    return (v / Rational(den)).rounded_to(prec);
}

Ball a_factor(int r, mpfr_prec_t prec)
{
    if (r < 3)
        throw std::invalid_argument("a_factor needs r >= 3");
    mpfr_prec_t wp = prec + 32;
    unsigned long ur = static_cast<unsigned long>(r);
    Ball v(wp);
    if (r % 2 == 1) {
        v = zeta_numeric(Rational(r), wp) * Rational((ipow(2, ur) - 1) * (ipow(3, ur) - 1));
    } else {
        v = half_power(Rational(3), 2L * r - 1, wp)
            * dirichlet_L_numeric(kronecker_character(-3), Rational(r), wp)
            * Rational(ipow(2, ur) + 1);
    }
    return v.rounded_to(prec);
}

Ball ratio_odd(int r, NumericContext const& ctx)
{
    if (r < 3)
        throw std::invalid_argument("ratio_odd needs r >= 3");
    int n = 2 * r - 1;
    mpfr_prec_t wp = ctx.precision + 16;
    NumericContext inner = ctx;
    inner.precision = wp;
    return (vol_compact_odd(n, inner) / vol_noncompact(n, wp)).rounded_to(ctx.precision);
}

Integer min_cover_degree(Rational const& chi, ParityRule rule)
{
    if (chi.is_zero())
        throw std::invalid_argument("min_cover_degree needs chi != 0");
    Integer d = chi.denominator();
    if (rule == ParityRule::ForceEven && chi.numerator() % 2 != 0)
        d *= 2;
    return d;
}

std::vector<long> prime_norms_q_sqrt5(long bound)
{
    if (bound < 2 || bound > 100000000L)
        throw std::invalid_argument("norm bound out of range");
    IntPoly f = make_poly({-1, -1, 1});
    std::vector<long> norms;
    for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(bound))) {
        auto degs = factor_degrees_mod_p(f, p);
        long q = degs.size() == 1 && degs[0].degree == 2 ? static_cast<long>(p) * p : p;
        if (q <= bound)
            norms.push_back(q);
    }
    std::sort(norms.begin(), norms.end());
    return norms;
}

Rational lambda_family(long q, int r)
{
    Integer qr = ipow(Integer(q), static_cast<unsigned long>(r));
    Integer num = r % 2 == 1 ? Integer(qr - 1) : Integer(qr + 1);
    return Rational(num, Integer(2));
}

std::vector<LambdaRow> lambda_scan(int r, ParityRule rule)
{
    Rational chi_m = euler_char_noncompact_even(r);
    std::vector<LambdaRow> rows;
    for (long q : prime_norms_q_sqrt5(10000)) {
        if (q < 4 || (q == 4 && r % 2 == 1))
            continue;
        Rational lam = lambda_family(q, r);
        Rational chi = euler_char_compact_even(r, lam);
        rows.push_back({q, lam, chi, min_cover_degree(chi, rule)});
        if (chi > chi_m)
            return rows;
    }
    throw std::logic_error("lambda scan did not leave the range below chi(M)");
}

std::vector<LambdaRow> lambda_scan_30()
{
    Rational chi_m = euler_char_noncompact_even(15);
    std::vector<LambdaRow> rows;
    for (auto& row : lambda_scan(15))
        if (row.chi < chi_m)
            rows.push_back(row);
    return rows;
}

std::vector<NamedValue> exclusion_checks_31(mpfr_prec_t prec)
{
    long const r = 16;
    std::vector<NamedValue> out;

    Ball field = half_power(Rational(8, 5), 2 * r * r - r, prec + 16)
                 * half_power(Rational(1, 11), 2 * r - 1, prec + 16);
    out.push_back({"field_discriminant_factor", field.rounded_to(prec), std::nullopt});

    Ball splitting = half_power(Rational(400, 275), 31, prec);
    out.push_back({"splitting_field_factor", splitting, std::nullopt});

    // increasing in q, so the scan over norms below 1000 finds the minimum
    std::optional<Rational> best;
    for (long q : prime_norms_q_sqrt5(1000)) {
        if (q < 4)
            continue;
        long rv = q == 11 ? r - 1 : r;
        Rational b = Rational(2, 3) * pow(Rational(3 * q, 4), rv);
        if (!best || b < *best)
            best = b;
    }
    out.push_back({"lambda_factor_bound", Ball::from_rational(*best, prec), best});
    return out;
}

namespace {

struct Recorder {
    DimensionReport& report;

    void add(std::string name, Decision d) { report.checks.push_back({std::move(name), d}); }
    void greater(std::string name, Ball const& a, Ball const& b)
    {
        add(std::move(name), decide_greater(a, b));
    }
};

void verify_ratio(DimensionReport& rep, NumericContext const& ctx)
{
    Recorder rec{rep};
    mpfr_prec_t prec = ctx.precision;
    int n = rep.dimension;
    rep.method = Method::Ratio;
    rep.vol_noncompact = vol_noncompact(n, prec);
    if (rep.even) {
        int r = n / 2;
        rep.chi_noncompact = euler_char_noncompact_even(r);
        rep.chi_compact = euler_char_compact_even(r, std::nullopt, prec);
        Ball ratio = Ball::from_rational(*rep.chi_compact / *rep.chi_noncompact, prec);
        rep.compact_quantity = Ball::from_rational(*rep.chi_compact, prec);
        rep.quantities.push_back({"ratio_even", ratio, *rep.chi_compact / *rep.chi_noncompact});
        rec.greater("ratio_even > 1", ratio, Ball::from_long(1, prec));
    } else {
        int r = (n + 1) / 2;
        rep.compact_quantity = vol_compact_odd(n, ctx);
        Ball ratio = rep.compact_quantity / rep.vol_noncompact;
        rep.quantities.push_back({"ratio_odd", ratio, std::nullopt});
        rep.quantities.push_back({"a_factor", a_factor(r, prec), std::nullopt});
        rec.greater("ratio_odd > 1", ratio, Ball::from_long(1, prec));
    }
}

void verify_denominator(DimensionReport& rep, NumericContext const& ctx, ParityRule rule)
{
    Recorder rec{rep};
    mpfr_prec_t prec = ctx.precision;
    int n = rep.dimension;
    int r = n / 2;
    rep.method = Method::Denominator;
    Rational chi_m = euler_char_noncompact_even(r);
    Rational chi_o = euler_char_compact_even(r, std::nullopt, prec);
    Integer degree = min_cover_degree(chi_o, rule);
    rep.chi_noncompact = chi_m;
    rep.chi_compact = chi_o;
    rep.min_cover_degree = degree;
    rep.vol_noncompact = vol_noncompact(n, prec);
    rep.compact_quantity = Ball::from_rational(chi_o, prec);
    rep.quantities.push_back({"chi_ratio", Ball::from_rational(chi_o / chi_m, prec), chi_o / chi_m});

    Ball vol_o = pi_scaled_eval(sphere_volume_exact(n) * PiScaled(chi_o / Rational(2), 0), prec);
    Ball cover = vol_o * Rational(degree);
    rep.quantities.push_back({"vol_compact", vol_o, std::nullopt});
    rep.quantities.push_back({"min_cover_volume", cover, std::nullopt});
    rec.greater("min cover volume > vol(M)", cover, rep.vol_noncompact);

    Rational bound = n == 32 ? q_sqrt2_chi_bound_32() : q_sqrt2_chi_bound_30();
    rep.assumptions.push_back("|chi| > " + std::string(n == 32 ? "9.071e271" : "3.116e235")
                              + " for the smallest covolume over Q(sqrt2) (quoted, not recomputed)");
    rec.add("Q(sqrt2) chi bound > |chi(M)|", exact_greater(bound, chi_m));

    rep.lambda_rows = lambda_scan(r, rule);
    for (auto const& row : rep.lambda_rows) {
        if (row.chi > chi_m) {
            rec.add("lambda " + q_label(row.q) + ": |chi| > |chi(M)|", Decision::Holds);
        } else {
            rec.add("lambda " + q_label(row.q) + ": cover degree * |chi| > |chi(M)|",
                    exact_greater(row.chi * Rational(row.cover_degree), chi_m));
        }
    }
    if (n == 32) {
        auto const& first = rep.lambda_rows.front();
        bool doubled = first.q == 4 && first.chi.denominator() == 2 * chi_o.denominator();
        rec.add("lambda q=4: denominator = 2D", doubled ? Decision::Holds : Decision::Fails);
    }
}

void verify_suborbifold(DimensionReport& rep, NumericContext const& ctx, ParityRule rule)
{
    Recorder rec{rep};
    mpfr_prec_t prec = ctx.precision;
    int n = rep.dimension;
    rep.method = Method::Suborbifold;
    rep.vol_noncompact = vol_noncompact(n, prec);
    rep.compact_quantity = vol_compact_odd(n, ctx);
    if (ctx.l_mode == LMode::FixedLowerBound)
        rep.assumptions.push_back("L(16) replaced by its lower bound 0.973; vol(O^31) is a lower bound");

    Rational chi1 = euler_char_suborbifold_30();
    Integer d1 = min_cover_degree(chi1, rule);
    rep.min_cover_degree = d1;
    rep.quantities.push_back({"chi_suborbifold", Ball::from_rational(chi1, prec), chi1});

    Ball cover = rep.compact_quantity * Rational(d1);
    rep.quantities.push_back({"min_cover_volume", cover, std::nullopt});
    Ball chain = Ball::from_rational(suborbifold_volume_bound_31(), prec);
    rec.greater("vol(O)*D1 > vol(M)", cover, rep.vol_noncompact);
    rec.greater("vol(O)*D1 > 7.019e247", cover, chain);
    rec.greater("7.019e247 > vol(M)", chain, rep.vol_noncompact);

    Ball ratio = rep.compact_quantity / rep.vol_noncompact;
    rep.quantities.push_back({"ratio_odd", ratio, std::nullopt});
    rec.greater("ratio > 0.007", ratio, Ball::from_rational(ratio_31_lower_bound(), prec));

    rep.exclusion_factors = exclusion_checks_31(prec);
    for (auto const& f : rep.exclusion_factors)
        rec.greater("ratio * " + f.name + " > 1", ratio * f.value, Ball::from_long(1, prec));
}

} // namespace

DimensionReport verify_dimension(int n, VerifyOptions const& options)
{
    if (n < 30)
        throw std::invalid_argument("verify_dimension needs n >= 30");
    return with_escalation(options.numeric, [&](NumericContext const& ctx) {
        DimensionReport rep;
        rep.dimension = n;
        rep.even = n % 2 == 0;
        rep.precision = ctx.precision;
        if (n == 30 || n == 32)
            verify_denominator(rep, ctx, options.parity_rule);
        else if (n == 31)
            verify_suborbifold(rep, ctx, options.parity_rule);
        else
            verify_ratio(rep, ctx);

        for (auto const& c : rep.checks)
            if (c.decision == Decision::Unresolved)
                throw PrecisionError("comparison '" + c.name + "' undecided");
        rep.verdict = Verdict::Verified;
        for (auto const& c : rep.checks) {
            if (c.decision == Decision::Fails) {
                rep.verdict = Verdict::Undecided;
                rep.failing_check = c.name;
                break;
            }
        }
        return rep;
    });
}

char const* to_string(Method m)
{
    switch (m) {
    case Method::Ratio: return "RATIO";
    case Method::Denominator: return "DENOMINATOR";
    case Method::Suborbifold: return "SUBORBIFOLD";
    }
    return "?";
}

char const* to_string(Verdict v)
{
    return v == Verdict::Verified ? "VERIFIED" : "UNDECIDED";
}

} // namespace hypvol
