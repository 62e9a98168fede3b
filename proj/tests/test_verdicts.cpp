#include <doctest.h>

#include <string>
#include <vector>

#include "hypvol/formulas.hpp"
#include "hypvol/verdicts.hpp"
#include "test_util.hpp"

using namespace hypvol;
using hypvol::testing::leading_digits;
using hypvol::testing::with_zeros;

namespace {

Ball one(mpfr_prec_t prec) { return Ball::from_long(1, prec); }

NamedValue const& find(std::vector<NamedValue> const& v, std::string const& name)
{
    for (auto const& x : v)
        if (x.name == name)
            return x;
    FAIL("missing value " << name);
    return v.front();
}

} // namespace

TEST_SUITE("verdicts") {

TEST_CASE("even ratio")
{
    CHECK(compare(ratio_even(15, 256), one(256)) == Ordering::Less);
    CHECK(compare(ratio_even(16, 256), one(256)) == Ordering::Less);
    CHECK(compare(ratio_even(17, 256), one(256)) == Ordering::Greater);
    for (int r = 17; r <= 30; ++r)
        CHECK(compare(ratio_even(r, 256), one(256)) == Ordering::Greater);
    for (int r = 2; r <= 20; ++r) {
        Rational chi_m = euler_char_noncompact_even(r);
        Ball quotient = euler_char_compact_even_numeric(r, lambda(LambdaKind::Bar, 4, r), 512)
                        / Ball::from_rational(chi_m, 512);
        CHECK(ratio_even(r, 512).intersects(quotient));
        CHECK(ratio_even_exact(r) == euler_char_compact_even(r) / chi_m);
    }
}

TEST_CASE("lower bound for the even ratio")
{
    int first = 0;
    for (int r = 2; r <= 30 && first == 0; ++r)
        if (compare(ratio_even_lower_bound(r, 256), one(256)) == Ordering::Greater)
            first = r;
    CHECK(first == 18);
    CHECK(compare(ratio_even_lower_bound(17, 256), one(256)) == Ordering::Less);
    for (int r : {10, 15, 20})
        CHECK(compare(ratio_even_lower_bound(r, 256), ratio_even(r, 256)) == Ordering::Less);
}

TEST_CASE("odd ratio")
{
    for (int r = 3; r <= 40; ++r) {
        Ball bound = pow(Ball::from_long(6, 256), r) * Rational(2);
        CHECK(compare(a_factor(r, 256), bound) == Ordering::Less);
    }
    NumericContext ctx;
    Ball r16 = ratio_odd(16, ctx);
    CHECK(compare(r16, Ball::from_rational(ratio_31_lower_bound(), 256)) == Ordering::Greater);
    CHECK(compare(r16, one(256)) == Ordering::Less);
    for (int r = 17; r <= 30; ++r)
        CHECK(compare(ratio_odd(r, ctx), one(256)) == Ordering::Greater);
    // ratio_odd is vol(O)/vol(M) by definition
    Ball direct = vol_compact_odd(31, ctx) / vol_noncompact(31, ctx.precision);
    CHECK(r16.intersects(direct));
}

TEST_CASE("minimal cover degree")
{
    Rational chi32 = euler_char_compact_even(16);
    Integer D = chi32.denominator();
    CHECK(min_cover_degree(chi32, ParityRule::DenominatorOnly) == D);
    CHECK(to_string(min_cover_degree(euler_char_suborbifold_30(), ParityRule::DenominatorOnly))
          == "290623844184270796846629126144000000000000000000");
    CHECK(min_cover_degree(Rational(910), ParityRule::DenominatorOnly) == 1);
    CHECK(min_cover_degree(Rational(3), ParityRule::ForceEven) == 2);
    CHECK(min_cover_degree(Rational(3, 4), ParityRule::ForceEven) == 8);
    CHECK(min_cover_degree(Rational(2, 3), ParityRule::ForceEven) == 3);
    CHECK(min_cover_degree(Rational(-5, 7), ParityRule::DenominatorOnly) == 7);

    // d chi is an integer iff D divides d
    for (long k = 1; k <= 6; ++k)
        CHECK((Rational(Integer(D * k)) * chi32).is_integer());
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
        if (D % p == 0) {
            Integer d = D / p;
            CHECK_FALSE((Rational(d) * chi32).is_integer());
        }
    }
    Ball cover = vol_compact_even(32, 256) * Rational(D);
    CHECK(compare(cover, vol_noncompact(32, 256)) == Ordering::Greater);
}

TEST_CASE("prime norms of Q(sqrt 5)")
{
    CHECK(prime_norms_q_sqrt5(30) == std::vector<long>{4, 5, 9, 11, 19, 29});
    CHECK(lambda_family(5, 15) == Rational(Integer(ipow(Integer(5), 15) - 1), Integer(2)));
    CHECK(lambda_family(4, 16) == Rational(Integer(ipow(Integer(4), 16) + 1), Integer(2)));
}

TEST_CASE("lambda scan in dimension 30")
{
    auto rows = lambda_scan_30();
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].q == 5);
    CHECK(rows[1].q == 9);
    CHECK(rows[2].q == 11);
    std::vector<std::string> const values = {"2.305e189", "1.555e193", "3.155e194"};
    std::vector<std::string> const dens = {
        with_zeros("82391859826240770906019357261824", 18),
        with_zeros("41154775137982403049959718912", 18),
        with_zeros("32109284800854974718802972372893696", 16),
    };
    Rational chi_m = euler_char_noncompact_even(15);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(leading_digits(rows[i].chi, 4) == values[i]);
        CHECK(to_string(rows[i].chi.denominator()) == dens[i]);
        CHECK(rows[i].chi == euler_char_compact_even(15, rows[i].lambda));
        CHECK(rows[i].chi < chi_m);
        if (i > 0)
            CHECK(rows[i - 1].chi < rows[i].chi);
    }
    auto full = lambda_scan(15);
    REQUIRE(full.size() == 4);
    CHECK(full.back().q == 19);
    CHECK(full.back().chi > chi_m);
}

TEST_CASE("lambda scan in dimension 32")
{
    auto rows = lambda_scan(16);
    REQUIRE(rows.size() >= 1);
    CHECK(rows[0].q == 4);
    CHECK(leading_digits(rows[0].chi, 4) == "1.884e227");
    Integer D = euler_char_compact_even(16).denominator();
    CHECK(rows[0].cover_degree == 2 * D);
    CHECK(rows.back().chi > euler_char_noncompact_even(16));
}

TEST_CASE("exclusion factors in dimension 31")
{
    auto f = exclusion_checks_31(256);
    REQUIRE(f.size() == 3);
    CHECK(compare(find(f, "field_discriminant_factor").value,
                  Ball::from_rational(Rational(Integer(3021), Integer(ipow(Integer(10), 3))) * pow(Rational(10), 34), 256))
          == Ordering::Greater);
    Ball split = find(f, "splitting_field_factor").value;
    CHECK(split.lower_rational() > Rational(332867, 1000));
    CHECK(split.upper_rational() < Rational(332869, 1000));
    // (400/275)^(31/2) by an independent route
    Ball oracle = half_power(Rational(16, 11), 31, 256);
    CHECK(split.intersects(oracle));
    auto const& lam = find(f, "lambda_factor_bound");
    REQUIRE(lam.exact.has_value());
    CHECK(*lam.exact == Rational(28697814));
    CHECK(*lam.exact == Rational(2, 3) * pow(Rational(3), 16));
}

TEST_CASE("verification by dimension")
{
    for (int n = 30; n <= 60; ++n) {
        DimensionReport rep = verify_dimension(n);
        CAPTURE(n);
        CHECK(rep.verdict == Verdict::Verified);
        CHECK_FALSE(rep.failing_check.has_value());
        for (auto const& c : rep.checks)
            CHECK(c.decision == Decision::Holds);
        Method expected = n == 31 ? Method::Suborbifold : (n == 30 || n == 32) ? Method::Denominator : Method::Ratio;
        CHECK(rep.method == expected);
        CHECK(rep.even == (n % 2 == 0));
    }
    DimensionReport r32 = verify_dimension(32);
    REQUIRE(r32.min_cover_degree.has_value());
    CHECK(to_string(*r32.min_cover_degree) == "107887196930872715055177987172922818560000000000000000000");
    CHECK_FALSE(r32.assumptions.empty());
    CHECK(verify_dimension(40).assumptions.empty());
    CHECK_THROWS_AS(verify_dimension(29), std::invalid_argument);
}

TEST_CASE("verification under forced low precision")
{
    VerifyOptions opt;
    opt.numeric.precision = 64;
    opt.numeric.max_precision = 64;
    CHECK_THROWS_AS(verify_dimension(31, opt), PrecisionError);
    opt.numeric.max_precision = 4096;
    CHECK(verify_dimension(31, opt).verdict == Verdict::Verified);
}

}
