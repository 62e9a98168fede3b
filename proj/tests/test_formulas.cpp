#include <doctest.h>

#include <string>
#include <vector>

#include "hypvol/formulas.hpp"
#include "hypvol/lfunctions.hpp"
#include "test_util.hpp"

using namespace hypvol;
using hypvol::testing::fixed3_truncated;
using hypvol::testing::leading_digits;
using hypvol::testing::with_zeros;

namespace {

std::string const kD = "107887196930872715055177987172922818560000000000000000000";
std::string const kD1 = "290623844184270796846629126144000000000000000000";

// Gamma((n+1)/2) free oracle: vol(S^n) = 2 pi vol(S^(n-2)) / (n - 1)
PiScaled sphere_recursive(int n)
{
    if (n == 0)
        return PiScaled(Rational(2), 0);
    if (n == 1)
        return PiScaled(Rational(2), 1);
    return sphere_recursive(n - 2) * PiScaled(Rational(2, n - 1), 1);
}

} // namespace

TEST_SUITE("formulas") {

TEST_CASE("sphere volumes")
{
    CHECK(sphere_volume_exact(2) == PiScaled(Rational(4), 1));
    CHECK(sphere_volume_exact(3) == PiScaled(Rational(2), 2));
    CHECK(sphere_volume_exact(4) == PiScaled(Rational(8, 3), 2));
    for (int n = 2; n <= 60; ++n) {
        CHECK(sphere_volume_exact(n) == sphere_recursive(n));
        CHECK(sphere_volume(n, 256).intersects(pi_scaled_eval(sphere_recursive(n), 256)));
    }
}

TEST_CASE("the constant C(r)")
{
    CHECK(c_constant(1) == PiScaled(Rational(1, 4), -2));
    CHECK(c_constant(2) == PiScaled(Rational(3, 32), -6));
    for (int r = 1; r <= 30; ++r) {
        CHECK(c_constant(r).pi_exponent() == -r * (r + 1));
        Rational q(1);
        for (int j = 1; j <= r; ++j)
            q *= Rational(factorial(2 * j - 1)) / pow(Rational(2), 2 * j);
        CHECK(c_constant(r).coefficient() == q);
    }
}

TEST_CASE("Stirling lower bound for C(r)")
{
    for (int r = 1; r <= 40; ++r)
        CHECK(compare(pi_scaled_eval(c_constant(r), 256), stirling_c_lower_bound(r, 256)) == Ordering::Greater);
}

TEST_CASE("lambda factors")
{
    CHECK(lambda(LambdaKind::Plain, 2, 2) == Rational(3));
    CHECK(lambda(LambdaKind::Plain, 2, 4) == Rational(1));
    CHECK(lambda(LambdaKind::Plain, 3, 5) == Rational(1));
    CHECK(lambda(LambdaKind::Plain, 3, 7) == Rational(2186));
    CHECK(lambda(LambdaKind::Prime, 2, 3) == Rational(7));
    CHECK(lambda(LambdaKind::Prime, 2, 7) == Rational(127 * 63, 3));
    CHECK(lambda(LambdaKind::Prime, 3, 3) == Rational(1));
    CHECK(lambda(LambdaKind::Prime, 2, 5) == Rational(1));
    CHECK(lambda(LambdaKind::Bar, 4, 16) == Rational(1));
    CHECK(lambda(LambdaKind::Bar, 4, 15) == Rational(Integer(1073741823), Integer(2)));
    CHECK(lambda(LambdaKind::Bar, 5, 15) == Rational(Integer(ipow(Integer(5), 15) - 1), Integer(2)));
}

TEST_CASE("parahoric index products")
{
    CHECK(parahoric_index(IndexForm::BrHyperspecial, 2, 2) == 45);
    CHECK(parahoric_index(IndexForm::TwoDr, 2, 4) == 48195);
    CHECK(parahoric_index(IndexForm::BrMinus1, 3, 2) == 8);
    for (int r = 2; r <= 12; ++r) {
        for (long q : {2L, 3L, 4L, 5L}) {
            Integer base = parahoric_index(IndexForm::BrMinus1, q, r);
            Integer qr = ipow(Integer(q), r);
            CHECK(parahoric_index(IndexForm::DrOddCombined, q, r) == (qr - 1) * base);
            CHECK(parahoric_index(IndexForm::TwoDr, q, r) == (qr + 1) * base);
            CHECK(parahoric_index(IndexForm::BrHyperspecial, q, r) == (qr * qr - 1) * base);
        }
        CHECK(parahoric_index(IndexForm::BrCombined, 2, r) == parahoric_index(IndexForm::BrHyperspecial, 2, r));
    }
}

TEST_CASE("noncompact Euler characteristics")
{
    std::vector<std::string> const table = {
        "10",
        "910",
        "3171350",
        "725639764850",
        "16654568229539490250",
        "54376724439679967985482572750",
        "33998109351372684068956597092378802073750",
        "5272397653068183031816584035192902513000228940543011250",
    };
    for (int r = 2; r <= 9; ++r)
        CHECK(euler_char_noncompact_even(r).to_string() == table[r - 2]);
    for (int r = 2; r <= 20; ++r) {
        Rational chi = euler_char_noncompact_even(r);
        CHECK(chi.is_integer());
        CHECK(chi.sign() > 0);
        CHECK(chi.numerator() % 2 == 0);
    }
    CHECK(leading_digits(euler_char_noncompact_even(15), 4) == "1.252e195");
    CHECK(leading_digits(euler_char_noncompact_even(16), 4) == "2.354e228");
}

TEST_CASE("noncompact volumes")
{
    CHECK(fixed3_truncated(vol_noncompact(4, 256)) == "131.594");
    CHECK(fixed3_truncated(vol_noncompact(5, 256)) == "273.467");
    CHECK(fixed3_truncated(vol_noncompact(7, 256)) == "42504.453");
    CHECK(fixed3_truncated(vol_noncompact(12, 256)) == "98579836734072034892.809");
    for (int n = 4; n <= 60; ++n)
        CHECK(vol_noncompact(n, 512).relative_radius() <= 1e-30);
    for (int n = 4; n <= 19; ++n)
        CHECK(compare(vol_noncompact(n, 256), vol_noncompact(n + 1, 256)) == Ordering::Less);
    CHECK_THROWS_AS(vol_noncompact(31, 64), PrecisionError);
    CHECK_THROWS_AS(vol_noncompact(3, 256), std::invalid_argument);
}

TEST_CASE("Gauss-Bonnet for even dimensions")
{
    for (int r = 2; r <= 30; ++r) {
        int n = 2 * r;
        Ball gb = sphere_volume(n, 512) * euler_char_noncompact_even(r) / Rational(2);
        CHECK(vol_noncompact(n, 512).intersects(gb));
    }
}

TEST_CASE("odd dimensions with r odd: principal covolume times local indices")
{
    for (int r : {3, 5, 7}) {
        Ball principal = principal_covolume_odd(r, 512);
        Rational local = Rational(parahoric_index(IndexForm::DrOddCombined, 2, r))
                         * Rational(parahoric_index(IndexForm::DrOddCombined, 3, r))
                         / lambda(LambdaKind::Prime, 2, r);
        Ball chained = principal * local;
        Ball direct = vol_noncompact(2 * r - 1, 512);
        CHECK(direct.intersects(chained));
        CHECK(direct.relative_radius() < 1e-30);
        Ball literal = principal_covolume_odd(r, 512, BernoulliIndexing::Literal) * local;
        CHECK_FALSE(direct.intersects(literal));
    }
}

TEST_CASE("odd dimensions with r even agree with the L-function form")
{
    // vol(M^(2r-1)) = 3^(r-1/2) (2^r + 1) L(r, chi_-3) prod
    for (int r : {4, 6, 8, 16}) {
        Ball direct = vol_noncompact(2 * r - 1, 512);
        Ball L = dirichlet_L_numeric(kronecker_character(-3), Rational(r), 640);
        Ball rebuilt = half_power(Rational(3), 2L * r - 1, 640) * L
                       * Rational(Integer(ipow(Integer(2), r) + 1)) * noncompact_odd_product(r);
        CHECK(direct.intersects(rebuilt));
    }
}

TEST_CASE("compact Euler characteristics")
{
    Rational chi32 = euler_char_compact_even(16);
    CHECK(to_string(chi32.denominator()) == kD);
    CHECK(leading_digits(chi32, 4) == "8.777e217");

    Rational chi30 = euler_char_compact_even(15);
    CHECK(leading_digits(chi30, 4) == "8.112e187");
    CHECK(decimal_digits(chi30.denominator()) == 49);
    CHECK(to_string(chi30.denominator()).substr(0, 4) == "5231");

    Rational lam5 = Rational(Integer(ipow(Integer(5), 15) - 1), Integer(2));
    Rational row = euler_char_compact_even(15, lam5);
    CHECK(leading_digits(row, 4) == "2.305e189");
    CHECK(to_string(row.denominator()) == with_zeros("82391859826240770906019357261824", 18));
    CHECK(row == chi30 * lam5 / lambda(LambdaKind::Bar, 4, 15));

    // the exact product form against the printed zeta_k(2j) form
    for (int r = 2; r <= 20; ++r) {
        Rational lam = lambda(LambdaKind::Bar, 4, r);
        Ball numeric = euler_char_compact_even_numeric(r, lam, 512);
        CHECK(numeric.contains(euler_char_compact_even(r)));
        CHECK(numeric.relative_radius() < 1e-25);
    }
}

TEST_CASE("compact volumes")
{
    for (int r = 2; r <= 20; ++r) {
        int n = 2 * r;
        Ball gb = sphere_volume(n, 512) * euler_char_compact_even(r) / Rational(2);
        CHECK(vol_compact_even(n, 512).intersects(gb));
    }
    NumericContext exact;
    NumericContext lower;
    lower.l_mode = LMode::FixedLowerBound;
    Ball v = vol_compact_odd(31, exact);
    Ball vl = vol_compact_odd(31, lower);
    CHECK(leading_digits(v, 4) == "2.415e200");
    CHECK(compare(vl, v) == Ordering::Less);
    CHECK(compare(v / vl, Ball::from_rational(Rational(106, 100), 256)) == Ordering::Less);
    CHECK(compare(v / vl, Ball::from_rational(zeta_k_numeric(Rational(3), 256).upper_rational() / Rational(973, 1000), 256)) == Ordering::Less);
    CHECK_THROWS_AS(vol_compact_odd(3, exact), std::invalid_argument);
}

TEST_CASE("suborbifold Euler characteristic in dimension 30")
{
    Rational chi1 = euler_char_suborbifold_30();
    CHECK(to_string(chi1.denominator()) == kD1);
    CHECK(gcd(chi1.numerator(), chi1.denominator()) == 1);
    Rational factor = Rational(Integer(ipow(Integer(11), 15) + 1), Integer(2));
    CHECK(chi1 == euler_char_compact_even(15) * factor);
    CHECK(leading_digits(chi1, 4) == "1.694e203");
}

}
