#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include <mpfr.h>

#include "hypvol/lfunctions.hpp"

using namespace hypvol;

namespace {

// ---- brute force factorization over F_p for small p and degree ---------

using Poly = std::vector<long>;  // ascending, monic, reduced mod p

Poly trim(Poly f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
    return f;
}

// Returns true and sets q when g divides f exactly.
bool divides(Poly const& g, Poly f, long p, Poly& q)
{
    int dg = static_cast<int>(g.size()) - 1, df = static_cast<int>(f.size()) - 1;
    if (df < dg)
        return false;
    q.assign(df - dg + 1, 0);
    for (int i = df - dg; i >= 0; --i) {
        long c = f[i + dg] % p;  // g is monic
        q[i] = c;
        for (int k = 0; k <= dg; ++k)
            f[i + k] = ((f[i + k] - c * g[k]) % p + p) % p;
    }
    return trim(f).empty();
}

// Irreducible factors with repetition, by trial division with every monic
// polynomial of increasing degree.
std::vector<Poly> brute_factor(Poly f, long p)
{
    std::vector<Poly> out;
    int d = 1;
    while (f.size() > 1) {
        int deg = static_cast<int>(f.size()) - 1;
        if (2 * d > deg) {
            out.push_back(f);
            break;
        }
        long count = 1;
        for (int i = 0; i < d; ++i)
            count *= p;
        bool found = false;
        for (long code = 0; code < count && !found; ++code) {
            Poly g(d + 1, 0);
            g[d] = 1;
            long c = code;
            for (int i = 0; i < d; ++i, c /= p)
                g[i] = c % p;
            Poly q;
            if (divides(g, f, p, q)) {
                out.push_back(g);
                f = q;
                found = true;
            }
        }
        if (!found)
            ++d;
    }
    return out;
}

std::vector<FactorDegree> degree_multiset(std::vector<Poly> const& factors)
{
    std::map<Poly, int> count;
    for (auto const& g : factors)
        ++count[g];
    std::vector<FactorDegree> out;
    for (auto const& [g, m] : count)
        out.push_back({static_cast<int>(g.size()) - 1, m});
    std::sort(out.begin(), out.end());
    return out;
}

// monic discriminant of x^4 + b x^3 + c x^2 + d x + e
Integer quartic_discriminant(Integer b, Integer c, Integer d, Integer e)
{
    return 256 * e * e * e - 192 * b * d * e * e - 128 * c * c * e * e + 144 * c * d * d * e
           - 27 * d * d * d * d + 144 * b * b * c * e * e - 6 * b * b * d * d * e
           - 80 * b * c * c * d * e + 18 * b * c * d * d * d + 16 * c * c * c * c * e
           - 4 * c * c * c * d * d - 27 * b * b * b * b * e * e + 18 * b * b * b * c * d * e
           - 4 * b * b * b * d * d * d - 4 * b * b * c * c * c * e + b * b * c * c * d * d;
}

bool is_prime_trial(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace

TEST_SUITE("lfunctions") {

TEST_CASE("exact values at negative integers")
{
    CHECK(zeta_neg(1) == Rational(-1, 12));
    CHECK(zeta_neg(2) == Rational(1, 120));
    CHECK(zeta_neg(6) == Rational(691, 32760));
    CHECK(zeta_even_exact(1) == PiScaled(Rational(1, 6), 2));
    CHECK(zeta_even_exact(2) == PiScaled(Rational(1, 90), 4));
    for (unsigned j = 1; j <= 20; ++j)
        CHECK(zeta_even_exact(j).pi_exponent() == 2 * static_cast<long>(j));

    auto chi5 = kronecker_character(5);
    CHECK(dirichlet_L_neg(2, chi5) == Rational(-2, 5));
    CHECK(dirichlet_L_neg(3, chi5) == Rational(0));
    CHECK(dirichlet_L_neg(2, DirichletCharacter::trivial()) == Rational(-1, 12));

    CHECK(dedekind_zeta_neg_quad(1) == Rational(1, 30));
    CHECK(dedekind_zeta_neg_quad(2) == Rational(1, 60));
    for (unsigned j = 1; j <= 32; ++j)
        CHECK(dedekind_zeta_neg_quad(j).sign() > 0);
}

TEST_CASE("zeta_k functional equation")
{
    // zeta_k(2j) = |zeta_k(1-2j)| (2 pi)^4j / (4 ((2j-1)!)^2 5^(2j-1/2))
    for (unsigned j = 1; j <= 5; ++j) {
        mpfr_prec_t p = 512;
        Ball rhs = pow(Ball::pi(p) * Rational(2), 4 * j) * dedekind_zeta_neg_quad(j).abs();
        Integer f = factorial(2 * j - 1);
        rhs /= Rational(Integer(4 * f * f));
        rhs /= half_power(Rational(5), 4L * j - 1, p);
        CHECK(zeta_k_numeric(Rational(2 * j), 256).contains(rhs));
    }
}

TEST_CASE("zeta at even integers agrees with the exact form")
{
    for (unsigned j = 1; j <= 20; ++j) {
        Ball exact = pi_scaled_eval(zeta_even_exact(j), 256);
        Ball series = zeta_numeric(Rational(2 * j), 256);
        CHECK(exact.intersects(series));
        CHECK(series.relative_radius() < 1e-70);
    }
    Ball z3 = zeta_numeric(Rational(3), 128);
    CHECK(z3.lower_rational() > Rational(12020, 10000));
    CHECK(z3.upper_rational() < Rational(12021, 10000));
}

TEST_CASE("Hurwitz zeta at half-integers and small shifts")
{
    // zeta(s, 1/2) = (2^s - 1) zeta(s)
    for (long s : {2L, 3L, 7L, 20L}) {
        Ball half = hurwitz_zeta(Rational(s), Rational(1, 2), 256);
        Ball via = zeta_numeric(Rational(s), 320) * Rational(Integer(ipow(Integer(2), s) - 1));
        CHECK(half.intersects(via));
    }
    // zeta(5/2, 1) against a partial sum with integral tail bound
    mpfr_t sum, t;
    mpfr_inits2(200, sum, t, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(sum, 1);
    long const N = 200000;
    for (long n = N; n >= 1; --n) {
        mpfr_set_si(t, n, MPFR_RNDN);
        mpfr_pow_si(t, t, -5, MPFR_RNDN);
        mpfr_sqrt(t, t, MPFR_RNDN);
        mpfr_add(sum, sum, t, MPFR_RNDN);
    }
    double tail = (2.0 / 3.0) * std::pow(static_cast<double>(N), -1.5);
    Ball z = hurwitz_zeta(Rational(5, 2), Rational(1), 128);
    CHECK(z.mid_double() - mpfr_get_d(sum, MPFR_RNDN) > 0);
    CHECK(z.mid_double() - mpfr_get_d(sum, MPFR_RNDN) <= tail * 1.0000001 + 1e-15);
    mpfr_clears(sum, t, static_cast<mpfr_ptr>(nullptr));
    CHECK_THROWS_AS(hurwitz_zeta(Rational(3, 4), Rational(1), 128), std::invalid_argument);
    CHECK_THROWS_AS(hurwitz_zeta(Rational(3), Rational(0), 128), std::invalid_argument);
}

TEST_CASE("L(4, chi_-3) against the alternating series")
{
    // sum_k 1/(3k+1)^4 - 1/(3k+2)^4; pairs are positive and the tail is
    // below 1/(3 (3N - 2)^4)
    long const N = 20000;
    mpfr_t s, t;
    mpfr_inits2(192, s, t, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(s, 1);
    for (long k = N - 1; k >= 0; --k) {
        mpfr_set_si(t, 3 * k + 1, MPFR_RNDN);
        mpfr_pow_si(t, t, -4, MPFR_RNDN);
        mpfr_add(s, s, t, MPFR_RNDN);
        mpfr_set_si(t, 3 * k + 2, MPFR_RNDN);
        mpfr_pow_si(t, t, -4, MPFR_RNDN);
        mpfr_sub(s, s, t, MPFR_RNDN);
    }
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), s);
    Rational lo(q.get_num(), q.get_den());
    Rational tail = Rational(1) / (Rational(3) * pow(Rational(3 * N - 2), 4));
    Rational slack(Integer(1), ipow(Integer(2), 150));
    Ball L = dirichlet_L_numeric(kronecker_character(-3), Rational(4), 256);
    CHECK(L.upper_rational() >= lo - slack);
    CHECK(L.lower_rational() <= lo + tail + slack);
    CHECK(L.mid_string(15) == "9.40025680877124e-01");
    mpfr_clears(s, t, static_cast<mpfr_ptr>(nullptr));
}

TEST_CASE("discriminants")
{
    CHECK(poly_discriminant(make_poly({-1, -1, 1})) == 5);
    CHECK(poly_discriminant(make_poly({1, 1, 1})) == -3);
    CHECK(poly_discriminant(make_poly({-1, -1, 0, 1})) == -23);  // -4p^3 - 27q^2
    IntPoly l0 = make_poly({-1, 2, 0, -1, 1});
    Integer oracle = quartic_discriminant(-1, 0, 2, -1);
    CHECK(oracle == -275);
    CHECK(poly_discriminant(l0) == oracle);
    CHECK(abs(poly_discriminant(l0)) == 275);
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> c(-9, 9);
    for (int i = 0; i < 50; ++i) {
        long b = c(rng), cc = c(rng), d = c(rng), e = c(rng);
        CHECK(poly_discriminant(make_poly({e, d, cc, b, 1})) == quartic_discriminant(b, cc, d, e));
    }
    CHECK_NOTHROW(check_l0_maximality());
    for (auto const& f : {field_q_sqrt5(), field_q_sqrt_minus3(), field_l0()}) {
        CHECK(degree(f.defining_polynomial) == f.degree);
        CHECK(poly_discriminant(f.defining_polynomial) == f.discriminant);
    }
    CHECK(field_l0().contains_field == std::optional<std::string>("Q(sqrt5)"));
}

TEST_CASE("factorization degrees against brute force")
{
    std::mt19937 rng(4242);
    for (long p : {2L, 3L, 5L, 7L}) {
        std::uniform_int_distribution<long> coef(0, p - 1);
        for (int trial = 0; trial < 150; ++trial) {
            int deg = 1 + trial % 6;
            Poly f(deg + 1);
            for (int i = 0; i < deg; ++i)
                f[i] = coef(rng);
            f[deg] = 1;
            IntPoly F;
            for (long v : f)
                F.push_back(Integer(v));
            CHECK(factor_degrees_mod_p(F, p) == degree_multiset(brute_factor(f, p)));
        }
    }
    // (x^2 + 1)^2 (x + 1)^3 = x^7 + 3x^6 + 5x^5 + 7x^4 + 7x^3 + 5x^2 + 3x + 1
    IntPoly g = make_poly({1, 3, 5, 7, 7, 5, 3, 1});
    CHECK(factor_degrees_mod_p(g, 3) == std::vector<FactorDegree>{{1, 3}, {2, 2}});
    // x^p - x splits into p distinct linear factors
    IntPoly xp(8, Integer(0));
    xp[7] = 1;
    xp[1] = -1;
    CHECK(factor_degrees_mod_p(xp, 7) == std::vector<FactorDegree>(7, {1, 1}));
}

TEST_CASE("splitting laws and degree sums for p < 1000")
{
    IntPoly k = field_q_sqrt5().defining_polynomial;
    IntPoly l0 = field_l0().defining_polynomial;
    for (std::uint32_t p : primes_up_to(1000)) {
        auto fk = factor_degrees_mod_p(k, p);
        if (p % 5 == 1 || p % 5 == 4)
            CHECK(fk == std::vector<FactorDegree>{{1, 1}, {1, 1}});
        else if (p % 5 == 2 || p % 5 == 3)
            CHECK(fk == std::vector<FactorDegree>{{2, 1}});
        else
            CHECK(fk == std::vector<FactorDegree>{{1, 2}});
        for (auto const& f : {k, l0, field_q_sqrt_minus3().defining_polynomial}) {
            int sum = 0;
            for (auto const& d : factor_degrees_mod_p(f, p))
                sum += d.degree * d.multiplicity;
            CHECK(sum == degree(f));
        }
        // ramification in l0 only above the primes dividing 275
        bool ramified = false;
        for (auto const& d : factor_degrees_mod_p(l0, p))
            ramified = ramified || d.multiplicity > 1;
        CHECK(ramified == (p == 5 || p == 11));
    }
}

TEST_CASE("prime sieve")
{
    auto ps = primes_up_to(2000);
    std::vector<std::uint32_t> expected;
    for (std::uint32_t n = 0; n <= 2000; ++n)
        if (is_prime_trial(n))
            expected.push_back(n);
    CHECK(ps == expected);
}

TEST_CASE("Euler products agree with the series")
{
    for (long s : {2L, 3L, 4L, 16L}) {
        Ball euler = dedekind_zeta_numeric(field_q_sqrt5(), s, 256);
        Ball series = zeta_numeric(Rational(s), 256) * dirichlet_L_numeric(kronecker_character(5), Rational(s), 256);
        CHECK(euler.intersects(series));
        Ball q = dedekind_zeta_numeric(field_rationals(), s, 256);
        CHECK(q.intersects(zeta_numeric(Rational(s), 256)));
    }
    // the tail enclosure is what makes s = 2 rigorous: it is wider than a ulp
    CHECK(dedekind_zeta_numeric(field_q_sqrt5(), 2, 256).relative_radius() > 1e-6);
}

TEST_CASE("relative L-value of l0 over k")
{
    Ball zk3 = zeta_k_numeric(Rational(3), 256);
    for (long s = 3; s <= 8; ++s) {
        Ball L = L_rel_numeric(s, 256, LMode::Exact);
        CHECK(L.lower_rational() > Rational(973, 1000));
        CHECK(compare(L, zk3) == Ordering::Less);
        CHECK(L.is_positive());
    }
    Ball L16 = L_rel_numeric(16, 256, LMode::Exact);
    CHECK(L16.lower_rational() > Rational(9999, 10000));
    CHECK(L16.upper_rational() < Rational(10001, 10000));
    CHECK(L_rel_numeric(3, 128, LMode::FixedLowerBound).contains(Rational(973, 1000)));
    CHECK(L_rel_numeric(3, 128, LMode::FixedLowerBound).relative_radius() < 1e-30);
    CHECK_THROWS_AS(L_rel_numeric(2, 128, LMode::Exact), std::invalid_argument);
}

}
