#ifndef HYPVOL_LFUNCTIONS_HPP_
#define HYPVOL_LFUNCTIONS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypvol/ball.hpp"
#include "hypvol/bernoulli.hpp"
#include "hypvol/context.hpp"
#include "hypvol/pi_scaled.hpp"
#include "hypvol/polynomial.hpp"
#include "hypvol/rational.hpp"

namespace hypvol {

// Exact values at nonpositive integers.

/// zeta(1 - 2j) = -B_2j / 2j, j >= 1.
Rational zeta_neg(unsigned j);
/// zeta(2j) = (-1)^(j+1) B_2j (2 pi)^2j / (2 (2j)!), j >= 1.
PiScaled zeta_even_exact(unsigned j);
/// L(1 - n, chi) = -B_{n,chi} / n, n >= 1.
Rational dirichlet_L_neg(unsigned n, DirichletCharacter const& chi);
/// zeta_k(1 - 2j) for k = Q(sqrt 5), as zeta(1 - 2j) L(1 - 2j, chi_5).
Rational dedekind_zeta_neg_quad(unsigned j);

struct NumberField {
    std::string label;
    IntPoly defining_polynomial;  // monic, ascending
    int degree;
    Integer discriminant;
    std::optional<std::string> contains_field;
};

NumberField field_rationals();
/// k = Q(sqrt 5), x^2 - x - 1.
NumberField field_q_sqrt5();
/// l = Q(sqrt -3), x^2 + x + 1.
NumberField field_q_sqrt_minus3();
/// The quartic field l0 = Q[x]/(x^4 - x^3 + 2x - 1), containing Q(sqrt 5).
NumberField field_l0();

/// Throws ConsistencyError unless the discriminant of the defining
/// polynomial of l0 equals its field discriminant (-275, absolute value 275),
/// i.e. the equation order is maximal.
void check_l0_maximality();

// Rigorous numerics. All series arguments s are rationals >= 2 with
// denominator 1 or 2. Output radius is at most 2^(16 - prec) times the
// midpoint.

/// sum_{n >= 0} (n + alpha)^-s for 0 < alpha <= 1, by Euler-Maclaurin
/// summation with an explicit remainder bound.
Ball hurwitz_zeta(Rational const& s, Rational const& alpha, mpfr_prec_t prec);
Ball zeta_numeric(Rational const& s, mpfr_prec_t prec);
Ball dirichlet_L_numeric(DirichletCharacter const& chi, Rational const& s, mpfr_prec_t prec);
/// zeta_k(s) for k = Q(sqrt 5), as zeta(s) L(s, chi_5).
Ball zeta_k_numeric(Rational const& s, mpfr_prec_t prec);

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

/*
 * Euler product over primes p <= prime_cutoff, one factor per irreducible
 * factor of the defining polynomial mod p, times the enclosure [1, e^T] of
 * the tail with T = deg P^(1-s) / ((s-1)(1-2^-s)). Requires a maximal
 * equation order (checked against the stored discriminant).
 */
Ball dedekind_zeta_numeric(NumberField const& field, long s, mpfr_prec_t prec,
                           unsigned long prime_cutoff = kDefaultPrimeCutoff);

/// L_{l0|k}(s) = zeta_l0(s) / zeta_k(s), s >= 3. In FixedLowerBound mode the
/// point ball 0.973 is returned; it may only be used as a lower bound.
Ball L_rel_numeric(long s, mpfr_prec_t prec, LMode mode,
                   unsigned long prime_cutoff = kDefaultPrimeCutoff);

} // namespace hypvol

#endif /* HYPVOL_LFUNCTIONS_HPP_ */
