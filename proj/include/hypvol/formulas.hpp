#ifndef HYPVOL_FORMULAS_HPP_
#define HYPVOL_FORMULAS_HPP_

#include <optional>

#include "hypvol/ball.hpp"
#include "hypvol/context.hpp"
#include "hypvol/pi_scaled.hpp"
#include "hypvol/rational.hpp"

namespace hypvol {

/// vol(S^n) for the round sphere of curvature 1, n >= 2.
PiScaled sphere_volume_exact(int n);
Ball sphere_volume(int n, mpfr_prec_t prec);

/// C(r) = prod_{j=1}^{r} (2j-1)! / (2 pi)^2j; C(0) = 1.
PiScaled c_constant(int r);

enum class LambdaKind { Plain, Prime, Bar };

/*
 * Plain: 1 if r = 0,1 (mod 4), else q^r - 1.
 * Prime: (q^r - 1)(q^(r-1) - 1)/(q + 1) if q = 2 and r = 3 (mod 4), else 1.
 * Bar:   1 if r is even, else (q^r - 1)/2.
 */
Rational lambda(LambdaKind kind, long q, int r);

enum class IndexForm { BrHyperspecial, BrCombined, DrOddCombined, TwoDr, BrMinus1 };

/// Local index products [P_v : P_v*] for residue field size q.
Integer parahoric_index(IndexForm form, long q, int r);

/// |chi(M^2r)| = 2 prod_{j=1}^{r} (4^j - 1)(9^j - 1)|B_2j|/(4j). Checked to be
/// an even integer.
Rational euler_char_noncompact_even(int r);

/// prod_{j=1}^{r-1} (4^j - 1)(9^j - 1)|B_2j|/(8j), shared by both odd formulas.
Rational noncompact_odd_product(int r);

/// vol(M^n), n >= 4, with relative radius at most 1e-30.
Ball vol_noncompact(int n, mpfr_prec_t prec);

/// |chi(O^2r)| = 4 lambda 4^-r prod_{j=1}^{r} |zeta_k(1 - 2j)|, lambda = bar
/// lambda_4(r) unless given. Before returning, the value is compared with a
/// ball evaluation of 4 lambda 5^(r^2 + r/2) C(r)^2 prod zeta_k(2j) at
/// `validation_prec` bits; disagreement throws ConsistencyError.
Rational euler_char_compact_even(int r, std::optional<Rational> lambda_override = std::nullopt,
                                 mpfr_prec_t validation_prec = kDefaultPrecision);

/// The same quantity evaluated numerically from the zeta_k(2j) form.
Ball euler_char_compact_even_numeric(int r, Rational const& lam, mpfr_prec_t prec);

/// vol(O^n) = vol(S^n)/2 |chi(O^n)| for even n.
Ball vol_compact_even(int n, mpfr_prec_t prec);

/*
 * vol(O^n), n = 2r - 1 >= 5:
 * 5^(r^2 - r/2) 11^(r - 1/2) (r-1)! / (2^(2r-1) pi^r) L(r) C(r-1)^2 prod_{j<r} zeta_k(2j)
 * with L = zeta_l0 / zeta_k. In LMode::FixedLowerBound L is replaced by
 * 0.973 and the result is only a lower bound.
 */
Ball vol_compact_odd(int n, NumericContext const& ctx);

/// |chi(O_1^30)| = (4^15 - 1)/2 (11^15 + 1)/2 4^-14 prod_{i=1}^{15} |zeta_k(1 - 2i)|.
Rational euler_char_suborbifold_30();

/// prod_{j=1}^{r} (2j-1)^(2j-1) / (2 pi (2 pi e)^(2j-1)), a lower bound for C(r).
Ball stirling_c_lower_bound(int r, mpfr_prec_t prec);

enum class BernoulliIndexing { Doubled, Literal };

/*
 * Principal covolume for odd r: lambda'_2(r) zeta(r) prod_{j<r} |B_m|/(8j)
 * with m = 2j (Doubled) or m = j (Literal, the reading with B_j).
 */
Ball principal_covolume_odd(int r, mpfr_prec_t prec,
                            BernoulliIndexing indexing = BernoulliIndexing::Doubled);

} // namespace hypvol

#endif /* HYPVOL_FORMULAS_HPP_ */
