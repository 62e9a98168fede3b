#ifndef HYPVOL_VERDICTS_HPP_
#define HYPVOL_VERDICTS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hypvol/ball.hpp"
#include "hypvol/context.hpp"
#include "hypvol/rational.hpp"

namespace hypvol {

// Constants quoted from the literature rather than recomputed here.
/// Lower bound for |chi| over Q(sqrt 2) in dimension 30.
Rational q_sqrt2_chi_bound_30();
/// Lower bound for |chi| over Q(sqrt 2) in dimension 32.
Rational q_sqrt2_chi_bound_32();
/// Intermediate constant 7.019e247 in the n = 31 degree chain.
Rational suborbifold_volume_bound_31();
/// 0.007
Rational ratio_31_lower_bound();

/// |chi(O^2r)| / |chi(M^2r)| as an exact rational.
Rational ratio_even_exact(int r);
Ball ratio_even(int r, mpfr_prec_t prec);
/// 5^(r^2 + r/2) C(r) / prod_{j=1}^{r} (4^j - 1)(9^j - 1)
Ball ratio_even_lower_bound(int r, mpfr_prec_t prec);
/// A(r) = zeta(r)(2^r - 1)(3^r - 1) for odd r, 3^(r - 1/2)(2^r + 1) L(r, chi_-3) for even r.
Ball a_factor(int r, mpfr_prec_t prec);
/// vol(O^(2r-1)) / vol(M^(2r-1)).
Ball ratio_odd(int r, NumericContext const& ctx);

enum class ParityRule { DenominatorOnly, ForceEven };

/// Smallest cover degree allowed by the denominator of chi. ForceEven
/// doubles it when the numerator is odd, so that the cover has even chi.
Integer min_cover_degree(Rational const& chi, ParityRule rule);

/// Norms of the prime ideals of Q(sqrt 5) up to `bound`, ascending.
std::vector<long> prime_norms_q_sqrt5(long bound);

/// Lambda factor of the principal subgroups met in the scans:
/// (q^r - 1)/2 for odd r, (q^r + 1)/2 for even r.
Rational lambda_family(long q, int r);

struct LambdaRow {
    long q;
    Rational lambda;
    Rational chi;           // |chi| of the principal subgroup
    Integer cover_degree;   // min_cover_degree(chi)
};

/*
 * Principal subgroups over Q(sqrt 5) in dimension 2r with lambda factor
 * lambda_family(q, r), q running over prime norms >= 4 in ascending order
 * (q = 4 is skipped for odd r, where it is O^2r itself). Stops after the
 * first row whose |chi| exceeds |chi(M^2r)|.
 */
std::vector<LambdaRow> lambda_scan(int r, ParityRule rule = ParityRule::DenominatorOnly);

/// Rows of lambda_scan(15) with |chi| below |chi(M^30)|.
std::vector<LambdaRow> lambda_scan_30();

struct NamedValue {
    std::string name;
    Ball value;
    std::optional<Rational> exact;
};

/// Field discriminant, splitting field and lambda factors for n = 31.
std::vector<NamedValue> exclusion_checks_31(mpfr_prec_t prec);

enum class Method { Ratio, Denominator, Suborbifold };
enum class Verdict { Verified, Undecided };

struct Check {
    std::string name;
    Decision decision;
};

struct DimensionReport {
    int dimension = 0;
    bool even = false;
    Method method = Method::Ratio;
    std::optional<Rational> chi_noncompact;
    Ball vol_noncompact;
    std::optional<Rational> chi_compact;        // even n
    Ball compact_quantity;                      // |chi(O^n)| for even n, vol(O^n) for odd n
    std::optional<Integer> min_cover_degree;
    std::vector<NamedValue> quantities;         // ratios and other intermediate values
    std::vector<NamedValue> exclusion_factors;
    std::vector<LambdaRow> lambda_rows;
    std::vector<Check> checks;
    std::vector<std::string> assumptions;
    Verdict verdict = Verdict::Undecided;
    std::optional<std::string> failing_check;
    mpfr_prec_t precision = 0;
};

struct VerifyOptions {
    NumericContext numeric;
    ParityRule parity_rule = ParityRule::DenominatorOnly;
};

/*
 * Runs the argument for dimension n >= 30 with precision escalation.
 * Comparisons that stay unresolved at the maximal precision raise
 * PrecisionError; comparisons decided the wrong way give Verdict::Undecided
 * with the first such check named in failing_check.
 */
DimensionReport verify_dimension(int n, VerifyOptions const& options = {});

char const* to_string(Method m);
char const* to_string(Verdict v);

} // namespace hypvol

#endif /* HYPVOL_VERDICTS_HPP_ */
