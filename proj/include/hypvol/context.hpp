#ifndef HYPVOL_CONTEXT_HPP_
#define HYPVOL_CONTEXT_HPP_

#include <string>
#include <utility>

#include "hypvol/ball.hpp"

namespace hypvol {

inline constexpr unsigned long kDefaultPrimeCutoff = 100000;

/// How the relative L-value L_{l0|k}(s) enters the compact odd volumes.
enum class LMode {
    Exact,            // Euler product with rigorous tail
    FixedLowerBound,  // the constant 0.973, valid only as a lower bound
};

struct NumericContext {
    mpfr_prec_t precision = kDefaultPrecision;
    mpfr_prec_t max_precision = kMaxPrecision;
    unsigned long prime_cutoff = kDefaultPrimeCutoff;
    LMode l_mode = LMode::Exact;
};

/*
 * Runs f(ctx) at ctx.precision and retries at doubled precision whenever it
 * throws PrecisionError, up to ctx.max_precision. The last failure is
 * rethrown as "precision insufficient".
 */
template <class F>
auto with_escalation(NumericContext ctx, F&& f) -> decltype(f(ctx))
{
    for (;;) {
        try {
            return f(std::as_const(ctx));
        } catch (PrecisionError const& e) {
            if (ctx.precision * 2 > ctx.max_precision)
                throw PrecisionError("precision insufficient at "
                                     + std::to_string(ctx.precision)
                                     + " bits: " + e.what());
            ctx.precision *= 2;
        }
    }
}

} // namespace hypvol

#endif /* HYPVOL_CONTEXT_HPP_ */
