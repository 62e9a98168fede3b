#ifndef HYPVOL_POLYNOMIAL_HPP_
#define HYPVOL_POLYNOMIAL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hypvol/rational.hpp"

namespace hypvol {

/// Integer polynomial, ascending coefficients: {-1, -1, 1} is x^2 - x - 1.
using IntPoly = std::vector<Integer>;

IntPoly make_poly(std::initializer_list<long> ascending);
int degree(IntPoly const& f);
std::string to_string(IntPoly const& f);

/// Res(f, g) as the determinant of the Sylvester matrix (fraction-free).
Integer resultant(IntPoly const& f, IntPoly const& g);

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f); needs degree >= 2.
Integer poly_discriminant(IntPoly const& f);

struct FactorDegree {
    int degree;
    int multiplicity;
    friend bool operator==(FactorDegree const&, FactorDegree const&) = default;
    friend auto operator<=>(FactorDegree const&, FactorDegree const&) = default;
};

/*
 * Degrees and multiplicities of the irreducible factors of f over F_p, one
 * entry per factor, sorted. Uses squarefree decomposition followed by
 * distinct-degree factorization; equal-degree factors are counted, not split.
 */
std::vector<FactorDegree> factor_degrees_mod_p(IntPoly const& f, std::uint64_t p);

} // namespace hypvol

#endif /* HYPVOL_POLYNOMIAL_HPP_ */
