#ifndef HYPVOL_BERNOULLI_HPP_
#define HYPVOL_BERNOULLI_HPP_

#include <vector>

#include "hypvol/rational.hpp"

namespace hypvol {

/// B_n with B_1 = -1/2. Memoized; safe to call from several threads.
Rational bernoulli(unsigned n);

/// Coefficients of B_n(x) in ascending powers: entry i multiplies x^i.
std::vector<Rational> bernoulli_polynomial(unsigned n);

/// Horner evaluation of an ascending coefficient list.
Rational evaluate_polynomial(std::vector<Rational> const& coefficients, Rational const& x);

/*
 * Real character given by its value table over one period. Only the
 * quadratic characters of discriminant 5 and -3 (plus the trivial one)
 * are constructed here.
 */
class DirichletCharacter {
public:
    static DirichletCharacter trivial();

    long modulus() const { return static_cast<long>(values_.size()); }
    /// chi(a) for any integer a.
    int operator()(long a) const;
    bool is_even() const { return (*this)(modulus() - 1) == 1; }
    bool is_trivial() const { return modulus() == 1; }
    /// Values at a = 1..f, in that order.
    std::vector<int> table() const;

private:
    friend DirichletCharacter kronecker_character(long);
    explicit DirichletCharacter(std::vector<int> values_by_residue);

    std::vector<int> values_;  // indexed by a mod f
};

/// Quadratic character (D | .) for D in {5, -3}; std::invalid_argument otherwise.
DirichletCharacter kronecker_character(long discriminant);

/// B_{n,chi} = f^(n-1) sum_{a=1}^{f} chi(a) B_n(a/f), for n >= 1.
Rational generalized_bernoulli(unsigned n, DirichletCharacter const& chi);

} // namespace hypvol

#endif /* HYPVOL_BERNOULLI_HPP_ */
