#ifndef HYPVOL_FP_POLY_HPP_
#define HYPVOL_FP_POLY_HPP_

#include <cstdint>
#include <vector>

namespace hypvol::detail {

/// Polynomial over F_p, ascending coefficients, no trailing zeros.
/// The zero polynomial is the empty vector.
using FpPoly = std::vector<std::uint64_t>;

class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
    std::uint64_t inv(std::uint64_t a) const;

    int degree(FpPoly const& f) const { return static_cast<int>(f.size()) - 1; }
    void trim(FpPoly& f) const;
    FpPoly sub(FpPoly const& a, FpPoly const& b) const;
    FpPoly mul(FpPoly const& a, FpPoly const& b) const;
    /// a = q * b + r; b must be nonzero.
    void divmod(FpPoly const& a, FpPoly const& b, FpPoly& q, FpPoly& r) const;
    FpPoly div(FpPoly const& a, FpPoly const& b) const;
    FpPoly mod(FpPoly const& a, FpPoly const& b) const;
    FpPoly monic(FpPoly f) const;
    /// Monic gcd (zero if both inputs are zero).
    FpPoly gcd(FpPoly a, FpPoly b) const;
    FpPoly derivative(FpPoly const& f) const;
    FpPoly powmod(FpPoly base, std::uint64_t e, FpPoly const& m) const;
    /// g with g(x)^p = f(x); f must have only exponents divisible by p.
    FpPoly pth_root(FpPoly const& f) const;

private:
    std::uint64_t p_;
};

} // namespace hypvol::detail

#endif /* HYPVOL_FP_POLY_HPP_ */
