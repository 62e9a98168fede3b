#include "hypvol/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "fp_poly.hpp"

namespace hypvol {

using detail::FpPoly;
using detail::PrimeField;

IntPoly make_poly(std::initializer_list<long> ascending)
{
    IntPoly f;
    for (long c : ascending)
        f.emplace_back(c);
    return f;
}

int degree(IntPoly const& f)
{
    int d = static_cast<int>(f.size()) - 1;
    while (d >= 0 && f[static_cast<std::size_t>(d)] == 0)
        --d;
    return d;
}

std::string to_string(IntPoly const& f)
{
    std::string s;
    for (int i = degree(f); i >= 0; --i) {
        Integer const& c = f[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        Integer a = abs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (a != 1 || i == 0)
            s += a.get_str();
        if (i >= 1)
            s += "x";
        if (i >= 2)
            s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

namespace {

// Bareiss fraction-free elimination.
Integer determinant(std::vector<std::vector<Integer>> m)
{
    std::size_t n = m.size();
    if (n == 0)
        return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0)
                ++r;
            if (r == n)
                return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

Integer resultant(IntPoly const& f, IntPoly const& g)
{
    int n = degree(f), m = degree(g);
    if (n < 0 || m < 0)
        return 0;
    std::size_t size = static_cast<std::size_t>(n + m);
    if (size == 0)
        return 1;
    std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
    // rows hold descending coefficients, shifted
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f[static_cast<std::size_t>(n - i)];
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i)
            s[static_cast<std::size_t>(m + r)][static_cast<std::size_t>(r + i)] = g[static_cast<std::size_t>(m - i)];
    return determinant(std::move(s));
}

Integer poly_discriminant(IntPoly const& f)
{
    int n = degree(f);
    if (n < 2)
        throw std::invalid_argument("poly_discriminant needs degree >= 2");
    IntPoly df;
    for (int i = 1; i <= n; ++i)
        df.push_back(f[static_cast<std::size_t>(i)] * i);
    Integer res = resultant(f, df);
    Integer lc = f[static_cast<std::size_t>(n)];
    Integer d;
    mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), lc.get_mpz_t());
    if ((n * (n - 1) / 2) % 2 == 1)
        d = -d;
    return d;
}

namespace {

void squarefree_parts(PrimeField const& F, FpPoly f, int scale,
                      std::vector<std::pair<FpPoly, int>>& out)
{
    FpPoly df = F.derivative(f);
    if (df.empty()) {
        squarefree_parts(F, F.pth_root(f), scale * static_cast<int>(F.p()), out);
        return;
    }
    FpPoly c = F.gcd(f, df);
    FpPoly w = F.div(f, c);
    int i = 1;
    while (F.degree(w) > 0) {
        FpPoly y = F.gcd(w, c);
        FpPoly z = F.div(w, y);
        if (F.degree(z) > 0)
            out.emplace_back(F.monic(z), i * scale);
        ++i;
        w = std::move(y);
        c = F.div(c, w);
    }
    if (F.degree(c) > 0)
        squarefree_parts(F, F.pth_root(c), scale * static_cast<int>(F.p()), out);
}

void distinct_degree(PrimeField const& F, FpPoly f, int multiplicity,
                     std::vector<FactorDegree>& out)
{
    FpPoly const x{0, 1};
    FpPoly h = F.mod(x, f);
    for (int d = 1; F.degree(f) >= 2 * d; ++d) {
        h = F.powmod(h, F.p(), f);
        FpPoly g = F.gcd(f, F.sub(h, x));
        if (F.degree(g) > 0) {
            for (int k = 0; k < F.degree(g) / d; ++k)
                out.push_back({d, multiplicity});
            f = F.div(f, g);
            h = F.mod(h, f);
        }
    }
    if (F.degree(f) > 0)
        out.push_back({F.degree(f), multiplicity});
}

} // namespace

std::vector<FactorDegree> factor_degrees_mod_p(IntPoly const& f, std::uint64_t p)
{
    PrimeField F(p);
    FpPoly fp;
    for (Integer const& c : f) {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
        fp.push_back(r.get_ui());
    }
    F.trim(fp);
    if (F.degree(fp) != degree(f) || F.degree(fp) < 1)
        throw std::invalid_argument("polynomial degree drops modulo p");
    fp = F.monic(fp);

    std::vector<std::pair<FpPoly, int>> parts;
    squarefree_parts(F, fp, 1, parts);
    std::vector<FactorDegree> out;
    for (auto& [g, m] : parts)
        distinct_degree(F, g, m, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hypvol
