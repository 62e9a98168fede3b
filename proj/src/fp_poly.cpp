#include "fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypvol::detail {

PrimeField::PrimeField(std::uint64_t p)
    : p_(p)
{
    if (p < 2 || p >= (std::uint64_t(1) << 32))
        throw std::invalid_argument("prime out of supported range");
}

std::uint64_t PrimeField::inv(std::uint64_t a) const
{
    if (a % p_ == 0)
        throw std::domain_error("inverse of zero in F_p");
    std::uint64_t r = 1, b = a % p_, e = p_ - 2;
    while (e) {
        if (e & 1)
            r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

void PrimeField::trim(FpPoly& f) const
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

FpPoly PrimeField::sub(FpPoly const& a, FpPoly const& b) const
{
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

FpPoly PrimeField::mul(FpPoly const& a, FpPoly const& b) const
{
    if (a.empty() || b.empty())
        return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = add(r[i + j], mul(a[i], b[j]));
    trim(r);
    return r;
}

void PrimeField::divmod(FpPoly const& a, FpPoly const& b, FpPoly& q, FpPoly& r) const
{
    if (b.empty())
        throw std::domain_error("polynomial division by zero");
    r = a;
    trim(r);
    int db = degree(b);
    if (degree(r) < db) {
        q.clear();
        return;
    }
    q.assign(static_cast<std::size_t>(degree(r) - db + 1), 0);
    std::uint64_t lead_inv = inv(b.back());
    while (degree(r) >= db) {
        int shift = degree(r) - db;
        std::uint64_t c = mul(r.back(), lead_inv);
        q[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= db; ++i) {
            auto k = static_cast<std::size_t>(i + shift);
            r[k] = sub(r[k], mul(c, b[static_cast<std::size_t>(i)]));
        }
        trim(r);
    }
    trim(q);
}

FpPoly PrimeField::div(FpPoly const& a, FpPoly const& b) const
{
    FpPoly q, r;
    divmod(a, b, q, r);
    return q;
}

FpPoly PrimeField::mod(FpPoly const& a, FpPoly const& b) const
{
    FpPoly q, r;
    divmod(a, b, q, r);
    return r;
}

FpPoly PrimeField::monic(FpPoly f) const
{
    trim(f);
    if (f.empty())
        return f;
    std::uint64_t c = inv(f.back());
    for (auto& x : f)
        x = mul(x, c);
    return f;
}

FpPoly PrimeField::gcd(FpPoly a, FpPoly b) const
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

FpPoly PrimeField::derivative(FpPoly const& f) const
{
    FpPoly d;
    for (std::size_t i = 1; i < f.size(); ++i)
        d.push_back(mul(f[i], i % p_));
    trim(d);
    return d;
}

FpPoly PrimeField::powmod(FpPoly base, std::uint64_t e, FpPoly const& m) const
{
    FpPoly r = mod(FpPoly{1}, m);
    base = mod(base, m);
    while (e) {
        if (e & 1)
            r = mod(mul(r, base), m);
        e >>= 1;
        if (e)
            base = mod(mul(base, base), m);
    }
    return r;
}

FpPoly PrimeField::pth_root(FpPoly const& f) const
{
    // a^p = a on F_p, so only the exponents get divided
    FpPoly g;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0)
            continue;
        if (i % p_ != 0)
            throw std::logic_error("pth_root of a polynomial that is not a p-th power");
        std::size_t k = i / p_;
        if (g.size() <= k)
            g.resize(k + 1, 0);
        g[k] = f[i];
    }
    return g;
}

} // namespace hypvol::detail
