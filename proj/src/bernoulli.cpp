#include "hypvol/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

namespace hypvol {

namespace {

struct BernoulliCache {
    std::mutex lock;
    std::vector<Rational> values{Rational(1), Rational(-1, 2)};
};

BernoulliCache& cache()
{
    static BernoulliCache c;
    return c;
}

} // namespace

Rational bernoulli(unsigned n)
{
    auto& c = cache();
    std::lock_guard<std::mutex> guard(c.lock);
    auto& B = c.values;
    while (B.size() <= n) {
        unsigned m = static_cast<unsigned>(B.size());
        if (m % 2 == 1) {
            B.emplace_back(0);
            continue;
        }
        // sum_{k=0}^{m} binom(m+1, k) B_k = 0, odd k >= 3 vanish
        Rational s = Rational(1) + Rational(binomial(m + 1, 1)) * B[1];
        for (unsigned k = 2; k < m; k += 2)
            s += Rational(binomial(m + 1, k)) * B[k];
        B.push_back(-s / Rational(m + 1));
    }
    return B[n];
}

std::vector<Rational> bernoulli_polynomial(unsigned n)
{
    std::vector<Rational> c(n + 1);
    for (unsigned k = 0; k <= n; ++k)
        c[n - k] = Rational(binomial(n, k)) * bernoulli(k);
    return c;
}

Rational evaluate_polynomial(std::vector<Rational> const& coefficients, Rational const& x)
{
    Rational acc;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

DirichletCharacter::DirichletCharacter(std::vector<int> values_by_residue)
    : values_(std::move(values_by_residue))
{
}

DirichletCharacter DirichletCharacter::trivial()
{
    return DirichletCharacter({1});
}

int DirichletCharacter::operator()(long a) const
{
    long f = modulus();
    long r = a % f;
    if (r < 0)
        r += f;
    return values_[static_cast<std::size_t>(r)];
}

std::vector<int> DirichletCharacter::table() const
{
    std::vector<int> t;
    for (long a = 1; a <= modulus(); ++a)
        t.push_back((*this)(a));
    return t;
}

DirichletCharacter kronecker_character(long discriminant)
{
    switch (discriminant) {
    case 5:
        return DirichletCharacter({0, 1, -1, -1, 1});
    case -3:
        return DirichletCharacter({0, 1, -1});
    default:
        throw std::invalid_argument("unsupported discriminant " + std::to_string(discriminant));
    }
}

Rational generalized_bernoulli(unsigned n, DirichletCharacter const& chi)
{
    if (n == 0)
        throw std::invalid_argument("generalized_bernoulli needs n >= 1");
    long f = chi.modulus();
    auto poly = bernoulli_polynomial(n);
    Rational s;
    for (long a = 1; a <= f; ++a) {
        int c = chi(a);
        if (c != 0)
            s += Rational(c) * evaluate_polynomial(poly, Rational(a, f));
    }
    return s * pow(Rational(f), static_cast<long>(n) - 1);
}

} // namespace hypvol
