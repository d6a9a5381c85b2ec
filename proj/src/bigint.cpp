#include "lfc/bigint.hpp"

#include "lfc/errors.hpp"

namespace lfc {

Int ipow(const Int& base, std::uint64_t exponent)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational frac(const Int& num, const Int& den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Int exact_div(const Int& num, const Int& den, std::string_view what)
{
    if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw InvariantViolation("inexact division in " + std::string(what) + ": " + num.get_str() +
                                 " / " + den.get_str());
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Int to_integer(const Rational& r, std::string_view what)
{
    Rational c = r;
    c.canonicalize();
    if (c.get_den() != 1) {
        throw InvariantViolation("non-integral value in " + std::string(what) + ": " + c.get_str());
    }
    return c.get_num();
}

Int gcd(const Int& a, const Int& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool is_prime(const Int& n)
{
    if (n < 2) return false;
    if (n < Int("4294967296")) {
        unsigned long v = n.get_ui();
        for (unsigned long d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return true;
    }
    // mpz_probab_prime_p runs BPSW first; 2 means proven prime.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

unsigned valuation(const Int& n, const Int& p)
{
    if (n == 0) throw InvariantViolation("valuation of zero");
    unsigned v = 0;
    Int m = n;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

}  // namespace lfc
