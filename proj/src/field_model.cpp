#include "lfc/field_model.hpp"

#include "lfc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace lfc {

namespace {

// l in {2,3,4}, or coprime to p.
void require_supported_level(unsigned long p, unsigned long l)
{
    if (l == 0) throw InvalidArgument("roots-of-unity level must be positive");
    if (l % p != 0) return;
    if (l == 2 || l == 3 || l == 4) return;
    throw Unsupported("level " + std::to_string(l) + " needs p-power roots of unity deeper than " +
                      "tracked for p=" + std::to_string(p));
}

// v_p(#mu_{p^infty}(F)), truncated at the tracked depth.
unsigned p_power_root_depth(const LocalField& F)
{
    if (F.p() == 2) return F.has_mu_4() ? 2 : 1;
    return F.has_mu_p() ? 1 : 0;
}

std::vector<Int> primary_parts(const Int& n)
{
    std::vector<Int> out;
    Int rest = n;
    for (unsigned long d = 2; Int(d) * d <= rest; ++d) {
        Int part = 1;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            rest /= d;
            part *= d;
        }
        if (part > 1) out.push_back(part);
    }
    if (rest > 1) out.push_back(rest);
    return out;
}

}  // namespace

std::string LocalField::descriptor() const
{
    std::ostringstream os;
    os << p_ << ',' << e_ << ',' << f_ << ',' << (p_ != 2 && has_mu_p_ ? '+' : '-') << ','
       << (p_ == 2 && has_mu_4_ ? '+' : '-');
    return os.str();
}

LocalField make_field(unsigned long p, unsigned e, unsigned f, bool has_mu_p, bool has_mu_4)
{
    if (!is_prime(Int(p))) throw InvalidArgument("p=" + std::to_string(p) + " is not prime");
    if (e == 0) throw InvalidArgument("ramification index e must be >= 1");
    if (f == 0) throw InvalidArgument("residue degree f must be >= 1");
    if (p == 2) {
        if (has_mu_4 && e % 2 != 0)
            throw InvalidArgument("mu_4 in F needs even e for p=2 (Q_2(i) is ramified)");
        has_mu_p = true;
    } else {
        if (has_mu_4)
            throw InvalidArgument("mu_4 flag is only stored for p=2; for odd p it follows from q");
        if (has_mu_p && e % (p - 1) != 0)
            throw InvalidArgument("mu_p in F needs (p-1) | e, got p=" + std::to_string(p) +
                                  " e=" + std::to_string(e));
    }
    LocalField F;
    F.p_ = p;
    F.e_ = e;
    F.f_ = f;
    F.has_mu_p_ = has_mu_p;
    F.has_mu_4_ = has_mu_4;
    F.q_ = ipow(Int(p), f);
    return F;
}

LocalField unramified_extension(const LocalField& F, unsigned degree)
{
    return make_field(F.p(), F.e(), F.f() * degree, F.has_mu_p(), F.has_mu_4());
}

Int count_roots_of_unity(const LocalField& F, unsigned long n)
{
    require_supported_level(F.p(), n);
    Int N(n);
    return gcd(N, F.q() - 1) * gcd(ipow(Int(F.p()), p_power_root_depth(F)), N);
}

bool contains_mu(const LocalField& F, unsigned long l)
{
    return count_roots_of_unity(F, l) == l;
}

AbelianShape::AbelianShape(const std::vector<Int>& cyclic_orders)
{
    for (const Int& c : cyclic_orders) {
        if (c <= 0) throw InvalidArgument("cyclic order must be positive");
        for (Int& part : primary_parts(c)) {
            order_ *= part;
            factors_.push_back(std::move(part));
        }
    }
    std::sort(factors_.begin(), factors_.end(), [](const Int& a, const Int& b) { return a > b; });
}

std::string AbelianShape::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += ',';
        s += factors_[i].get_str();
    }
    return s + "]";
}

AbelianShape unit_quotient(const LocalField& F, unsigned long n)
{
    require_supported_level(F.p(), n);
    const Int N(n);
    const Int P(F.p());
    std::vector<Int> cyclic;
    cyclic.push_back(N);                                      // <pi>
    cyclic.push_back(gcd(N, F.q() - 1));                      // mu_{q-1}
    cyclic.push_back(gcd(ipow(P, p_power_root_depth(F)), N)); // mu_{p^a}
    const Int p_part = ipow(P, valuation(N, P));              // Z_p^m / n Z_p^m
    for (unsigned i = 0; i < F.m(); ++i) cyclic.push_back(p_part);
    return AbelianShape(cyclic);
}

Int count_order_dividing(const AbelianShape& shape, const Int& k)
{
    if (k < 1) throw InvalidArgument("exponent k must be >= 1");
    Int r = 1;
    for (const Int& c : shape.factors()) r *= gcd(c, k);
    return r;
}

}  // namespace lfc
