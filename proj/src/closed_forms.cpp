#include "lfc/closed_forms.hpp"

#include "lfc/counting.hpp"
#include "lfc/errors.hpp"

namespace lfc::closed_forms {

namespace {

void require_p2(const LocalField& F, const char* what)
{
    if (F.p() != 2) throw Unsupported(std::string(what) + " is defined for p=2 only");
}

bool s4_exceptional_branch(const LocalField& F)
{
    return !contains_mu(F, 4) && F.m() % 2 == 0 && F.f() == 1;
}

}  // namespace

Int nu_s3(const LocalField& F)
{
    const bool mu3 = contains_mu(F, 3);
    if (F.p() != 3) return mu3 ? 0 : 1;
    const unsigned m = F.m();
    if (mu3) return ipow(3, m + 1) - 3;
    const Rational v = Rational(ipow(3, m)) + frac(ipow(3, m + 1), 2) - frac(3, 2);
    return to_integer(v, "nu(F,S3) for p=3 without mu_3");
}

Int nu_s3_reduced_form(const LocalField& F)
{
    if (F.p() != 3) throw Unsupported("reduced S3 form is defined for p=3 only");
    return exact_div(5 * F.q_pow_e() - 3, 2, "(5q^e-3)/2");
}

Int nu_a4(const LocalField& F)
{
    if (F.p() != 2) return 0;
    const Int base = ipow(2, 2 * F.m()) - 1;
    return contains_mu(F, 3) ? exact_div(4 * base, 3, "4(2^{2m}-1)/3")
                             : exact_div(base, 3, "(2^{2m}-1)/3");
}

Int nu_s4(const LocalField& F)
{
    if (F.p() != 2) return 0;
    if (contains_mu(F, 3)) return 0;
    if (s4_exceptional_branch(F)) return ipow(2, 2 * F.m() + 1) - 1;
    return ipow(2, 2 * F.m()) - 1;
}

Int nu_s4_fiber_branch(const LocalField& F)
{
    require_p2(F, "the S4 fiber branch");
    const Int Q2 = ipow(F.q_pow_e(), 2);
    const Int head = s4_exceptional_branch(F) ? exact_div(7 * Q2 - 4, 3, "(7q^{2e}-4)/3")
                                              : exact_div(4 * (Q2 - 1), 3, "4(q^{2e}-1)/3");
    return head - nu_a4(F);
}

Int abelian_quartic_closed_form(const LocalField& F)
{
    require_p2(F, "the |Ab(4)| closed form");
    const Int Q = F.q_pow_e();
    const Int lead = contains_mu(F, 4) ? 32 : 20;
    return to_integer(frac(lead * Q * Q, 3) - 4 * Q + frac(1, 3), "|Ab(4)| closed form");
}

bool d8_first_branch(const LocalField& F)
{
    return contains_mu(F, 4) || s4_exceptional_branch(F);
}

Int yamagishi_d8(const LocalField& F)
{
    require_p2(F, "the D8 count");
    const Int Q = F.q_pow_e();
    if (d8_first_branch(F)) return Q * (Q - 1) * (4 * Q - 1);
    return Q * (2 * Q - 1) * (2 * Q - 1);
}

Int safarevic_count(const LocalField& F, const Int& order, unsigned d, const Int& aut_order)
{
    const Int p(F.p());
    if (order < p || ipow(p, valuation(order, p)) != order)
        throw InvalidArgument("group order " + order.get_str() + " is not a power of p=" + p.get_str());
    if (d < 1) throw InvalidArgument("d must be >= 1");
    if (aut_order < 1) throw InvalidArgument("|Aut(G)| must be >= 1");
    if (F.has_mu_p())
        throw Unsupported("p-group count needs mu_p outside F (p=" + p.get_str() + ")");
    const unsigned m = F.m();
    const Int scale = exact_div(order, ipow(p, d), "|G|/p^d");
    const Int top = ipow(p, m + 1);
    Int product = 1;
    for (unsigned i = 0; i < d; ++i) product *= top - ipow(p, i);
    return exact_div(ipow(scale, m + 1) * product, aut_order, "p-group count / |Aut(G)|");
}

Int nu(const LocalField& F, const GroupQuery& G)
{
    using K = GroupQuery::Kind;
    switch (G.kind) {
    case K::S3: return nu_s3(F);
    case K::A4: return nu_a4(F);
    case K::S4: return nu_s4(F);
    case K::D8: return yamagishi_d8(F);
    case K::Symmetric:
    case K::Alternating: return 0;
    case K::C2: return unit_quotient(F, 2).order() - 1;
    case K::C3:
        if (F.p() == 3 && contains_mu(F, 3)) return 4;
        return count_cyclic_cubic(F);
    case K::PGroup: return safarevic_count(F, G.order, G.generators, G.aut_order);
    case K::C4:
    case K::V4:
    case K::A4xC2: break;
    }
    throw Unsupported("no closed form for " + G.name());
}

}  // namespace lfc::closed_forms
