#include "lfc/counting.hpp"

#include "lfc/errors.hpp"

namespace lfc {

Int count_tame_totally_ramified(const LocalField& F, unsigned d)
{
    if (d == 0) throw InvalidArgument("degree must be >= 1");
    if (d % F.p() == 0)
        throw Unsupported("degree " + std::to_string(d) + " is wild for p=" + std::to_string(F.p()));
    return Int(d);
}

Int krasner_cubic_p3(const LocalField& F)
{
    if (F.p() != 3) throw Unsupported("cubic Krasner count is instantiated for p=3 only");
    const Int& q = F.q();
    Int geometric = 0;
    for (unsigned a = 0; a < F.e(); ++a) geometric += ipow(q, a);
    return 3 * F.q_pow_e() + 6 * (q - 1) * geometric + 1;
}

Int krasner_quartic_p2(const LocalField& F)
{
    if (F.p() != 2) throw Unsupported("quartic Krasner count is instantiated for p=2 only");
    const Int Q = F.q_pow_e();
    return 16 * Q * Q * Q - 4 * Q * Q - 5;
}

Int tame_degree_sum(const LocalField& F, unsigned n)
{
    Int total = 0;
    for (unsigned f2 = 1; f2 <= n; ++f2) {
        if (n % f2 != 0) continue;
        const unsigned e2 = n / f2;
        if (e2 % F.p() == 0) continue;
        // exactly one unramified extension of each degree in the closure
        total += count_tame_totally_ramified(unramified_extension(F, f2), e2);
    }
    return total;
}

DegreeCount count_subfields_degree(const LocalField& F, unsigned n)
{
    DegreeCount out{n, 0};
    switch (n) {
    case 2:
        out.subfield_count = unit_quotient(F, 2).order() - 1;
        break;
    case 3:
        out.subfield_count = F.p() == 3 ? krasner_cubic_p3(F) : tame_degree_sum(F, 3);
        break;
    case 4:
        // For odd p the wild part is empty: every quartic is tame.
        out.subfield_count = F.p() == 2 ? krasner_quartic_p2(F) : tame_degree_sum(F, 4);
        break;
    default:
        throw Unsupported("subfield counts are implemented for degrees 2, 3, 4 only");
    }
    if (out.subfield_count < 1) throw InvariantViolation("empty degree count");
    return out;
}

Int count_cyclic_cubic(const LocalField& F)
{
    unsigned rank = 0;
    const AbelianShape shape = unit_quotient(F, 3);
    for (const Int& c : shape.factors())
        if (mpz_divisible_ui_p(c.get_mpz_t(), 3)) ++rank;
    return exact_div(ipow(3, rank) - 1, 2, "cyclic cubic count");
}

QuarticTorsion quartic_torsion(const LocalField& F)
{
    const AbelianShape shape = unit_quotient(F, 4);
    QuarticTorsion t;
    t.t1 = count_order_dividing(shape, 2);
    t.t2 = count_order_dividing(shape, 4) - t.t1;
    return t;
}

AbelianCount count_abelian_quartic(const LocalField& F)
{
    const QuarticTorsion t = quartic_torsion(F);
    AbelianCount out;
    out.c2 = unit_quotient(F, 2).order() - 1;
    out.c3 = count_cyclic_cubic(F);
    out.c4 = exact_div(t.t2, 2, "cyclic quartic count t2/2");
    out.v4 = exact_div((t.t1 - 1) * (t.t1 - 2), 6, "Klein four count (t1-1)(t1-2)/6");
    return out;
}

}  // namespace lfc
