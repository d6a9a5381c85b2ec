#include "lfc/census.hpp"

#include "lfc/closed_forms.hpp"
#include "lfc/counting.hpp"
#include "lfc/errors.hpp"
#include "lfc/perm_groups.hpp"

#include <algorithm>
#include <future>

namespace lfc::census {

namespace {

using groups::Tag;
using K = GroupQuery::Kind;

void note(std::vector<Note>* notes, std::string name, const Int& v)
{
    if (notes) notes->push_back(Note{std::move(name), v});
}

// exact_div with the derivation trace in the error message
Int traced_div(const Int& num, const Int& den, const std::string& what, const std::vector<Note>& trace)
{
    try {
        return exact_div(num, den, what);
    } catch (const InvariantViolation& e) {
        std::string msg = e.what();
        for (const auto& n : trace) msg += "; " + n.name + "=" + n.value.get_str();
        throw InvariantViolation(msg);
    }
}

Int nu_s3(const LocalField& F, const FiberTable& fb, std::vector<Note>* notes)
{
    std::vector<Note> local;
    const Int m3 = count_subfields_degree(F, 3).subfield_count;
    const Int ab3 = count_cyclic_cubic(F);
    local = {{"|M(3)|", m3}, {"|Ab(3)|", ab3}, {"fiber(S3)", fb.s3}};
    if (notes) notes->insert(notes->end(), local.begin(), local.end());
    return traced_div(m3 - ab3, fb.s3, "(|M(3)|-|Ab(3)|)/fiber(S3)", local);
}

Int nu_a4(const LocalField& F, const FiberTable& fb, std::vector<Note>* notes)
{
    if (F.p() != 2) {
        if (!fb.odd_p_obstruction)
            throw InvariantViolation("A4 obstruction for odd p not confirmed by the group engine");
        return 0;
    }
    // Each A4 or A4xC2 extension with cubic subfield F' contributes one
    // Gal(F'/F)-orbit of size 3 in (F'*/(F'*)^2) \ (F*/(F*)^2).
    const Int c = cubic_subextension_count(F);
    const Int sq = unit_quotient(F, 2).order();
    const Int sq_cubic = unit_quotient(unramified_extension(F, 3), 2).order();
    std::vector<Note> local{{"c_F'", c}, {"|F*/(F*)^2|", sq}, {"|F'*/(F'*)^2|", sq_cubic}};
    if (notes) notes->insert(notes->end(), local.begin(), local.end());
    // 3 nu + 3 nu (sq - 1) = c (sq_cubic - sq)
    return traced_div(c * (sq_cubic - sq), 3 * sq, "A4 balance inversion", local);
}

Int nu_d8(const LocalField& F, const FiberTable& fb, std::vector<Note>* notes)
{
    if (F.p() == 2) {
        const Int v = closed_forms::yamagishi_d8(F);
        note(notes, "nu(D8) [2-group count]", v);
        return v;
    }
    // A4 and S4 vanish for odd p, so every non-abelian quartic has D8 closure.
    const Int m4 = count_subfields_degree(F, 4).subfield_count;
    const Int ab4 = count_abelian_quartic(F).ab4_total();
    std::vector<Note> local{{"|M(4)|", m4}, {"|Ab(4)|", ab4}, {"fiber(D8)", fb.d8}};
    if (notes) notes->insert(notes->end(), local.begin(), local.end());
    return traced_div(m4 - ab4, fb.d8, "(|M(4)|-|Ab(4)|)/fiber(D8)", local);
}

Int nu_s4(const LocalField& F, const FiberTable& fb, std::vector<Note>* notes)
{
    if (F.p() != 2) {
        if (!fb.odd_p_obstruction)
            throw InvariantViolation("S4 obstruction for odd p not confirmed by the group engine");
        return 0;
    }
    const Int m4 = count_subfields_degree(F, 4).subfield_count;
    const QuarticTorsion t = quartic_torsion(F);
    const Int ab4 = count_abelian_quartic(F).ab4_total();
    const Int d8 = nu_d8(F, fb, nullptr);
    const Int a4 = nu_a4(F, fb, nullptr);
    std::vector<Note> local{{"|M(4)|", m4},       {"t1", t.t1},           {"t2", t.t2},
                            {"|Ab(4)|", ab4},     {"nu(D8)", d8},         {"nu(A4)", a4},
                            {"fiber(D8)", fb.d8}, {"fiber(A4)", fb.a4},   {"fiber(S4)", fb.s4}};
    if (notes) notes->insert(notes->end(), local.begin(), local.end());
    return traced_div(m4 - ab4 - fb.d8 * d8 - fb.a4 * a4, fb.s4,
                      "(|M(4)|-|Ab(4)|-f_D8 nu(D8)-f_A4 nu(A4))/fiber(S4)", local);
}

}  // namespace

FiberTable fibers_from_groups()
{
    const auto s3 = groups::symmetric(3);
    const auto d8 = groups::dihedral8();
    const auto a4 = groups::alternating(4);
    const auto s4 = groups::symmetric(4);

    FiberTable t;
    t.s3 = static_cast<unsigned long>(groups::count_nonnormal_iso(s3, Tag::C2));
    t.d8 = static_cast<unsigned long>(groups::count_nonnormal_iso(d8, Tag::C2));
    t.a4 = static_cast<unsigned long>(groups::count_nonnormal_iso(a4, Tag::C3));
    t.s4 = static_cast<unsigned long>(groups::count_nonnormal_iso(s4, Tag::S3));
    t.s3_classes = static_cast<unsigned long>(groups::conj_classes_nonnormal_iso(s3, Tag::C2));
    t.d8_classes = static_cast<unsigned long>(groups::conj_classes_nonnormal_iso(d8, Tag::C2));
    t.a4_classes = static_cast<unsigned long>(groups::conj_classes_nonnormal_iso(a4, Tag::C3));
    t.s4_classes = static_cast<unsigned long>(groups::conj_classes_nonnormal_iso(s4, Tag::S3));

    const auto facts = groups::structural_facts();
    t.odd_p_obstruction =
        facts.s4_no_cyclic_normal_with_cyclic_quotient && facts.a4_no_cyclic_normal_with_cyclic_quotient;
    t.large_groups_unsolvable = !groups::is_solvable(groups::alternating(5));
    return t;
}

const FiberTable& default_fibers()
{
    static const FiberTable table = fibers_from_groups();
    return table;
}

Int cubic_subextension_count(const LocalField& F)
{
    if (F.p() != 2) throw Unsupported("cubic subextension count is used for p=2 only");
    const Int c = count_cyclic_cubic(F);
    if (c != 1 && c != 4) throw InvariantViolation("p=2 field with " + c.get_str() + " cyclic cubics");
    return c;
}

Int nu_oracle(const LocalField& F, const GroupQuery& G, const FiberTable& fibers, std::vector<Note>* notes)
{
    switch (G.kind) {
    case K::C2: {
        const Int v = count_subfields_degree(F, 2).subfield_count;
        note(notes, "|M(2)|", v);
        return v;
    }
    case K::C3: {
        const Int v = count_cyclic_cubic(F);
        note(notes, "3-rank index-3 subgroups", v);
        return v;
    }
    case K::C4:
    case K::V4: {
        const QuarticTorsion t = quartic_torsion(F);
        note(notes, "t1", t.t1);
        note(notes, "t2", t.t2);
        const AbelianCount ab = count_abelian_quartic(F);
        return G.kind == K::C4 ? ab.c4 : ab.v4;
    }
    case K::S3: return nu_s3(F, fibers, notes);
    case K::A4: return nu_a4(F, fibers, notes);
    case K::D8: return nu_d8(F, fibers, notes);
    case K::S4: return nu_s4(F, fibers, notes);
    case K::A4xC2: {
        const Int a4 = nu_a4(F, fibers, notes);
        const Int c2 = count_subfields_degree(F, 2).subfield_count;
        note(notes, "nu(A4)", a4);
        note(notes, "nu(C2)", c2);
        return a4 * c2;
    }
    case K::Symmetric:
    case K::Alternating:
        if (!fibers.large_groups_unsolvable)
            throw InvariantViolation("A5 solvability not refuted by the group engine");
        note(notes, "solvable(A5)", 0);
        return 0;
    case K::PGroup: break;
    }
    throw Unsupported("no oracle derivation for " + G.name());
}

bool a4_balance_check(const LocalField& F, const FiberTable& fibers)
{
    if (F.p() != 2) throw Unsupported("A4 balance relation is defined for p=2 only");
    const Int nu = nu_oracle(F, GroupQuery::of(K::A4), fibers);
    const Int Q = F.q_pow_e();
    const Int nu_a4xc2 = nu * (4 * Q - 1);
    const Int lhs = 3 * nu + 3 * nu_a4xc2;
    const Int rhs = cubic_subextension_count(F) * (4 * Q * Q * Q - 4 * Q);
    return lhs == rhs;
}

Int iso_class_count(const LocalField& F, unsigned n, const FiberTable& fibers)
{
    if (n == 3)
        return count_cyclic_cubic(F) + fibers.s3_classes * nu_oracle(F, GroupQuery::of(K::S3), fibers);
    if (n == 4)
        return count_abelian_quartic(F).ab4_total() +
               fibers.d8_classes * nu_oracle(F, GroupQuery::of(K::D8), fibers) +
               fibers.a4_classes * nu_oracle(F, GroupQuery::of(K::A4), fibers) +
               fibers.s4_classes * nu_oracle(F, GroupQuery::of(K::S4), fibers);
    throw Unsupported("isomorphism-class census is implemented for degrees 3 and 4");
}

std::vector<Note> degree_census(const LocalField& F, unsigned n, const FiberTable& fibers)
{
    std::vector<Note> out;
    if (n == 3) {
        out.push_back({"M(3)", count_subfields_degree(F, 3).subfield_count});
        out.push_back({"Ab(3)", count_cyclic_cubic(F)});
        out.push_back({"nu(S3)", nu_oracle(F, GroupQuery::of(K::S3), fibers)});
        out.push_back({"iso(3)", iso_class_count(F, 3, fibers)});
        return out;
    }
    if (n == 4) {
        const AbelianCount ab = count_abelian_quartic(F);
        out.push_back({"M(4)", count_subfields_degree(F, 4).subfield_count});
        out.push_back({"Ab(4)", ab.ab4_total()});
        out.push_back({"Ab(4):C4", ab.c4});
        out.push_back({"Ab(4):V4", ab.v4});
        out.push_back({"nu(D8)", nu_oracle(F, GroupQuery::of(K::D8), fibers)});
        out.push_back({"nu(A4)", nu_oracle(F, GroupQuery::of(K::A4), fibers)});
        out.push_back({"nu(S4)", nu_oracle(F, GroupQuery::of(K::S4), fibers)});
        out.push_back({"iso(4)", iso_class_count(F, 4, fibers)});
        return out;
    }
    throw Unsupported("census is implemented for degrees 3 and 4");
}

CountReport compare(const LocalField& F, const GroupQuery& G, const FiberTable& fibers)
{
    CountReport r{F, G, closed_forms::nu(F, G), 0, false, {}};
    r.oracle_value = nu_oracle(F, G, fibers, &r.derivation_notes);
    r.agrees = r.paper_value == r.oracle_value;
    return r;
}

bool is_documented_mismatch(const LocalField& F, const GroupQuery& G)
{
    return F.p() == 3 && contains_mu(F, 3) && (G.kind == K::S3 || G.kind == K::C3);
}

std::vector<LocalField> legal_fields(unsigned long p, unsigned e_max, unsigned f_max)
{
    std::vector<LocalField> out;
    for (unsigned e = 1; e <= e_max; ++e) {
        for (unsigned f = 1; f <= f_max; ++f) {
            for (bool flag : {false, true}) {
                try {
                    out.push_back(p == 2 ? make_field(p, e, f, true, flag) : make_field(p, e, f, flag, false));
                } catch (const InvalidArgument&) {
                    if (!flag) throw;   // the flag-free field is always legal
                }
            }
        }
    }
    return out;
}

std::vector<CountReport> sweep(const std::vector<unsigned long>& primes, unsigned e_max, unsigned f_max,
                               std::vector<GroupQuery> groups, const FiberTable& fibers)
{
    std::sort(groups.begin(), groups.end(),
              [](const GroupQuery& a, const GroupQuery& b) { return a.name() < b.name(); });
    std::vector<unsigned long> ps = primes;
    std::sort(ps.begin(), ps.end());

    std::vector<std::future<std::vector<CountReport>>> jobs;
    for (unsigned long p : ps) {
        for (const LocalField& F : legal_fields(p, e_max, f_max)) {
            jobs.push_back(std::async(std::launch::async, [F, &groups, &fibers] {
                std::vector<CountReport> rows;
                for (const auto& G : groups) {
                    try {
                        rows.push_back(compare(F, G, fibers));
                    } catch (const Unsupported&) {
                        // not covered by one of the modes at this point
                    }
                }
                return rows;
            }));
        }
    }
    std::vector<CountReport> out;
    for (auto& j : jobs) {
        auto rows = j.get();
        std::move(rows.begin(), rows.end(), std::back_inserter(out));
    }
    return out;
}

}  // namespace lfc::census
