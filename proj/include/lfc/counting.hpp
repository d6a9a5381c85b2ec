#pragma once

#include "lfc/bigint.hpp"
#include "lfc/field_model.hpp"

namespace lfc {

// Convention used everywhere: degree-n counts are subfields of one fixed
// algebraic closure with conjugate fields counted separately; counts of
// Galois extensions with a given group count each extension once.

struct DegreeCount {
    unsigned degree = 0;
    Int subfield_count;
};

struct AbelianCount {
    Int c2;
    Int c3;
    Int c4;
    Int v4;
    Int ab4_total() const { return c4 + v4; }
};

// Totally ramified degree-d subfields, d prime to p: exactly d of them.
// Throws Unsupported when p | d.
Int count_tame_totally_ramified(const LocalField& F, unsigned d);

// Krasner's count of cubic subfields for p = 3, in its summed form
// 3q^e + 6(q-1) sum_{a<e} q^a + 1.
Int krasner_cubic_p3(const LocalField& F);

// Krasner's count of quartic subfields for p = 2: 16q^{3e} - 4q^{2e} - 5.
Int krasner_quartic_p2(const LocalField& F);

// Sum over e'f' = n, p not dividing e', of the tame totally ramified
// degree-e' count over the unramified subextension of degree f'.
Int tame_degree_sum(const LocalField& F, unsigned n);

// |M(n)| for n in {2,3,4}.
DegreeCount count_subfields_degree(const LocalField& F, unsigned n);

// Cyclic cubic extensions = index-3 subgroups of F*/(F*)^3 = (3^r - 1)/2,
// r the 3-rank of that quotient.
Int count_cyclic_cubic(const LocalField& F);

// t1 = #{x : x^2 = 1} and t2 = #{x of order 4} in F*/(F*)^4.
struct QuarticTorsion {
    Int t1;
    Int t2;
};
QuarticTorsion quartic_torsion(const LocalField& F);

// C2, C3, C4 and V4 extension counts by duality with F*/(F*)^n:
// c4 = t2/2 and v4 = (t1-1)(t1-2)/6, both required to be exact.
AbelianCount count_abelian_quartic(const LocalField& F);

}  // namespace lfc
