#pragma once

#include "lfc/bigint.hpp"
#include "lfc/field_model.hpp"
#include "lfc/group_query.hpp"

namespace lfc::closed_forms {

// Closed-form values for nu(F, G), the number of Galois extensions
// of F with group G. Each formula is evaluated literally, branch by branch, and is
// kept separate from the derivations in census.hpp so the two can be compared.

// S3: p != 3 gives 0 or 1 by whether mu_3 is in F; p = 3 gives 3^{m+1} - 3
// with mu_3 and 3^m + 3^{m+1}/2 - 3/2 without.
Int nu_s3(const LocalField& F);

// Same p = 3, mu_3-free value in its reduced form (5 q^e - 3) / 2.
Int nu_s3_reduced_form(const LocalField& F);

// A4: 0 for p >= 3; for p = 2, 4(2^{2m}-1)/3 with mu_3 and (2^{2m}-1)/3 without.
Int nu_a4(const LocalField& F);

// S4: 0 for p >= 3; for p = 2 the three-way table keyed on mu_3, mu_4, the
// parity of m and f = 1.
Int nu_s4(const LocalField& F);

// The intermediate S4 values obtained from the degree-4 fiber identity
// before substituting nu(A4): 4(q^{2e}-1)/3 - nu(A4), or (7q^{2e}-4)/3 - nu(A4)
// when mu_4 is absent, m is even and f = 1. p = 2 only.
Int nu_s4_fiber_branch(const LocalField& F);

// Closed forms of |Ab(4)| for p = 2: 20q^{2e}/3 - 4q^e + 1/3 without mu_4,
// 32q^{2e}/3 - 4q^e + 1/3 with it.
Int abelian_quartic_closed_form(const LocalField& F);

// True on the first branch of the D8 count: mu_4 in F, or mu_4 not in F with
// m even and f = 1.
bool d8_first_branch(const LocalField& F);

// D8 count for p = 2: q^e(q^e-1)(4q^e-1) on the first branch, q^e(2q^e-1)^2
// otherwise. Throws Unsupported for odd p.
Int yamagishi_d8(const LocalField& F);

// Count of G-extensions for a p-group G when mu_p is not in F:
//   (1/|Aut G|) (|G|/p^d)^{m+1} prod_{i=0}^{d-1} (p^{m+1} - p^i).
// The product starts at i = 0; the i = 0 factor is what makes d = 1 give the
// familiar (p^{m+1}-1)/(p-1).
Int safarevic_count(const LocalField& F, const Int& order, unsigned d, const Int& aut_order);

// Dispatch over the supported groups. C2 is |F*/(F*)^2| - 1; C3 is the
// class-field count except for p = 3 with mu_3 in F, where the tabulated
// value 4 is returned. Sn, An (n >= 5) are 0. PGroup goes to safarevic_count.
// Throws Unsupported for C4, V4 and A4xC2, which have no closed form here.
Int nu(const LocalField& F, const GroupQuery& G);

}  // namespace lfc::closed_forms
