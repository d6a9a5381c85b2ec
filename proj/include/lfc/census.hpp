#pragma once

#include "lfc/bigint.hpp"
#include "lfc/field_model.hpp"
#include "lfc/group_query.hpp"

#include <string>
#include <vector>

// Independent derivation of nu(F, G) by inverting the Galois-closure fiber
// identities
//     |M(3)| = |Ab(3)| + 3 nu(S3)
//     |M(4)| = |Ab(4)| + 4 nu(D8) + 4 nu(A4) + 4 nu(S4)
// from subfield counts, class-field counts, the D8 count for p = 2 and fiber
// coefficients read off the permutation-group engine. Nothing here consumes
// the closed-form S3/A4/S4 values in closed_forms.hpp.
namespace lfc::census {

// Group-theoretic inputs, computed once by brute force.
struct FiberTable {
    // Fiber sizes of L -> Galois closure: number of non-normal subgroups of
    // G isomorphic to the stabilizer of a root.
    Int s3 = 0;   // (S3, C2)
    Int d8 = 0;   // (D8, C2)
    Int a4 = 0;   // (A4, C3)
    Int s4 = 0;   // (S4, S3)
    // Isomorphism classes of fields per G-extension: conjugacy classes of
    // those subgroups.
    Int s3_classes = 0;
    Int d8_classes = 0;
    Int a4_classes = 0;
    Int s4_classes = 0;
    // For odd p: neither S4 nor A4 has a cyclic normal subgroup with cyclic
    // quotient, so neither can be a tamely ramified Galois group.
    bool odd_p_obstruction = false;
    // A5 (hence every An, Sn with n >= 5) is not solvable.
    bool large_groups_unsolvable = false;
};

FiberTable fibers_from_groups();
// Cached fibers_from_groups(); safe to call concurrently.
const FiberTable& default_fibers();

struct Note {
    std::string name;
    Int value;
    friend bool operator==(const Note&, const Note&) = default;
};

struct CountReport {
    LocalField field;
    GroupQuery group;
    Int paper_value;
    Int oracle_value;
    bool agrees = false;
    std::vector<Note> derivation_notes;
};

// Supported: C2, C3, C4, V4, S3, D8, A4, S4, A4xC2, Sn/An (n >= 5).
// Appends named intermediates to `notes` when given. Throws
// InvariantViolation (message carries the trace) on any inexact division.
Int nu_oracle(const LocalField& F, const GroupQuery& G, const FiberTable& fibers = default_fibers(),
              std::vector<Note>* notes = nullptr);

// Number of cyclic cubic extensions F'/F, restricted to p = 2 (1 or 4).
Int cubic_subextension_count(const LocalField& F);

// 3 nu(A4) + 3 nu(A4xC2) == c_F' (|F'*/(F'*)^2| - |F*/(F*)^2|) with
// nu(A4xC2) = nu(A4)(|F*/(F*)^2| - 1). p = 2 only.
bool a4_balance_check(const LocalField& F, const FiberTable& fibers = default_fibers());

// Isomorphism classes of degree-n extensions, n in {3, 4}.
Int iso_class_count(const LocalField& F, unsigned n, const FiberTable& fibers = default_fibers());

// Labeled census lines for degree 3 or 4, in output order.
std::vector<Note> degree_census(const LocalField& F, unsigned n, const FiberTable& fibers = default_fibers());

CountReport compare(const LocalField& F, const GroupQuery& G, const FiberTable& fibers = default_fibers());

// The closed-form value and the oracle are known to differ for S3 and C3
// when p = 3 and mu_3 lies in F (the abelian cubic count there).
bool is_documented_mismatch(const LocalField& F, const GroupQuery& G);

// Every legal field with e <= e_max, f <= f_max, ordered by (p, e, f, flags)
// with unset flags first.
std::vector<LocalField> legal_fields(unsigned long p, unsigned e_max, unsigned f_max);

// Reports for each legal field of each p and each group (sorted by name),
// skipping combinations one of the two modes does not cover. Grid points are
// evaluated concurrently; the result order is deterministic.
std::vector<CountReport> sweep(const std::vector<unsigned long>& primes, unsigned e_max, unsigned f_max,
                               std::vector<GroupQuery> groups, const FiberTable& fibers = default_fibers());

}  // namespace lfc::census
