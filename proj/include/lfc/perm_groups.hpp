#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

// Brute-force finite permutation groups. Everything here is computed from
// explicit element lists, which keeps it independent of the counting code
// that consumes its answers.
namespace lfc::groups {

// Images of 0..n-1. Composition is right-to-left: (a * b)(x) = a(b(x)).
using Perm = std::vector<std::uint8_t>;

Perm identity_perm(std::size_t degree);
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
// Product of disjoint or overlapping cycles, applied right to left.
Perm from_cycles(std::size_t degree, const std::vector<std::vector<unsigned>>& cycles);
std::size_t element_order(const Perm& a);

inline constexpr std::size_t kClosureGuard = 10000;
inline constexpr std::size_t kSubgroupGuard = 1000;

class PermGroup {
public:
    std::size_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    // Lexicographically sorted; the identity is always first.
    const std::vector<Perm>& elements() const { return elements_; }

    bool contains(const Perm& g) const;
    bool is_subgroup_of(const PermGroup& G) const;

    friend bool operator==(const PermGroup&, const PermGroup&) = default;
    friend bool operator<(const PermGroup& a, const PermGroup& b);

private:
    friend PermGroup generate(std::size_t, const std::vector<Perm>&);
    friend PermGroup from_closed_set(std::size_t, std::vector<Perm>);
    PermGroup(std::size_t degree, std::vector<Perm> sorted) : degree_(degree), elements_(std::move(sorted)) {}

    std::size_t degree_ = 0;
    std::vector<Perm> elements_;
};

// Closure of the generators. Throws InvariantViolation past kClosureGuard
// elements and InvalidArgument for a generator that is not a bijection of
// the right degree.
PermGroup generate(std::size_t degree, const std::vector<Perm>& generators);

// Every subgroup exactly once, sorted by (order, elements). Built bottom-up
// from the cyclic subgroups of prime-power order by repeated joins.
// Throws Unsupported past kSubgroupGuard.
std::vector<PermGroup> all_subgroups(const PermGroup& G);

PermGroup conjugate(const PermGroup& H, const Perm& g);   // g H g^-1
bool is_normal(const PermGroup& G, const PermGroup& H);
// {g in G : g H g^-1 = H}. Throws InvalidArgument unless H <= G.
PermGroup normalizer(const PermGroup& G, const PermGroup& H);
// Conjugacy classes of subgroups, each class sorted, classes ordered by
// their smallest member.
std::vector<std::vector<PermGroup>> subgroup_classes(const PermGroup& G);

PermGroup center(const PermGroup& G);
PermGroup derived_subgroup(const PermGroup& G);
bool is_abelian(const PermGroup& G);
bool is_cyclic(const PermGroup& G);
bool is_solvable(const PermGroup& G);
// G/N realized by the action of G on the left cosets of N. N must be normal.
PermGroup quotient(const PermGroup& G, const PermGroup& N);

PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);
PermGroup cyclic(std::size_t n);
PermGroup klein_four();        // the normal V4 of S4 on 4 points
PermGroup dihedral8();         // a 2-Sylow subgroup of S4
PermGroup quaternion8();       // regular representation on 8 points
PermGroup a4_times_c2();       // on 4 + 2 points

// Isomorphism-type tags for the small groups the counting needs.
enum class Tag {
    C1, C2, C3, C4, C5, C6, C7, C8,
    V4, S3, D8, Q8, C2xC2xC2, C4xC2, A4, S4, A4xC2,
    Other,
};

struct GroupId {
    Tag tag = Tag::Other;
    std::size_t order = 0;
    std::string name() const;   // "S3", ..., "other(24)"
    friend bool operator==(const GroupId&, const GroupId&) = default;
};

// Cheap invariants. Injective on the catalog (checked in tests), not in
// general.
struct Signature {
    std::size_t order = 0;
    std::size_t exponent = 0;
    std::map<std::size_t, std::size_t> order_histogram;
    bool abelian = false;
    std::size_t center_order = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const PermGroup& G);
std::string tag_name(Tag t);
// One permutation realization per catalog tag (Other excluded).
const std::vector<std::pair<Tag, PermGroup>>& catalog();
GroupId identify(const PermGroup& G);

// Non-normal subgroups of G identified as `tag`, counted individually and
// up to G-conjugacy.
std::size_t count_nonnormal_iso(const PermGroup& G, Tag tag);
std::size_t conj_classes_nonnormal_iso(const PermGroup& G, Tag tag);

struct StructuralFacts {
    bool k4_normal_in_s4 = false;
    bool k4_normal_in_a4 = false;
    bool s4_mod_k4_is_s3 = false;
    bool s4_normal_subgroups_are_1_k4_a4_s4 = false;
    // no cyclic normal N with G/N cyclic
    bool s4_no_cyclic_normal_with_cyclic_quotient = false;
    bool a4_no_cyclic_normal_with_cyclic_quotient = false;
    bool s3_no_normal_order_2 = false;
    bool d8_is_2_sylow_of_s4 = false;
    bool s4_a4_solvable = false;
    bool s5_a5_not_solvable = false;

    bool all() const;
    // (name, value) pairs in declaration order.
    std::vector<std::pair<std::string, bool>> items() const;
};

StructuralFacts structural_facts();

}  // namespace lfc::groups
