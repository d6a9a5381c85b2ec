#include "lfc/perm_groups.hpp"

#include "lfc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lfc::groups {

PermGroup from_closed_set(std::size_t degree, std::vector<Perm> elements);

PermGroup from_closed_set(std::size_t degree, std::vector<Perm> elements)
{
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return PermGroup(degree, std::move(elements));
}

namespace {

bool is_bijection(const Perm& a, std::size_t degree)
{
    if (a.size() != degree) return false;
    std::vector<bool> seen(degree, false);
    for (auto x : a) {
        if (x >= degree || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

bool is_prime_power(std::size_t n)
{
    if (n < 2) return false;
    std::size_t p = 2;
    while (n % p != 0) ++p;
    while (n % p == 0) n /= p;
    return n == 1;
}

// Index-based view of a group for the subgroup lattice work.
class Table {
public:
    explicit Table(const PermGroup& G) : G_(G), n_(G.order()), mul_(n_ * n_)
    {
        const auto& el = G.elements();
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) mul_[i * n_ + j] = index(compose(el[i], el[j]));
    }

    std::size_t size() const { return n_; }
    std::uint16_t mul(std::size_t a, std::size_t b) const { return mul_[a * n_ + b]; }

    std::uint16_t index(const Perm& g) const
    {
        const auto& el = G_.elements();
        auto it = std::lower_bound(el.begin(), el.end(), g);
        return static_cast<std::uint16_t>(it - el.begin());
    }

    using Mask = std::vector<bool>;

    Mask closure(const std::vector<std::uint16_t>& gens) const
    {
        Mask in(n_, false);
        std::vector<std::uint16_t> members{0};
        in[0] = true;
        for (std::size_t k = 0; k < members.size(); ++k) {
            for (auto g : gens) {
                const auto y = mul(members[k], g);
                if (!in[y]) {
                    in[y] = true;
                    members.push_back(y);
                }
            }
        }
        return in;
    }

    PermGroup to_group(const Mask& m) const
    {
        std::vector<Perm> els;
        for (std::size_t i = 0; i < n_; ++i)
            if (m[i]) els.push_back(G_.elements()[i]);
        return from_closed_set(G_.degree(), std::move(els));
    }

private:
    const PermGroup& G_;
    std::size_t n_;
    std::vector<std::uint16_t> mul_;
};

}  // namespace

Perm identity_perm(std::size_t degree)
{
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& a, const Perm& b)
{
    Perm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm inverse(const Perm& a)
{
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint8_t>(i);
    return r;
}

Perm from_cycles(std::size_t degree, const std::vector<std::vector<unsigned>>& cycles)
{
    Perm result = identity_perm(degree);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        Perm c = identity_perm(degree);
        const auto& cyc = *it;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (cyc[i] >= degree) throw InvalidArgument("cycle point out of range");
            c[cyc[i]] = static_cast<std::uint8_t>(cyc[(i + 1) % cyc.size()]);
        }
        result = compose(c, result);
    }
    return result;
}

std::size_t element_order(const Perm& a)
{
    const Perm id = identity_perm(a.size());
    Perm x = a;
    std::size_t k = 1;
    while (x != id) {
        x = compose(a, x);
        ++k;
    }
    return k;
}

bool PermGroup::contains(const Perm& g) const
{
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool PermGroup::is_subgroup_of(const PermGroup& G) const
{
    if (degree_ != G.degree_) return false;
    return std::all_of(elements_.begin(), elements_.end(), [&](const Perm& g) { return G.contains(g); });
}

bool operator<(const PermGroup& a, const PermGroup& b)
{
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements_ < b.elements_;
}

PermGroup generate(std::size_t degree, const std::vector<Perm>& generators)
{
    if (degree > 255) throw InvalidArgument("degree too large for byte permutations");
    for (const auto& g : generators)
        if (!is_bijection(g, degree)) throw InvalidArgument("generator is not a bijection on the given degree");
    std::set<Perm> seen{identity_perm(degree)};
    std::vector<Perm> frontier{identity_perm(degree)};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& x : frontier) {
            for (const auto& g : generators) {
                Perm y = compose(x, g);
                if (seen.insert(y).second) {
                    if (seen.size() > kClosureGuard)
                        throw InvariantViolation("group closure exceeds " + std::to_string(kClosureGuard) +
                                                 " elements");
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    return PermGroup(degree, std::vector<Perm>(seen.begin(), seen.end()));
}

std::vector<PermGroup> all_subgroups(const PermGroup& G)
{
    if (G.order() > kSubgroupGuard)
        throw Unsupported("subgroup enumeration is limited to order " + std::to_string(kSubgroupGuard));
    const Table T(G);
    using Mask = Table::Mask;

    std::map<Mask, std::vector<std::uint16_t>> found;   // subgroup -> generators
    std::vector<std::pair<Mask, std::uint16_t>> seeds;
    found.emplace(T.closure({}), std::vector<std::uint16_t>{});
    for (std::size_t i = 1; i < T.size(); ++i) {
        if (!is_prime_power(element_order(G.elements()[i]))) continue;
        Mask c = T.closure({static_cast<std::uint16_t>(i)});
        if (found.emplace(c, std::vector<std::uint16_t>{static_cast<std::uint16_t>(i)}).second)
            seeds.emplace_back(std::move(c), static_cast<std::uint16_t>(i));
    }

    std::vector<Mask> frontier;
    for (const auto& s : seeds) frontier.push_back(s.first);
    while (!frontier.empty()) {
        std::vector<Mask> next;
        for (const Mask& H : frontier) {
            const std::vector<std::uint16_t> hgens = found.at(H);
            for (const auto& [C, c] : seeds) {
                if (H[c]) continue;   // C already inside H
                std::vector<std::uint16_t> gens = hgens;
                gens.push_back(c);
                Mask J = T.closure(gens);
                if (found.emplace(J, gens).second) next.push_back(std::move(J));
            }
        }
        frontier = std::move(next);
    }

    std::vector<PermGroup> out;
    out.reserve(found.size());
    for (const auto& [mask, gens] : found) out.push_back(T.to_group(mask));
    std::sort(out.begin(), out.end());
    return out;
}

PermGroup conjugate(const PermGroup& H, const Perm& g)
{
    const Perm gi = inverse(g);
    std::vector<Perm> els;
    els.reserve(H.order());
    for (const auto& h : H.elements()) els.push_back(compose(compose(g, h), gi));
    return from_closed_set(H.degree(), std::move(els));
}

bool is_normal(const PermGroup& G, const PermGroup& H)
{
    return std::all_of(G.elements().begin(), G.elements().end(),
                       [&](const Perm& g) { return conjugate(H, g) == H; });
}

PermGroup normalizer(const PermGroup& G, const PermGroup& H)
{
    if (!H.is_subgroup_of(G)) throw InvalidArgument("normalizer: H is not a subgroup of G");
    std::vector<Perm> els;
    for (const auto& g : G.elements())
        if (conjugate(H, g) == H) els.push_back(g);
    return from_closed_set(G.degree(), std::move(els));
}

std::vector<std::vector<PermGroup>> subgroup_classes(const PermGroup& G)
{
    std::vector<std::vector<PermGroup>> classes;
    std::set<PermGroup> placed;
    for (const auto& H : all_subgroups(G)) {
        if (placed.count(H)) continue;
        std::set<PermGroup> cls;
        for (const auto& g : G.elements()) cls.insert(conjugate(H, g));
        placed.insert(cls.begin(), cls.end());
        classes.emplace_back(cls.begin(), cls.end());
    }
    return classes;
}

PermGroup center(const PermGroup& G)
{
    std::vector<Perm> els;
    for (const auto& z : G.elements()) {
        const bool central = std::all_of(G.elements().begin(), G.elements().end(),
                                         [&](const Perm& g) { return compose(z, g) == compose(g, z); });
        if (central) els.push_back(z);
    }
    return from_closed_set(G.degree(), std::move(els));
}

PermGroup derived_subgroup(const PermGroup& G)
{
    PermGroup D = generate(G.degree(), {});
    std::vector<Perm> gens;
    for (const auto& a : G.elements()) {
        const Perm ai = inverse(a);
        for (const auto& b : G.elements()) {
            Perm c = compose(compose(ai, inverse(b)), compose(a, b));
            if (D.contains(c)) continue;
            gens.push_back(std::move(c));
            D = generate(G.degree(), gens);
        }
    }
    return D;
}

bool is_abelian(const PermGroup& G)
{
    return center(G).order() == G.order();
}

bool is_cyclic(const PermGroup& G)
{
    return std::any_of(G.elements().begin(), G.elements().end(),
                       [&](const Perm& g) { return element_order(g) == G.order(); });
}

bool is_solvable(const PermGroup& G)
{
    PermGroup cur = G;
    while (cur.order() > 1) {
        PermGroup next = derived_subgroup(cur);
        if (next.order() == cur.order()) return false;
        cur = std::move(next);
    }
    return true;
}

PermGroup quotient(const PermGroup& G, const PermGroup& N)
{
    if (!N.is_subgroup_of(G) || !is_normal(G, N)) throw InvalidArgument("quotient: N is not normal in G");
    // coset gN is keyed by its smallest element
    auto key = [&](const Perm& g) {
        Perm best;
        for (const auto& n : N.elements()) {
            Perm x = compose(g, n);
            if (best.empty() || x < best) best = std::move(x);
        }
        return best;
    };
    std::map<Perm, std::uint8_t> coset_index;
    std::vector<Perm> reps;
    for (const auto& g : G.elements()) {
        Perm k = key(g);
        if (!coset_index.count(k)) {
            coset_index.emplace(k, static_cast<std::uint8_t>(reps.size()));
            reps.push_back(std::move(k));
        }
    }
    std::vector<Perm> images;
    for (const auto& x : G.elements()) {
        Perm act(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i) act[i] = coset_index.at(key(compose(x, reps[i])));
        images.push_back(std::move(act));
    }
    return from_closed_set(reps.size(), std::move(images));
}

PermGroup symmetric(std::size_t n)
{
    if (n <= 1) return generate(n, {});
    std::vector<unsigned> full(n);
    std::iota(full.begin(), full.end(), 0u);
    return generate(n, {from_cycles(n, {{0, 1}}), from_cycles(n, {full})});
}

PermGroup alternating(std::size_t n)
{
    std::vector<Perm> gens;
    for (unsigned i = 2; i < n; ++i) gens.push_back(from_cycles(n, {{0, 1, i}}));
    return generate(n, gens);
}

PermGroup cyclic(std::size_t n)
{
    if (n <= 1) return generate(1, {});
    std::vector<unsigned> full(n);
    std::iota(full.begin(), full.end(), 0u);
    return generate(n, {from_cycles(n, {full})});
}

PermGroup klein_four()
{
    return generate(4, {from_cycles(4, {{0, 1}, {2, 3}}), from_cycles(4, {{0, 2}, {1, 3}})});
}

PermGroup dihedral8()
{
    return generate(4, {from_cycles(4, {{0, 1, 2, 3}}), from_cycles(4, {{0, 2}})});
}

PermGroup quaternion8()
{
    // element 2u+s stands for (-1)^s * unit[u], units 1, i, j, k
    static constexpr int kUnitMul[4][4][2] = {
        // {unit, sign} of unit[a] * unit[b]
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
        {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
        {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
        {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
    };
    auto left_mult = [](int a) {
        Perm p(8);
        for (int x = 0; x < 8; ++x) {
            const int u = kUnitMul[a / 2][x / 2][0];
            const int s = (a % 2) ^ (x % 2) ^ kUnitMul[a / 2][x / 2][1];
            p[x] = static_cast<std::uint8_t>(2 * u + s);
        }
        return p;
    };
    return generate(8, {left_mult(2), left_mult(4)});
}

PermGroup a4_times_c2()
{
    return generate(6, {from_cycles(6, {{0, 1, 2}}), from_cycles(6, {{1, 2, 3}}), from_cycles(6, {{4, 5}})});
}

Signature signature(const PermGroup& G)
{
    Signature s;
    s.order = G.order();
    s.exponent = 1;
    for (const auto& g : G.elements()) {
        const std::size_t k = element_order(g);
        ++s.order_histogram[k];
        s.exponent = std::lcm(s.exponent, k);
    }
    s.center_order = center(G).order();
    s.abelian = s.center_order == s.order;
    return s;
}

std::string tag_name(Tag t)
{
    switch (t) {
    case Tag::C1: return "C1";
    case Tag::C2: return "C2";
    case Tag::C3: return "C3";
    case Tag::C4: return "C4";
    case Tag::C5: return "C5";
    case Tag::C6: return "C6";
    case Tag::C7: return "C7";
    case Tag::C8: return "C8";
    case Tag::V4: return "V4";
    case Tag::S3: return "S3";
    case Tag::D8: return "D8";
    case Tag::Q8: return "Q8";
    case Tag::C2xC2xC2: return "C2xC2xC2";
    case Tag::C4xC2: return "C4xC2";
    case Tag::A4: return "A4";
    case Tag::S4: return "S4";
    case Tag::A4xC2: return "A4xC2";
    case Tag::Other: break;
    }
    return "other";
}

std::string GroupId::name() const
{
    if (tag == Tag::Other) return "other(" + std::to_string(order) + ")";
    return tag_name(tag);
}

const std::vector<std::pair<Tag, PermGroup>>& catalog()
{
    static const std::vector<std::pair<Tag, PermGroup>> entries = [] {
        std::vector<std::pair<Tag, PermGroup>> v;
        const Tag cyclic_tags[] = {Tag::C1, Tag::C2, Tag::C3, Tag::C4, Tag::C5, Tag::C6, Tag::C7, Tag::C8};
        for (std::size_t n = 1; n <= 8; ++n) v.emplace_back(cyclic_tags[n - 1], cyclic(n));
        v.emplace_back(Tag::V4, klein_four());
        v.emplace_back(Tag::S3, symmetric(3));
        v.emplace_back(Tag::D8, dihedral8());
        v.emplace_back(Tag::Q8, quaternion8());
        v.emplace_back(Tag::C2xC2xC2,
                       generate(6, {from_cycles(6, {{0, 1}}), from_cycles(6, {{2, 3}}), from_cycles(6, {{4, 5}})}));
        v.emplace_back(Tag::C4xC2, generate(6, {from_cycles(6, {{0, 1, 2, 3}}), from_cycles(6, {{4, 5}})}));
        v.emplace_back(Tag::A4, alternating(4));
        v.emplace_back(Tag::S4, symmetric(4));
        v.emplace_back(Tag::A4xC2, a4_times_c2());
        return v;
    }();
    return entries;
}

GroupId identify(const PermGroup& G)
{
    static const std::vector<std::pair<Tag, Signature>> sigs = [] {
        std::vector<std::pair<Tag, Signature>> v;
        for (const auto& [tag, group] : catalog()) v.emplace_back(tag, signature(group));
        return v;
    }();
    const Signature s = signature(G);
    for (const auto& [tag, ref] : sigs)
        if (ref == s) return GroupId{tag, G.order()};
    return GroupId{Tag::Other, G.order()};
}

std::size_t count_nonnormal_iso(const PermGroup& G, Tag tag)
{
    std::size_t n = 0;
    for (const auto& H : all_subgroups(G))
        if (identify(H).tag == tag && !is_normal(G, H)) ++n;
    return n;
}

std::size_t conj_classes_nonnormal_iso(const PermGroup& G, Tag tag)
{
    std::size_t n = 0;
    for (const auto& cls : subgroup_classes(G)) {
        // a class of size 1 is a normal subgroup
        if (cls.size() > 1 && identify(cls.front()).tag == tag) ++n;
    }
    return n;
}

bool StructuralFacts::all() const
{
    const auto v = items();
    return std::all_of(v.begin(), v.end(), [](const auto& kv) { return kv.second; });
}

std::vector<std::pair<std::string, bool>> StructuralFacts::items() const
{
    return {
        {"K4 normal in S4", k4_normal_in_s4},
        {"K4 normal in A4", k4_normal_in_a4},
        {"S4/K4 is S3", s4_mod_k4_is_s3},
        {"normal subgroups of S4 are 1, K4, A4, S4", s4_normal_subgroups_are_1_k4_a4_s4},
        {"S4 has no cyclic normal N with cyclic S4/N", s4_no_cyclic_normal_with_cyclic_quotient},
        {"A4 has no cyclic normal N with cyclic A4/N", a4_no_cyclic_normal_with_cyclic_quotient},
        {"S3 has no normal subgroup of order 2", s3_no_normal_order_2},
        {"D8 is a 2-Sylow subgroup of S4", d8_is_2_sylow_of_s4},
        {"S4 and A4 are solvable", s4_a4_solvable},
        {"S5 and A5 are not solvable", s5_a5_not_solvable},
    };
}

namespace {

bool no_cyclic_normal_with_cyclic_quotient(const PermGroup& G)
{
    for (const auto& N : all_subgroups(G)) {
        if (!is_normal(G, N)) continue;
        if (is_cyclic(N) && is_cyclic(quotient(G, N))) return false;
    }
    return true;
}

}  // namespace

StructuralFacts structural_facts()
{
    const PermGroup s3 = symmetric(3);
    const PermGroup s4 = symmetric(4);
    const PermGroup a4 = alternating(4);
    const PermGroup k4 = klein_four();
    const PermGroup d8 = dihedral8();

    StructuralFacts f;
    f.k4_normal_in_s4 = k4.is_subgroup_of(s4) && is_normal(s4, k4);
    f.k4_normal_in_a4 = k4.is_subgroup_of(a4) && is_normal(a4, k4);
    f.s4_mod_k4_is_s3 = f.k4_normal_in_s4 && identify(quotient(s4, k4)).tag == Tag::S3;

    std::vector<PermGroup> normals;
    for (const auto& H : all_subgroups(s4))
        if (is_normal(s4, H)) normals.push_back(H);
    std::vector<PermGroup> expected{generate(4, {}), k4, a4, s4};
    std::sort(expected.begin(), expected.end());
    f.s4_normal_subgroups_are_1_k4_a4_s4 = normals == expected;

    f.s4_no_cyclic_normal_with_cyclic_quotient = no_cyclic_normal_with_cyclic_quotient(s4);
    f.a4_no_cyclic_normal_with_cyclic_quotient = no_cyclic_normal_with_cyclic_quotient(a4);

    f.s3_no_normal_order_2 = true;
    for (const auto& H : all_subgroups(s3))
        if (H.order() == 2 && is_normal(s3, H)) f.s3_no_normal_order_2 = false;

    f.d8_is_2_sylow_of_s4 = d8.is_subgroup_of(s4) && d8.order() == 8;
    f.s4_a4_solvable = is_solvable(s4) && is_solvable(a4);
    f.s5_a5_not_solvable = !is_solvable(symmetric(5)) && !is_solvable(alternating(5));
    return f;
}

}  // namespace lfc::groups
