#include "oracles.hpp"

#include "lfc/counting.hpp"
#include "lfc/errors.hpp"

#include <doctest.h>

#include <random>

using namespace lfc;

TEST_CASE("tame totally ramified counts")
{
    CHECK(count_tame_totally_ramified(make_field(5, 1, 1), 3) == 3);
    CHECK(count_tame_totally_ramified(make_field(3, 1, 1), 2) == 2);
    CHECK(count_tame_totally_ramified(make_field(2, 1, 1), 3) == 3);
    CHECK_THROWS_AS(count_tame_totally_ramified(make_field(3, 1, 1), 3), Unsupported);
    CHECK_THROWS_AS(count_tame_totally_ramified(make_field(2, 1, 1), 4), Unsupported);
}

TEST_CASE("subfield counts by degree")
{
    CHECK(count_subfields_degree(make_field(3, 1, 1), 3).subfield_count == 22);
    CHECK(count_subfields_degree(make_field(2, 1, 1), 4).subfield_count == 107);
    CHECK(count_subfields_degree(make_field(3, 1, 1), 4).subfield_count == 7);
    CHECK(count_subfields_degree(make_field(2, 1, 1), 2).subfield_count == 7);
    CHECK(count_subfields_degree(make_field(3, 1, 1), 2).subfield_count == 3);
    CHECK(count_subfields_degree(make_field(3, 2, 1, true), 3).subfield_count == 76);
    CHECK_THROWS_AS(count_subfields_degree(make_field(3, 1, 1), 5), Unsupported);
    CHECK_THROWS_AS(count_subfields_degree(make_field(3, 1, 1), 1), Unsupported);
}

TEST_CASE("cubic Krasner sum equals 9q^e - 5")
{
    for (unsigned e = 1; e <= 8; ++e)
        for (unsigned f = 1; f <= 4; ++f) {
            const LocalField F = make_field(3, e, f);
            CHECK(krasner_cubic_p3(F) == 9 * F.q_pow_e() - 5);
        }
    CHECK_THROWS_AS(krasner_cubic_p3(make_field(2, 1, 1)), Unsupported);
    CHECK_THROWS_AS(krasner_quartic_p2(make_field(3, 1, 1)), Unsupported);
}

TEST_CASE("four cubic subfields whenever p != 3")
{
    for (unsigned long p : {2ul, 5ul, 7ul, 11ul, 13ul})
        for (unsigned e = 1; e <= 4; ++e)
            for (unsigned f = 1; f <= 3; ++f)
                CHECK(count_subfields_degree(make_field(p, e, f), 3).subfield_count == 4);
}

TEST_CASE("cyclic cubic counts")
{
    CHECK(count_cyclic_cubic(make_field(3, 1, 1)) == 4);
    CHECK(count_cyclic_cubic(make_field(5, 1, 1)) == 1);
    CHECK(count_cyclic_cubic(make_field(7, 1, 1)) == 4);
    CHECK(count_cyclic_cubic(make_field(3, 2, 1, true)) == 40);
    CHECK(count_cyclic_cubic(make_field(3, 2, 1, false)) == 13);
    CHECK(count_cyclic_cubic(make_field(2, 1, 2)) == 4);
}

TEST_CASE("cyclic cubic count equals brute-force index-3 subgroup count")
{
    const oracle::AbelianGroup c3{{3}};
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
        for (unsigned e = 1; e <= 2; ++e)
            for (unsigned f = 1; f <= 2; ++f)
                for (bool flag : {false, true}) {
                    if (flag && (p == 2 || e % (p - 1))) continue;
                    const LocalField F = make_field(p, e, f, flag);
                    const AbelianShape shape = unit_quotient(F, 3);
                    std::vector<long> cyc;
                    for (const auto& c : shape.factors()) cyc.push_back(c.get_si());
                    CAPTURE(F.descriptor());
                    CHECK(count_cyclic_cubic(F) ==
                          oracle::count_quotients_isomorphic_to(oracle::AbelianGroup{cyc}, c3));
                }
}

TEST_CASE("abelian quartic counts")
{
    const auto q2 = count_abelian_quartic(make_field(2, 1, 1));
    CHECK(q2.c4 == 12);
    CHECK(q2.v4 == 7);
    CHECK(q2.ab4_total() == 19);
    CHECK(q2.c2 == 7);
    CHECK(q2.c3 == 1);

    const auto q3 = count_abelian_quartic(make_field(3, 1, 1));
    CHECK(q3.c4 == 2);
    CHECK(q3.v4 == 1);
    CHECK(q3.ab4_total() == 3);

    // f = 2, mu_4 absent, q^e = 4: 20*16/3 - 16 + 1/3
    CHECK(count_abelian_quartic(make_field(2, 1, 2)).ab4_total() == 91);
}

TEST_CASE("abelian quartic divisions are exact across the grid")
{
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 13ul})
        for (unsigned e = 1; e <= 5; ++e)
            for (unsigned f = 1; f <= 3; ++f) {
                const auto t = quartic_torsion(make_field(p, e, f));
                CHECK(mpz_divisible_ui_p(t.t2.get_mpz_t(), 2));
                CHECK(mpz_divisible_ui_p(Int((t.t1 - 1) * (t.t1 - 2)).get_mpz_t(), 6));
            }
}

TEST_CASE("subgroups of order 4 and of index 4 agree (brute force)")
{
    // Random 2-group shapes of order <= 2^10 with at most four cyclic
    // factors of order <= 8, plus a few fixed ones.
    std::vector<std::vector<long>> shapes{{4, 4, 2}, {4, 2}, {2, 2, 2}, {8, 4, 4}, {4, 4, 4, 4}, {4}, {2}, {8, 8, 4, 4}};
    std::mt19937 rng(20261019);
    std::uniform_int_distribution<int> rank(1, 4), expo(1, 3);
    while (shapes.size() < 20) {
        std::vector<long> s;
        long order = 1;
        const int r = rank(rng);
        for (int i = 0; i < r; ++i) {
            const long c = 1L << expo(rng);
            s.push_back(c);
            order *= c;
        }
        if (order <= 1024) shapes.push_back(s);
    }
    const oracle::AbelianGroup c4{{4}}, v4{{2, 2}};
    for (const auto& s : shapes) {
        const oracle::AbelianGroup A{s};
        if (A.order() > 1024) continue;
        CAPTURE(A.order());
        const long order4 = oracle::count_subgroups_of_order_4(A);
        const long index4 = oracle::count_quotients_isomorphic_to(A, c4) + oracle::count_quotients_isomorphic_to(A, v4);
        CHECK(order4 == index4);

        // and both equal t2/2 + (t1-1)(t1-2)/6 on the same shape
        std::vector<Int> big(s.begin(), s.end());
        const AbelianShape shape(big);
        const Int t1 = count_order_dividing(shape, 2);
        const Int t2 = count_order_dividing(shape, 4) - t1;
        CHECK(t2 / 2 + (t1 - 1) * (t1 - 2) / 6 == index4);
    }
}
