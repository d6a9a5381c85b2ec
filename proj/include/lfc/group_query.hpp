#pragma once

#include "lfc/bigint.hpp"

#include <string>
#include <string_view>

namespace lfc {

// The Galois group asked about in a count query.
struct GroupQuery {
    enum class Kind { C2, C3, C4, V4, D8, S3, A4, S4, A4xC2, Symmetric, Alternating, PGroup };

    Kind kind = Kind::C2;
    unsigned degree = 0;   // Symmetric / Alternating only, >= 5
    Int order;             // PGroup only: a prime power
    unsigned generators = 0;   // PGroup only: minimal number of generators d
    Int aut_order;         // PGroup only: |Aut(G)|

    static GroupQuery of(Kind k)
    {
        GroupQuery g;
        g.kind = k;
        return g;
    }
    static GroupQuery symmetric(unsigned n);
    static GroupQuery alternating(unsigned n);
    static GroupQuery p_group(const Int& order, unsigned d, const Int& aut_order);

    // "C2", "S3", "A4xC2", "S5", "A7", "P:9:2:48", ...
    std::string name() const;

    friend bool operator==(const GroupQuery&, const GroupQuery&) = default;
};

// Inverse of name(); throws InvalidArgument on anything else.
GroupQuery parse_group_query(std::string_view text);

}  // namespace lfc
