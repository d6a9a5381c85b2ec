#include "lfc/group_query.hpp"

#include "lfc/errors.hpp"

#include <array>
#include <charconv>
#include <utility>

namespace lfc {

namespace {

constexpr std::array<std::pair<std::string_view, GroupQuery::Kind>, 9> kFixed{{
    {"C2", GroupQuery::Kind::C2},
    {"C3", GroupQuery::Kind::C3},
    {"C4", GroupQuery::Kind::C4},
    {"V4", GroupQuery::Kind::V4},
    {"D8", GroupQuery::Kind::D8},
    {"S3", GroupQuery::Kind::S3},
    {"A4", GroupQuery::Kind::A4},
    {"S4", GroupQuery::Kind::S4},
    {"A4xC2", GroupQuery::Kind::A4xC2},
}};

unsigned parse_unsigned(std::string_view s, std::string_view whole)
{
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw InvalidArgument("malformed group tag '" + std::string(whole) + "'");
    return v;
}

Int parse_int(std::string_view s, std::string_view whole)
{
    Int v;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos ||
        v.set_str(std::string(s), 10) != 0)
        throw InvalidArgument("malformed group tag '" + std::string(whole) + "'");
    return v;
}

}  // namespace

GroupQuery GroupQuery::symmetric(unsigned n)
{
    if (n < 5) throw InvalidArgument("symmetric group tags need n >= 5 (S3, S4 are named)");
    GroupQuery g = of(Kind::Symmetric);
    g.degree = n;
    return g;
}

GroupQuery GroupQuery::alternating(unsigned n)
{
    if (n < 5) throw InvalidArgument("alternating group tags need n >= 5 (C3, A4 are named)");
    GroupQuery g = of(Kind::Alternating);
    g.degree = n;
    return g;
}

GroupQuery GroupQuery::p_group(const Int& order, unsigned d, const Int& aut_order)
{
    if (order < 2) throw InvalidArgument("p-group order must be >= 2");
    // prime power check: smallest prime factor exhausts the order
    Int rest = order;
    unsigned long smallest = 2;
    while (!mpz_divisible_ui_p(rest.get_mpz_t(), smallest)) ++smallest;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), smallest)) rest /= smallest;
    if (rest != 1) throw InvalidArgument("p-group order " + order.get_str() + " is not a prime power");
    if (d < 1) throw InvalidArgument("p-group needs d >= 1 generators");
    if (aut_order < 1) throw InvalidArgument("|Aut(G)| must be >= 1");
    GroupQuery g = of(Kind::PGroup);
    g.order = order;
    g.generators = d;
    g.aut_order = aut_order;
    return g;
}

std::string GroupQuery::name() const
{
    switch (kind) {
    case Kind::Symmetric: return "S" + std::to_string(degree);
    case Kind::Alternating: return "A" + std::to_string(degree);
    case Kind::PGroup:
        return "P:" + order.get_str() + ":" + std::to_string(generators) + ":" + aut_order.get_str();
    default:
        for (const auto& [text, k] : kFixed)
            if (k == kind) return std::string(text);
    }
    return "?";
}

GroupQuery parse_group_query(std::string_view text)
{
    for (const auto& [name, k] : kFixed)
        if (text == name) return GroupQuery::of(k);
    if (text.size() >= 2 && (text[0] == 'S' || text[0] == 'A')) {
        const unsigned n = parse_unsigned(text.substr(1), text);
        return text[0] == 'S' ? GroupQuery::symmetric(n) : GroupQuery::alternating(n);
    }
    if (text.starts_with("P:")) {
        std::string_view rest = text.substr(2);
        const auto c1 = rest.find(':');
        if (c1 == std::string_view::npos) throw InvalidArgument("malformed group tag '" + std::string(text) + "'");
        const auto c2 = rest.find(':', c1 + 1);
        if (c2 == std::string_view::npos) throw InvalidArgument("malformed group tag '" + std::string(text) + "'");
        return GroupQuery::p_group(parse_int(rest.substr(0, c1), text),
                                   parse_unsigned(rest.substr(c1 + 1, c2 - c1 - 1), text),
                                   parse_int(rest.substr(c2 + 1), text));
    }
    throw InvalidArgument("unknown group tag '" + std::string(text) + "'");
}

}  // namespace lfc
