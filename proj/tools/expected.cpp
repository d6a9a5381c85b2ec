#include "expected.hpp"

#include "lfc/census.hpp"
#include "lfc/closed_forms.hpp"
#include "lfc/counting.hpp"
#include "lfc/errors.hpp"
#include "lfc/group_query.hpp"

#include <sstream>

namespace lfc::io {

const char* const kExpectedHeader = "p,e,f,mu_p,mu_4,target,expected,label";

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

bool all_digits(const std::string& s)
{
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

unsigned long parse_number(const std::string& s, std::size_t line, const char* what)
{
    if (!all_digits(s) || s.size() > 9) throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
    return std::stoul(s);
}

bool parse_flag(const std::string& s, std::size_t line, const char* what)
{
    if (s == "+") return true;
    if (s == "-") return false;
    throw ParseError(line, std::string("flag ") + what + " must be '+' or '-', got '" + s + "'");
}

unsigned target_degree(const std::string& rest)
{
    if (!all_digits(rest) || rest.size() > 2) throw InvalidArgument("bad degree in target");
    return static_cast<unsigned>(std::stoul(rest));
}

}  // namespace

std::vector<ExpectedRecord> parse_expected_csv(std::istream& in)
{
    std::vector<ExpectedRecord> rows;
    std::string raw;
    std::size_t line = 0;
    bool header_seen = false;
    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty()) continue;
        if (!header_seen) {
            if (raw != kExpectedHeader)
                throw ParseError(line, std::string("expected header '") + kExpectedHeader + "'");
            header_seen = true;
            continue;
        }
        const auto cols = split(raw, ',');
        if (cols.size() != 8) throw ParseError(line, "expected 8 columns, got " + std::to_string(cols.size()));
        const unsigned long p = parse_number(cols[0], line, "p");
        const unsigned long e = parse_number(cols[1], line, "e");
        const unsigned long f = parse_number(cols[2], line, "f");
        const bool mu_p = parse_flag(cols[3], line, "mu_p");
        const bool mu_4 = parse_flag(cols[4], line, "mu_4");
        if (cols[5].empty()) throw ParseError(line, "empty target");
        if (!all_digits(cols[6])) throw ParseError(line, "expected count must be a decimal integer");
        const std::string& label = cols[7];
        if (label.empty() ||
            label.find_first_not_of("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_-") !=
                std::string::npos)
            throw ParseError(line, "label must match [A-Za-z0-9_-]+");
        try {
            ExpectedRecord r{line,
                             make_field(p, static_cast<unsigned>(e), static_cast<unsigned>(f), p != 2 && mu_p, mu_4),
                             cols[5], Int(cols[6]), label};
            rows.push_back(std::move(r));
        } catch (const InvalidArgument& ex) {
            throw ParseError(line, ex.what());
        }
    }
    if (!header_seen) throw ParseError(line == 0 ? 1 : line, "missing header row");
    return rows;
}

std::string format_expected_row(const ExpectedRecord& r)
{
    return r.field.descriptor() + "," + r.target + "," + r.expected_count.get_str() + "," + r.source_label;
}

Int evaluate_target(const LocalField& F, const std::string& target)
{
    if (target.starts_with("deg:")) return count_subfields_degree(F, target_degree(target.substr(4))).subfield_count;
    if (target.starts_with("iso:")) return census::iso_class_count(F, target_degree(target.substr(4)));
    if (target.starts_with("ab:")) {
        const unsigned n = target_degree(target.substr(3));
        if (n == 2) return count_subfields_degree(F, 2).subfield_count;
        if (n == 3) return count_cyclic_cubic(F);
        if (n == 4) return count_abelian_quartic(F).ab4_total();
        throw Unsupported("abelian counts are implemented for degrees 2, 3, 4");
    }
    if (target.starts_with("paper:")) return closed_forms::nu(F, parse_group_query(target.substr(6)));
    return census::nu_oracle(F, parse_group_query(target));
}

}  // namespace lfc::io
