#pragma once

#include "lfc/bigint.hpp"
#include "lfc/field_model.hpp"

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lfc::io {

// One externally supplied expected count. CSV columns, header required:
//   p,e,f,mu_p,mu_4,target,expected,label
// Flags are '+' (present) or '-' (absent). target is a group tag (oracle
// value), "paper:<tag>" (closed-form value), "deg:<n>", "iso:<n>" or
// "ab:<n>". Labels use [A-Za-z0-9_-] only, so no quoting is needed.
struct ExpectedRecord {
    std::size_t line = 0;
    LocalField field;
    std::string target;
    Int expected_count;
    std::string source_label;
};

extern const char* const kExpectedHeader;

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Throws ParseError on the first malformed row. Blank lines are skipped.
std::vector<ExpectedRecord> parse_expected_csv(std::istream& in);

std::string format_expected_row(const ExpectedRecord& r);

// The count a target names for a field. Throws InvalidArgument for an
// unknown target and Unsupported where no mode covers it.
Int evaluate_target(const LocalField& F, const std::string& target);

}  // namespace lfc::io
