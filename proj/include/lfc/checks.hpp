#pragma once

#include "lfc/census.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lfc::checks {

struct Options {
    unsigned max_e = 3;
    unsigned max_f = 2;
    std::vector<unsigned long> primes{2, 3, 5, 7};
    census::FiberTable fibers = census::default_fibers();
};

struct Failure {
    std::string invariant;
    std::string detail;
};

struct Result {
    std::size_t checks = 0;
    std::size_t documented_mismatches = 0;
    std::vector<Failure> failures;   // in evaluation order
    bool ok() const { return failures.empty(); }
};

// Runs the invariant suites of every module over the grid. Exceptions
// raised while evaluating an invariant count as a failure of that invariant.
Result run(const Options& opts);

}  // namespace lfc::checks
