#pragma once

#include "kauffman/diagram.hpp"
#include "kauffman/ratfunc.hpp"

namespace kauffman {

struct crossing_limit_error : std::runtime_error {
    explicit crossing_limit_error(std::size_t n, int limit)
        : std::runtime_error("diagram has " + std::to_string(n) +
                             " crossings, limit is " + std::to_string(limit)) {}
};

struct OracleOptions {
    int crossing_limit = 12;
    bool memoize = true;
    /// Pick traversal basepoints from the largest port label instead of the
    /// smallest; exercised by the resolution-order-independence checks.
    bool reverse_order = false;
};

/// Brute-force Kauffman polynomial of a diagram, by descending-diagram
/// induction: the first crossing met on its under-strand is rewritten through
/// the crossing-switch relation (one switch plus two smoothings); kinks and
/// crossing-free loops are removed with their alpha and delta factors; a
/// descending diagram is worth alpha^writhe * delta^components.
RatFunc kauffman_bruteforce(const Diagram& d, const OracleOptions& opt = {});

/// True iff the matrix pipeline and the brute-force evaluation of the
/// built diagram agree (by cross-multiplication) on this notation.
bool verify_pair(const FractionNotation& f, const OracleOptions& opt = {});

}  // namespace kauffman
