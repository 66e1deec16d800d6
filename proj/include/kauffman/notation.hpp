#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kauffman {

struct notation_error : std::runtime_error {
    enum class Kind { Syntax, ZeroEntry, EvenLength };
    notation_error(Kind k, std::size_t off, const std::string& msg)
        : std::runtime_error(msg), kind(k), offset(off) {}
    Kind kind;
    std::size_t offset;  // byte offset into the input text (syntax errors)
};

/// Continued-fraction notation [b1, d1, b2, ..., dn, b_{n+1}]: an odd-length
/// list of nonzero integers. Odd positions (1-indexed) are twist counts in
/// the vertical regions, even positions in the horizontal regions.
struct FractionNotation {
    std::vector<long> entries;

    /// Validates oddness and nonzero entries; throws notation_error.
    static FractionNotation from_entries(std::vector<long> entries);

    std::size_t size() const { return entries.size(); }
    long total_crossings() const;
    FractionNotation negated() const;
    std::string render() const;  // "[b1,d1,...]"
};

/// Parses the grammar '[' int (',' int)* ']' with optional whitespace.
/// Syntax errors carry the byte offset of the offending character.
FractionNotation parse_notation(const std::string& text);

}  // namespace kauffman
