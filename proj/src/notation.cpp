#include "kauffman/notation.hpp"

#include <cctype>
#include <sstream>

namespace kauffman {

FractionNotation FractionNotation::from_entries(std::vector<long> entries) {
    if (entries.empty() || entries.size() % 2 == 0)
        throw notation_error(notation_error::Kind::EvenLength, 0,
                             "notation must have odd length >= 1");
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i] == 0)
            throw notation_error(notation_error::Kind::ZeroEntry, 0,
                                 "entry " + std::to_string(i + 1) + " is zero");
    return FractionNotation{std::move(entries)};
}

long FractionNotation::total_crossings() const {
    long n = 0;
    for (long e : entries) n += e < 0 ? -e : e;
    return n;
}

FractionNotation FractionNotation::negated() const {
    FractionNotation r = *this;
    for (long& e : r.entries) e = -e;
    return r;
}

std::string FractionNotation::render() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out << ",";
        out << entries[i];
    }
    out << "]";
    return out.str();
}

FractionNotation parse_notation(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto fail = [&](const std::string& what) -> void {
        throw notation_error(notation_error::Kind::Syntax, pos,
                             "syntax error at offset " + std::to_string(pos) + ": " + what);
    };

    skip_ws();
    if (pos >= text.size() || text[pos] != '[') fail("expected '['");
    ++pos;
    std::vector<long> entries;
    for (;;) {
        skip_ws();
        const std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            fail("expected integer");
        entries.push_back(std::stol(text.substr(start, pos - start)));
        skip_ws();
        if (pos >= text.size()) fail("expected ',' or ']'");
        if (text[pos] == ',') {
            ++pos;
            continue;
        }
        if (text[pos] == ']') {
            ++pos;
            break;
        }
        fail("expected ',' or ']'");
    }
    skip_ws();
    if (pos != text.size()) fail("trailing characters");
    return FractionNotation::from_entries(std::move(entries));
}

}  // namespace kauffman
