#pragma once

#include "crnscope/model.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace crnscope {

/// 1-based source location of a diagnostic; column_end is inclusive.
struct SourceSpan {
    std::size_t line = 1;
    std::size_t column_start = 1;
    std::size_t column_end = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, SourceSpan span) : std::runtime_error(message), span_(span) {}

    const SourceSpan& span() const { return span_; }

    /// "file:line:col: message"
    std::string diagnostic(std::string_view file) const;

private:
    SourceSpan span_;
};

/// Parses the line-oriented .crn format:
///
///     # comment
///     name: 2A + B -> C
///     name: A <-> B        (expands to name.fwd and name.rev)
///     name: 0 -> A         ("0" is the empty complex)
///
/// Species are numbered by first occurrence, reactions by declaration.
Crn parse_crn(std::string_view text);

/// Parses a complex literal such as "2A + B" or "0" against the species of crn.
ComplexVector parse_configuration(std::string_view text, const Crn& crn);

/// Canonical text form. Adjacent name.fwd/name.rev pairs that are mutual
/// reverses are written back as a single '<->' line.
std::string serialize_crn(const Crn& crn);

/// True for [A-Za-z][A-Za-z0-9_]*.
bool is_identifier(std::string_view text);

}  // namespace crnscope
