#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qsing/matrix.hpp"

namespace qsing {

/// Parsed group description: ambient cyclotomic order, dimension and a
/// nonempty list of n x n generator matrices over Q(zeta_m).
struct GroupSpec {
    long cyclotomic_order = 1;
    long dimension = 0;
    std::vector<CycMatrix> generators;

    bool operator==(const GroupSpec& o) const;
    bool operator!=(const GroupSpec& o) const { return !(*this == o); }
};

/// Parse failure with 1-based position. column is 0 for line-level
/// diagnostics (missing keyword, wrong row count, ...).
class SpecParseError : public std::runtime_error {
public:
    SpecParseError(std::string message, long line, long column);

    long line() const { return line_; }
    long column() const { return column_; }
    /// Diagnostic without the position prefix.
    const std::string& message() const { return message_; }

private:
    std::string message_;
    long line_;
    long column_;
};

/// Parse the line-oriented group description format:
///
///   cyclotomic_order <m>
///   dimension <n>
///   generator
///   <n lines of n comma-separated entry expressions>
///   end
///   ... further generator blocks ...
///
/// '#' starts a comment; blank lines are ignored; CRLF input is accepted.
/// Entry expressions follow
///   expr  := term { ("+" | "-") term }
///   term  := coeff [ "*" power ] | power
///   coeff := [ "-" ] int [ "/" int ]
///   power := "z" [ "^" int ]
/// with z = zeta_m and non-negative exponents folded mod m. Every failure
/// raises SpecParseError with a position.
GroupSpec parse_spec(const std::string& text);

/// Canonical text form: LF line endings, entries joined by ", ", terms in
/// ascending exponent order. parse_spec(emit_spec(s)) == s.
std::string emit_spec(const GroupSpec& spec);

} // namespace qsing
