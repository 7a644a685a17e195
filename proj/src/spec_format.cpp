#include "qsing/spec_format.hpp"

#include <cctype>
#include <sstream>

#include "qsing/rational.hpp"

namespace qsing {

namespace {

std::string position_text(const std::string& message, long line, long column) {
    std::string out = message + " at line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out;
}

} // namespace

SpecParseError::SpecParseError(std::string message, long line, long column)
    : std::runtime_error(position_text(message, line, column)),
      message_(std::move(message)), line_(line), column_(column) {}

namespace {

/// Recursive-descent parser for one entry expression. Positions reported
/// through fail() are 1-based columns in the original line.
struct ExprParser {
    const std::string& s;
    std::size_t pos;
    std::size_t end;
    long line_no;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw SpecParseError(msg, line_no, static_cast<long>(at) + 1);
    }

    void skip_ws() {
        while (pos < end && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    bool at_digit() const {
        return pos < end && std::isdigit(static_cast<unsigned char>(s[pos]));
    }

    mpz_class parse_digits(const char* what) {
        skip_ws();
        std::size_t start = pos;
        while (at_digit()) ++pos;
        if (pos == start) fail(std::string("expected ") + what, start);
        return mpz_class(s.substr(start, pos - start));
    }

    long parse_exponent() {
        skip_ws();
        std::size_t start = pos;
        mpz_class e = parse_digits("a non-negative exponent");
        if (!e.fits_slong_p()) fail("exponent out of range", start);
        return e.get_si();
    }

    // power := "z" ["^" int]
    long parse_power() {
        skip_ws();
        if (pos >= end || s[pos] != 'z') fail("expected 'z'", pos);
        ++pos;
        skip_ws();
        if (pos < end && s[pos] == '^') {
            ++pos;
            return parse_exponent();
        }
        return 1;
    }

    // term := coeff ["*" power] | power
    void parse_term(bool negate, std::vector<std::pair<long, Rational>>& raw) {
        skip_ws();
        if (pos >= end) fail("expected a term", pos);
        if (s[pos] == 'z') {
            raw.emplace_back(parse_power(), Rational(negate ? -1 : 1));
            return;
        }
        bool neg = negate;
        if (s[pos] == '-') {
            neg = !neg;
            ++pos;
            skip_ws();
        }
        if (!at_digit()) fail("expected an integer", pos);
        mpz_class num = parse_digits("an integer");
        mpz_class den(1);
        skip_ws();
        if (pos < end && s[pos] == '/') {
            ++pos;
            skip_ws();
            std::size_t at = pos;
            den = parse_digits("a denominator");
            if (sgn(den) == 0) fail("zero denominator in coefficient", at);
        }
        if (neg) num = -num;
        Rational coeff(num, den);
        skip_ws();
        if (pos < end && s[pos] == '*') {
            ++pos;
            raw.emplace_back(parse_power(), coeff);
        } else {
            raw.emplace_back(0, coeff);
        }
    }

    // expr := term { ("+" | "-") term }
    std::vector<std::pair<long, Rational>> parse_expr() {
        std::vector<std::pair<long, Rational>> raw;
        skip_ws();
        if (pos >= end) fail("empty entry expression", pos);
        parse_term(false, raw);
        while (true) {
            skip_ws();
            if (pos >= end) break;
            char c = s[pos];
            if (c != '+' && c != '-')
                fail(std::string("unexpected character '") + c +
                         "' in entry expression",
                     pos);
            ++pos;
            parse_term(c == '-', raw);
        }
        return raw;
    }
};

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (true) {
        std::size_t nl = text.find('\n', start);
        std::string line = nl == std::string::npos
                               ? text.substr(start)
                               : text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        if (nl == std::string::npos) break;
        start = nl + 1;
    }
    return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> tokens;
    std::string t;
    while (is >> t) tokens.push_back(t);
    return tokens;
}

long parse_long_token(const std::string& token, long line, const char* what) {
    try {
        std::size_t used = 0;
        long v = std::stol(token, &used);
        if (used != token.size())
            throw SpecParseError(std::string(what) + " must be an integer",
                                 line, 0);
        return v;
    } catch (const std::out_of_range&) {
        throw SpecParseError(std::string(what) + " is out of range", line, 0);
    } catch (const std::invalid_argument&) {
        throw SpecParseError(std::string(what) + " must be an integer", line, 0);
    }
}

} // namespace

GroupSpec parse_spec(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    const long eof_line = static_cast<long>(lines.size()) + 1;

    enum class State { Order, Dimension, GeneratorOrEnd, Rows };
    State state = State::Order;
    GroupSpec spec;
    std::vector<std::vector<Cyclotomic>> rows;

    for (long ln = 1; ln <= static_cast<long>(lines.size()); ++ln) {
        const std::string& full = lines[static_cast<std::size_t>(ln - 1)];
        std::size_t hash = full.find('#');
        const std::string body =
            hash == std::string::npos ? full : full.substr(0, hash);
        std::vector<std::string> tokens = tokens_of(body);
        if (tokens.empty()) continue;

        switch (state) {
            case State::Order: {
                if (tokens[0] != "cyclotomic_order")
                    throw SpecParseError("expected 'cyclotomic_order <m>'", ln, 0);
                if (tokens.size() != 2)
                    throw SpecParseError(
                        "cyclotomic_order takes exactly one integer", ln, 0);
                spec.cyclotomic_order =
                    parse_long_token(tokens[1], ln, "cyclotomic_order");
                if (spec.cyclotomic_order < 1)
                    throw SpecParseError("cyclotomic_order must be >= 1", ln, 0);
                state = State::Dimension;
                break;
            }
            case State::Dimension: {
                if (tokens[0] != "dimension")
                    throw SpecParseError("expected 'dimension <n>'", ln, 0);
                if (tokens.size() != 2)
                    throw SpecParseError("dimension takes exactly one integer",
                                         ln, 0);
                spec.dimension = parse_long_token(tokens[1], ln, "dimension");
                if (spec.dimension < 1)
                    throw SpecParseError("dimension must be >= 1", ln, 0);
                state = State::GeneratorOrEnd;
                break;
            }
            case State::GeneratorOrEnd: {
                if (tokens.size() != 1 || tokens[0] != "generator")
                    throw SpecParseError("expected 'generator'", ln, 0);
                rows.clear();
                state = State::Rows;
                break;
            }
            case State::Rows: {
                if (tokens.size() == 1 && tokens[0] == "end") {
                    if (static_cast<long>(rows.size()) != spec.dimension)
                        throw SpecParseError(
                            "generator block has " +
                                std::to_string(rows.size()) + " rows; expected " +
                                std::to_string(spec.dimension),
                            ln, 0);
                    CycMatrix g(spec.dimension, spec.cyclotomic_order);
                    for (long i = 0; i < spec.dimension; ++i)
                        for (long j = 0; j < spec.dimension; ++j)
                            g.set(i, j,
                                  rows[static_cast<std::size_t>(i)]
                                      [static_cast<std::size_t>(j)]);
                    spec.generators.push_back(std::move(g));
                    state = State::GeneratorOrEnd;
                    break;
                }
                if (static_cast<long>(rows.size()) == spec.dimension)
                    throw SpecParseError(
                        "expected 'end' after " +
                            std::to_string(spec.dimension) + " rows",
                        ln, 0);

                // Split the row on commas, keeping offsets so expression
                // diagnostics report columns in the original line.
                std::vector<std::pair<std::size_t, std::size_t>> ranges;
                std::size_t start = 0;
                for (std::size_t i = 0; i <= body.size(); ++i) {
                    if (i == body.size() || body[i] == ',') {
                        ranges.emplace_back(start, i);
                        start = i + 1;
                    }
                }
                if (static_cast<long>(ranges.size()) != spec.dimension)
                    throw SpecParseError("row length mismatch", ln, 0);
                std::vector<Cyclotomic> row;
                row.reserve(ranges.size());
                for (const auto& [b, e] : ranges) {
                    ExprParser p{body, b, e, ln};
                    row.push_back(
                        Cyclotomic::reduce(p.parse_expr(), spec.cyclotomic_order));
                }
                rows.push_back(std::move(row));
                break;
            }
        }
    }

    switch (state) {
        case State::Order:
            throw SpecParseError(
                "unexpected end of input: expected 'cyclotomic_order'",
                eof_line, 0);
        case State::Dimension:
            throw SpecParseError("unexpected end of input: expected 'dimension'",
                                 eof_line, 0);
        case State::Rows:
            throw SpecParseError(
                "unexpected end of input inside a generator block", eof_line, 0);
        case State::GeneratorOrEnd:
            if (spec.generators.empty())
                throw SpecParseError(
                    "no generator blocks; at least one is required", eof_line, 0);
            break;
    }
    return spec;
}

std::string emit_spec(const GroupSpec& spec) {
    if (spec.cyclotomic_order < 1 || spec.dimension < 1 ||
        spec.generators.empty())
        throw std::invalid_argument("emit requires a consistent group description");
    for (const CycMatrix& g : spec.generators)
        if (g.dim() != spec.dimension ||
            g.ambient_order() != spec.cyclotomic_order)
            throw std::invalid_argument(
                "emit requires a consistent group description");

    std::ostringstream os;
    os << "cyclotomic_order " << spec.cyclotomic_order << "\n";
    os << "dimension " << spec.dimension << "\n";
    for (const CycMatrix& g : spec.generators) {
        os << "generator\n";
        for (long i = 0; i < spec.dimension; ++i) {
            for (long j = 0; j < spec.dimension; ++j) {
                if (j) os << ", ";
                os << g.at(i, j).to_string();
            }
            os << "\n";
        }
        os << "end\n";
    }
    return os.str();
}

bool GroupSpec::operator==(const GroupSpec& o) const {
    if (cyclotomic_order != o.cyclotomic_order || dimension != o.dimension ||
        generators.size() != o.generators.size())
        return false;
    for (std::size_t k = 0; k < generators.size(); ++k)
        if (generators[k] != o.generators[k]) return false;
    return true;
}

} // namespace qsing
