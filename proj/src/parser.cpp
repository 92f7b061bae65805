#include "crnscope/parser.hpp"

#include <cctype>
#include <functional>
#include <unordered_map>

namespace crnscope {

std::string ParseError::diagnostic(std::string_view file) const {
    return std::string(file) + ":" + std::to_string(span_.line) + ":" + std::to_string(span_.column_start) + ": " +
           what();
}

bool is_identifier(std::string_view text) {
    if (text.empty() || !std::isalpha(static_cast<unsigned char>(text.front()))) {
        return false;
    }
    for (char ch : text) {
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') {
            return false;
        }
    }
    return true;
}

namespace {

bool is_blank(char ch) {
    return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\v' || ch == '\f';
}

bool is_ident_start(char ch) {
    return std::isalpha(static_cast<unsigned char>(ch)) != 0;
}

bool is_ident_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_';
}

/// Resolves a species name to its index, or reports an error.
using SpeciesResolver = std::function<std::size_t(const std::string&, SourceSpan)>;

/// Cursor over a single line.
class LineScanner {
public:
    LineScanner(std::string_view line, std::size_t line_number) : line_(line), line_number_(line_number) {}

    void skip_blanks() {
        while (pos_ < line_.size() && is_blank(line_[pos_])) {
            ++pos_;
        }
    }

    bool at_end() {
        skip_blanks();
        return pos_ >= line_.size();
    }

    char peek() {
        skip_blanks();
        return pos_ < line_.size() ? line_[pos_] : '\0';
    }

    bool consume(std::string_view token) {
        skip_blanks();
        if (line_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    std::string identifier(std::string_view what) {
        skip_blanks();
        if (pos_ >= line_.size() || !is_ident_start(line_[pos_])) {
            fail("expected " + std::string(what));
        }
        std::size_t start = pos_;
        while (pos_ < line_.size() && is_ident_char(line_[pos_])) {
            ++pos_;
        }
        return std::string(line_.substr(start, pos_ - start));
    }

    /// Reads a (possibly empty) run of decimal digits.
    std::string digits() {
        skip_blanks();
        std::size_t start = pos_;
        while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
            ++pos_;
        }
        return std::string(line_.substr(start, pos_ - start));
    }

    std::size_t column() const { return pos_ + 1; }

    SourceSpan span_from(std::size_t column_start) const {
        return SourceSpan{line_number_, column_start, std::max(column_start, pos_)};
    }

    [[noreturn]] void fail(const std::string& message) {
        skip_blanks();
        std::size_t stop = pos_;
        while (stop < line_.size() && !is_blank(line_[stop])) {
            ++stop;
        }
        std::string found = pos_ < line_.size() ? " near '" + std::string(line_.substr(pos_, stop - pos_)) + "'"
                                                : " at end of line";
        throw ParseError(message + found, SourceSpan{line_number_, pos_ + 1, std::max(pos_ + 1, stop)});
    }

private:
    std::string_view line_;
    std::size_t line_number_;
    std::size_t pos_ = 0;
};

ComplexVector parse_complex(LineScanner& in, const SpeciesResolver& resolve) {
    in.skip_blanks();
    std::vector<ComplexVector::Entry> entries;
    if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
        std::size_t start = in.column();
        std::string number = in.digits();
        if (!is_ident_start(in.peek())) {
            if (number == "0") {
                return ComplexVector{};
            }
            in.fail("expected species after count");
        }
        BigInt count(number, 10);
        if (count == 0) {
            throw ParseError("count must be at least 1", in.span_from(start));
        }
        std::size_t name_start = in.column();
        std::string name = in.identifier("species name");
        entries.emplace_back(resolve(name, in.span_from(name_start)), count);
    } else {
        std::size_t name_start = in.column();
        std::string name = in.identifier("species name or '0'");
        entries.emplace_back(resolve(name, in.span_from(name_start)), 1);
    }
    while (in.peek() == '+') {
        in.consume("+");
        BigInt count = 1;
        if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
            std::size_t start = in.column();
            count = BigInt(in.digits(), 10);
            if (count == 0) {
                throw ParseError("count must be at least 1", in.span_from(start));
            }
        }
        std::size_t name_start = in.column();
        std::string name = in.identifier("species name");
        entries.emplace_back(resolve(name, in.span_from(name_start)), count);
    }
    return ComplexVector::from_entries(std::move(entries));
}

}  // namespace

Crn parse_crn(std::string_view text) {
    std::vector<std::string> species;
    std::unordered_map<std::string, std::size_t> species_index;
    std::vector<Reaction> reactions;
    std::unordered_map<std::string, SourceSpan> declared;

    SpeciesResolver resolve = [&](const std::string& name, SourceSpan) {
        auto [it, inserted] = species_index.emplace(name, species.size());
        if (inserted) {
            species.push_back(name);
        }
        return it->second;
    };

    std::size_t line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        ++line_number;
        pos = end + 1;

        LineScanner in(line, line_number);
        if (in.at_end() || in.peek() == '#') {
            if (end == text.size()) {
                break;
            }
            continue;
        }

        std::size_t name_start = in.column();
        std::string name = in.identifier("reaction name");
        SourceSpan name_span = in.span_from(name_start);
        if (!in.consume(":")) {
            in.fail("expected ':' after reaction name");
        }
        ComplexVector lhs = parse_complex(in, resolve);
        bool reversible = false;
        if (in.consume("<->")) {
            reversible = true;
        } else if (!in.consume("->")) {
            in.fail("expected '->' or '<->'");
        }
        ComplexVector rhs = parse_complex(in, resolve);
        if (!in.at_end()) {
            in.fail("unexpected trailing input");
        }

        if (auto it = declared.find(name); it != declared.end()) {
            throw ParseError("duplicate reaction name '" + name + "' (first declared on line " +
                                 std::to_string(it->second.line) + ")",
                             name_span);
        }
        declared.emplace(name, name_span);
        if (reversible) {
            reactions.push_back(Reaction{name + ".fwd", lhs, rhs});
            reactions.push_back(Reaction{name + ".rev", rhs, lhs});
        } else {
            reactions.push_back(Reaction{name, std::move(lhs), std::move(rhs)});
        }
        if (end == text.size()) {
            break;
        }
    }
    return Crn(std::move(species), std::move(reactions));
}

ComplexVector parse_configuration(std::string_view text, const Crn& crn) {
    LineScanner in(text, 1);
    SpeciesResolver resolve = [&](const std::string& name, SourceSpan span) {
        if (auto index = crn.species_index(name)) {
            return *index;
        }
        throw ParseError("unknown species '" + name + "'", span);
    };
    ComplexVector c = parse_complex(in, resolve);
    if (!in.at_end()) {
        in.fail("unexpected trailing input");
    }
    return c;
}

std::string serialize_crn(const Crn& crn) {
    std::string out;
    const auto& reactions = crn.reactions();
    for (std::size_t i = 0; i < reactions.size(); ++i) {
        const Reaction& r = reactions[i];
        if (i + 1 < reactions.size() && r.name.size() > 4 && r.name.ends_with(".fwd")) {
            std::string base = r.name.substr(0, r.name.size() - 4);
            const Reaction& next = reactions[i + 1];
            if (next.name == base + ".rev" && next.reactant == r.product && next.product == r.reactant &&
                is_identifier(base)) {
                out += base + ": " + format_complex(crn, r.reactant) + " <-> " + format_complex(crn, r.product) + "\n";
                ++i;
                continue;
            }
        }
        out += r.name + ": " + format_complex(crn, r.reactant) + " -> " + format_complex(crn, r.product) + "\n";
    }
    return out;
}

}  // namespace crnscope
