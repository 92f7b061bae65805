#include "crnscope/model.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace crnscope {

ComplexVector ComplexVector::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    ComplexVector out;
    for (auto& [index, count] : entries) {
        if (sgn(count) < 0) {
            throw ModelError("negative species count");
        }
        if (!out.entries_.empty() && out.entries_.back().first == index) {
            out.entries_.back().second += count;
        } else {
            out.entries_.emplace_back(index, std::move(count));
        }
    }
    std::erase_if(out.entries_, [](const Entry& e) { return sgn(e.second) == 0; });
    return out;
}

ComplexVector ComplexVector::from_dense(std::span<const BigInt> counts) {
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (sgn(counts[i]) != 0) {
            entries.emplace_back(i, counts[i]);
        }
    }
    return from_entries(std::move(entries));
}

ComplexVector ComplexVector::single(std::size_t species, BigInt count) {
    return from_entries({{species, std::move(count)}});
}

BigInt ComplexVector::count(std::size_t species) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), species,
                               [](const Entry& e, std::size_t s) { return e.first < s; });
    if (it != entries_.end() && it->first == species) {
        return it->second;
    }
    return 0;
}

void ComplexVector::set(std::size_t species, const BigInt& value) {
    if (sgn(value) < 0) {
        throw ModelError("negative species count");
    }
    auto it = std::lower_bound(entries_.begin(), entries_.end(), species,
                               [](const Entry& e, std::size_t s) { return e.first < s; });
    bool present = it != entries_.end() && it->first == species;
    if (sgn(value) == 0) {
        if (present) {
            entries_.erase(it);
        }
    } else if (present) {
        it->second = value;
    } else {
        entries_.insert(it, Entry{species, value});
    }
}

std::vector<std::size_t> ComplexVector::support() const {
    std::vector<std::size_t> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) {
        out.push_back(e.first);
    }
    return out;
}

BigInt ComplexVector::total() const {
    BigInt sum = 0;
    for (const auto& e : entries_) {
        sum += e.second;
    }
    return sum;
}

std::vector<BigInt> ComplexVector::dense(std::size_t dimension) const {
    std::vector<BigInt> out(std::max(dimension, extent()));
    for (const auto& [index, count] : entries_) {
        out[index] = count;
    }
    out.resize(dimension);
    return out;
}

ComplexVector& ComplexVector::operator+=(const ComplexVector& other) {
    std::vector<Entry> merged = entries_;
    merged.insert(merged.end(), other.entries_.begin(), other.entries_.end());
    *this = from_entries(std::move(merged));
    return *this;
}

bool ComplexVector::LexLess::operator()(const ComplexVector& a, const ComplexVector& b) const {
    return std::lexicographical_compare(
        a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
        [](const Entry& x, const Entry& y) {
            if (x.first != y.first) {
                return x.first < y.first;
            }
            return x.second < y.second;
        });
}

bool entrywise_le(const ComplexVector& a, const ComplexVector& b) {
    for (const auto& [index, count] : a.entries()) {
        if (b.count(index) < count) {
            return false;
        }
    }
    return true;
}

bool entrywise_lt(const ComplexVector& a, const ComplexVector& b) {
    return entrywise_le(a, b) && !(a == b);
}

Crn::Crn(std::vector<std::string> species_names, std::vector<Reaction> reactions)
    : reactions_(std::move(reactions)) {
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < species_names.size(); ++i) {
        if (!seen.insert(species_names[i]).second) {
            throw ModelError("duplicate species '" + species_names[i] + "'");
        }
        species_.push_back(Species{std::move(species_names[i]), i});
    }
    seen.clear();
    for (const auto& r : reactions_) {
        if (!seen.insert(r.name).second) {
            throw ModelError("duplicate reaction name '" + r.name + "'");
        }
        if (r.reactant.extent() > species_.size() || r.product.extent() > species_.size()) {
            throw ModelError("reaction '" + r.name + "' references an undeclared species");
        }
    }
}

std::optional<std::size_t> Crn::species_index(std::string_view name) const {
    for (const auto& s : species_) {
        if (s.name == name) {
            return s.index;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> Crn::reaction_index(std::string_view name) const {
    for (std::size_t i = 0; i < reactions_.size(); ++i) {
        if (reactions_[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

bool operator==(const Crn& a, const Crn& b) {
    if (a.species_.size() != b.species_.size() || a.reactions_.size() != b.reactions_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.species_.size(); ++i) {
        if (a.species_[i].name != b.species_[i].name) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.reactions_.size(); ++i) {
        const auto& x = a.reactions_[i];
        const auto& y = b.reactions_[i];
        if (x.name != y.name || !(x.reactant == y.reactant) || !(x.product == y.product)) {
            return false;
        }
    }
    return true;
}

std::vector<std::size_t> ParikhVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (sgn(counts_[i]) > 0) {
            out.push_back(i);
        }
    }
    return out;
}

bool is_enabled(const ComplexVector& c, const Reaction& r) {
    return entrywise_le(r.reactant, c);
}

namespace {

ComplexVector fire_at(const Crn& crn, const ComplexVector& c, std::size_t reaction, std::size_t position) {
    if (reaction >= crn.reaction_count()) {
        throw ModelError("reaction index out of range");
    }
    const Reaction& r = crn.reactions()[reaction];
    for (const auto& [index, count] : r.reactant.entries()) {
        BigInt have = c.count(index);
        if (have < count) {
            std::string species = index < crn.species_count() ? crn.species()[index].name : std::to_string(index);
            throw NotEnabled("reaction '" + r.name + "' not enabled at position " + std::to_string(position) +
                                 ": needs " + count.get_str() + " " + species + ", have " + have.get_str(),
                             position, reaction, index);
        }
    }
    std::vector<ComplexVector::Entry> result;
    std::size_t dim = std::max({c.extent(), r.reactant.extent(), r.product.extent()});
    for (std::size_t s = 0; s < dim; ++s) {
        BigInt value = c.count(s) - r.reactant.count(s) + r.product.count(s);
        if (sgn(value) != 0) {
            result.emplace_back(s, std::move(value));
        }
    }
    return ComplexVector::from_entries(std::move(result));
}

}  // namespace

ComplexVector fire(const Crn& crn, const ComplexVector& c, std::size_t reaction) {
    return fire_at(crn, c, reaction, 0);
}

ComplexVector fire_sequence(const Crn& crn, const ComplexVector& c, std::span<const std::size_t> sequence) {
    ComplexVector current = c;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        current = fire_at(crn, current, sequence[i], i);
    }
    return current;
}

ParikhVector parikh(const Crn& crn, std::span<const std::size_t> sequence) {
    ParikhVector out(crn.reaction_count());
    for (std::size_t r : sequence) {
        if (r >= crn.reaction_count()) {
            throw ModelError("reaction index out of range");
        }
        out[r] += 1;
    }
    return out;
}

std::vector<std::size_t> resolve_sequence(const Crn& crn, std::string_view text) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    auto is_sep = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) || ch == ','; };
    while (pos < text.size()) {
        if (is_sep(text[pos])) {
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && !is_sep(text[end])) {
            ++end;
        }
        std::string_view word = text.substr(pos, end - pos);
        if (auto r = crn.reaction_index(word)) {
            out.push_back(*r);
        } else {
            std::size_t at = 0;
            while (at < word.size()) {
                std::size_t best_len = 0;
                std::size_t best = 0;
                for (std::size_t i = 0; i < crn.reaction_count(); ++i) {
                    const std::string& name = crn.reactions()[i].name;
                    if (name.size() > best_len && word.substr(at, name.size()) == name) {
                        best_len = name.size();
                        best = i;
                    }
                }
                if (best_len == 0) {
                    throw ModelError("unknown reaction in sequence at '" + std::string(word.substr(at)) + "'");
                }
                out.push_back(best);
                at += best_len;
            }
        }
        pos = end;
    }
    return out;
}

std::string format_complex(const Crn& crn, const ComplexVector& c) {
    if (c.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [index, count] : c.entries()) {
        if (!out.empty()) {
            out += " + ";
        }
        if (count != 1) {
            out += count.get_str();
        }
        out += index < crn.species_count() ? crn.species()[index].name : "#" + std::to_string(index);
    }
    return out;
}

}  // namespace crnscope
