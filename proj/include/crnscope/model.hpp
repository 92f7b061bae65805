#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crnscope {

using BigInt = mpz_class;

/// Nonnegative integer vector over species, stored sparsely (zero counts
/// omitted, entries sorted by species index). Used for complexes,
/// configurations and reactant/product vectors alike.
class ComplexVector {
public:
    using Entry = std::pair<std::size_t, BigInt>;

    ComplexVector() = default;

    /// Duplicate indices are summed; zero counts dropped. Negative counts throw.
    static ComplexVector from_entries(std::vector<Entry> entries);
    static ComplexVector from_dense(std::span<const BigInt> counts);
    static ComplexVector single(std::size_t species, BigInt count = 1);

    BigInt count(std::size_t species) const;
    void set(std::size_t species, const BigInt& value);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::vector<std::size_t> support() const;
    BigInt total() const;
    /// Largest referenced species index + 1 (0 for the empty vector).
    std::size_t extent() const { return entries_.empty() ? 0 : entries_.back().first + 1; }

    std::vector<BigInt> dense(std::size_t dimension) const;

    friend bool operator==(const ComplexVector&, const ComplexVector&) = default;

    ComplexVector& operator+=(const ComplexVector& other);
    friend ComplexVector operator+(ComplexVector lhs, const ComplexVector& rhs) {
        lhs += rhs;
        return lhs;
    }

    /// Strict weak order usable as a map key; unrelated to the entrywise order.
    struct LexLess {
        bool operator()(const ComplexVector& a, const ComplexVector& b) const;
    };

private:
    std::vector<Entry> entries_;
};

/// a <= b entrywise.
bool entrywise_le(const ComplexVector& a, const ComplexVector& b);
/// a <= b and a != b.
bool entrywise_lt(const ComplexVector& a, const ComplexVector& b);

struct Species {
    std::string name;
    std::size_t index = 0;
};

struct Reaction {
    std::string name;
    ComplexVector reactant;
    ComplexVector product;
};

class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A chemical reaction network (equivalently a Petri net). Species and
/// reactions keep declaration order; every matrix and report uses it.
class Crn {
public:
    Crn() = default;
    Crn(std::vector<std::string> species_names, std::vector<Reaction> reactions);

    const std::vector<Species>& species() const { return species_; }
    const std::vector<Reaction>& reactions() const { return reactions_; }
    std::size_t species_count() const { return species_.size(); }
    std::size_t reaction_count() const { return reactions_.size(); }

    std::optional<std::size_t> species_index(std::string_view name) const;
    std::optional<std::size_t> reaction_index(std::string_view name) const;

    friend bool operator==(const Crn& a, const Crn& b);

private:
    std::vector<Species> species_;
    std::vector<Reaction> reactions_;
};

/// Occurrence counts of reactions in a firing sequence, indexed by reaction.
class ParikhVector {
public:
    explicit ParikhVector(std::size_t reaction_count = 0) : counts_(reaction_count) {}
    explicit ParikhVector(std::vector<BigInt> counts) : counts_(std::move(counts)) {}

    const std::vector<BigInt>& counts() const { return counts_; }
    const BigInt& operator[](std::size_t r) const { return counts_[r]; }
    BigInt& operator[](std::size_t r) { return counts_[r]; }
    std::size_t size() const { return counts_.size(); }
    std::vector<std::size_t> support() const;

    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;

private:
    std::vector<BigInt> counts_;
};

class NotEnabled : public std::runtime_error {
public:
    NotEnabled(std::string message, std::size_t position, std::size_t reaction, std::size_t species)
        : std::runtime_error(std::move(message)), position_(position), reaction_(reaction), species_(species) {}

    /// Index into the fired sequence (0 for a single firing).
    std::size_t position() const { return position_; }
    std::size_t reaction() const { return reaction_; }
    /// First species whose count is insufficient.
    std::size_t species() const { return species_; }

private:
    std::size_t position_;
    std::size_t reaction_;
    std::size_t species_;
};

bool is_enabled(const ComplexVector& c, const Reaction& r);

/// c - in(r) + out(r). Throws NotEnabled when in(r) is not <= c.
ComplexVector fire(const Crn& crn, const ComplexVector& c, std::size_t reaction);
ComplexVector fire_sequence(const Crn& crn, const ComplexVector& c, std::span<const std::size_t> sequence);

ParikhVector parikh(const Crn& crn, std::span<const std::size_t> sequence);

/// Resolves a textual firing sequence into reaction indices. Names may be
/// separated by whitespace or commas; an unseparated word like "abd" is
/// split greedily by longest matching reaction name.
std::vector<std::size_t> resolve_sequence(const Crn& crn, std::string_view text);

/// "2A + B" style rendering in species order; "0" for the empty vector.
std::string format_complex(const Crn& crn, const ComplexVector& c);

}  // namespace crnscope
