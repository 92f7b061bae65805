#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace crnscope {

/// Exact rational; gmpxx keeps results canonical (reduced, positive denominator).
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

class LinalgError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense exact matrix with labelled rows and columns (species, reactions or complexes).
class RationalMatrix {
public:
    RationalMatrix() = default;
    /// Zero matrix with generated labels "r0".. and "c0"..
    RationalMatrix(std::size_t rows, std::size_t cols);
    /// Zero matrix; labels must be unique per axis.
    RationalMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels);

    static RationalMatrix identity(std::vector<std::string> labels);
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

    std::size_t rows() const { return row_labels_.size(); }
    std::size_t cols() const { return col_labels_.size(); }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }

    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }
    std::optional<std::size_t> row_index(const std::string& label) const;
    std::optional<std::size_t> col_index(const std::string& label) const;

    RationalVector row(std::size_t r) const;
    RationalVector column(std::size_t c) const;
    RationalMatrix transposed() const;
    /// Matrix-vector product M v.
    RationalVector apply(std::span<const Rational> v) const;
    bool is_zero() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
    std::vector<Rational> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const RationalMatrix& m);

/// Basis of the right null space. Each vector comes from the reduced row
/// echelon form (one per free column), scaled to coprime integers with the
/// first nonzero entry positive.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Exact product; a's column labels must equal b's row labels.
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

/// True iff v is a rational combination of the basis vectors.
bool in_span(std::span<const Rational> v, const std::vector<RationalVector>& basis);

/// True iff span(a) == span(b) (all vectors of equal length).
bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b);

/// Scales v by a positive rational so that entries are coprime integers.
RationalVector to_primitive_integer(std::span<const Rational> v);

bool is_zero_vector(std::span<const Rational> v);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "p/q", or a decimal such as "-1.25" exactly.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace crnscope
