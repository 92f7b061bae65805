#include "crnscope/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace crnscope {

namespace {

void require_unique(const std::vector<std::string>& labels, const char* axis) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw LinalgError(std::string("duplicate ") + axis + " label '" + l + "'");
        }
    }
}

std::vector<std::string> generated_labels(char prefix, std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(prefix + std::to_string(i));
    }
    return out;
}

std::optional<std::size_t> find_label(const std::vector<std::string>& labels, const std::string& label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - labels.begin());
}

/// Row-wise integer matrix with the same row space as m.
std::vector<std::vector<mpz_class>> integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class scale = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out[r][c] = m(r, c).get_num() * (scale / m(r, c).get_den());
        }
    }
    return out;
}

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(std::vector<RationalVector>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && sgn(a[p][col]) == 0) {
            ++p;
        }
        if (p == a.size()) {
            continue;
        }
        std::swap(a[p], a[row]);
        Rational inv = 1 / a[row][col];
        for (std::size_t j = col; j < cols; ++j) {
            a[row][j] *= inv;
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || sgn(a[i][col]) == 0) {
                continue;
            }
            Rational factor = a[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                a[i][j] -= factor * a[row][j];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : row_labels_(generated_labels('r', rows)), col_labels_(generated_labels('c', cols)), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)), data_(rows() * cols()) {
    require_unique(row_labels_, "row");
    require_unique(col_labels_, "column");
}

RationalMatrix RationalMatrix::identity(std::vector<std::string> labels) {
    RationalMatrix m(labels, labels);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        m(i, i) = 1;
    }
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw LinalgError("ragged rows");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

std::optional<std::size_t> RationalMatrix::row_index(const std::string& label) const {
    return find_label(row_labels_, label);
}

std::optional<std::size_t> RationalMatrix::col_index(const std::string& label) const {
    return find_label(col_labels_, label);
}

RationalVector RationalMatrix::row(std::size_t r) const {
    return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols()),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols()));
}

RationalVector RationalMatrix::column(std::size_t c) const {
    RationalVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        out[r] = (*this)(r, c);
    }
    return out;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(col_labels_, row_labels_);
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c = 0; c < cols(); ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

RationalVector RationalMatrix::apply(std::span<const Rational> v) const {
    if (v.size() != cols()) {
        throw LinalgError("dimension mismatch in matrix-vector product");
    }
    RationalVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c = 0; c < cols(); ++c) {
            if (sgn(v[c]) != 0) {
                out[r] += (*this)(r, c) * v[c];
            }
        }
    }
    return out;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

std::size_t rank(const RationalMatrix& m) {
    auto a = integer_rows(m);
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t k = 0;
    mpz_class previous = 1;
    for (std::size_t col = 0; col < cols && k < rows; ++col) {
        std::size_t p = k;
        while (p < rows && sgn(a[p][col]) == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(a[p], a[k]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class value = a[k][col] * a[i][j] - a[i][col] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
            }
            a[i][col] = 0;
        }
        previous = a[k][col];
        ++k;
    }
    return k;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    std::vector<RationalVector> a;
    a.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        a.push_back(m.row(r));
    }
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots = rref(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        RationalVector v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -a[i][free];
        }
        v = to_primitive_integer(v);
        auto first = std::find_if(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
        if (first != v.end() && sgn(*first) < 0) {
            for (auto& q : v) {
                q = -q;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows() || a.col_labels() != b.row_labels()) {
        throw LinalgError("label mismatch in matrix product");
    }
    RationalMatrix out(a.row_labels(), b.col_labels());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& x = a(i, k);
            if (sgn(x) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += x * b(k, j);
            }
        }
    }
    return out;
}

bool in_span(std::span<const Rational> v, const std::vector<RationalVector>& basis) {
    if (is_zero_vector(v)) {
        return true;
    }
    if (basis.empty()) {
        return false;
    }
    for (const auto& b : basis) {
        if (b.size() != v.size()) {
            throw LinalgError("dimension mismatch in span test");
        }
    }
    RationalMatrix without = RationalMatrix::from_rows(basis);
    std::vector<RationalVector> extended = basis;
    extended.emplace_back(v.begin(), v.end());
    return rank(without) == rank(RationalMatrix::from_rows(extended));
}

bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b) {
    for (const auto& v : a) {
        if (!in_span(v, b)) {
            return false;
        }
    }
    for (const auto& v : b) {
        if (!in_span(v, a)) {
            return false;
        }
    }
    return true;
}

RationalVector to_primitive_integer(std::span<const Rational> v) {
    mpz_class den_lcm = 1;
    for (const auto& q : v) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    mpz_class content = 0;
    for (const auto& q : v) {
        ints.push_back(q.get_num() * (den_lcm / q.get_den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
    }
    RationalVector out(v.size());
    if (content == 0) {
        return out;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = Rational(ints[i] / content);
    }
    return out;
}

bool is_zero_vector(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) {
        return std::nullopt;
    }
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
            ++j;
        }
        return j;
    };
    std::size_t int_end = digits(i);
    if (int_end == i) {
        return std::nullopt;
    }
    Rational value(mpz_class(text.substr(i, int_end - i), 10));
    if (int_end == text.size()) {
        // plain integer
    } else if (text[int_end] == '/') {
        std::size_t den_end = digits(int_end + 1);
        if (den_end == int_end + 1 || den_end != text.size()) {
            return std::nullopt;
        }
        mpz_class den(text.substr(int_end + 1), 10);
        if (den == 0) {
            return std::nullopt;
        }
        value /= Rational(den);
    } else if (text[int_end] == '.') {
        std::size_t frac_end = digits(int_end + 1);
        if (frac_end == int_end + 1 || frac_end != text.size()) {
            return std::nullopt;
        }
        std::string frac = text.substr(int_end + 1);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        value += Rational(mpz_class(frac, 10), scale);
    } else {
        return std::nullopt;
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

}  // namespace crnscope
