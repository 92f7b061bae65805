#include "crnscope/lp.hpp"

#include <algorithm>
#include <numeric>

namespace crnscope {

namespace {

void validate(const FeasibilityQuery& q) {
    std::vector<int> role(q.matrix.cols(), 0);
    for (std::size_t i : q.zero_set) {
        if (i >= q.matrix.cols()) {
            throw QueryError("zero_set index out of range");
        }
        role[i] = 1;
    }
    for (std::size_t j : q.one_set) {
        if (j >= q.matrix.cols()) {
            throw QueryError("one_set index out of range");
        }
        if (role[j] == 1) {
            throw QueryError("column " + std::to_string(j) + " is in both zero_set and one_set");
        }
    }
}

/// Dense phase-1 tableau for  D A' x + s = D b,  x, s >= 0.
class Phase1 {
public:
    Phase1(std::vector<RationalVector> rows, RationalVector rhs) : m_(rows.size()) {
        n_ = m_ == 0 ? 0 : rows.front().size();
        sign_.assign(m_, 1);
        tableau_.assign(m_, RationalVector(n_ + m_ + 1));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            if (sgn(rhs[i]) < 0) {
                sign_[i] = -1;
            }
            for (std::size_t j = 0; j < n_; ++j) {
                tableau_[i][j] = sign_[i] * rows[i][j];
            }
            tableau_[i][n_ + i] = 1;
            tableau_[i][n_ + m_] = sign_[i] * rhs[i];
            basis_[i] = n_ + i;
        }
    }

    void run() {
        const std::size_t total = n_ + m_;
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < total; ++j) {
                if (sgn(reduced_cost(j)) < 0) {
                    entering = j;
                    break;
                }
            }
            if (!entering) {
                return;
            }
            std::optional<std::size_t> leaving;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                const Rational& a = tableau_[i][*entering];
                if (sgn(a) <= 0) {
                    continue;
                }
                Rational ratio = tableau_[i][total] / a;
                if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
                    leaving = i;
                    best = ratio;
                }
            }
            // Phase-1 objective is bounded below by 0, so a leaving row always exists.
            pivot(*leaving, *entering);
        }
    }

    Rational objective() const {
        Rational sum = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) {
                sum += tableau_[i][n_ + m_];
            }
        }
        return sum;
    }

    RationalVector structural_values() const {
        RationalVector x(n_);
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) {
                x[basis_[i]] = tableau_[i][n_ + m_];
            }
        }
        return x;
    }

    /// y = D * (c_B^T B^{-1})^T, read off the artificial columns.
    RationalVector farkas() const {
        RationalVector y(m_);
        for (std::size_t col = 0; col < m_; ++col) {
            Rational pi = 0;
            for (std::size_t k = 0; k < m_; ++k) {
                if (basis_[k] >= n_) {
                    pi += tableau_[k][n_ + col];
                }
            }
            y[col] = sign_[col] * pi;
        }
        return y;
    }

private:
    Rational reduced_cost(std::size_t j) const {
        Rational d = j >= n_ ? 1 : 0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) {
                d -= tableau_[i][j];
            }
        }
        return d;
    }

    void pivot(std::size_t row, std::size_t col) {
        const std::size_t width = n_ + m_ + 1;
        Rational inv = 1 / tableau_[row][col];
        for (std::size_t j = 0; j < width; ++j) {
            tableau_[row][j] *= inv;
        }
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || sgn(tableau_[i][col]) == 0) {
                continue;
            }
            Rational factor = tableau_[i][col];
            for (std::size_t j = 0; j < width; ++j) {
                if (sgn(tableau_[row][j]) != 0) {
                    tableau_[i][j] -= factor * tableau_[row][j];
                }
            }
        }
        basis_[row] = col;
    }

    std::size_t m_;
    std::size_t n_ = 0;
    std::vector<int> sign_;
    std::vector<RationalVector> tableau_;
    std::vector<std::size_t> basis_;
};

}  // namespace

FeasibilityResult solve(const FeasibilityQuery& query) {
    validate(query);
    const RationalMatrix& a = query.matrix;
    std::vector<bool> zero(a.cols(), false);
    std::vector<bool> one(a.cols(), false);
    for (std::size_t i : query.zero_set) {
        zero[i] = true;
    }
    for (std::size_t j : query.one_set) {
        one[j] = true;
    }

    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!zero[j]) {
            kept.push_back(j);
        }
    }

    // v_j = u_j + [j in one_set], so A' u = -A 1_O.
    std::vector<RationalVector> rows(a.rows(), RationalVector(kept.size()));
    RationalVector rhs(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < kept.size(); ++k) {
            rows[i][k] = a(i, kept[k]);
            if (one[kept[k]]) {
                rhs[i] -= a(i, kept[k]);
            }
        }
    }

    Phase1 lp(std::move(rows), std::move(rhs));
    lp.run();

    FeasibilityResult result;
    if (sgn(lp.objective()) == 0) {
        RationalVector u = lp.structural_values();
        RationalVector v(a.cols());
        for (std::size_t k = 0; k < kept.size(); ++k) {
            v[kept[k]] = u[k] + (one[kept[k]] ? 1 : 0);
        }
        result.status = FeasibilityStatus::Feasible;
        result.witness = to_primitive_integer(v);
        if (!verify_witness(query, *result.witness)) {
            throw std::logic_error("simplex produced an invalid witness");
        }
    } else {
        result.status = FeasibilityStatus::Infeasible;
        result.certificate = to_primitive_integer(lp.farkas());
        if (!verify_certificate(query, *result.certificate)) {
            throw std::logic_error("simplex produced an invalid Farkas certificate");
        }
    }
    return result;
}

FeasibilityResult full_support_feasible(const RationalMatrix& a, InvariantSide side) {
    FeasibilityQuery q;
    q.matrix = side == InvariantSide::Columns ? a : a.transposed();
    q.one_set.resize(q.matrix.cols());
    std::iota(q.one_set.begin(), q.one_set.end(), std::size_t{0});
    return solve(q);
}

bool verify_witness(const FeasibilityQuery& query, std::span<const Rational> v) {
    const RationalMatrix& a = query.matrix;
    if (v.size() != a.cols()) {
        return false;
    }
    if (std::any_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) < 0; })) {
        return false;
    }
    for (std::size_t i : query.zero_set) {
        if (sgn(v[i]) != 0) {
            return false;
        }
    }
    for (std::size_t j : query.one_set) {
        if (v[j] < 1) {
            return false;
        }
    }
    return is_zero_vector(a.apply(v));
}

bool verify_certificate(const FeasibilityQuery& query, std::span<const Rational> y) {
    const RationalMatrix& a = query.matrix;
    if (y.size() != a.rows()) {
        return false;
    }
    std::vector<bool> zero(a.cols(), false);
    for (std::size_t i : query.zero_set) {
        zero[i] = true;
    }
    std::vector<bool> one(a.cols(), false);
    for (std::size_t j : query.one_set) {
        one[j] = true;
    }
    Rational one_sum = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (zero[j]) {
            continue;
        }
        Rational dot = 0;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            dot += y[i] * a(i, j);
        }
        if (sgn(dot) > 0) {
            return false;
        }
        if (one[j]) {
            one_sum += dot;
        }
    }
    return sgn(one_sum) < 0;
}

}  // namespace crnscope
