#pragma once

#include "crnscope/linalg.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace crnscope {

/// Homogeneous feasibility question
///
///     A v = 0,  v >= 0,  v_i = 0 for i in zero_set,  v_j >= 1 for j in one_set.
///
/// Strict positivity v_j > 0 is always posed as v_j >= 1: the solution set
/// without the one_set bounds is a cone, so any v with v_j > 0 rescales to
/// one with v_j >= 1.
struct FeasibilityQuery {
    RationalMatrix matrix;
    std::vector<std::size_t> zero_set;
    std::vector<std::size_t> one_set;
};

enum class FeasibilityStatus { Feasible, Infeasible };

struct FeasibilityResult {
    FeasibilityStatus status = FeasibilityStatus::Infeasible;
    /// Present iff feasible; coprime nonnegative integers, one entry per column.
    std::optional<RationalVector> witness;
    /// Present iff infeasible; one entry per row. Farkas vector y with
    /// y^T A_j <= 0 for every column j outside zero_set and
    /// sum over j in one_set of y^T A_j < 0.
    std::optional<RationalVector> certificate;

    bool feasible() const { return status == FeasibilityStatus::Feasible; }
};

class QueryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Phase-1 exact simplex with Bland's rule (lowest-index entering variable,
/// lowest-index basic variable on ratio ties).
FeasibilityResult solve(const FeasibilityQuery& query);

enum class InvariantSide { Rows, Columns };

/// Columns: exists v >= 1 with A v = 0. Rows: exists v >= 1 with v^T A = 0.
FeasibilityResult full_support_feasible(const RationalMatrix& a, InvariantSide side);

bool verify_witness(const FeasibilityQuery& query, std::span<const Rational> v);
bool verify_certificate(const FeasibilityQuery& query, std::span<const Rational> y);

}  // namespace crnscope
