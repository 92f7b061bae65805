#pragma once

#include "crnscope/linalg.hpp"
#include "crnscope/lp.hpp"
#include "crnscope/model.hpp"
#include "crnscope/reaction_graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crnscope {

/// I_N (species x reactions), Y_N (species x complexes) and the reaction
/// graph incidence R_N (complexes x reactions). I_N = Y_N R_N always.
struct MatrixBundle {
    RationalMatrix incidence_I;
    RationalMatrix complex_Y;
    RationalMatrix graph_R;
    std::size_t rank_I = 0;
    std::size_t rank_R = 0;
};

MatrixBundle build_matrices(const Crn& crn, const ReactionGraph& graph);
MatrixBundle build_matrices(const Crn& crn);

enum class Boundedness { ProvedByConservativity, ProvedExact, RefutedExact, Unknown };

std::string_view to_string(Boundedness b);
bool is_bounded(Boundedness b);

struct StructuralProfile {
    bool conservative = false;
    /// Strictly positive P-invariant when conservative.
    std::optional<RationalVector> conservation_witness;
    bool consistent = false;
    /// Strictly positive T-invariant when consistent.
    std::optional<RationalVector> consistency_witness;
    Boundedness structurally_bounded = Boundedness::Unknown;
    /// Weight vector y >= 1 with y^T I_N <= 0 when decided by the dual LP.
    std::optional<RationalVector> boundedness_witness;
    std::size_t deficiency = 0;
};

/// Conservativity and consistency come from full-support invariant LPs.
/// Structural boundedness is taken from conservativity when possible and
/// otherwise decided by the classical test: exists y >= 1 with y^T I_N <= 0.
StructuralProfile structural_profile(const Crn& crn, const MatrixBundle& bundle);

class NotATInvariant : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// True iff graph_R v = 0. Throws NotATInvariant unless I_N v = 0 and v >= 0.
bool is_closed_t_invariant(const ParikhVector& v, const MatrixBundle& bundle);
bool is_closed_t_invariant(std::span<const Rational> v, const MatrixBundle& bundle);

enum class VerdictStatus { Holds, Inconclusive, NotApplicable };

std::string_view to_string(VerdictStatus s);

/// A feasible invariant that defeated an exit set (or a rate vector).
struct FeasibleEvidence {
    std::vector<std::size_t> exit_set;
    /// The bridge z (or vertex y for the rate-based check) forced positive.
    std::size_t forced = 0;
    RationalVector invariant;
};

/// Farkas certificate refuting one query of the winning exit set.
struct InfeasibleEvidence {
    std::size_t forced = 0;
    /// Empty when the query was contradictory by construction (forced index in the zero set).
    RationalVector farkas;
};

/// Outcome shared by the three checkers.
struct DominanceVerdict {
    VerdictStatus status = VerdictStatus::NotApplicable;
    std::string reason;

    // Dominance check.
    std::optional<ExitSet> witness_exit_set;
    std::vector<std::size_t> zero_set;
    std::vector<InfeasibleEvidence> certificates;
    std::vector<FeasibleEvidence> failed;
    std::size_t exit_sets_examined = 0;
    bool cap_exceeded = false;
    bool strengthened = false;

    // Deficiency-one check: satisfied hypotheses in evaluation order.
    std::vector<std::string> hypotheses;
    std::optional<std::string> failed_hypothesis;
    /// Non-terminal vertices x < y witnessing the last hypothesis.
    std::optional<std::pair<std::size_t, std::size_t>> comparable_vertices;

    bool holds() const { return status == VerdictStatus::Holds; }
};

struct DominanceCheckOptions {
    std::size_t max_exit_sets = kDefaultExitSetCap;
    /// Additionally require that the non-terminal reactions of a qualifying
    /// invariant can be arranged into walks ending at terminal vertices
    /// (inflow <= outflow at every non-terminal complex).
    bool strengthened = false;
};

/// For each exit set Z, asks whether a T-invariant v exists with v = 0 on
/// (B \ Z) u L and v(z) >= 1 for some z in Z. Holds as soon as one Z
/// admits none.
DominanceVerdict dominance_check(const Crn& crn, const MatrixBundle& bundle, const StructuralProfile& profile,
                                 const GraphAnalysis& graph, const DominanceCheckOptions& options = {});

/// Structurally bounded, consistent, deficiency one, and two comparable
/// non-terminal complexes x < y.
DominanceVerdict deficiency_one_check(const Crn& crn, const MatrixBundle& bundle, const StructuralProfile& profile,
                                      const GraphAnalysis& graph);

/// Positive reaction rates, one per reaction.
struct RateVector {
    std::vector<Rational> kappa;
};

RateVector uniform_rates(const Crn& crn);
/// Deterministic rational samples p/q with p, q in [1, 20].
std::vector<RateVector> sample_rates(const Crn& crn, std::size_t count, std::uint64_t seed);

/// Rate file: one "reaction = rational" per line, '#' comments. Missing
/// reactions default to 1 only when uniform_fill is set.
RateVector parse_rates(std::string_view text, const Crn& crn, bool uniform_fill);

/// S x V matrix; the column of complex x is sum over in(r) = x of kappa(r) (out(r) - in(r)).
RationalMatrix build_k_matrix(const Crn& crn, const ReactionGraph& graph, const RateVector& rates);

/// Rate-based condition for one kappa: Holds when no w >= 0 in ker K has
/// w = 0 on the vertex L-set and w(y) > 0 for a non-terminal y.
DominanceVerdict anderson_check(const Crn& crn, const StructuralProfile& profile, const GraphAnalysis& graph,
                                const RateVector& rates);

struct AndersonRun {
    std::string label;
    RateVector rates;
    DominanceVerdict verdict;
};

struct AndersonSummary {
    std::vector<AndersonRun> runs;
    /// Holds if any kappa certifies the property (one suffices); NotApplicable
    /// if the hypotheses fail; Inconclusive otherwise.
    VerdictStatus aggregate = VerdictStatus::NotApplicable;
    std::size_t holds_count = 0;
};

AndersonSummary anderson_sweep(const Crn& crn, const StructuralProfile& profile, const GraphAnalysis& graph,
                               const std::vector<std::pair<std::string, RateVector>>& rate_vectors);

enum class InvariantKind { T, P };

struct InvariantBasisEntry {
    RationalVector vector;
    /// T-invariant basis vectors only: graph_R v = 0.
    bool closed = false;
    bool nonnegative = false;
};

struct InvariantSummary {
    InvariantKind kind = InvariantKind::T;
    std::vector<InvariantBasisEntry> basis;
    /// Indices carried by some nonnegative invariant.
    std::vector<std::size_t> semipositive_support;
    /// Full-support invariant, if one exists.
    std::optional<RationalVector> positive_witness;
};

InvariantSummary invariant_summary(const MatrixBundle& bundle, InvariantKind kind);

/// Greedy walk decomposition of the non-terminal part of v: true iff the
/// occurrences of non-terminal reactions split into walks that each end at
/// a terminal complex.
bool decomposes_into_terminal_walks(const GraphAnalysis& graph, std::span<const Rational> v);

}  // namespace crnscope
