#pragma once

#include "crnscope/analysis.hpp"
#include "crnscope/oracle.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crnscope {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "0.1.0";

/// "fnv1a64:" followed by 16 hex digits.
std::string input_digest(std::string_view bytes);

/// Integers become JSON numbers when they fit in 64 bits, otherwise strings;
/// fractions are rendered as "p/q" strings.
nlohmann::json rational_json(const Rational& q);
nlohmann::json vector_json(std::span<const Rational> v);
/// Sparse object keyed by label, zero entries omitted.
nlohmann::json labelled_json(std::span<const Rational> v, const std::vector<std::string>& labels);

struct AnalyzeOptions {
    DominanceCheckOptions dominance;
    /// Rate vectors for the rate-based check, evaluated in order.
    std::vector<std::pair<std::string, RateVector>> rates;
    /// When set, the oracle validates the verdicts on every configuration
    /// with at most this many molecules.
    std::optional<std::size_t> oracle_total;
    ExploreCaps caps;
};

struct Analysis {
    Crn crn;
    GraphAnalysis graph;
    MatrixBundle bundle;
    StructuralProfile profile;
    DominanceVerdict dominance;
    DominanceVerdict deficiency_one;
    AndersonSummary anderson;
    std::optional<ValidationOutcome> oracle;
    std::size_t oracle_total = 0;
};

/// Verdict status used for validation: Holds if any checker holds.
VerdictStatus strongest_verdict(const Analysis& a);

Analysis run_analysis(Crn crn, const AnalyzeOptions& options);

nlohmann::json analysis_json(const Analysis& a, std::string_view digest);
std::string analysis_text(const Analysis& a, std::string_view digest);

nlohmann::json anderson_json(const Analysis& a, std::string_view digest);
std::string anderson_text(const Analysis& a, std::string_view digest);

struct InvariantOptions {
    InvariantKind kind = InvariantKind::T;
    bool basis = false;
    /// Restrict to closed T-invariants (the kernel of the graph incidence).
    bool closed_only = false;
};

nlohmann::json invariants_json(const Crn& crn, const InvariantOptions& options, std::string_view digest);
std::string invariants_text(const Crn& crn, const InvariantOptions& options, std::string_view digest);

struct ReachResult {
    ComplexVector init;
    ConfigurationGraph graph;
    std::optional<RecurrenceReport> recurrence;
    /// Per exit set, when a witness search was requested.
    std::vector<std::pair<ExitSet, std::optional<Theorem1Witness>>> witnesses;
};

nlohmann::json reach_json(const Crn& crn, const GraphAnalysis& graph, const ReachResult& r, std::string_view digest);
std::string reach_text(const Crn& crn, const GraphAnalysis& graph, const ReachResult& r, std::string_view digest);

/// Require an analysis run with oracle_total set.
nlohmann::json validation_json(const Analysis& a, std::string_view digest);
std::string validation_text(const Analysis& a, std::string_view digest);

}  // namespace crnscope
