#pragma once

#include "crnscope/analysis.hpp"
#include "crnscope/model.hpp"
#include "crnscope/reaction_graph.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace crnscope {

/// Dense count tuple in species order.
using Configuration = std::vector<std::uint32_t>;

struct ConfigurationHash {
    std::size_t operator()(const Configuration& c) const noexcept;
};

struct ExploreCaps {
    std::size_t max_states = 200000;
    std::uint32_t max_count = 64;
};

struct Arc {
    std::size_t from = 0;
    std::size_t reaction = 0;
    std::size_t to = 0;
};

struct ConfigurationGraph {
    std::vector<Configuration> nodes;
    std::vector<std::size_t> roots;
    /// Grouped by source node in exploration order; within a node, by reaction.
    std::vector<Arc> arcs;
    /// Per node: index range [arc_begin[n], arc_begin[n + 1]) into arcs.
    std::vector<std::size_t> arc_begin;
    bool truncated = false;
    std::string truncation_reason;

    std::optional<std::size_t> find(const Configuration& c) const;
    std::size_t node_count() const { return nodes.size(); }

    std::unordered_map<Configuration, std::size_t, ConfigurationHash> index;
};

Configuration to_configuration(const ComplexVector& c, std::size_t species_count);
ComplexVector to_complex(const Configuration& c);

/// FIFO exploration with reactions tried in declaration order. A successor
/// with a count above max_count, or one that would exceed max_states, is
/// dropped and the graph is marked truncated.
ConfigurationGraph explore(const Crn& crn, const ComplexVector& root, const ExploreCaps& caps = {});
ConfigurationGraph explore(const Crn& crn, const std::vector<ComplexVector>& roots, const ExploreCaps& caps = {});

class Truncated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RecurrentConfiguration {
    std::size_t node = 0;
    std::vector<std::size_t> enabled;
    std::vector<std::size_t> nonterminal_enabled;
};

struct RecurrenceReport {
    /// Bottom SCCs of the configuration graph, each sorted, ordered by first node.
    std::vector<std::vector<std::size_t>> bottom_components;
    /// All recurrent nodes ascending.
    std::vector<RecurrentConfiguration> recurrent;
    std::vector<bool> is_recurrent;
    bool any_nonterminal_fires = false;
};

/// Throws Truncated when the graph is incomplete.
RecurrenceReport recurrent_configurations(const ConfigurationGraph& g, const GraphAnalysis& graph);

/// Every configuration with total molecule count <= total, by total then
/// lexicographically descending on species order.
std::vector<ComplexVector> configurations_up_to(std::size_t species_count, std::size_t total);

struct Counterexample {
    ComplexVector init;
    ComplexVector configuration;
    std::size_t reaction = 0;
};

struct ValidationOutcome {
    bool passed = true;
    bool vacuous = false;
    std::size_t inits_checked = 0;
    std::vector<ComplexVector> skipped;
    std::size_t states_explored = 0;
    std::optional<Counterexample> counterexample;
};

/// Checks that no recurrent configuration reachable from any init enables a
/// non-terminal reaction, provided the verdict is Holds.
ValidationOutcome validate_prediction(const Crn& crn, const GraphAnalysis& graph, VerdictStatus verdict,
                                      const std::vector<ComplexVector>& inits, const ExploreCaps& caps = {});

struct WitnessSearchOptions {
    std::size_t max_length = 32;
    /// Only start cycles at recurrent configurations.
    bool recurrent_only = true;
    /// Restrict start configurations to these nodes; empty means all.
    std::vector<std::size_t> start_nodes;
};

struct Theorem1Witness {
    std::size_t node = 0;
    std::vector<std::size_t> sequence;
};

/// Shortest cycle c' ->tau c' avoiding (B \ Z) u L whose labels split as
/// pi_1 sigma_1 ... pi_n sigma_n (n >= 1), each pi_i a simple path in the
/// reaction graph from a non-terminal to a terminal complex and each sigma_i
/// terminal-only. Start nodes are tried in ascending order.
std::optional<Theorem1Witness> find_theorem1_witness(const Crn& crn, const ConfigurationGraph& g,
                                                     const RecurrenceReport& recurrence, const ExitSet& z,
                                                     const GraphAnalysis& graph,
                                                     const WitnessSearchOptions& options = {});

/// One arc per line: "src<TAB>reaction<TAB>dst".
void dump_graph(std::ostream& out, const Crn& crn, const ConfigurationGraph& g);

}  // namespace crnscope
