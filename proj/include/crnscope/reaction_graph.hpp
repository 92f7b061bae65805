#pragma once

#include "crnscope/linalg.hpp"
#include "crnscope/model.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace crnscope {

/// Digraph on the complexes of a CRN with one edge per reaction.
struct ReactionGraph {
    /// Distinct complexes in first-occurrence order (reactant before product).
    std::vector<ComplexVector> vertices;
    std::vector<std::string> vertex_labels;
    /// Per reaction: vertex index of in(r) and out(r).
    std::vector<std::size_t> source;
    std::vector<std::size_t> target;
    /// V x R digraph incidence; self-loop columns are zero.
    RationalMatrix incidence;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const { return source.size(); }
    std::optional<std::size_t> vertex_index(const ComplexVector& c) const;
};

ReactionGraph build_reaction_graph(const Crn& crn);

/// Number of weakly connected components (linkage classes).
std::size_t connected_components(const ReactionGraph& g);

struct Scc {
    std::vector<std::size_t> vertices;
    /// Edges with both endpoints inside (including self-loops).
    std::vector<std::size_t> edges;
    /// out(X): edges leaving the component.
    std::vector<std::size_t> out_edges;
    bool terminal = false;
};

struct SccDecomposition {
    std::vector<std::size_t> scc_of_vertex;
    /// Numbered by smallest member vertex index.
    std::vector<Scc> components;
    /// Edges between distinct components, ascending.
    std::vector<std::size_t> bridges;
    /// Distinct (from, to) component pairs, ascending.
    std::vector<std::pair<std::size_t, std::size_t>> condensation_edges;
    std::vector<bool> terminal_vertex;
    std::vector<bool> terminal_reaction;
    std::vector<bool> bridge;

    std::vector<std::size_t> nonterminal_components() const;
};

SccDecomposition scc_decompose(const ReactionGraph& g);

/// X <=_d Y iff some vertex of X is entrywise <= some vertex of Y; the
/// pairwise relation is closed reflexively and transitively.
struct DominanceOrder {
    std::vector<std::vector<bool>> leq;
    /// X != Y with X <=_d Y <=_d X, if any (impossible in structurally bounded nets).
    std::optional<std::pair<std::size_t, std::size_t>> antisymmetry_violation;

    bool le(std::size_t x, std::size_t y) const { return leq[x][y]; }
    /// All (X, Y) with X <=_d Y and X != Y, ascending.
    std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;
};

DominanceOrder dominance_order(const ReactionGraph& g, const SccDecomposition& sccs);

class NotAPartialOrder : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// min over <=_d of the non-terminal components. Throws NotAPartialOrder
/// when the dominance relation is not antisymmetric.
std::vector<std::size_t> minimal_nonterminal_sccs(const DominanceOrder& d, const SccDecomposition& sccs);

/// One outgoing bridge per component of the minimal set, aligned with it.
struct ExitSet {
    std::vector<std::size_t> bridges;
};

/// Lazy cartesian product of out(X) over the minimal components, in
/// odometer order (last component varies fastest).
class ExitSetEnumerator {
public:
    ExitSetEnumerator(std::vector<std::vector<std::size_t>> choices, std::size_t cap);

    /// Next exit set, or nullopt when exhausted or when cap sets were produced.
    std::optional<ExitSet> next();
    /// True once next() stopped because of the cap while sets remained.
    bool cap_exceeded() const { return cap_exceeded_; }
    std::size_t produced() const { return produced_; }

private:
    std::vector<std::vector<std::size_t>> choices_;
    std::vector<std::size_t> position_;
    std::size_t cap_;
    std::size_t produced_ = 0;
    bool exhausted_ = false;
    bool cap_exceeded_ = false;
};

constexpr std::size_t kDefaultExitSetCap = 10000;

ExitSetEnumerator enumerate_exit_sets(const std::vector<std::size_t>& minimal, const SccDecomposition& sccs,
                                      std::size_t cap = kDefaultExitSetCap);

/// prod |out(X)| over the minimal components.
BigInt exit_set_count(const std::vector<std::size_t>& minimal, const SccDecomposition& sccs);

/// Non-terminal reactions r with some non-terminal r' such that in(r') < in(r).
std::vector<std::size_t> l_reactions(const ReactionGraph& g, const SccDecomposition& sccs);

/// Non-terminal vertices v with some non-terminal vertex v' < v.
std::vector<std::size_t> l_vertices(const ReactionGraph& g, const SccDecomposition& sccs);

/// Everything the checkers need about the reaction graph, computed once.
struct GraphAnalysis {
    ReactionGraph graph;
    SccDecomposition sccs;
    DominanceOrder dominance;
    /// Empty optional when dominance is not a partial order.
    std::optional<std::vector<std::size_t>> minimal;
    std::vector<std::size_t> l_reaction_set;
    std::vector<std::size_t> l_vertex_set;
    std::size_t linkage_classes = 0;
};

GraphAnalysis analyze_graph(const Crn& crn);

}  // namespace crnscope
