#include "crnscope/reaction_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace crnscope {

std::optional<std::size_t> ReactionGraph::vertex_index(const ComplexVector& c) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] == c) {
            return i;
        }
    }
    return std::nullopt;
}

ReactionGraph build_reaction_graph(const Crn& crn) {
    ReactionGraph g;
    std::map<ComplexVector, std::size_t, ComplexVector::LexLess> index;
    auto intern = [&](const ComplexVector& c) {
        auto [it, inserted] = index.emplace(c, g.vertices.size());
        if (inserted) {
            g.vertices.push_back(c);
            g.vertex_labels.push_back(format_complex(crn, c));
        }
        return it->second;
    };
    for (const auto& r : crn.reactions()) {
        g.source.push_back(intern(r.reactant));
        g.target.push_back(intern(r.product));
    }
    std::vector<std::string> reaction_names;
    for (const auto& r : crn.reactions()) {
        reaction_names.push_back(r.name);
    }
    g.incidence = RationalMatrix(g.vertex_labels, reaction_names);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (g.source[e] != g.target[e]) {
            g.incidence(g.source[e], e) = -1;
            g.incidence(g.target[e], e) = 1;
        }
    }
    return g;
}

std::size_t connected_components(const ReactionGraph& g) {
    std::vector<std::size_t> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::size_t components = g.vertex_count();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        std::size_t a = find(g.source[e]);
        std::size_t b = find(g.target[e]);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

namespace {

struct Tarjan {
    const std::vector<std::vector<std::size_t>>& successors;
    std::vector<int> index;
    std::vector<int> lowlink;
    std::vector<bool> on_stack;
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> components;
    int counter = 0;

    explicit Tarjan(const std::vector<std::vector<std::size_t>>& succ)
        : successors(succ), index(succ.size(), -1), lowlink(succ.size(), -1), on_stack(succ.size(), false) {}

    void visit(std::size_t v) {
        index[v] = lowlink[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (std::size_t w : successors[v]) {
            if (index[w] == -1) {
                visit(w);
                lowlink[v] = std::min(lowlink[v], lowlink[w]);
            } else if (on_stack[w]) {
                lowlink[v] = std::min(lowlink[v], index[w]);
            }
        }
        if (lowlink[v] == index[v]) {
            std::vector<std::size_t> component;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                component.push_back(w);
            } while (w != v);
            components.push_back(std::move(component));
        }
    }
};

}  // namespace

std::vector<std::size_t> SccDecomposition::nonterminal_components() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (!components[i].terminal) {
            out.push_back(i);
        }
    }
    return out;
}

SccDecomposition scc_decompose(const ReactionGraph& g) {
    std::vector<std::vector<std::size_t>> successors(g.vertex_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        successors[g.source[e]].push_back(g.target[e]);
    }
    Tarjan tarjan(successors);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (tarjan.index[v] == -1) {
            tarjan.visit(v);
        }
    }
    auto raw = std::move(tarjan.components);
    for (auto& c : raw) {
        std::sort(c.begin(), c.end());
    }
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

    SccDecomposition d;
    d.scc_of_vertex.resize(g.vertex_count());
    d.components.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        d.components[i].vertices = raw[i];
        for (std::size_t v : raw[i]) {
            d.scc_of_vertex[v] = i;
        }
    }
    d.bridge.assign(g.edge_count(), false);
    std::set<std::pair<std::size_t, std::size_t>> condensation;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        std::size_t from = d.scc_of_vertex[g.source[e]];
        std::size_t to = d.scc_of_vertex[g.target[e]];
        if (from == to) {
            d.components[from].edges.push_back(e);
        } else {
            d.components[from].out_edges.push_back(e);
            d.bridges.push_back(e);
            d.bridge[e] = true;
            condensation.emplace(from, to);
        }
    }
    d.condensation_edges.assign(condensation.begin(), condensation.end());
    d.terminal_vertex.assign(g.vertex_count(), false);
    d.terminal_reaction.assign(g.edge_count(), false);
    for (auto& c : d.components) {
        c.terminal = c.out_edges.empty();
        if (c.terminal) {
            for (std::size_t v : c.vertices) {
                d.terminal_vertex[v] = true;
            }
            for (std::size_t e : c.edges) {
                d.terminal_reaction[e] = true;
            }
        }
    }
    return d;
}

std::vector<std::pair<std::size_t, std::size_t>> DominanceOrder::strict_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < leq.size(); ++x) {
        for (std::size_t y = 0; y < leq.size(); ++y) {
            if (x != y && leq[x][y]) {
                out.emplace_back(x, y);
            }
        }
    }
    return out;
}

DominanceOrder dominance_order(const ReactionGraph& g, const SccDecomposition& sccs) {
    const std::size_t n = sccs.components.size();
    DominanceOrder d;
    d.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) {
        d.leq[x][x] = true;
    }
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (u != v && entrywise_le(g.vertices[u], g.vertices[v])) {
                d.leq[sccs.scc_of_vertex[u]][sccs.scc_of_vertex[v]] = true;
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!d.leq[i][k]) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (d.leq[k][j]) {
                    d.leq[i][j] = true;
                }
            }
        }
    }
    for (std::size_t x = 0; x < n && !d.antisymmetry_violation; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            if (d.leq[x][y] && d.leq[y][x]) {
                d.antisymmetry_violation = std::make_pair(x, y);
                break;
            }
        }
    }
    return d;
}

std::vector<std::size_t> minimal_nonterminal_sccs(const DominanceOrder& d, const SccDecomposition& sccs) {
    if (d.antisymmetry_violation) {
        throw NotAPartialOrder("dominance relation is not antisymmetric (components " +
                               std::to_string(d.antisymmetry_violation->first) + " and " +
                               std::to_string(d.antisymmetry_violation->second) + ")");
    }
    std::vector<std::size_t> nonterminal = sccs.nonterminal_components();
    std::vector<std::size_t> out;
    for (std::size_t x : nonterminal) {
        bool minimal = std::none_of(nonterminal.begin(), nonterminal.end(),
                                    [&](std::size_t y) { return y != x && d.le(y, x); });
        if (minimal) {
            out.push_back(x);
        }
    }
    return out;
}

ExitSetEnumerator::ExitSetEnumerator(std::vector<std::vector<std::size_t>> choices, std::size_t cap)
    : choices_(std::move(choices)), position_(choices_.size(), 0), cap_(cap) {
    exhausted_ = std::any_of(choices_.begin(), choices_.end(), [](const auto& c) { return c.empty(); });
}

std::optional<ExitSet> ExitSetEnumerator::next() {
    if (exhausted_) {
        return std::nullopt;
    }
    if (produced_ >= cap_) {
        cap_exceeded_ = true;
        return std::nullopt;
    }
    ExitSet z;
    z.bridges.reserve(choices_.size());
    for (std::size_t i = 0; i < choices_.size(); ++i) {
        z.bridges.push_back(choices_[i][position_[i]]);
    }
    ++produced_;
    std::size_t i = choices_.size();
    for (;;) {
        if (i == 0) {
            exhausted_ = true;
            break;
        }
        --i;
        if (++position_[i] < choices_[i].size()) {
            break;
        }
        position_[i] = 0;
    }
    return z;
}

ExitSetEnumerator enumerate_exit_sets(const std::vector<std::size_t>& minimal, const SccDecomposition& sccs,
                                      std::size_t cap) {
    std::vector<std::vector<std::size_t>> choices;
    for (std::size_t x : minimal) {
        choices.push_back(sccs.components[x].out_edges);
    }
    return ExitSetEnumerator(std::move(choices), cap);
}

BigInt exit_set_count(const std::vector<std::size_t>& minimal, const SccDecomposition& sccs) {
    BigInt count = 1;
    for (std::size_t x : minimal) {
        count *= static_cast<unsigned long>(sccs.components[x].out_edges.size());
    }
    return count;
}

std::vector<std::size_t> l_reactions(const ReactionGraph& g, const SccDecomposition& sccs) {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < g.edge_count(); ++r) {
        if (sccs.terminal_reaction[r]) {
            continue;
        }
        for (std::size_t s = 0; s < g.edge_count(); ++s) {
            if (!sccs.terminal_reaction[s] && entrywise_lt(g.vertices[g.source[s]], g.vertices[g.source[r]])) {
                out.push_back(r);
                break;
            }
        }
    }
    return out;
}

std::vector<std::size_t> l_vertices(const ReactionGraph& g, const SccDecomposition& sccs) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (sccs.terminal_vertex[v]) {
            continue;
        }
        for (std::size_t u = 0; u < g.vertex_count(); ++u) {
            if (!sccs.terminal_vertex[u] && entrywise_lt(g.vertices[u], g.vertices[v])) {
                out.push_back(v);
                break;
            }
        }
    }
    return out;
}

GraphAnalysis analyze_graph(const Crn& crn) {
    GraphAnalysis a;
    a.graph = build_reaction_graph(crn);
    a.sccs = scc_decompose(a.graph);
    a.dominance = dominance_order(a.graph, a.sccs);
    if (!a.dominance.antisymmetry_violation) {
        a.minimal = minimal_nonterminal_sccs(a.dominance, a.sccs);
    }
    a.l_reaction_set = l_reactions(a.graph, a.sccs);
    a.l_vertex_set = l_vertices(a.graph, a.sccs);
    a.linkage_classes = connected_components(a.graph);
    return a;
}

}  // namespace crnscope
