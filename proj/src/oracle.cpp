#include "crnscope/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

namespace crnscope {

std::size_t ConfigurationHash::operator()(const Configuration& c) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint32_t x : c) {
        h ^= x;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

std::optional<std::size_t> ConfigurationGraph::find(const Configuration& c) const {
    auto it = index.find(c);
    if (it == index.end()) {
        return std::nullopt;
    }
    return it->second;
}

Configuration to_configuration(const ComplexVector& c, std::size_t species_count) {
    Configuration out(species_count, 0);
    for (const auto& [s, count] : c.entries()) {
        if (s >= species_count) {
            throw std::out_of_range("species index out of range");
        }
        if (!count.fits_uint_p() || count.get_ui() > std::numeric_limits<std::uint32_t>::max()) {
            throw std::out_of_range("count too large for explicit exploration");
        }
        out[s] = static_cast<std::uint32_t>(count.get_ui());
    }
    return out;
}

ComplexVector to_complex(const Configuration& c) {
    std::vector<ComplexVector::Entry> entries;
    for (std::size_t s = 0; s < c.size(); ++s) {
        if (c[s] != 0) {
            entries.emplace_back(s, BigInt(static_cast<unsigned long>(c[s])));
        }
    }
    return ComplexVector::from_entries(std::move(entries));
}

namespace {

struct DenseReaction {
    Configuration consume;
    Configuration produce;
};

std::vector<DenseReaction> densify(const Crn& crn) {
    std::vector<DenseReaction> out;
    for (const auto& r : crn.reactions()) {
        out.push_back({to_configuration(r.reactant, crn.species_count()),
                       to_configuration(r.product, crn.species_count())});
    }
    return out;
}

bool within_count(const ComplexVector& c, std::uint32_t max_count) {
    return std::all_of(c.entries().begin(), c.entries().end(),
                       [&](const auto& e) { return e.second <= static_cast<unsigned long>(max_count); });
}

}  // namespace

ConfigurationGraph explore(const Crn& crn, const ComplexVector& root, const ExploreCaps& caps) {
    return explore(crn, std::vector<ComplexVector>{root}, caps);
}

ConfigurationGraph explore(const Crn& crn, const std::vector<ComplexVector>& roots, const ExploreCaps& caps) {
    if (caps.max_states == 0 || caps.max_count == 0) {
        throw std::invalid_argument("exploration caps must be positive");
    }
    const std::size_t ns = crn.species_count();
    const std::vector<DenseReaction> reactions = densify(crn);
    ConfigurationGraph g;
    auto truncate = [&](std::string reason) {
        if (!g.truncated) {
            g.truncated = true;
            g.truncation_reason = std::move(reason);
        }
    };
    auto intern = [&](Configuration c) -> std::optional<std::size_t> {
        if (auto it = g.index.find(c); it != g.index.end()) {
            return it->second;
        }
        if (g.nodes.size() >= caps.max_states) {
            truncate("state budget of " + std::to_string(caps.max_states) + " exhausted");
            return std::nullopt;
        }
        std::size_t id = g.nodes.size();
        g.index.emplace(c, id);
        g.nodes.push_back(std::move(c));
        return id;
    };

    for (const auto& root : roots) {
        if (!within_count(root, caps.max_count)) {
            truncate("initial configuration exceeds max_count");
            continue;
        }
        if (auto id = intern(to_configuration(root, ns))) {
            g.roots.push_back(*id);
        }
    }

    Configuration next(ns);
    for (std::size_t n = 0; n < g.nodes.size(); ++n) {
        g.arc_begin.push_back(g.arcs.size());
        for (std::size_t r = 0; r < reactions.size(); ++r) {
            const Configuration& c = g.nodes[n];
            bool enabled = true;
            bool overflow = false;
            for (std::size_t s = 0; s < ns; ++s) {
                if (c[s] < reactions[r].consume[s]) {
                    enabled = false;
                    break;
                }
                std::uint64_t value = std::uint64_t{c[s]} - reactions[r].consume[s] + reactions[r].produce[s];
                overflow = overflow || value > caps.max_count;
                next[s] = static_cast<std::uint32_t>(std::min<std::uint64_t>(value, caps.max_count));
            }
            if (!enabled) {
                continue;
            }
            if (overflow) {
                truncate("a species count exceeds " + std::to_string(caps.max_count));
                continue;
            }
            if (auto to = intern(next)) {
                g.arcs.push_back(Arc{n, r, *to});
            }
        }
    }
    g.arc_begin.push_back(g.arcs.size());
    return g;
}

namespace {

/// Iterative Tarjan; components numbered in completion order.
std::vector<std::size_t> configuration_sccs(const ConfigurationGraph& g, std::size_t& count) {
    const std::size_t n = g.node_count();
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> index(n, unvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<std::size_t> component(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call;
    std::size_t counter = 0;
    count = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (index[start] != unvisited) {
            continue;
        }
        call.emplace_back(start, g.arc_begin[start]);
        index[start] = low[start] = counter++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            if (pos < g.arc_begin[v + 1]) {
                std::size_t w = g.arcs[pos++].to;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, g.arc_begin[w]);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            std::size_t finished = v;
            call.pop_back();
            if (!call.empty()) {
                std::size_t parent = call.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
            if (low[finished] == index[finished]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component[w] = count;
                } while (w != finished);
                ++count;
            }
        }
    }
    return component;
}

}  // namespace

RecurrenceReport recurrent_configurations(const ConfigurationGraph& g, const GraphAnalysis& graph) {
    if (g.truncated) {
        throw Truncated("configuration graph is truncated: " + g.truncation_reason);
    }
    std::size_t count = 0;
    std::vector<std::size_t> component = configuration_sccs(g, count);
    std::vector<bool> bottom(count, true);
    for (const Arc& a : g.arcs) {
        if (component[a.from] != component[a.to]) {
            bottom[component[a.from]] = false;
        }
    }
    RecurrenceReport report;
    report.is_recurrent.assign(g.node_count(), false);
    std::map<std::size_t, std::size_t> slot;
    for (std::size_t n = 0; n < g.node_count(); ++n) {
        if (!bottom[component[n]]) {
            continue;
        }
        report.is_recurrent[n] = true;
        auto [it, inserted] = slot.emplace(component[n], report.bottom_components.size());
        if (inserted) {
            report.bottom_components.emplace_back();
        }
        report.bottom_components[it->second].push_back(n);

        RecurrentConfiguration rc;
        rc.node = n;
        for (std::size_t k = g.arc_begin[n]; k < g.arc_begin[n + 1]; ++k) {
            std::size_t r = g.arcs[k].reaction;
            rc.enabled.push_back(r);
            if (!graph.sccs.terminal_reaction[r]) {
                rc.nonterminal_enabled.push_back(r);
            }
        }
        report.any_nonterminal_fires = report.any_nonterminal_fires || !rc.nonterminal_enabled.empty();
        report.recurrent.push_back(std::move(rc));
    }
    return report;
}

namespace {

void compositions(std::size_t species, std::size_t remaining, std::vector<BigInt>& current,
                  std::vector<ComplexVector>& out) {
    std::size_t s = current.size();
    if (s + 1 == species) {
        current.emplace_back(static_cast<unsigned long>(remaining));
        out.push_back(ComplexVector::from_dense(current));
        current.pop_back();
        return;
    }
    for (std::size_t k = remaining + 1; k-- > 0;) {
        current.emplace_back(static_cast<unsigned long>(k));
        compositions(species, remaining - k, current, out);
        current.pop_back();
    }
}

bool reaches(const ConfigurationGraph& g, std::size_t from, std::size_t target) {
    std::vector<bool> seen(g.node_count(), false);
    std::deque<std::size_t> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        if (v == target) {
            return true;
        }
        for (std::size_t k = g.arc_begin[v]; k < g.arc_begin[v + 1]; ++k) {
            std::size_t w = g.arcs[k].to;
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return false;
}

std::optional<Counterexample> find_counterexample(const ConfigurationGraph& g, const RecurrenceReport& report,
                                                  const std::vector<ComplexVector>& inits, std::size_t ns) {
    for (const auto& rc : report.recurrent) {
        if (rc.nonterminal_enabled.empty()) {
            continue;
        }
        Counterexample ce;
        ce.configuration = to_complex(g.nodes[rc.node]);
        ce.reaction = rc.nonterminal_enabled.front();
        for (const auto& init : inits) {
            auto root = g.find(to_configuration(init, ns));
            if (root && reaches(g, *root, rc.node)) {
                ce.init = init;
                break;
            }
        }
        return ce;
    }
    return std::nullopt;
}

}  // namespace

std::vector<ComplexVector> configurations_up_to(std::size_t species_count, std::size_t total) {
    std::vector<ComplexVector> out;
    if (species_count == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<BigInt> current;
    for (std::size_t t = 0; t <= total; ++t) {
        compositions(species_count, t, current, out);
    }
    return out;
}

ValidationOutcome validate_prediction(const Crn& crn, const GraphAnalysis& graph, VerdictStatus verdict,
                                      const std::vector<ComplexVector>& inits, const ExploreCaps& caps) {
    ValidationOutcome outcome;
    if (verdict != VerdictStatus::Holds) {
        outcome.vacuous = true;
        return outcome;
    }
    const std::size_t ns = crn.species_count();
    ConfigurationGraph all = explore(crn, inits, caps);
    if (!all.truncated) {
        RecurrenceReport report = recurrent_configurations(all, graph);
        outcome.inits_checked = inits.size();
        outcome.states_explored = all.node_count();
        outcome.counterexample = find_counterexample(all, report, inits, ns);
        outcome.passed = !outcome.counterexample;
        return outcome;
    }
    for (const auto& init : inits) {
        ConfigurationGraph g = explore(crn, init, caps);
        outcome.states_explored += g.node_count();
        if (g.truncated) {
            outcome.skipped.push_back(init);
            continue;
        }
        ++outcome.inits_checked;
        RecurrenceReport report = recurrent_configurations(g, graph);
        if (auto ce = find_counterexample(g, report, {init}, ns)) {
            outcome.counterexample = std::move(ce);
            outcome.passed = false;
            return outcome;
        }
    }
    return outcome;
}

namespace {

constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

struct SearchState {
    std::size_t node;
    std::size_t at;  // reaction-graph vertex inside a path, or kFree
    bool used;
    std::vector<std::uint64_t> visited;

    auto operator<=>(const SearchState&) const = default;
};

}  // namespace

std::optional<Theorem1Witness> find_theorem1_witness(const Crn& crn, const ConfigurationGraph& g,
                                                     const RecurrenceReport& recurrence, const ExitSet& z,
                                                     const GraphAnalysis& graph,
                                                     const WitnessSearchOptions& options) {
    if (g.truncated) {
        throw Truncated("configuration graph is truncated: " + g.truncation_reason);
    }
    const ReactionGraph& rg = graph.graph;
    std::vector<bool> forbidden(crn.reaction_count(), false);
    for (std::size_t b : graph.sccs.bridges) {
        forbidden[b] = true;
    }
    for (std::size_t b : z.bridges) {
        forbidden[b] = false;
    }
    for (std::size_t l : graph.l_reaction_set) {
        forbidden[l] = true;
    }
    const std::size_t words = (rg.vertex_count() + 63) / 64;
    auto test = [](const std::vector<std::uint64_t>& mask, std::size_t v) { return (mask[v / 64] >> (v % 64)) & 1U; };
    auto with = [](std::vector<std::uint64_t> mask, std::size_t v) {
        mask[v / 64] |= std::uint64_t{1} << (v % 64);
        return mask;
    };

    std::vector<std::size_t> starts = options.start_nodes;
    if (starts.empty()) {
        starts.resize(g.node_count());
        std::iota(starts.begin(), starts.end(), std::size_t{0});
    }
    std::sort(starts.begin(), starts.end());
    for (std::size_t start : starts) {
        if (options.recurrent_only && !recurrence.is_recurrent[start]) {
            continue;
        }
        struct Entry {
            SearchState state;
            std::size_t parent;
            std::size_t reaction;
            std::size_t depth;
        };
        std::vector<Entry> entries;
        std::map<SearchState, std::size_t> seen;
        SearchState initial{start, kFree, false, std::vector<std::uint64_t>(words, 0)};
        seen.emplace(initial, 0);
        entries.push_back({initial, kFree, kFree, 0});
        for (std::size_t head = 0; head < entries.size(); ++head) {
            if (entries[head].depth >= options.max_length) {
                continue;
            }
            const SearchState cur = entries[head].state;
            for (std::size_t k = g.arc_begin[cur.node]; k < g.arc_begin[cur.node + 1]; ++k) {
                const Arc& arc = g.arcs[k];
                std::size_t r = arc.reaction;
                if (forbidden[r]) {
                    continue;
                }
                SearchState next{arc.to, kFree, cur.used, std::vector<std::uint64_t>(words, 0)};
                if (graph.sccs.terminal_reaction[r]) {
                    if (cur.at != kFree) {
                        continue;
                    }
                } else {
                    std::size_t from = rg.source[r];
                    std::size_t to = rg.target[r];
                    std::vector<std::uint64_t> mask;
                    if (cur.at == kFree) {
                        mask = with(std::vector<std::uint64_t>(words, 0), from);
                    } else if (cur.at == from) {
                        mask = cur.visited;
                    } else {
                        continue;
                    }
                    if (test(mask, to)) {
                        continue;
                    }
                    if (graph.sccs.terminal_vertex[to]) {
                        next.used = true;
                    } else {
                        next.at = to;
                        next.visited = with(std::move(mask), to);
                    }
                }
                if (next.node == start && next.at == kFree && next.used) {
                    Theorem1Witness w{start, {r}};
                    for (std::size_t e = head; entries[e].parent != kFree; e = entries[e].parent) {
                        w.sequence.push_back(entries[e].reaction);
                    }
                    std::reverse(w.sequence.begin(), w.sequence.end());
                    return w;
                }
                if (seen.emplace(next, entries.size()).second) {
                    entries.push_back({std::move(next), head, r, entries[head].depth + 1});
                }
            }
        }
    }
    return std::nullopt;
}

void dump_graph(std::ostream& out, const Crn& crn, const ConfigurationGraph& g) {
    std::vector<std::string> labels;
    labels.reserve(g.node_count());
    for (const auto& c : g.nodes) {
        labels.push_back(format_complex(crn, to_complex(c)));
    }
    for (const Arc& a : g.arcs) {
        out << labels[a.from] << '\t' << crn.reactions()[a.reaction].name << '\t' << labels[a.to] << '\n';
    }
}

}  // namespace crnscope
