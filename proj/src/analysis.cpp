#include "crnscope/analysis.hpp"

#include "crnscope/parser.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <set>

namespace crnscope {

namespace {

std::vector<std::string> species_labels(const Crn& crn) {
    std::vector<std::string> out;
    for (const auto& s : crn.species()) {
        out.push_back(s.name);
    }
    return out;
}

std::vector<std::string> reaction_labels(const Crn& crn) {
    std::vector<std::string> out;
    for (const auto& r : crn.reactions()) {
        out.push_back(r.name);
    }
    return out;
}

std::vector<std::size_t> sorted_union(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

}  // namespace

MatrixBundle build_matrices(const Crn& crn, const ReactionGraph& graph) {
    MatrixBundle b;
    auto species = species_labels(crn);
    auto reactions = reaction_labels(crn);
    b.incidence_I = RationalMatrix(species, reactions);
    for (std::size_t r = 0; r < crn.reaction_count(); ++r) {
        const Reaction& reaction = crn.reactions()[r];
        for (const auto& [s, count] : reaction.product.entries()) {
            b.incidence_I(s, r) += Rational(count);
        }
        for (const auto& [s, count] : reaction.reactant.entries()) {
            b.incidence_I(s, r) -= Rational(count);
        }
    }
    b.complex_Y = RationalMatrix(species, graph.vertex_labels);
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        for (const auto& [s, count] : graph.vertices[v].entries()) {
            b.complex_Y(s, v) = Rational(count);
        }
    }
    b.graph_R = graph.incidence;
    b.rank_I = rank(b.incidence_I);
    b.rank_R = rank(b.graph_R);
    return b;
}

MatrixBundle build_matrices(const Crn& crn) {
    return build_matrices(crn, build_reaction_graph(crn));
}

std::string_view to_string(Boundedness b) {
    switch (b) {
        case Boundedness::ProvedByConservativity:
            return "ProvedByConservativity";
        case Boundedness::ProvedExact:
            return "ProvedExact";
        case Boundedness::RefutedExact:
            return "RefutedExact";
        case Boundedness::Unknown:
            return "Unknown";
    }
    return "Unknown";
}

bool is_bounded(Boundedness b) {
    return b == Boundedness::ProvedByConservativity || b == Boundedness::ProvedExact;
}

StructuralProfile structural_profile(const Crn& crn, const MatrixBundle& bundle) {
    StructuralProfile p;
    FeasibilityResult conservation = full_support_feasible(bundle.incidence_I, InvariantSide::Rows);
    p.conservative = conservation.feasible();
    p.conservation_witness = conservation.witness;
    FeasibilityResult consistency = full_support_feasible(bundle.incidence_I, InvariantSide::Columns);
    p.consistent = consistency.feasible();
    p.consistency_witness = consistency.witness;

    if (p.conservative) {
        p.structurally_bounded = Boundedness::ProvedByConservativity;
    } else {
        // y^T I_N + s^T = 0 with s >= 0 and y >= 1 over columns [I_N^T | Id].
        const std::size_t ns = crn.species_count();
        const std::size_t nr = crn.reaction_count();
        FeasibilityQuery q;
        q.matrix = RationalMatrix(nr, ns + nr);
        for (std::size_t r = 0; r < nr; ++r) {
            for (std::size_t s = 0; s < ns; ++s) {
                q.matrix(r, s) = bundle.incidence_I(s, r);
            }
            q.matrix(r, ns + r) = 1;
        }
        q.one_set.resize(ns);
        std::iota(q.one_set.begin(), q.one_set.end(), std::size_t{0});
        FeasibilityResult bounded = solve(q);
        if (bounded.feasible()) {
            p.structurally_bounded = Boundedness::ProvedExact;
            p.boundedness_witness = RationalVector(bounded.witness->begin(), bounded.witness->begin() + ns);
        } else {
            p.structurally_bounded = Boundedness::RefutedExact;
        }
    }
    p.deficiency = bundle.rank_R - bundle.rank_I;
    return p;
}

bool is_closed_t_invariant(std::span<const Rational> v, const MatrixBundle& bundle) {
    if (v.size() != bundle.incidence_I.cols()) {
        throw NotATInvariant("vector length does not match the number of reactions");
    }
    if (std::any_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) < 0; })) {
        throw NotATInvariant("T-invariants are nonnegative");
    }
    if (!is_zero_vector(bundle.incidence_I.apply(v))) {
        throw NotATInvariant("vector is not in the kernel of the incidence matrix");
    }
    return is_zero_vector(bundle.graph_R.apply(v));
}

bool is_closed_t_invariant(const ParikhVector& v, const MatrixBundle& bundle) {
    RationalVector q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        q[i] = Rational(v[i]);
    }
    return is_closed_t_invariant(q, bundle);
}

std::string_view to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Holds:
            return "Holds";
        case VerdictStatus::Inconclusive:
            return "Inconclusive";
        case VerdictStatus::NotApplicable:
            return "NotApplicable";
    }
    return "NotApplicable";
}

namespace {

/// Query matrix for the dominance check. With the strengthened flag the
/// system gains one row and one slack column per non-terminal complex u:
///   sum_{r -> u} v_r - sum_{u -> r} v_r + s_u = 0   (non-terminal r only).
RationalMatrix dominance_matrix(const MatrixBundle& bundle, const GraphAnalysis& graph, bool strengthened) {
    if (!strengthened) {
        return bundle.incidence_I;
    }
    const ReactionGraph& g = graph.graph;
    std::vector<std::size_t> nonterminal_vertices;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (!graph.sccs.terminal_vertex[v]) {
            nonterminal_vertices.push_back(v);
        }
    }
    const std::size_t ns = bundle.incidence_I.rows();
    const std::size_t nr = bundle.incidence_I.cols();
    const std::size_t nu = nonterminal_vertices.size();
    RationalMatrix m(ns + nu, nr + nu);
    for (std::size_t s = 0; s < ns; ++s) {
        for (std::size_t r = 0; r < nr; ++r) {
            m(s, r) = bundle.incidence_I(s, r);
        }
    }
    for (std::size_t k = 0; k < nu; ++k) {
        std::size_t u = nonterminal_vertices[k];
        for (std::size_t r = 0; r < nr; ++r) {
            if (graph.sccs.terminal_reaction[r]) {
                continue;
            }
            if (g.target[r] == u) {
                m(ns + k, r) += 1;
            }
            if (g.source[r] == u) {
                m(ns + k, r) -= 1;
            }
        }
        m(ns + k, nr + k) = 1;
    }
    return m;
}

}  // namespace

DominanceVerdict dominance_check(const Crn& crn, const MatrixBundle& bundle, const StructuralProfile& profile,
                                 const GraphAnalysis& graph, const DominanceCheckOptions& options) {
    DominanceVerdict verdict;
    verdict.strengthened = options.strengthened;
    if (graph.sccs.nonterminal_components().empty()) {
        verdict.status = VerdictStatus::Holds;
        verdict.reason = "holds trivially: every reaction is terminal";
        return verdict;
    }
    if (!is_bounded(profile.structurally_bounded)) {
        verdict.reason = "structural boundedness is " + std::string(to_string(profile.structurally_bounded));
        return verdict;
    }
    if (!graph.minimal) {
        verdict.reason = "dominance relation is not a partial order";
        return verdict;
    }

    const std::size_t nr = crn.reaction_count();
    RationalMatrix matrix = dominance_matrix(bundle, graph, options.strengthened);
    ExitSetEnumerator exit_sets = enumerate_exit_sets(*graph.minimal, graph.sccs, options.max_exit_sets);
    while (auto z = exit_sets.next()) {
        ++verdict.exit_sets_examined;
        std::set<std::size_t> in_z(z->bridges.begin(), z->bridges.end());
        std::vector<std::size_t> zero_set;
        for (std::size_t b : graph.sccs.bridges) {
            if (!in_z.count(b)) {
                zero_set.push_back(b);
            }
        }
        zero_set = sorted_union(std::move(zero_set), graph.l_reaction_set);

        std::vector<InfeasibleEvidence> certificates;
        std::optional<FeasibleEvidence> defeat;
        for (std::size_t bridge : z->bridges) {
            if (std::binary_search(zero_set.begin(), zero_set.end(), bridge)) {
                certificates.push_back(InfeasibleEvidence{bridge, {}});
                continue;
            }
            FeasibilityQuery q{matrix, zero_set, {bridge}};
            FeasibilityResult result = solve(q);
            if (result.feasible()) {
                RationalVector v(result.witness->begin(), result.witness->begin() + static_cast<std::ptrdiff_t>(nr));
                defeat = FeasibleEvidence{z->bridges, bridge, to_primitive_integer(v)};
                break;
            }
            certificates.push_back(InfeasibleEvidence{bridge, *result.certificate});
        }
        if (!defeat) {
            verdict.status = VerdictStatus::Holds;
            verdict.witness_exit_set = *z;
            verdict.zero_set = std::move(zero_set);
            verdict.certificates = std::move(certificates);
            verdict.reason = "no qualifying T-invariant for this exit set";
            return verdict;
        }
        verdict.failed.push_back(std::move(*defeat));
    }
    verdict.cap_exceeded = exit_sets.cap_exceeded();
    verdict.status = VerdictStatus::Inconclusive;
    verdict.reason = verdict.cap_exceeded ? "inconclusive (cap): every examined exit set admits a qualifying invariant"
                                          : "every exit set admits a qualifying T-invariant";
    return verdict;
}

DominanceVerdict deficiency_one_check(const Crn&, const MatrixBundle&, const StructuralProfile& profile,
                                      const GraphAnalysis& graph) {
    DominanceVerdict verdict;
    auto fail = [&](std::string hypothesis) {
        verdict.status = VerdictStatus::NotApplicable;
        verdict.reason = "hypothesis not met: " + hypothesis;
        verdict.failed_hypothesis = std::move(hypothesis);
        return verdict;
    };
    if (!is_bounded(profile.structurally_bounded)) {
        return fail("structurally bounded");
    }
    verdict.hypotheses.push_back("structurally bounded");
    if (!profile.consistent) {
        return fail("consistent");
    }
    verdict.hypotheses.push_back("consistent");
    if (profile.deficiency != 1) {
        return fail("deficiency one");
    }
    verdict.hypotheses.push_back("deficiency one");
    const ReactionGraph& g = graph.graph;
    for (std::size_t y = 0; y < g.vertex_count() && !verdict.comparable_vertices; ++y) {
        if (graph.sccs.terminal_vertex[y]) {
            continue;
        }
        for (std::size_t x = 0; x < g.vertex_count(); ++x) {
            if (!graph.sccs.terminal_vertex[x] && entrywise_lt(g.vertices[x], g.vertices[y])) {
                verdict.comparable_vertices = std::make_pair(x, y);
                break;
            }
        }
    }
    if (!verdict.comparable_vertices) {
        return fail("comparable non-terminal complexes");
    }
    verdict.hypotheses.push_back("comparable non-terminal complexes");
    verdict.status = VerdictStatus::Holds;
    verdict.reason = "all deficiency-one hypotheses hold";
    return verdict;
}

RateVector uniform_rates(const Crn& crn) {
    return RateVector{std::vector<Rational>(crn.reaction_count(), Rational(1))};
}

std::vector<RateVector> sample_rates(const Crn& crn, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<RateVector> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        RateVector k;
        for (std::size_t r = 0; r < crn.reaction_count(); ++r) {
            unsigned long p = 1 + static_cast<unsigned long>(rng() % 20);
            unsigned long q = 1 + static_cast<unsigned long>(rng() % 20);
            Rational value(p, q);
            value.canonicalize();
            k.kappa.push_back(value);
        }
        out.push_back(std::move(k));
    }
    return out;
}

RateVector parse_rates(std::string_view text, const Crn& crn, bool uniform_fill) {
    std::vector<std::optional<Rational>> rates(crn.reaction_count());
    std::size_t line_number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_number;

        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') {
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("expected 'reaction = rate'", SourceSpan{line_number, first + 1, line.size()});
        }
        auto trim = [](std::string_view s) {
            std::size_t b = s.find_first_not_of(" \t\r");
            std::size_t e = s.find_last_not_of(" \t\r");
            return b == std::string_view::npos ? std::string_view{} : s.substr(b, e - b + 1);
        };
        std::string name(trim(line.substr(0, eq)));
        std::string value_text(trim(line.substr(eq + 1)));
        std::size_t value_col = line.find_first_not_of(" \t", eq + 1);
        value_col = value_col == std::string_view::npos ? eq + 2 : value_col + 1;
        auto r = crn.reaction_index(name);
        if (!r) {
            throw ParseError("unknown reaction '" + name + "'", SourceSpan{line_number, first + 1, first + name.size()});
        }
        if (rates[*r]) {
            throw ParseError("duplicate rate for reaction '" + name + "'",
                             SourceSpan{line_number, first + 1, first + name.size()});
        }
        auto value = parse_rational(value_text);
        if (!value) {
            throw ParseError("malformed rate '" + value_text + "'",
                             SourceSpan{line_number, value_col, value_col + value_text.size()});
        }
        if (sgn(*value) <= 0) {
            throw ParseError("rate must be positive", SourceSpan{line_number, value_col, value_col + value_text.size()});
        }
        rates[*r] = *value;
    }
    RateVector out;
    for (std::size_t r = 0; r < rates.size(); ++r) {
        if (rates[r]) {
            out.kappa.push_back(*rates[r]);
        } else if (uniform_fill) {
            out.kappa.emplace_back(1);
        } else {
            throw ParseError("no rate given for reaction '" + crn.reactions()[r].name + "'",
                             SourceSpan{line_number + 1, 1, 1});
        }
    }
    return out;
}

RationalMatrix build_k_matrix(const Crn& crn, const ReactionGraph& graph, const RateVector& rates) {
    if (rates.kappa.size() != crn.reaction_count()) {
        throw std::invalid_argument("rate vector must have one entry per reaction");
    }
    RationalMatrix k(species_labels(crn), graph.vertex_labels);
    for (std::size_t r = 0; r < crn.reaction_count(); ++r) {
        const Rational& kappa = rates.kappa[r];
        if (sgn(kappa) <= 0) {
            throw std::invalid_argument("rate of reaction '" + crn.reactions()[r].name + "' is not positive");
        }
        const Reaction& reaction = crn.reactions()[r];
        std::size_t column = graph.source[r];
        for (const auto& [s, count] : reaction.product.entries()) {
            k(s, column) += kappa * Rational(count);
        }
        for (const auto& [s, count] : reaction.reactant.entries()) {
            k(s, column) -= kappa * Rational(count);
        }
    }
    return k;
}

DominanceVerdict anderson_check(const Crn& crn, const StructuralProfile& profile, const GraphAnalysis& graph,
                                const RateVector& rates) {
    DominanceVerdict verdict;
    if (!profile.conservative) {
        verdict.reason = "hypothesis not met: conservative";
        verdict.failed_hypothesis = "conservative";
        return verdict;
    }
    verdict.hypotheses.push_back("conservative");
    if (graph.l_vertex_set.empty()) {
        verdict.reason = "hypothesis not met: L nonempty";
        verdict.failed_hypothesis = "L nonempty";
        return verdict;
    }
    verdict.hypotheses.push_back("L nonempty");

    RationalMatrix k = build_k_matrix(crn, graph.graph, rates);
    const auto& lv = graph.l_vertex_set;
    for (std::size_t y = 0; y < graph.graph.vertex_count(); ++y) {
        if (graph.sccs.terminal_vertex[y] || std::binary_search(lv.begin(), lv.end(), y)) {
            continue;
        }
        FeasibilityQuery q{k, lv, {y}};
        FeasibilityResult result = solve(q);
        if (result.feasible()) {
            verdict.status = VerdictStatus::Inconclusive;
            verdict.failed.push_back(FeasibleEvidence{{}, y, *result.witness});
            verdict.reason = "kernel vector avoiding L covers a non-terminal complex";
            return verdict;
        }
        verdict.certificates.push_back(InfeasibleEvidence{y, *result.certificate});
    }
    verdict.status = VerdictStatus::Holds;
    verdict.reason = "no kernel vector avoiding L covers a non-terminal complex";
    return verdict;
}

AndersonSummary anderson_sweep(const Crn& crn, const StructuralProfile& profile, const GraphAnalysis& graph,
                               const std::vector<std::pair<std::string, RateVector>>& rate_vectors) {
    AndersonSummary summary;
    bool applicable = false;
    for (const auto& [label, rates] : rate_vectors) {
        DominanceVerdict v = anderson_check(crn, profile, graph, rates);
        if (v.status != VerdictStatus::NotApplicable) {
            applicable = true;
        }
        if (v.holds()) {
            ++summary.holds_count;
        }
        summary.runs.push_back(AndersonRun{label, rates, std::move(v)});
    }
    if (summary.holds_count > 0) {
        summary.aggregate = VerdictStatus::Holds;
    } else if (applicable) {
        summary.aggregate = VerdictStatus::Inconclusive;
    } else {
        summary.aggregate = VerdictStatus::NotApplicable;
    }
    return summary;
}

InvariantSummary invariant_summary(const MatrixBundle& bundle, InvariantKind kind) {
    InvariantSummary out;
    out.kind = kind;
    RationalMatrix a = kind == InvariantKind::T ? bundle.incidence_I : bundle.incidence_I.transposed();
    for (auto& v : kernel_basis(a)) {
        InvariantBasisEntry entry;
        entry.nonnegative = std::none_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) < 0; });
        if (kind == InvariantKind::T) {
            entry.closed = is_zero_vector(bundle.graph_R.apply(v));
        }
        entry.vector = std::move(v);
        out.basis.push_back(std::move(entry));
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
        FeasibilityQuery q{a, {}, {j}};
        if (solve(q).feasible()) {
            out.semipositive_support.push_back(j);
        }
    }
    if (a.cols() > 0 && out.semipositive_support.size() == a.cols()) {
        out.positive_witness = full_support_feasible(a, InvariantSide::Columns).witness;
    }
    return out;
}

bool decomposes_into_terminal_walks(const GraphAnalysis& graph, std::span<const Rational> v) {
    const ReactionGraph& g = graph.graph;
    std::vector<Rational> inflow(g.vertex_count());
    std::vector<Rational> outflow(g.vertex_count());
    std::vector<std::size_t> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::vector<bool> used(g.vertex_count(), false);
    for (std::size_t r = 0; r < g.edge_count(); ++r) {
        if (graph.sccs.terminal_reaction[r] || sgn(v[r]) == 0) {
            continue;
        }
        outflow[g.source[r]] += v[r];
        inflow[g.target[r]] += v[r];
        used[g.source[r]] = used[g.target[r]] = true;
        parent[find(g.source[r])] = find(g.target[r]);
    }
    std::vector<bool> reaches_terminal(g.vertex_count(), false);
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        if (!used[u]) {
            continue;
        }
        if (graph.sccs.terminal_vertex[u]) {
            reaches_terminal[find(u)] = true;
        } else if (inflow[u] > outflow[u]) {
            return false;
        }
    }
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        if (used[u] && !reaches_terminal[find(u)]) {
            return false;
        }
    }
    return true;
}

}  // namespace crnscope
