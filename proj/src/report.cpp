#include "crnscope/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace crnscope {

using nlohmann::json;

std::string input_digest(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

json rational_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
        return static_cast<std::int64_t>(q.get_num().get_si());
    }
    return to_string(q);
}

json vector_json(std::span<const Rational> v) {
    json out = json::array();
    for (const auto& q : v) {
        out.push_back(rational_json(q));
    }
    return out;
}

json labelled_json(std::span<const Rational> v, const std::vector<std::string>& labels) {
    json out = json::object();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) != 0) {
            out[labels[i]] = rational_json(v[i]);
        }
    }
    return out;
}

namespace {

std::vector<std::string> reaction_names(const Crn& crn) {
    std::vector<std::string> out;
    for (const auto& r : crn.reactions()) {
        out.push_back(r.name);
    }
    return out;
}

std::vector<std::string> species_names(const Crn& crn) {
    std::vector<std::string> out;
    for (const auto& s : crn.species()) {
        out.push_back(s.name);
    }
    return out;
}

json pick(const std::vector<std::size_t>& indices, const std::vector<std::string>& labels) {
    json out = json::array();
    for (std::size_t i : indices) {
        out.push_back(labels[i]);
    }
    return out;
}

std::string join(const std::vector<std::size_t>& indices, const std::vector<std::string>& labels,
                 std::string_view sep = ", ") {
    std::string out;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (k) {
            out += sep;
        }
        out += labels[indices[k]];
    }
    return out;
}

std::string sparse_text(std::span<const Rational> v, const std::vector<std::string>& labels) {
    std::string out = "(";
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) {
            continue;
        }
        if (!first) {
            out += ", ";
        }
        first = false;
        out += labels[i] + ": " + to_string(v[i]);
    }
    return out + ")";
}

std::string dense_text(std::span<const Rational> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += to_string(v[i]);
    }
    return out + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json header(std::string_view digest) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["tool"] = {{"name", "crnscope"}, {"version", std::string(kToolVersion)}};
    out["input_digest"] = std::string(digest);
    return out;
}

std::string text_header(std::string_view digest) {
    return "crnscope " + std::string(kToolVersion) + "  input " + std::string(digest) + "\n";
}

std::string boundedness_method(Boundedness b) {
    switch (b) {
        case Boundedness::ProvedByConservativity:
            return "conservativity";
        case Boundedness::ProvedExact:
        case Boundedness::RefutedExact:
            return "exact dual LP";
        case Boundedness::Unknown:
            break;
    }
    return "none";
}

json dominance_json(const Analysis& a) {
    const DominanceVerdict& v = a.dominance;
    const auto reactions = reaction_names(a.crn);
    const auto species = species_names(a.crn);
    json out;
    out["status"] = std::string(to_string(v.status));
    out["reason"] = v.reason;
    out["strengthened"] = v.strengthened;
    out["exit_sets_examined"] = v.exit_sets_examined;
    out["cap_exceeded"] = v.cap_exceeded;
    out["witness_exit_set"] = v.witness_exit_set ? pick(v.witness_exit_set->bridges, reactions) : json(nullptr);
    out["zero_set"] = pick(v.zero_set, reactions);
    json certs = json::array();
    for (const auto& c : v.certificates) {
        json entry;
        entry["forced"] = reactions[c.forced];
        entry["trivial"] = c.farkas.empty();
        // Strengthened certificates carry one extra row per non-terminal complex.
        std::vector<std::string> rows = species;
        for (std::size_t i = species.size(); i < c.farkas.size(); ++i) {
            rows.push_back("flow" + std::to_string(i - species.size()));
        }
        entry["farkas"] = labelled_json(c.farkas, rows);
        certs.push_back(std::move(entry));
    }
    out["certificates"] = std::move(certs);
    json failed = json::array();
    for (const auto& f : v.failed) {
        failed.push_back({{"exit_set", pick(f.exit_set, reactions)},
                          {"forced", reactions[f.forced]},
                          {"invariant", labelled_json(f.invariant, reactions)}});
    }
    out["failed_exit_sets"] = std::move(failed);
    return out;
}

json deficiency_one_json(const Analysis& a) {
    const DominanceVerdict& v = a.deficiency_one;
    json out;
    out["status"] = std::string(to_string(v.status));
    out["reason"] = v.reason;
    out["hypotheses"] = v.hypotheses;
    out["failed_hypothesis"] = v.failed_hypothesis ? json(*v.failed_hypothesis) : json(nullptr);
    if (v.comparable_vertices) {
        out["comparable_vertices"] = {a.graph.graph.vertex_labels[v.comparable_vertices->first],
                                      a.graph.graph.vertex_labels[v.comparable_vertices->second]};
    } else {
        out["comparable_vertices"] = nullptr;
    }
    return out;
}

json anderson_section(const Analysis& a) {
    const auto reactions = reaction_names(a.crn);
    const auto& vertices = a.graph.graph.vertex_labels;
    const auto species = species_names(a.crn);
    json runs = json::array();
    for (const auto& run : a.anderson.runs) {
        json r;
        r["label"] = run.label;
        json rates = json::object();
        for (std::size_t i = 0; i < run.rates.kappa.size(); ++i) {
            rates[reactions[i]] = rational_json(run.rates.kappa[i]);
        }
        r["rates"] = std::move(rates);
        r["status"] = std::string(to_string(run.verdict.status));
        r["reason"] = run.verdict.reason;
        if (!run.verdict.failed.empty()) {
            const auto& f = run.verdict.failed.front();
            r["witness"] = {{"forced", vertices[f.forced]}, {"w", labelled_json(f.invariant, vertices)}};
        }
        if (run.verdict.holds()) {
            json certs = json::array();
            for (const auto& c : run.verdict.certificates) {
                certs.push_back({{"forced", vertices[c.forced]}, {"farkas", labelled_json(c.farkas, species)}});
            }
            r["certificates"] = std::move(certs);
        }
        runs.push_back(std::move(r));
    }
    json out;
    out["runs"] = std::move(runs);
    out["aggregate"] = std::string(to_string(a.anderson.aggregate));
    out["holds"] = a.anderson.holds_count;
    out["total"] = a.anderson.runs.size();
    out["summary"] = "Holds for " + std::to_string(a.anderson.holds_count) + "/" +
                     std::to_string(a.anderson.runs.size()) + " rate vectors";
    out["l_vertices"] = pick(a.graph.l_vertex_set, vertices);
    return out;
}

json validation_section(const Crn& crn, const ValidationOutcome& v, VerdictStatus verdict, std::size_t total) {
    json out;
    out["total_count"] = total;
    out["verdict"] = std::string(to_string(verdict));
    out["passed"] = v.passed;
    out["vacuous"] = v.vacuous;
    out["inits_checked"] = v.inits_checked;
    out["states_explored"] = v.states_explored;
    json skipped = json::array();
    for (const auto& c : v.skipped) {
        skipped.push_back(format_complex(crn, c));
    }
    out["skipped"] = std::move(skipped);
    if (v.counterexample) {
        out["counterexample"] = {{"init", format_complex(crn, v.counterexample->init)},
                                 {"configuration", format_complex(crn, v.counterexample->configuration)},
                                 {"reaction", crn.reactions()[v.counterexample->reaction].name}};
    } else {
        out["counterexample"] = nullptr;
    }
    return out;
}

std::string verdict_line(const Analysis& a) {
    const auto reactions = reaction_names(a.crn);
    const DominanceVerdict& v = a.dominance;
    std::string out = "dominance check: " + std::string(to_string(v.status));
    if (v.holds() && v.witness_exit_set) {
        out += "  exit set {" + join(v.witness_exit_set->bridges, reactions) + "}, zero set {" +
               join(v.zero_set, reactions) + "}";
    } else if (!v.failed.empty()) {
        out += "  witness " + sparse_text(v.failed.front().invariant, reactions);
    }
    out += "\n  " + v.reason + "\n";
    if (v.strengthened) {
        out += "  (strengthened flow constraints on)\n";
    }
    return out;
}

}  // namespace

VerdictStatus strongest_verdict(const Analysis& a) {
    std::vector<VerdictStatus> all{a.dominance.status, a.deficiency_one.status, a.anderson.aggregate};
    if (std::count(all.begin(), all.end(), VerdictStatus::Holds)) {
        return VerdictStatus::Holds;
    }
    if (std::count(all.begin(), all.end(), VerdictStatus::Inconclusive)) {
        return VerdictStatus::Inconclusive;
    }
    return VerdictStatus::NotApplicable;
}

Analysis run_analysis(Crn crn, const AnalyzeOptions& options) {
    Analysis a{std::move(crn), {}, {}, {}, {}, {}, {}, std::nullopt, 0};
    a.graph = analyze_graph(a.crn);
    a.bundle = build_matrices(a.crn, a.graph.graph);
    a.profile = structural_profile(a.crn, a.bundle);
    a.dominance = dominance_check(a.crn, a.bundle, a.profile, a.graph, options.dominance);
    a.deficiency_one = deficiency_one_check(a.crn, a.bundle, a.profile, a.graph);
    auto rates = options.rates;
    if (rates.empty()) {
        rates.emplace_back("uniform", uniform_rates(a.crn));
    }
    a.anderson = anderson_sweep(a.crn, a.profile, a.graph, rates);
    if (options.oracle_total) {
        a.oracle_total = *options.oracle_total;
        a.oracle = validate_prediction(a.crn, a.graph, strongest_verdict(a),
                                       configurations_up_to(a.crn.species_count(), *options.oracle_total),
                                       options.caps);
    }
    return a;
}

json analysis_json(const Analysis& a, std::string_view digest) {
    const auto reactions = reaction_names(a.crn);
    const auto species = species_names(a.crn);
    const auto& vertices = a.graph.graph.vertex_labels;
    json out = header(digest);

    out["crn"] = {{"species", species},
                  {"reactions", reactions},
                  {"complexes", vertices},
                  {"species_count", a.crn.species_count()},
                  {"reaction_count", a.crn.reaction_count()},
                  {"complex_count", a.graph.graph.vertex_count()},
                  {"linkage_classes", a.graph.linkage_classes}};

    const StructuralProfile& p = a.profile;
    json structure;
    structure["conservative"] = {{"value", p.conservative},
                                 {"witness", p.conservation_witness ? labelled_json(*p.conservation_witness, species)
                                                                    : json(nullptr)}};
    structure["consistent"] = {{"value", p.consistent},
                               {"witness", p.consistency_witness ? labelled_json(*p.consistency_witness, reactions)
                                                                 : json(nullptr)}};
    structure["structurally_bounded"] = {
        {"status", std::string(to_string(p.structurally_bounded))},
        {"method", boundedness_method(p.structurally_bounded)},
        {"witness", p.boundedness_witness ? labelled_json(*p.boundedness_witness, species) : json(nullptr)}};
    structure["rank_incidence"] = a.bundle.rank_I;
    structure["rank_graph"] = a.bundle.rank_R;
    structure["deficiency"] = p.deficiency;
    out["structure"] = std::move(structure);

    const SccDecomposition& s = a.graph.sccs;
    json graph;
    json sccs = json::array();
    for (std::size_t i = 0; i < s.components.size(); ++i) {
        sccs.push_back({{"id", i},
                        {"vertices", pick(s.components[i].vertices, vertices)},
                        {"terminal", s.components[i].terminal},
                        {"out", pick(s.components[i].out_edges, reactions)}});
    }
    graph["sccs"] = std::move(sccs);
    graph["bridges"] = pick(s.bridges, reactions);
    std::vector<std::size_t> terminal;
    for (std::size_t r = 0; r < a.crn.reaction_count(); ++r) {
        if (s.terminal_reaction[r]) {
            terminal.push_back(r);
        }
    }
    graph["terminal_reactions"] = pick(terminal, reactions);
    graph["dominance_pairs"] = a.graph.dominance.strict_pairs();
    graph["antisymmetry_violation"] = a.graph.dominance.antisymmetry_violation
                                          ? json(*a.graph.dominance.antisymmetry_violation)
                                          : json(nullptr);
    if (a.graph.minimal) {
        graph["minimal_nonterminal"] = *a.graph.minimal;
        BigInt count = exit_set_count(*a.graph.minimal, s);
        graph["exit_set_count"] = rational_json(Rational(count));
    } else {
        graph["minimal_nonterminal"] = nullptr;
        graph["exit_set_count"] = nullptr;
    }
    graph["l_reactions"] = pick(a.graph.l_reaction_set, reactions);
    graph["l_vertices"] = pick(a.graph.l_vertex_set, vertices);
    out["graph"] = std::move(graph);

    out["dominance_check"] = dominance_json(a);
    out["deficiency_one_check"] = deficiency_one_json(a);
    out["anderson"] = anderson_section(a);
    out["oracle"] =
        a.oracle ? validation_section(a.crn, *a.oracle, strongest_verdict(a), a.oracle_total) : json(nullptr);
    return out;
}

std::string analysis_text(const Analysis& a, std::string_view digest) {
    const auto reactions = reaction_names(a.crn);
    const auto species = species_names(a.crn);
    const auto& vertices = a.graph.graph.vertex_labels;
    const StructuralProfile& p = a.profile;
    std::ostringstream out;
    out << text_header(digest);
    out << "network: " << a.crn.species_count() << " species, " << a.crn.reaction_count() << " reactions, "
        << a.graph.graph.vertex_count() << " complexes, " << a.graph.linkage_classes << " linkage classes\n";
    out << "rank I_N = " << a.bundle.rank_I << ", rank R_N = " << a.bundle.rank_R << ", deficiency = " << p.deficiency
        << "\n";
    out << "conservative: " << yes_no(p.conservative);
    if (p.conservation_witness) {
        out << "  " << sparse_text(*p.conservation_witness, species);
    }
    out << "\nconsistent: " << yes_no(p.consistent);
    if (p.consistency_witness) {
        out << "  " << sparse_text(*p.consistency_witness, reactions);
    }
    out << "\nstructurally bounded: " << to_string(p.structurally_bounded) << " ("
        << boundedness_method(p.structurally_bounded) << ")\n";

    const SccDecomposition& s = a.graph.sccs;
    out << "strongly connected components:\n";
    for (std::size_t i = 0; i < s.components.size(); ++i) {
        const Scc& c = s.components[i];
        out << "  " << i << " {" << join(c.vertices, vertices) << "} "
            << (c.terminal ? "terminal" : "non-terminal");
        if (!c.out_edges.empty()) {
            out << "  out: " << join(c.out_edges, reactions);
        }
        out << "\n";
    }
    out << "bridges: {" << join(s.bridges, reactions) << "}\n";
    out << "L reactions: {" << join(a.graph.l_reaction_set, reactions) << "}\n";
    out << "L vertices: {" << join(a.graph.l_vertex_set, vertices) << "}\n";
    if (a.graph.minimal) {
        out << "minimal non-terminal components: {";
        for (std::size_t k = 0; k < a.graph.minimal->size(); ++k) {
            out << (k ? ", " : "") << (*a.graph.minimal)[k];
        }
        out << "}  exit sets: " << exit_set_count(*a.graph.minimal, s).get_str() << "\n";
    } else {
        const auto& v = *a.graph.dominance.antisymmetry_violation;
        out << "dominance is not a partial order (components " << v.first << " and " << v.second << ")\n";
    }
    out << verdict_line(a);
    out << "deficiency-one check: " << to_string(a.deficiency_one.status) << "\n  " << a.deficiency_one.reason << "\n";
    out << "rate-based check: " << to_string(a.anderson.aggregate) << "  Holds for " << a.anderson.holds_count << "/"
        << a.anderson.runs.size() << " rate vectors\n";
    if (a.oracle) {
        const ValidationOutcome& v = *a.oracle;
        out << "oracle: " << (v.vacuous ? "vacuous pass" : v.passed ? "pass" : "FAIL") << " (" << v.inits_checked
            << " initial configurations, " << v.skipped.size() << " skipped)\n";
        if (v.counterexample) {
            out << "  counterexample: " << format_complex(a.crn, v.counterexample->configuration) << " enables "
                << reactions[v.counterexample->reaction] << "\n";
        }
    }
    return out.str();
}

json anderson_json(const Analysis& a, std::string_view digest) {
    json out = header(digest);
    out["anderson"] = anderson_section(a);
    return out;
}

std::string anderson_text(const Analysis& a, std::string_view digest) {
    const auto reactions = reaction_names(a.crn);
    const auto& vertices = a.graph.graph.vertex_labels;
    std::ostringstream out;
    out << text_header(digest);
    out << "L vertices: {" << join(a.graph.l_vertex_set, vertices) << "}\n";
    for (const auto& run : a.anderson.runs) {
        out << run.label << ": " << to_string(run.verdict.status);
        if (!run.verdict.failed.empty()) {
            out << "  w = " << sparse_text(run.verdict.failed.front().invariant, vertices);
        } else if (run.verdict.status == VerdictStatus::NotApplicable) {
            out << "  " << run.verdict.reason;
        }
        out << "\n";
    }
    out << "aggregate: " << to_string(a.anderson.aggregate) << "  Holds for " << a.anderson.holds_count << "/"
        << a.anderson.runs.size() << " rate vectors\n";
    return out.str();
}

namespace {

struct InvariantData {
    std::vector<std::string> labels;
    std::vector<InvariantBasisEntry> basis;
    InvariantSummary summary;
};

InvariantData invariant_data(const Crn& crn, const InvariantOptions& options) {
    GraphAnalysis graph = analyze_graph(crn);
    MatrixBundle bundle = build_matrices(crn, graph.graph);
    InvariantData d;
    d.summary = invariant_summary(bundle, options.kind);
    d.labels = options.kind == InvariantKind::T ? reaction_names(crn) : species_names(crn);
    if (options.kind == InvariantKind::T && options.closed_only) {
        for (auto& v : kernel_basis(bundle.graph_R)) {
            InvariantBasisEntry e;
            e.nonnegative = std::none_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) < 0; });
            e.closed = true;
            e.vector = std::move(v);
            d.basis.push_back(std::move(e));
        }
    } else {
        d.basis = d.summary.basis;
    }
    return d;
}

}  // namespace

json invariants_json(const Crn& crn, const InvariantOptions& options, std::string_view digest) {
    InvariantData d = invariant_data(crn, options);
    json out = header(digest);
    out["kind"] = options.kind == InvariantKind::T ? "t" : "p";
    out["closed_only"] = options.closed_only;
    out["labels"] = d.labels;
    out["dimension"] = d.basis.size();
    if (options.basis) {
        json basis = json::array();
        for (const auto& e : d.basis) {
            json entry{{"vector", vector_json(e.vector)}, {"nonnegative", e.nonnegative}};
            if (options.kind == InvariantKind::T) {
                entry["closed"] = e.closed;
            }
            basis.push_back(std::move(entry));
        }
        out["basis"] = std::move(basis);
    }
    out["semipositive_support"] = pick(d.summary.semipositive_support, d.labels);
    out["nonnegative_cone"] = d.summary.semipositive_support.empty() ? "zero" : "nontrivial";
    out["positive_witness"] =
        d.summary.positive_witness ? vector_json(*d.summary.positive_witness) : json(nullptr);
    return out;
}

std::string invariants_text(const Crn& crn, const InvariantOptions& options, std::string_view digest) {
    InvariantData d = invariant_data(crn, options);
    std::ostringstream out;
    out << text_header(digest);
    out << (options.kind == InvariantKind::T ? (options.closed_only ? "closed T-invariants" : "T-invariants")
                                             : "P-invariants")
        << " over (";
    for (std::size_t i = 0; i < d.labels.size(); ++i) {
        out << (i ? ", " : "") << d.labels[i];
    }
    out << ")\nkernel dimension: " << d.basis.size() << "\n";
    if (options.basis) {
        for (const auto& e : d.basis) {
            out << "  " << dense_text(e.vector);
            if (options.kind == InvariantKind::T) {
                out << (e.closed ? "  closed" : "  non-closed");
            }
            if (!e.nonnegative) {
                out << "  (mixed signs)";
            }
            out << "\n";
        }
    }
    if (d.summary.semipositive_support.empty()) {
        out << "nonnegative cone: only the zero vector\n";
    } else {
        out << "semipositive support: {" << join(d.summary.semipositive_support, d.labels) << "}\n";
    }
    if (d.summary.positive_witness) {
        out << "positive invariant: " << dense_text(*d.summary.positive_witness) << "\n";
    }
    return out.str();
}

json reach_json(const Crn& crn, const GraphAnalysis&, const ReachResult& r, std::string_view digest) {
    const auto reactions = reaction_names(crn);
    json out = header(digest);
    out["init"] = format_complex(crn, r.init);
    out["states"] = r.graph.node_count();
    out["arcs"] = r.graph.arcs.size();
    out["truncated"] = r.graph.truncated;
    out["truncation_reason"] = r.graph.truncated ? json(r.graph.truncation_reason) : json(nullptr);
    if (r.recurrence) {
        json recurrent = json::array();
        for (const auto& rc : r.recurrence->recurrent) {
            recurrent.push_back({{"configuration", format_complex(crn, to_complex(r.graph.nodes[rc.node]))},
                                 {"enabled", pick(rc.enabled, reactions)},
                                 {"nonterminal_enabled", pick(rc.nonterminal_enabled, reactions)}});
        }
        out["recurrence"] = {{"recurrent", std::move(recurrent)},
                             {"bottom_components", r.recurrence->bottom_components.size()},
                             {"any_nonterminal_fires", r.recurrence->any_nonterminal_fires}};
    } else {
        out["recurrence"] = nullptr;
    }
    if (!r.witnesses.empty()) {
        json ws = json::array();
        for (const auto& [z, w] : r.witnesses) {
            json entry{{"exit_set", pick(z.bridges, reactions)}, {"found", w.has_value()}};
            if (w) {
                entry["configuration"] = format_complex(crn, to_complex(r.graph.nodes[w->node]));
                entry["sequence"] = pick(w->sequence, reactions);
            }
            ws.push_back(std::move(entry));
        }
        out["theorem1_witnesses"] = std::move(ws);
    }
    return out;
}

std::string reach_text(const Crn& crn, const GraphAnalysis& graph, const ReachResult& r, std::string_view digest) {
    const auto reactions = reaction_names(crn);
    std::ostringstream out;
    out << text_header(digest);
    out << "init: " << format_complex(crn, r.init) << "\n";
    out << "states: " << r.graph.node_count() << ", arcs: " << r.graph.arcs.size() << "\n";
    if (r.graph.truncated) {
        out << "truncated: " << r.graph.truncation_reason << "\nrecurrence not certified\n";
        return out.str();
    }
    out << "recurrent configurations (" << r.recurrence->recurrent.size() << " in "
        << r.recurrence->bottom_components.size() << " bottom components):\n";
    for (const auto& rc : r.recurrence->recurrent) {
        out << "  " << format_complex(crn, to_complex(r.graph.nodes[rc.node]));
        if (!rc.enabled.empty()) {
            out << "  enabled: ";
            for (std::size_t k = 0; k < rc.enabled.size(); ++k) {
                std::size_t e = rc.enabled[k];
                out << (k ? ", " : "") << reactions[e] << (graph.sccs.terminal_reaction[e] ? "" : "*");
            }
        }
        out << "\n";
    }
    out << "non-terminal reaction fires at a recurrent configuration: "
        << yes_no(r.recurrence->any_nonterminal_fires) << "\n";
    for (const auto& [z, w] : r.witnesses) {
        out << "exit set {" << join(z.bridges, reactions) << "}: ";
        if (w) {
            out << format_complex(crn, to_complex(r.graph.nodes[w->node])) << " -> itself via " << join(w->sequence, reactions, " ")
                << "\n";
        } else {
            out << "no witness within bound\n";
        }
    }
    return out.str();
}

json validation_json(const Analysis& a, std::string_view digest) {
    json out = header(digest);
    out["validation"] = validation_section(a.crn, *a.oracle, strongest_verdict(a), a.oracle_total);
    out["checkers"] = {{"dominance", std::string(to_string(a.dominance.status))},
                       {"deficiency_one", std::string(to_string(a.deficiency_one.status))},
                       {"anderson", std::string(to_string(a.anderson.aggregate))}};
    return out;
}

std::string validation_text(const Analysis& a, std::string_view digest) {
    const ValidationOutcome& v = *a.oracle;
    std::ostringstream out;
    out << text_header(digest);
    out << "checkers: dominance " << to_string(a.dominance.status) << ", deficiency-one "
        << to_string(a.deficiency_one.status) << ", rate-based " << to_string(a.anderson.aggregate) << "\n";
    out << "initial configurations with at most " << a.oracle_total << " molecules: " << v.inits_checked << " checked, "
        << v.skipped.size() << " skipped (truncated)\n";
    if (v.vacuous) {
        out << "result: pass (vacuous, no checker holds)\n";
    } else if (v.passed) {
        out << "result: pass\n";
    } else {
        out << "result: FAIL  " << format_complex(a.crn, v.counterexample->configuration) << " is recurrent from "
            << format_complex(a.crn, v.counterexample->init) << " and enables "
            << a.crn.reactions()[v.counterexample->reaction].name << "\n";
    }
    return out.str();
}

}  // namespace crnscope
