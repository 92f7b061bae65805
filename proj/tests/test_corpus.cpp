#include "doctest.h"

#include "support.hpp"

#include "crnscope/oracle.hpp"
#include "crnscope/report.hpp"

#include "json.hpp"

#include <set>

using namespace crnscope;
using namespace crnscope::testing;
using nlohmann::json;

namespace {

std::vector<std::string> reaction_names(const Crn& crn, const std::vector<std::size_t>& reactions) {
    std::vector<std::string> out;
    for (std::size_t r : reactions) {
        out.push_back(crn.reactions()[r].name);
    }
    return out;
}

std::vector<std::string> strings(const json& j) { return j.get<std::vector<std::string>>(); }

Analysis analyze(const Crn& crn, const json& expect) {
    AnalyzeOptions options;
    options.rates.emplace_back("uniform", uniform_rates(crn));
    if (expect.contains("anderson_samples")) {
        const json& s = expect["anderson_samples"];
        std::size_t i = 0;
        for (auto& k : sample_rates(crn, s["count"].get<std::size_t>(), s["seed"].get<std::uint64_t>())) {
            options.rates.emplace_back("sample " + std::to_string(i++), std::move(k));
        }
    }
    return run_analysis(crn, options);
}

void check_network(const std::string& name, const json& expect) {
    INFO("network " << name);
    Crn crn = load_corpus(name);
    Analysis a = analyze(crn, expect);
    const auto& sccs = a.graph.sccs;

    if (expect.contains("species")) CHECK(crn.species_count() == expect["species"].get<std::size_t>());
    if (expect.contains("reactions")) CHECK(crn.reaction_count() == expect["reactions"].get<std::size_t>());
    if (expect.contains("complexes")) CHECK(a.graph.graph.vertex_count() == expect["complexes"].get<std::size_t>());
    if (expect.contains("deficiency")) CHECK(a.profile.deficiency == expect["deficiency"].get<std::size_t>());
    if (expect.contains("conservative")) CHECK(a.profile.conservative == expect["conservative"].get<bool>());
    if (expect.contains("consistent")) CHECK(a.profile.consistent == expect["consistent"].get<bool>());
    if (expect.contains("bridges")) CHECK(reaction_names(crn, sccs.bridges) == strings(expect["bridges"]));
    if (expect.contains("l_reactions")) {
        CHECK(reaction_names(crn, a.graph.l_reaction_set) == strings(expect["l_reactions"]));
    }
    if (expect.contains("exit_sets")) {
        std::vector<std::vector<std::string>> got;
        auto it = enumerate_exit_sets(*a.graph.minimal, sccs);
        while (auto z = it.next()) {
            got.push_back(reaction_names(crn, z->bridges));
        }
        CHECK(got == expect["exit_sets"].get<std::vector<std::vector<std::string>>>());
    }
    if (expect.contains("dominance")) {
        CHECK(to_string(a.dominance.status) == expect["dominance"].get<std::string>());
    }
    if (expect.contains("dominance_exit_set")) {
        REQUIRE(a.dominance.witness_exit_set);
        CHECK(reaction_names(crn, a.dominance.witness_exit_set->bridges) == strings(expect["dominance_exit_set"]));
    }
    if (expect.contains("dominance_zero_set")) {
        CHECK(reaction_names(crn, a.dominance.zero_set) == strings(expect["dominance_zero_set"]));
    }
    if (expect.contains("dominance_witness")) {
        REQUIRE(a.dominance.failed.size() >= 1);
        RationalVector want(crn.reaction_count(), Rational(0));
        for (const auto& [r, n] : expect["dominance_witness"].items()) {
            want[*crn.reaction_index(r)] = n.get<long>();
        }
        CHECK(a.dominance.failed[0].invariant == want);
    }
    if (expect.contains("deficiency_one")) {
        CHECK(to_string(a.deficiency_one.status) == expect["deficiency_one"].get<std::string>());
    }
    if (expect.contains("anderson_uniform")) {
        REQUIRE_FALSE(a.anderson.runs.empty());
        CHECK(to_string(a.anderson.runs[0].verdict.status) == expect["anderson_uniform"].get<std::string>());
    }
    if (expect.contains("anderson_samples")) {
        REQUIRE(a.anderson.runs.size() == 1 + expect["anderson_samples"]["count"].get<std::size_t>());
        std::string want = expect["anderson_samples"]["status"].get<std::string>();
        for (std::size_t i = 1; i < a.anderson.runs.size(); ++i) {
            CHECK(to_string(a.anderson.runs[i].verdict.status) == want);
        }
    }
    if (expect.contains("theorem1_witness")) {
        const json& w = expect["theorem1_witness"];
        ComplexVector start = cfg(crn, w["configuration"].get<std::string>());
        ConfigurationGraph g = explore(crn, start);
        RecurrenceReport rec = recurrent_configurations(g, a.graph);
        WitnessSearchOptions options;
        options.recurrent_only = w["recurrent_only"].get<bool>();
        options.start_nodes = {*g.find(to_configuration(start, crn.species_count()))};
        auto it = enumerate_exit_sets(*a.graph.minimal, sccs);
        auto found = find_theorem1_witness(crn, g, rec, *it.next(), a.graph, options);
        REQUIRE(found);
        CHECK(found->sequence == seq(crn, w["sequence"].get<std::string>()));
    }
    if (expect.contains("oracle_nonterminal_fires")) {
        ConfigurationGraph g = explore(crn, configurations_up_to(crn.species_count(), 4));
        REQUIRE_FALSE(g.truncated);
        CHECK(recurrent_configurations(g, a.graph).any_nonterminal_fires ==
              expect["oracle_nonterminal_fires"].get<bool>());
    }
}

}  // namespace

TEST_CASE("manifest expectations") {
    json manifest = json::parse(read_text(corpus_dir() + "/manifest.json"));
    CHECK(manifest["schema_version"] == 1);
    std::set<std::string> seen;
    for (const auto& n : manifest["networks"]) {
        std::string name = n["name"].get<std::string>();
        CHECK(seen.insert(name).second);
        CHECK(n["file"].get<std::string>() == name + ".crn");
        check_network(name, n["expect"]);
    }
    CHECK(seen.size() == 10);
}

TEST_CASE("reports are deterministic and self-describing") {
    for (const auto& name : corpus_names()) {
        std::string text = read_text(corpus_dir() + "/" + name + ".crn");
        std::string digest = input_digest(text);
        AnalyzeOptions options;
        options.rates.emplace_back("uniform", uniform_rates(parse_crn(text)));
        std::string first = analysis_json(run_analysis(parse_crn(text), options), digest).dump();
        std::string second = analysis_json(run_analysis(parse_crn(text), options), digest).dump();
        CHECK(first == second);
        json j = json::parse(first);
        CHECK(j["schema_version"] == kSchemaVersion);
        CHECK(j["input_digest"] == digest);
        for (const char* key : {"crn", "structure", "graph", "dominance_check", "deficiency_one_check", "anderson"}) {
            CHECK(j.contains(key));
        }
        CHECK_FALSE(analysis_text(run_analysis(parse_crn(text), options), digest).empty());
    }
    CHECK(input_digest("") == "fnv1a64:cbf29ce484222325");
}

TEST_CASE("invariant report of from_lit") {
    Crn lit = load_corpus("from_lit");
    json t = invariants_json(lit, {InvariantKind::T, true, false}, "d");
    CHECK(t["basis"].size() == 4);
    json closed = invariants_json(lit, {InvariantKind::T, true, true}, "d");
    CHECK(closed["basis"].size() == 2);
}

TEST_CASE("rational encoding") {
    CHECK(rational_json(Rational(3)) == json(3));
    CHECK(rational_json(Rational(-3, 4)) == json("-3/4"));
}
