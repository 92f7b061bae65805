// crnscope: structural analysis of chemical reaction networks.
//
// Exit codes: 0 ok, 1 validation counterexample, 2 input error, 3 I/O error.

#include "crnscope/parser.hpp"
#include "crnscope/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace crnscope;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoFailure("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoFailure("error reading '" + path + "'");
    }
    return buf.str();
}

struct Loaded {
    Crn crn;
    std::string digest;
};

Loaded load(const std::string& path) {
    std::string text = read_file(path);
    try {
        return Loaded{parse_crn(text), input_digest(text)};
    } catch (const ParseError& e) {
        throw InputFailure(e.diagnostic(path));
    }
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

struct Common {
    std::string path;
    bool json = false;
};

struct Caps {
    std::size_t max_states = ExploreCaps{}.max_states;
    std::uint32_t max_count = ExploreCaps{}.max_count;

    ExploreCaps get() const { return ExploreCaps{max_states, max_count}; }
};

void add_caps(CLI::App* cmd, Caps& caps) {
    cmd->add_option("--max-states", caps.max_states, "State budget for exploration")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-count", caps.max_count, "Per-species count bound for exploration")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
}

struct RateFlags {
    std::string file;
    bool uniform = false;
    bool uniform_fill = false;
    std::size_t samples = 0;
    std::uint64_t seed = 1;
};

std::vector<std::pair<std::string, RateVector>> collect_rates(const Crn& crn, const RateFlags& flags,
                                                              bool default_uniform) {
    std::vector<std::pair<std::string, RateVector>> out;
    if (!flags.file.empty()) {
        std::string text = read_file(flags.file);
        try {
            out.emplace_back("user", parse_rates(text, crn, flags.uniform_fill));
        } catch (const ParseError& e) {
            throw InputFailure(e.diagnostic(flags.file));
        }
    }
    if (flags.uniform || (default_uniform && out.empty() && flags.samples == 0)) {
        out.emplace_back("uniform", uniform_rates(crn));
    }
    auto samples = sample_rates(crn, flags.samples, flags.seed);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        out.emplace_back("sample-" + std::to_string(i + 1), std::move(samples[i]));
    }
    return out;
}

ComplexVector parse_init(const std::string& text, const Crn& crn) {
    try {
        return parse_configuration(text, crn);
    } catch (const ParseError& e) {
        throw InputFailure(e.diagnostic("--init"));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structural analyzer for discrete chemical reaction networks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    Common analyze_args;
    RateFlags analyze_rates;
    analyze_rates.samples = 8;
    std::size_t max_exit_sets = kDefaultExitSetCap;
    bool strengthened = false;
    std::optional<std::size_t> oracle_total;
    Caps analyze_caps;
    auto* analyze = app.add_subcommand("analyze", "Run every structural check and print a report");
    analyze->add_option("path", analyze_args.path, "CRN file")->required();
    analyze->add_flag("--json", analyze_args.json, "Emit canonical JSON");
    analyze->add_option("--max-exit-sets", max_exit_sets, "Exit-set enumeration cap")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    analyze->add_flag("--strengthened", strengthened, "Require flow-decomposable invariants (experimental)");
    analyze->add_option("--rates", analyze_rates.file, "Rate file for the rate-based check");
    analyze->add_flag("--uniform-fill", analyze_rates.uniform_fill, "Default missing rates to 1");
    analyze->add_option("--samples", analyze_rates.samples, "Random rate vectors")->capture_default_str();
    analyze->add_option("--seed", analyze_rates.seed, "Seed for sampled rates")->capture_default_str();
    analyze->add_option("--oracle", oracle_total, "Validate on all configurations with at most this many molecules");
    add_caps(analyze, analyze_caps);

    Common inv_args;
    std::string kind = "t";
    bool basis = false;
    bool closed_only = false;
    auto* invariants = app.add_subcommand("invariants", "T- or P-invariant kernel and support");
    invariants->add_option("path", inv_args.path, "CRN file")->required();
    invariants->add_flag("--json", inv_args.json, "Emit canonical JSON");
    invariants->add_option("--kind", kind, "t or p")->check(CLI::IsMember({"t", "p"}))->capture_default_str();
    invariants->add_flag("--basis", basis, "Print the canonical kernel basis");
    invariants->add_flag("--closed-only", closed_only, "Closed T-invariants only");

    Common and_args;
    RateFlags and_rates;
    auto* anderson = app.add_subcommand("anderson", "Rate-based check for given or sampled rates");
    anderson->add_option("path", and_args.path, "CRN file")->required();
    anderson->add_flag("--json", and_args.json, "Emit canonical JSON");
    anderson->add_option("--rates", and_rates.file, "Rate file");
    anderson->add_flag("--uniform", and_rates.uniform, "All rates equal to 1");
    anderson->add_flag("--uniform-fill", and_rates.uniform_fill, "Default missing rates to 1");
    anderson->add_option("--samples", and_rates.samples, "Random rate vectors");
    anderson->add_option("--seed", and_rates.seed, "Seed for sampled rates")->capture_default_str();

    Common reach_args;
    std::string init_text;
    std::string dump_path;
    bool witness = false;
    bool all_starts = false;
    std::size_t max_length = WitnessSearchOptions{}.max_length;
    Caps reach_caps;
    auto* reach = app.add_subcommand("reach", "Explore the configuration graph from one configuration");
    reach->add_option("path", reach_args.path, "CRN file")->required();
    reach->add_flag("--json", reach_args.json, "Emit canonical JSON");
    reach->add_option("--init", init_text, "Initial configuration, e.g. \"2A + B\"")->required();
    reach->add_option("--dump", dump_path, "Write the graph as src<TAB>reaction<TAB>dst lines");
    reach->add_flag("--witness", witness, "Search a cycle witness for every exit set");
    reach->add_flag("--all-starts", all_starts, "Let witness cycles start at non-recurrent configurations");
    reach->add_option("--max-length", max_length, "Witness cycle length bound")->capture_default_str();
    add_caps(reach, reach_caps);

    Common val_args;
    std::size_t total = 6;
    Caps val_caps;
    auto* validate = app.add_subcommand("validate", "Check the verdicts against exhaustive exploration");
    validate->add_option("path", val_args.path, "CRN file")->required();
    validate->add_flag("--json", val_args.json, "Emit canonical JSON");
    validate->add_option("--inits-total-count", total, "Largest total molecule count of an initial configuration")
        ->capture_default_str();
    add_caps(validate, val_caps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*analyze) {
            Loaded in = load(analyze_args.path);
            AnalyzeOptions options;
            options.dominance = DominanceCheckOptions{max_exit_sets, strengthened};
            RateFlags flags = analyze_rates;
            flags.uniform = true;
            options.rates = collect_rates(in.crn, flags, true);
            options.oracle_total = oracle_total;
            options.caps = analyze_caps.get();
            Analysis a = run_analysis(std::move(in.crn), options);
            if (analyze_args.json) {
                emit(analysis_json(a, in.digest));
            } else {
                std::cout << analysis_text(a, in.digest);
            }
            return a.oracle && !a.oracle->passed ? kExitCounterexample : kExitOk;
        }
        if (*invariants) {
            Loaded in = load(inv_args.path);
            InvariantOptions options{kind == "t" ? InvariantKind::T : InvariantKind::P, basis, closed_only};
            if (inv_args.json) {
                emit(invariants_json(in.crn, options, in.digest));
            } else {
                std::cout << invariants_text(in.crn, options, in.digest);
            }
            return kExitOk;
        }
        if (*anderson) {
            Loaded in = load(and_args.path);
            AnalyzeOptions options;
            options.rates = collect_rates(in.crn, and_rates, true);
            Analysis a = run_analysis(std::move(in.crn), options);
            if (and_args.json) {
                emit(anderson_json(a, in.digest));
            } else {
                std::cout << anderson_text(a, in.digest);
            }
            return kExitOk;
        }
        if (*reach) {
            Loaded in = load(reach_args.path);
            GraphAnalysis graph = analyze_graph(in.crn);
            ReachResult r;
            r.init = parse_init(init_text, in.crn);
            r.graph = explore(in.crn, r.init, reach_caps.get());
            if (!r.graph.truncated) {
                r.recurrence = recurrent_configurations(r.graph, graph);
                if (witness && graph.minimal) {
                    WitnessSearchOptions opts{max_length, !all_starts};
                    ExitSetEnumerator sets = enumerate_exit_sets(*graph.minimal, graph.sccs);
                    while (auto z = sets.next()) {
                        auto w = find_theorem1_witness(in.crn, r.graph, *r.recurrence, *z, graph, opts);
                        r.witnesses.emplace_back(*z, std::move(w));
                    }
                }
            }
            if (!dump_path.empty()) {
                std::ofstream out(dump_path);
                dump_graph(out, in.crn, r.graph);
                if (!out) {
                    throw IoFailure("cannot write '" + dump_path + "'");
                }
            }
            if (reach_args.json) {
                emit(reach_json(in.crn, graph, r, in.digest));
            } else {
                std::cout << reach_text(in.crn, graph, r, in.digest);
            }
            return kExitOk;
        }
        if (*validate) {
            Loaded in = load(val_args.path);
            AnalyzeOptions options;
            options.rates = collect_rates(in.crn, RateFlags{"", true, false, 8, 1}, true);
            options.oracle_total = total;
            options.caps = val_caps.get();
            Analysis a = run_analysis(std::move(in.crn), options);
            if (val_args.json) {
                emit(validation_json(a, in.digest));
            } else {
                std::cout << validation_text(a, in.digest);
            }
            return a.oracle->passed ? kExitOk : kExitCounterexample;
        }
    } catch (const InputFailure& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    } catch (const IoFailure& e) {
        std::cerr << "crnscope: " << e.what() << "\n";
        return kExitIo;
    } catch (const ModelError& e) {
        std::cerr << "crnscope: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
