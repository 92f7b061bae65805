#pragma once

#include "crnscope/analysis.hpp"
#include "crnscope/lp.hpp"
#include "crnscope/model.hpp"
#include "crnscope/parser.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace crnscope::testing {

std::string corpus_dir();
std::string read_text(const std::string& path);
Crn load_corpus(std::string_view name);
std::vector<std::string> corpus_names();

ComplexVector cfg(const Crn& crn, std::string_view text);
std::vector<std::size_t> seq(const Crn& crn, std::string_view text);
RationalVector to_rational(const ParikhVector& p);
RationalVector ints(std::initializer_list<long> values);
std::vector<std::size_t> reactions_named(const Crn& crn, std::initializer_list<std::string_view> names);

struct RandomCrnShape {
    std::size_t max_species = 6;
    std::size_t max_reactions = 8;
    unsigned max_coefficient = 3;
};

/// Species S0.., reactions r0..; every complex has at most three species.
Crn random_crn(std::mt19937_64& rng, const RandomCrnShape& shape = {});

/// Every reaction preserves a positive weighting of the species.
Crn random_conservative_crn(std::mt19937_64& rng, std::size_t max_species = 4, std::size_t max_reactions = 6);

/// Random configuration with each count in [0, max_count].
ComplexVector random_configuration(std::mt19937_64& rng, std::size_t species, unsigned max_count);

/// Random firing sequence of at most max_length enabled reactions from c.
std::vector<std::size_t> random_run(std::mt19937_64& rng, const Crn& crn, const ComplexVector& c,
                                    std::size_t max_length);

/// Plain Gauss-Jordan rank over the rationals.
std::size_t naive_rank(const RationalMatrix& m);

/// Exhaustive search over integer vectors with entries in [0, bound].
std::optional<std::vector<long>> brute_force_feasible(const FeasibilityQuery& q, long bound);

}  // namespace crnscope::testing
