#include "support.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace crnscope::testing {

std::string corpus_dir() { return CRNSCOPE_CORPUS_DIR; }

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Crn load_corpus(std::string_view name) { return parse_crn(read_text(corpus_dir() + "/" + std::string(name) + ".crn")); }

std::vector<std::string> corpus_names() {
    auto manifest = nlohmann::json::parse(read_text(corpus_dir() + "/manifest.json"));
    std::vector<std::string> out;
    for (const auto& n : manifest["networks"]) {
        out.push_back(n["name"].get<std::string>());
    }
    return out;
}

ComplexVector cfg(const Crn& crn, std::string_view text) { return parse_configuration(text, crn); }

std::vector<std::size_t> seq(const Crn& crn, std::string_view text) { return resolve_sequence(crn, text); }

RationalVector to_rational(const ParikhVector& p) {
    RationalVector out;
    for (const auto& c : p.counts()) {
        out.emplace_back(c);
    }
    return out;
}

RationalVector ints(std::initializer_list<long> values) {
    RationalVector out;
    for (long v : values) {
        out.emplace_back(v);
    }
    return out;
}

std::vector<std::size_t> reactions_named(const Crn& crn, std::initializer_list<std::string_view> names) {
    std::vector<std::size_t> out;
    for (auto n : names) {
        out.push_back(crn.reaction_index(std::string(n)).value());
    }
    return out;
}

namespace {

ComplexVector random_complex(std::mt19937_64& rng, std::size_t species, unsigned max_coefficient) {
    std::uniform_int_distribution<std::size_t> size_dist(0, std::min<std::size_t>(3, species));
    std::uniform_int_distribution<std::size_t> species_dist(0, species - 1);
    std::uniform_int_distribution<unsigned> coeff(1, max_coefficient);
    std::vector<ComplexVector::Entry> entries;
    std::size_t terms = size_dist(rng);
    for (std::size_t t = 0; t < terms; ++t) {
        entries.emplace_back(species_dist(rng), BigInt(coeff(rng)));
    }
    ComplexVector c = ComplexVector::from_entries(std::move(entries));
    // Summing duplicates may exceed the coefficient bound; clamp.
    std::vector<ComplexVector::Entry> clamped;
    for (const auto& [s, n] : c.entries()) {
        clamped.emplace_back(s, n > max_coefficient ? BigInt(max_coefficient) : n);
    }
    return ComplexVector::from_entries(std::move(clamped));
}

std::vector<std::string> species_names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back("S" + std::to_string(i));
    }
    return out;
}

}  // namespace

Crn random_crn(std::mt19937_64& rng, const RandomCrnShape& shape) {
    std::uniform_int_distribution<std::size_t> ns_dist(1, shape.max_species);
    std::uniform_int_distribution<std::size_t> nr_dist(1, shape.max_reactions);
    std::size_t ns = ns_dist(rng);
    std::size_t nr = nr_dist(rng);
    std::vector<Reaction> reactions;
    for (std::size_t r = 0; r < nr; ++r) {
        reactions.push_back(Reaction{"r" + std::to_string(r), random_complex(rng, ns, shape.max_coefficient),
                                     random_complex(rng, ns, shape.max_coefficient)});
    }
    return Crn(species_names(ns), std::move(reactions));
}

Crn random_conservative_crn(std::mt19937_64& rng, std::size_t max_species, std::size_t max_reactions) {
    std::uniform_int_distribution<std::size_t> ns_dist(1, max_species);
    std::uniform_int_distribution<std::size_t> nr_dist(1, max_reactions);
    std::size_t ns = ns_dist(rng);
    std::size_t nr = nr_dist(rng);
    // S0 has weight 1 so any remaining weight can be filled exactly.
    std::vector<unsigned> weight(ns, 1);
    std::uniform_int_distribution<unsigned> w_dist(1, 2);
    for (std::size_t s = 1; s < ns; ++s) {
        weight[s] = w_dist(rng);
    }
    std::uniform_int_distribution<std::size_t> species_dist(0, ns - 1);
    std::vector<Reaction> reactions;
    for (std::size_t r = 0; r < nr; ++r) {
        ComplexVector reactant = random_complex(rng, ns, 2);
        unsigned total = 0;
        for (const auto& [s, n] : reactant.entries()) {
            total += weight[s] * static_cast<unsigned>(n.get_ui());
        }
        std::vector<ComplexVector::Entry> product;
        unsigned remaining = total;
        while (remaining > 0) {
            std::size_t s = species_dist(rng);
            if (weight[s] > remaining) {
                s = 0;
            }
            product.emplace_back(s, BigInt(1));
            remaining -= weight[s];
        }
        reactions.push_back(
            Reaction{"r" + std::to_string(r), std::move(reactant), ComplexVector::from_entries(std::move(product))});
    }
    return Crn(species_names(ns), std::move(reactions));
}

ComplexVector random_configuration(std::mt19937_64& rng, std::size_t species, unsigned max_count) {
    std::uniform_int_distribution<unsigned> count(0, max_count);
    std::vector<BigInt> dense;
    for (std::size_t s = 0; s < species; ++s) {
        dense.emplace_back(count(rng));
    }
    return ComplexVector::from_dense(dense);
}

std::vector<std::size_t> random_run(std::mt19937_64& rng, const Crn& crn, const ComplexVector& c,
                                    std::size_t max_length) {
    std::vector<std::size_t> out;
    ComplexVector cur = c;
    for (std::size_t step = 0; step < max_length; ++step) {
        std::vector<std::size_t> enabled;
        for (std::size_t r = 0; r < crn.reaction_count(); ++r) {
            if (is_enabled(cur, crn.reactions()[r])) {
                enabled.push_back(r);
            }
        }
        if (enabled.empty()) {
            break;
        }
        std::size_t r = enabled[std::uniform_int_distribution<std::size_t>(0, enabled.size() - 1)(rng)];
        cur = fire(crn, cur, r);
        out.push_back(r);
    }
    return out;
}

std::size_t naive_rank(const RationalMatrix& m) {
    std::vector<RationalVector> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows.push_back(m.row(r));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || sgn(rows[r][c]) == 0) {
                continue;
            }
            Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = 0; k < m.cols(); ++k) {
                rows[r][k] -= f * rows[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

std::optional<std::vector<long>> brute_force_feasible(const FeasibilityQuery& q, long bound) {
    const std::size_t n = q.matrix.cols();
    const std::size_t m = q.matrix.rows();
    std::vector<std::vector<long>> a(m, std::vector<long>(n));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = q.matrix(i, j);
            if (x.get_den() != 1) {
                throw std::invalid_argument("brute force needs integer matrices");
            }
            a[i][j] = x.get_num().get_si();
        }
    }
    std::vector<long> lo(n, 0);
    std::vector<long> hi(n, bound);
    for (std::size_t j : q.zero_set) {
        hi[j] = 0;
    }
    for (std::size_t j : q.one_set) {
        lo[j] = 1;
    }
    std::vector<long> v = lo;
    for (;;) {
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            long sum = 0;
            for (std::size_t j = 0; j < n; ++j) {
                sum += a[i][j] * v[j];
            }
            ok = sum == 0;
        }
        if (ok) {
            return v;
        }
        std::size_t j = 0;
        while (j < n && v[j] == hi[j]) {
            v[j] = lo[j];
            ++j;
        }
        if (j == n) {
            return std::nullopt;
        }
        ++v[j];
    }
}

}  // namespace crnscope::testing
