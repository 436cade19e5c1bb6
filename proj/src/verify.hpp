#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mms.hpp"
#include "rational.hpp"
#include "sequence.hpp"
#include "sweep.hpp"

namespace pickseq {

enum class TheoremId {
    prop_2_1,
    prop_3_1,
    thm_3_3,
    thm_3_4,
    lem_3_5,
    lem_3_6,
    lem_4_1,
    lem_4_2,
    lem_4_3,
    lem_4_4,
    lem_4_5,
    lem_4_6,
    lem_4_7,
    thm_regular,
    thm_irregular,
    thm_best,
    thm_worst,
    cor_two_agents,
    example_3_7,
};

const std::vector<TheoremId>& all_theorems();
std::string theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);

struct SearchSpec {
    enum class Mode { ExhaustiveGrid, Random };
    Mode mode = Mode::ExhaustiveGrid;
    std::vector<Rational> utility_values = {Rational(0), Rational(1), Rational(2)};
    int sample_count = 2000;
    std::uint64_t seed = 1;
};

struct TheoremCheck {
    TheoremId id = TheoremId::prop_2_1;
    int n = 0;
    int m = 0;
    SearchSpec spec;
    bool pass = false;
    bool partial = false;  // a resource cap stopped the run before full coverage
    std::string claim;
    std::string notes;
    BigInt space_covered = 0;
    std::uint64_t executions = 0;
    double seconds = 0.0;
    std::optional<SweepViolation> counterexample;
};

/// Runs one theorem check at the given parameters. Lower-bound directions
/// go through the adversary generators with exact expectations; guarantee
/// and sup-bound directions are falsification runs over the declared
/// instance space.
TheoremCheck check(TheoremId id, int n, int m, const SearchSpec& spec);

struct CheckConfig {
    int n = 0;
    int m = 0;
    SearchSpec spec;
};

/// Desk-scale default parameters per theorem; seeds fan out from the master
/// seed via fanout_seed(master, theorem index, n, m).
std::vector<CheckConfig> default_configs(TheoremId id, std::uint64_t master_seed);
std::vector<TheoremCheck> run_default(TheoremId id, std::uint64_t master_seed);
std::vector<TheoremCheck> run_default_suite(std::uint64_t master_seed);

/// Complete classification of R_{n,m} by best/worst membership.
struct CensusResult {
    int n = 0;
    int m = 0;
    BigInt total = 0;
    GuaranteeConstants constants{};
    std::vector<SequenceReport> reports;
    std::vector<std::string> best;
    std::vector<std::string> worst;
    std::vector<std::string> other;
};

CensusResult census(int n, int m, std::uint64_t cap = default_enum_cap());

struct PriceSearchResult {
    int n = 0;
    int m = 0;
    std::string base;
    SequenceSpace space = SequenceSpace::All;
    Rational bound;  // the theorem bound for this space
    Ratio max_observed = Ratio::of(Rational(0));
    std::string witness_sequence;
    std::string witness_instance_json;
    BigInt instances = 0;
    bool exceeded = false;  // falsification event
    std::string notes;
};

/// Max welfare ratio over the generator instance plus the SearchSpec's
/// instances, against the full sequence space.
PriceSearchResult price_search(int n, int m, const PickingSequence& base, SequenceSpace space,
                               const SearchSpec& spec);

/// Pick-log replay of the availability counts on the reversed-witness
/// epsilon-instance: at each round start where some good with index >= 2n
/// is available, exactly floor(n/2^(r-2)) - 1 goods of {g_{n+1..2n-1}}
/// remain, and they are the top-indexed ones.
struct AvailabilityReplay {
    bool pass = false;
    int rounds_checked = 0;
    std::string notes;
};
AvailabilityReplay replay_availability_counts(int n, const PickingSequence& base);

std::string check_to_json(const TheoremCheck& check, int indent = -1);
std::string check_to_csv_row(const TheoremCheck& check);
std::string census_to_json(const CensusResult& result, int indent = -1);
std::string price_search_to_json(const PriceSearchResult& result, int indent = -1);

}  // namespace pickseq
