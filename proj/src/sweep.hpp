#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "instance.hpp"
#include "rational.hpp"
#include "sequence.hpp"

namespace pickseq {

// Exact integer fast path behind the verification harness. Grid utilities
// and the scaled random rationals are small integers, so guarantee, EF1 and
// price comparisons reduce to exact int64 cross-multiplications. The
// rational path stays authoritative for the public API; unit tests pin the
// two paths to each other.

std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic per-check seed fan-out: chains splitmix64 over the salts.
std::uint64_t fanout_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// Exact MMS of an integer utility vector split into `bundles` bundles.
long long mms_int(const std::vector<long long>& util, int bundles);

struct SweepChecks {
    bool alpha_guarantee = true;     // every agent's ratio >= guarantee_alpha(seq)
    bool ef1 = true;                 // every allocation from R_{n,m} is EF1
    bool agent_lower_bounds = true;  // per-agent pick-index / closed-form bounds
};

struct SweepViolation {
    std::string check;
    std::string detail;
    std::string instance_json;
    std::string sequence;
    std::string witness_sequence;
};

struct SweepReport {
    bool pass = true;
    BigInt instances_covered = 0;
    std::uint64_t executions = 0;
    std::optional<SweepViolation> violation;
};

/// Every |grid|^(n*m) utility matrix (default preference orders) against
/// every sequence in R_{n,m}. Utility row of agent i for matrix index X:
/// good j takes grid[(X_i / |grid|^(j-1)) % |grid|] where X_i is agent i's
/// row index and agent 1 is the most significant odometer digit.
SweepReport exhaustive_guarantee_sweep(int n, int m, const std::vector<long long>& grid,
                                       const SweepChecks& checks);

struct RandomSweepOptions {
    int count = 10000;
    std::uint64_t seed = 1;
    SweepChecks checks;
    bool price_bounds = true;  // sup bounds over Pi_{n,m} and R_{n,m}
};

/// Seeded random rational instances (numerators 0..9, denominators 1..4,
/// drawn agent-major then good-major from mt19937_64, scaled exactly by 12)
/// against every sequence in R_{n,m}, plus the price-bound falsification
/// checks over the full sequence spaces.
SweepReport random_sweep(int n, int m, const RandomSweepOptions& options);

/// Price-bound falsification over every |grid|^(n*m) utility matrix:
/// max EW over Pi_{n,m} <= min{m-n+1,n} * min EW over R_{n,m}, and
/// max EW over R_{n,m} <= min{ceil(m/n), floor(log2 n)+1} * the same minimum.
SweepReport exhaustive_price_sweep(int n, int m, const std::vector<long long>& grid);

/// Pick-preference dominance: for every ordered pair (pi, pi') in R_{n,m}^2,
/// agent i's round-s pick under pi is weakly preferred (by her order) to her
/// round-((s-1)L+1) pick under pi', L = floor(log2 n)+1, dummies ranked last.
SweepReport exhaustive_pick_preference_sweep(int n, int m, const std::vector<long long>& grid);

/// Identical-utility instances from grid^m: EW(pi) >= EW(round-robin) for
/// every pi in R_{n,m}.
SweepReport exhaustive_identical_welfare_sweep(int n, int m, const std::vector<long long>& grid);

struct PriceProbeResult {
    Ratio max_ratio = Ratio::of(Rational(0));
    std::string witness_sequence;
    std::string instance_json;  // argmax instance
    std::uint64_t instances = 0;
};

/// Max over sampled instances of (max EW over the space) / EW(base).
PriceProbeResult random_price_probe(int n, int m, const PickingSequence& base, SequenceSpace space,
                                    int count, std::uint64_t seed);

/// Same probe over every |grid|^(n*m) utility matrix.
PriceProbeResult grid_price_probe(int n, int m, const PickingSequence& base, SequenceSpace space,
                                  const std::vector<long long>& grid);

}  // namespace pickseq
