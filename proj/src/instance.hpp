#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace pickseq {

/// A fair-division instance: n agents, m goods, exact nonnegative additive
/// utilities and a per-agent total preference order over the goods.
/// Agents and goods are 1-indexed throughout, matching the serialization
/// format; the containers underneath are 0-based.
struct Instance {
    int n = 0;
    int m = 0;
    std::vector<std::vector<Rational>> utilities;  // [agent-1][good-1]
    std::vector<std::vector<int>> preferences;     // [agent-1] -> good ids, most preferred first

    const Rational& utility(int agent, int good) const { return utilities[agent - 1][good - 1]; }
    const std::vector<int>& preference(int agent) const { return preferences[agent - 1]; }
};

/// Sorts each agent's goods by utility descending, ties broken by ascending
/// good index. The result always satisfies the consistency invariant.
std::vector<std::vector<int>> default_preferences(const std::vector<std::vector<Rational>>& utilities);

/// Builds an instance; computes default preferences when none are given.
/// Throws std::invalid_argument if the result fails validation.
Instance make_instance(int n, int m, std::vector<std::vector<Rational>> utilities,
                       std::vector<std::vector<int>> preferences = {});

/// Returns one message per broken invariant; empty means the instance is valid.
/// Checks: n >= 2, m >= n, matrix shape, nonnegative utilities, each
/// preference list a permutation of 1..m, and order/utility consistency
/// (u_i(g) > u_i(g') requires g listed before g').
std::vector<std::string> validate_instance(const Instance& inst);

/// Exact sum of the agent's utilities over a set of goods; empty set gives 0.
/// Throws std::out_of_range for an out-of-range agent or good index.
Rational bundle_utility(const Instance& inst, int agent, const std::vector<int>& bundle);

/// One pick event: at `turn` (1-based), `agent` took `good`.
struct PickEvent {
    int turn = 0;
    int agent = 0;
    int good = 0;
};

/// An ordered partition of the goods into n bundles, with the pick log that
/// produced it when it came from executing a picking sequence.
struct Allocation {
    std::vector<std::vector<int>> bundles;  // [agent-1] -> sorted good ids
    std::vector<PickEvent> pick_log;        // exactly m entries when produced by execute()
};

/// Violations of the allocation invariants (bundles partition 1..m, pick log
/// consistent with the bundles); empty means valid.
std::vector<std::string> validate_allocation(const Instance& inst, const Allocation& alloc);

// JSON wire formats.
//   Instance: {"n": int, "m": int, "utilities": [["p/q"|int,...],...],
//              "preferences": [[goodIdx,...],...]}   (preferences optional)
//   Allocation: {"bundles": [[goodIdx,...],...], "pick_log": [[turn,agent,good],...]}
// Rationals are written as bare integers when the denominator is 1 and the
// numerator fits in 64 bits, otherwise as "p/q" strings. The parser accepts
// both forms and ignores // comments.
Instance instance_from_json(const std::string& json_text);
std::string instance_to_json(const Instance& inst, int indent = -1);
std::string allocation_to_json(const Allocation& alloc, int indent = -1);
Allocation allocation_from_json(const std::string& json_text);

}  // namespace pickseq
