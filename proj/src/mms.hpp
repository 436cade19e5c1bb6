#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "execution.hpp"
#include "instance.hpp"
#include "rational.hpp"
#include "sequence.hpp"

namespace pickseq {

/// Exact maximin share of one agent with a witness partition achieving it.
struct MmsResult {
    int agent = 0;
    Rational value;
    std::vector<std::vector<int>> witness;  // n bundles partitioning 1..m (empties allowed)
};

/// Default node cap for the MMS search (10^8 unless overridden via the
/// PICKSEQ_MMS_CAP environment variable).
std::uint64_t default_mms_cap();

/// Exact MMS via pruned bundle-assignment search (goods in descending
/// utility; equal-sum bundle symmetry skip; reachable-minimum bound).
/// Throws ResourceLimitError past the node cap.
MmsResult mms_exact(const Instance& inst, int agent, std::uint64_t node_cap = default_mms_cap());

/// Per-agent ratio of realized utility under the sequence to MMS,
/// 0/0 = 1 and x/0 = +inf.
std::vector<Ratio> mms_ratio_profile(const Instance& inst, const PickingSequence& seq,
                                     std::uint64_t node_cap = default_mms_cap());

/// Guaranteed fraction of MMS for one agent from her pick positions:
/// min over r in {2..R+1} of (r-1)(n+1-i)/(t_r - i).
Rational agent_lb_general(int n, int m, int agent, const AgentPickIndices& indices);

/// Matching upper-bound value min over r of (r-1)/floor((t_r-i)/(n+1-i)),
/// together with the smallest minimizing round index s (the adversarial
/// construction is parameterized by it).
struct TightnessBound {
    Rational value;
    int minimizing_round = 0;  // s in {2..R+1}
};
TightnessBound agent_ub_tightness(int n, int m, int agent, const AgentPickIndices& indices);

/// (n+1-i)/(2n-i).
Rational agent_lb_large_m(int n, int agent);

/// 1/floor((m+1-i)/(n+1-i)).
Rational agent_lb_small_m(int n, int m, int agent);

/// Irregular: the second round has a positive even number of turns, agent
/// n-1 does not pick in it, and agent n picks within its first (m-n)/2
/// turns. Throws std::domain_error when seq is not in R_{n,m}.
bool is_irregular(const PickingSequence& seq);

/// Agent n's guarantee formula min over r of (r-1)/(t_r - n); applies as
/// the sequence guarantee only when the sequence is regular.
Rational regular_formula_alpha(const PickingSequence& seq);

/// The sequence's MMS guarantee: the regular formula for regular sequences,
/// 2/(m-n+2) for irregular ones.
Rational guarantee_alpha(const PickingSequence& seq);

struct GuaranteeConstants {
    Rational alpha_max;   // min{ floor(m/n)/(floor(m/n)n-n+1), ceil(m/n)/(m-n+1) }
    Rational alpha_min;   // max{ 1/n, 1/(m-n+1) }
    int round_log_bound;  // L = floor(log2 n) + 1
};
GuaranteeConstants guarantee_constants(int n, int m);

/// Regular, agent n picks in every round, and her r-th pick satisfies
/// t_r <= n + (r-1)/alpha_max (evaluated exactly in rationals).
bool is_best(const PickingSequence& seq);

/// m <= 2n-1 with agent n picking only once, or m >= 2n with some round of
/// at least n-1 turns where agent n is absent from the first n-1 turns.
bool is_worst(const PickingSequence& seq);

/// Two-agent classification: 1/(2 - 1/floor(m/2)) when agent 2 picks first
/// in every round after the first, else 1/2. Requires n = 2 and m >= 3.
Rational two_agent_guarantee(const PickingSequence& seq);

/// Full classification record for one sequence. The guarantee fields are
/// set only for members of R_{n,m}.
struct SequenceReport {
    PickingSequence sequence;
    bool valid = false;
    bool canonical_prefix = false;
    bool recursively_balanced = false;
    bool balanced_member = false;  // in R_{n,m}
    std::optional<bool> irregular;
    std::optional<Rational> alpha;
    std::optional<Rational> alpha_regular_formula;  // diagnostic, also set when irregular
    std::optional<bool> best;
    std::optional<bool> worst;
    std::optional<GuaranteeConstants> constants;
};

SequenceReport classify(const PickingSequence& seq);
std::string report_to_json(const SequenceReport& report, int indent = -1);
/// One-line verdict, e.g. "1,2,3|3,1  irregular  alpha=1/2  [neither]".
std::string report_one_line(const SequenceReport& report);

}  // namespace pickseq
