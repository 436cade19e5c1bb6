#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace pickseq {

/// A picking sequence: picks[t-1] is the agent who picks at turn t.
struct PickingSequence {
    int n = 0;               // number of agents
    std::vector<int> picks;  // length m, entries in 1..n

    int m() const { return static_cast<int>(picks.size()); }
    int at(int turn) const { return picks[turn - 1]; }  // 1-based turn

    bool operator==(const PickingSequence& other) const = default;
};

/// Entries in 1..n and m >= 1.
bool is_valid_sequence(const PickingSequence& seq);

/// Membership in Pi_{n,m}: valid and prefixed by (1, 2, ..., n).
bool has_canonical_prefix(const PickingSequence& seq);

/// Every prefix and every agent pair differ by at most 1 in pick count.
bool is_recursively_balanced(const PickingSequence& seq);

/// Membership in R_{n,m}: canonical prefix and recursively balanced.
bool in_balanced_class(const PickingSequence& seq);

/// Splits into ceil(m/n) rounds: full blocks of n, then the remainder.
std::vector<std::vector<int>> rounds(const PickingSequence& seq);

/// The positions t_1 < ... < t_R of one agent's picks plus the sentinel
/// t_{R+1} = m+1.
struct AgentPickIndices {
    int agent = 0;
    std::vector<int> indices;
    int sentinel = 0;

    int count() const { return static_cast<int>(indices.size()); }
    /// t_r for r in 1..R, and the sentinel for r = R+1.
    int t(int r) const { return r <= count() ? indices[r - 1] : sentinel; }
};

AgentPickIndices agent_pick_indices(const PickingSequence& seq, int agent);

// Canonical constructors; every result is a member of R_{n,m}.
PickingSequence make_round_robin(int n, int m);
/// Ascending in odd rounds, descending in even rounds.
PickingSequence make_balanced_alternation(int n, int m);
/// First round ascending, every later round descending, so agent n picks
/// first from the second round onwards.
PickingSequence make_last_first(int n, int m);

/// Text notation: comma-separated agents with optional '|' round separators,
/// e.g. "1,2,3|3,1". Whitespace is ignored. agents <= 0 infers n as the
/// largest agent id appearing.
PickingSequence parse_sequence(const std::string& text, int agents = 0);

/// Writes round separators: "1,2,3|3,1".
std::string format_sequence(const PickingSequence& seq);

/// Relabels agents by first-round pick order so the result starts with
/// (1..n). Requires the first n picks to contain every agent once. If
/// `relabel` is given, relabel[old_agent] = new_agent is filled in
/// (1-based, index 0 unused).
PickingSequence normalize_prefix(const PickingSequence& seq, std::vector<int>* relabel = nullptr);

/// |Pi_{n,m}| = n^(m-n).
BigInt pi_count(int n, int m);
/// |R_{n,m}| = (n!)^(f-1) * n!/(n-s)! with f = floor(m/n), s = m - f*n
/// (the last factor is 1 when s = 0).
BigInt rb_count(int n, int m);

enum class SequenceSpace { All, Balanced };  // Pi_{n,m} vs R_{n,m}

/// Default cap on exhaustive sequence enumeration (10^7 unless overridden
/// via the PICKSEQ_ENUM_CAP environment variable).
std::uint64_t default_enum_cap();

/// Deterministic enumeration of Pi_{n,m} or R_{n,m}, each member exactly
/// once in lexicographic order (rounds iterated lexicographically).
/// The constructor throws ResourceLimitError when the census exceeds `cap`.
class SequenceEnumerator {
public:
    SequenceEnumerator(int n, int m, SequenceSpace space, std::uint64_t cap = default_enum_cap());

    /// Yields the next sequence; false when exhausted.
    bool next(PickingSequence& out);

    const BigInt& total() const { return total_; }

private:
    int n_;
    int m_;
    SequenceSpace space_;
    BigInt total_;
    bool done_ = false;
    bool first_ = true;
    std::vector<int> suffix_;               // All: free picks after the prefix
    std::vector<std::vector<int>> rounds_;  // Balanced: rounds 2..f as permutations
    std::vector<int> partial_;              // Balanced: trailing arrangement

    void emit(PickingSequence& out) const;
    bool advance();
};

/// Collects the whole space; throws ResourceLimitError past the cap.
std::vector<PickingSequence> enumerate_sequences(int n, int m, SequenceSpace space,
                                                 std::uint64_t cap = default_enum_cap());

}  // namespace pickseq
