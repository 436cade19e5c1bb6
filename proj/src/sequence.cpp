#include "sequence.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "errors.hpp"

namespace pickseq {

bool is_valid_sequence(const PickingSequence& seq) {
    if (seq.n < 2 || seq.picks.empty()) return false;
    for (int a : seq.picks) {
        if (a < 1 || a > seq.n) return false;
    }
    return true;
}

bool has_canonical_prefix(const PickingSequence& seq) {
    if (!is_valid_sequence(seq) || seq.m() < seq.n) return false;
    for (int i = 1; i <= seq.n; ++i) {
        if (seq.at(i) != i) return false;
    }
    return true;
}

bool is_recursively_balanced(const PickingSequence& seq) {
    if (!is_valid_sequence(seq)) return false;
    std::vector<int> count(seq.n + 1, 0);
    int lo = 0, hi = 0;
    for (int a : seq.picks) {
        ++count[a];
        lo = *std::min_element(count.begin() + 1, count.end());
        hi = *std::max_element(count.begin() + 1, count.end());
        if (hi - lo > 1) return false;
    }
    return true;
}

bool in_balanced_class(const PickingSequence& seq) {
    return has_canonical_prefix(seq) && is_recursively_balanced(seq);
}

std::vector<std::vector<int>> rounds(const PickingSequence& seq) {
    std::vector<std::vector<int>> out;
    for (int start = 0; start < seq.m(); start += seq.n) {
        int end = std::min(start + seq.n, seq.m());
        out.emplace_back(seq.picks.begin() + start, seq.picks.begin() + end);
    }
    return out;
}

AgentPickIndices agent_pick_indices(const PickingSequence& seq, int agent) {
    if (agent < 1 || agent > seq.n) throw std::invalid_argument("agent index out of range");
    AgentPickIndices out;
    out.agent = agent;
    for (int t = 1; t <= seq.m(); ++t) {
        if (seq.at(t) == agent) out.indices.push_back(t);
    }
    out.sentinel = seq.m() + 1;
    return out;
}

namespace {

void require_shape(int n, int m) {
    if (n < 2) throw std::invalid_argument("need n >= 2 agents");
    if (m < n) throw std::invalid_argument("need m >= n goods");
}

}  // namespace

PickingSequence make_round_robin(int n, int m) {
    require_shape(n, m);
    PickingSequence seq{n, {}};
    seq.picks.reserve(m);
    for (int t = 0; t < m; ++t) seq.picks.push_back(t % n + 1);
    return seq;
}

PickingSequence make_balanced_alternation(int n, int m) {
    require_shape(n, m);
    PickingSequence seq{n, {}};
    seq.picks.reserve(m);
    for (int t = 0; t < m; ++t) {
        int round = t / n;
        int pos = t % n;
        seq.picks.push_back(round % 2 == 0 ? pos + 1 : n - pos);
    }
    return seq;
}

PickingSequence make_last_first(int n, int m) {
    require_shape(n, m);
    PickingSequence seq{n, {}};
    seq.picks.reserve(m);
    for (int t = 0; t < m; ++t) {
        int round = t / n;
        int pos = t % n;
        seq.picks.push_back(round == 0 ? pos + 1 : n - pos);
    }
    return seq;
}

PickingSequence parse_sequence(const std::string& text, int agents) {
    PickingSequence seq;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) return;
        int value = 0;
        for (char c : token) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("invalid agent id in sequence: " + token);
            value = value * 10 + (c - '0');
        }
        if (value < 1) throw std::invalid_argument("agent ids are 1-based");
        seq.picks.push_back(value);
        token.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == ',' || c == '|') {
            flush();
        } else {
            token.push_back(c);
        }
    }
    flush();
    if (seq.picks.empty()) throw std::invalid_argument("empty picking sequence");
    int max_agent = *std::max_element(seq.picks.begin(), seq.picks.end());
    seq.n = agents > 0 ? agents : std::max(max_agent, 2);
    if (max_agent > seq.n) throw std::invalid_argument("sequence references an agent beyond n");
    return seq;
}

std::string format_sequence(const PickingSequence& seq) {
    std::string out;
    for (int t = 1; t <= seq.m(); ++t) {
        if (t > 1) out += (t - 1) % seq.n == 0 ? "|" : ",";
        out += std::to_string(seq.at(t));
    }
    return out;
}

PickingSequence normalize_prefix(const PickingSequence& seq, std::vector<int>* relabel) {
    if (!is_valid_sequence(seq) || seq.m() < seq.n)
        throw std::invalid_argument("sequence too short to normalize");
    std::vector<int> map(seq.n + 1, 0);
    for (int t = 1; t <= seq.n; ++t) {
        int agent = seq.at(t);
        if (map[agent] != 0) throw std::invalid_argument("first round does not contain every agent once");
        map[agent] = t;
    }
    PickingSequence out{seq.n, {}};
    out.picks.reserve(seq.m());
    for (int a : seq.picks) out.picks.push_back(map[a]);
    if (relabel) *relabel = map;
    return out;
}

BigInt pi_count(int n, int m) {
    require_shape(n, m);
    BigInt total(1);
    for (int i = 0; i < m - n; ++i) total *= n;
    return total;
}

BigInt rb_count(int n, int m) {
    require_shape(n, m);
    int f = m / n;
    int s = m - f * n;
    BigInt fact(1);
    for (int i = 2; i <= n; ++i) fact *= i;
    BigInt total(1);
    for (int r = 0; r < f - 1; ++r) total *= fact;
    if (s > 0) {
        BigInt arrangements(1);
        for (int i = 0; i < s; ++i) arrangements *= (n - i);
        total *= arrangements;
    }
    return total;
}

std::uint64_t default_enum_cap() {
    static const std::uint64_t cap = [] {
        if (const char* env = std::getenv("PICKSEQ_ENUM_CAP")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return static_cast<std::uint64_t>(10'000'000);
    }();
    return cap;
}

SequenceEnumerator::SequenceEnumerator(int n, int m, SequenceSpace space, std::uint64_t cap)
    : n_(n), m_(m), space_(space) {
    require_shape(n, m);
    total_ = space == SequenceSpace::All ? pi_count(n, m) : rb_count(n, m);
    if (total_ > cap)
        throw ResourceLimitError("sequence space has " + total_.str() + " members, exceeding the cap of " +
                                 std::to_string(cap));
    if (space_ == SequenceSpace::All) {
        suffix_.assign(m_ - n_, 1);
    } else {
        int f = m_ / n_;
        int s = m_ - f * n_;
        for (int r = 2; r <= f; ++r) {
            std::vector<int> perm(n_);
            std::iota(perm.begin(), perm.end(), 1);
            rounds_.push_back(std::move(perm));
        }
        partial_.resize(s);
        std::iota(partial_.begin(), partial_.end(), 1);
    }
}

void SequenceEnumerator::emit(PickingSequence& out) const {
    out.n = n_;
    out.picks.clear();
    out.picks.reserve(m_);
    for (int i = 1; i <= n_; ++i) out.picks.push_back(i);
    if (space_ == SequenceSpace::All) {
        out.picks.insert(out.picks.end(), suffix_.begin(), suffix_.end());
    } else {
        for (const auto& round : rounds_) out.picks.insert(out.picks.end(), round.begin(), round.end());
        out.picks.insert(out.picks.end(), partial_.begin(), partial_.end());
    }
}

namespace {

// Next arrangement (ordered k-subset of 1..n with distinct entries) in
// lexicographic order; false when `a` was the last one.
bool next_arrangement(std::vector<int>& a, int n) {
    const int k = static_cast<int>(a.size());
    std::vector<bool> used(n + 1, false);
    for (int v : a) used[v] = true;
    for (int i = k - 1; i >= 0; --i) {
        used[a[i]] = false;
        for (int v = a[i] + 1; v <= n; ++v) {
            if (used[v]) continue;
            a[i] = v;
            used[v] = true;
            // Fill the tail with the smallest unused values ascending.
            for (int j = i + 1; j < k; ++j) {
                for (int w = 1; w <= n; ++w) {
                    if (!used[w]) {
                        a[j] = w;
                        used[w] = true;
                        break;
                    }
                }
            }
            return true;
        }
    }
    return false;
}

}  // namespace

bool SequenceEnumerator::advance() {
    if (space_ == SequenceSpace::All) {
        for (int i = static_cast<int>(suffix_.size()) - 1; i >= 0; --i) {
            if (suffix_[i] < n_) {
                ++suffix_[i];
                std::fill(suffix_.begin() + i + 1, suffix_.end(), 1);
                return true;
            }
            suffix_[i] = 1;
        }
        return false;
    }
    if (!partial_.empty() && next_arrangement(partial_, n_)) return true;
    std::iota(partial_.begin(), partial_.end(), 1);
    for (int r = static_cast<int>(rounds_.size()) - 1; r >= 0; --r) {
        if (std::next_permutation(rounds_[r].begin(), rounds_[r].end())) return true;
    }
    return false;
}

bool SequenceEnumerator::next(PickingSequence& out) {
    if (done_) return false;
    if (first_) {
        first_ = false;
        emit(out);
        return true;
    }
    if (!advance()) {
        done_ = true;
        return false;
    }
    emit(out);
    return true;
}

std::vector<PickingSequence> enumerate_sequences(int n, int m, SequenceSpace space, std::uint64_t cap) {
    SequenceEnumerator en(n, m, space, cap);
    std::vector<PickingSequence> out;
    PickingSequence seq;
    while (en.next(seq)) out.push_back(seq);
    return out;
}

}  // namespace pickseq
