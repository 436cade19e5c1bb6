#include "mms.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "errors.hpp"

namespace pickseq {

std::uint64_t default_mms_cap() {
    static const std::uint64_t cap = [] {
        if (const char* env = std::getenv("PICKSEQ_MMS_CAP")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return static_cast<std::uint64_t>(100'000'000);
    }();
    return cap;
}

namespace {

struct MmsSearch {
    int n;
    std::vector<Rational> values;  // positive utilities, descending
    std::vector<Rational> suffix;  // suffix[k] = sum of values[k..]
    std::vector<Rational> sums;
    std::vector<int> assignment;
    std::vector<int> best_assignment;
    Rational best;
    bool have_best = false;
    std::uint64_t nodes = 0;
    std::uint64_t cap;

    // Largest achievable minimum from here: the t smallest final sums can
    // share at most the t smallest current sums plus everything unassigned.
    Rational upper_bound(int k) const {
        std::vector<Rational> sorted = sums;
        std::sort(sorted.begin(), sorted.end());
        Rational acc(0);
        Rational bound = sorted[0] + suffix[k];
        for (int t = 1; t <= n; ++t) {
            acc += sorted[t - 1];
            Rational candidate = (acc + suffix[k]) / t;
            if (candidate < bound) bound = candidate;
        }
        return bound;
    }

    void run(int k) {
        if (++nodes > cap) throw ResourceLimitError("MMS search exceeded node cap");
        if (k == static_cast<int>(values.size())) {
            Rational minimum = *std::min_element(sums.begin(), sums.end());
            if (!have_best || minimum > best) {
                best = minimum;
                best_assignment = assignment;
                have_best = true;
            }
            return;
        }
        if (have_best && upper_bound(k) <= best) return;
        for (int j = 0; j < n; ++j) {
            if (j > 0 && sums[j] == sums[j - 1]) continue;  // symmetric bundle
            sums[j] += values[k];
            assignment[k] = j;
            run(k + 1);
            sums[j] -= values[k];
        }
    }
};

}  // namespace

MmsResult mms_exact(const Instance& inst, int agent, std::uint64_t node_cap) {
    if (agent < 1 || agent > inst.n) throw std::out_of_range("agent index out of range");

    std::vector<int> positive;
    for (int g = 1; g <= inst.m; ++g) {
        if (inst.utility(agent, g) > 0) positive.push_back(g);
    }
    std::stable_sort(positive.begin(), positive.end(),
                     [&](int a, int b) { return inst.utility(agent, a) > inst.utility(agent, b); });

    MmsSearch search;
    search.n = inst.n;
    search.cap = node_cap;
    for (int g : positive) search.values.push_back(inst.utility(agent, g));
    search.suffix.assign(search.values.size() + 1, Rational(0));
    for (int k = static_cast<int>(search.values.size()) - 1; k >= 0; --k)
        search.suffix[k] = search.suffix[k + 1] + search.values[k];
    search.sums.assign(inst.n, Rational(0));
    search.assignment.assign(search.values.size(), 0);
    search.run(0);

    MmsResult result;
    result.agent = agent;
    result.value = search.have_best ? search.best : Rational(0);
    result.witness.assign(inst.n, {});
    for (std::size_t k = 0; k < positive.size(); ++k)
        result.witness[search.best_assignment[k]].push_back(positive[k]);
    for (int g = 1; g <= inst.m; ++g) {
        if (inst.utility(agent, g) == 0) result.witness[0].push_back(g);  // zero goods never move the minimum
    }
    for (auto& bundle : result.witness) std::sort(bundle.begin(), bundle.end());
    return result;
}

std::vector<Ratio> mms_ratio_profile(const Instance& inst, const PickingSequence& seq, std::uint64_t node_cap) {
    WelfareReport welfare = egalitarian_welfare(inst, execute(inst, seq));
    std::vector<Ratio> out;
    out.reserve(inst.n);
    for (int i = 1; i <= inst.n; ++i)
        out.push_back(make_ratio(welfare.per_agent[i - 1], mms_exact(inst, i, node_cap).value));
    return out;
}

Rational agent_lb_general(int n, int m, int agent, const AgentPickIndices& indices) {
    Rational best;
    bool first = true;
    for (int r = 2; r <= indices.count() + 1; ++r) {
        Rational term(BigInt((r - 1) * (n + 1 - agent)), BigInt(indices.t(r) - agent));
        if (first || term < best) best = term;
        first = false;
    }
    (void)m;
    return best;
}

TightnessBound agent_ub_tightness(int n, int m, int agent, const AgentPickIndices& indices) {
    TightnessBound out;
    bool first = true;
    for (int r = 2; r <= indices.count() + 1; ++r) {
        int floor_share = (indices.t(r) - agent) / (n + 1 - agent);
        Rational term(BigInt(r - 1), BigInt(floor_share));
        if (first || term < out.value) {
            out.value = term;
            out.minimizing_round = r;
        }
        first = false;
    }
    (void)m;
    return out;
}

Rational agent_lb_large_m(int n, int agent) { return Rational(BigInt(n + 1 - agent), BigInt(2 * n - agent)); }

Rational agent_lb_small_m(int n, int m, int agent) {
    return Rational(BigInt(1), BigInt((m + 1 - agent) / (n + 1 - agent)));
}

namespace {

void require_balanced_member(const PickingSequence& seq) {
    if (!in_balanced_class(seq))
        throw std::domain_error("sequence is not a recursively balanced member of R_{n,m}");
}

}  // namespace

bool is_irregular(const PickingSequence& seq) {
    require_balanced_member(seq);
    const int n = seq.n;
    const int m = seq.m();
    if (m == n) return false;
    int round2_len = std::min(n, m - n);
    if (round2_len % 2 != 0) return false;
    for (int t = n + 1; t <= n + round2_len; ++t) {
        if (seq.at(t) == n - 1) return false;
    }
    int half = (m - n) / 2;
    bool agent_n_early = false;
    for (int t = n + 1; t <= n + std::min(half, round2_len); ++t) {
        if (seq.at(t) == n) {
            agent_n_early = true;
            break;
        }
    }
    if (!agent_n_early) return false;
    if (!(n + 2 <= m && m <= 2 * n - 1))
        throw std::logic_error("irregular sequence outside n+2 <= m <= 2n-1");
    return true;
}

Rational regular_formula_alpha(const PickingSequence& seq) {
    require_balanced_member(seq);
    AgentPickIndices indices = agent_pick_indices(seq, seq.n);
    Rational best;
    bool first = true;
    for (int r = 2; r <= indices.count() + 1; ++r) {
        Rational term(BigInt(r - 1), BigInt(indices.t(r) - seq.n));
        if (first || term < best) best = term;
        first = false;
    }
    return best;
}

Rational guarantee_alpha(const PickingSequence& seq) {
    if (is_irregular(seq)) return Rational(BigInt(2), BigInt(seq.m() - seq.n + 2));
    return regular_formula_alpha(seq);
}

GuaranteeConstants guarantee_constants(int n, int m) {
    if (n < 2 || m < n) throw std::invalid_argument("need n >= 2 and m >= n");
    int f = m / n;
    int c = (m + n - 1) / n;
    GuaranteeConstants out;
    out.alpha_max = std::min(Rational(BigInt(f), BigInt(f * n - n + 1)), Rational(BigInt(c), BigInt(m - n + 1)));
    out.alpha_min = std::max(Rational(BigInt(1), BigInt(n)), Rational(BigInt(1), BigInt(m - n + 1)));
    int log2n = 0;
    while ((1 << (log2n + 1)) <= n) ++log2n;
    out.round_log_bound = log2n + 1;
    return out;
}

bool is_best(const PickingSequence& seq) {
    if (is_irregular(seq)) return false;
    const int n = seq.n;
    const int m = seq.m();
    const int total_rounds = (m + n - 1) / n;
    AgentPickIndices indices = agent_pick_indices(seq, n);
    if (indices.count() != total_rounds) return false;
    Rational alpha_max = guarantee_constants(n, m).alpha_max;
    for (int r = 2; r <= total_rounds; ++r) {
        if (Rational(BigInt(r - 1), BigInt(indices.t(r) - n)) < alpha_max) return false;
    }
    return true;
}

bool is_worst(const PickingSequence& seq) {
    require_balanced_member(seq);
    const int n = seq.n;
    const int m = seq.m();
    if (m <= 2 * n - 1) return agent_pick_indices(seq, n).count() == 1;
    auto rs = rounds(seq);
    for (std::size_t r = 1; r < rs.size(); ++r) {
        const auto& round = rs[r];
        if (static_cast<int>(round.size()) < n - 1) continue;
        bool early = false;
        for (int pos = 0; pos < n - 1; ++pos) {
            if (round[pos] == n) {
                early = true;
                break;
            }
        }
        if (!early) return true;
    }
    return false;
}

Rational two_agent_guarantee(const PickingSequence& seq) {
    if (seq.n != 2) throw std::domain_error("two-agent classification needs n = 2");
    if (seq.m() < 3) throw std::domain_error("two-agent classification needs m >= 3");
    require_balanced_member(seq);
    auto rs = rounds(seq);
    bool agent2_first = true;
    for (std::size_t r = 1; r < rs.size(); ++r) {
        if (rs[r][0] != 2) {
            agent2_first = false;
            break;
        }
    }
    if (!agent2_first) return Rational(BigInt(1), BigInt(2));
    int half = seq.m() / 2;
    return Rational(BigInt(half), BigInt(2 * half - 1));  // 1/(2 - 1/floor(m/2))
}

SequenceReport classify(const PickingSequence& seq) {
    SequenceReport report;
    report.sequence = seq;
    report.valid = is_valid_sequence(seq);
    if (!report.valid) return report;
    report.canonical_prefix = has_canonical_prefix(seq);
    report.recursively_balanced = is_recursively_balanced(seq);
    report.balanced_member = report.canonical_prefix && report.recursively_balanced;
    if (!report.balanced_member) return report;
    report.irregular = is_irregular(seq);
    report.alpha_regular_formula = regular_formula_alpha(seq);
    report.alpha = *report.irregular ? Rational(BigInt(2), BigInt(seq.m() - seq.n + 2))
                                     : *report.alpha_regular_formula;
    report.best = is_best(seq);
    report.worst = is_worst(seq);
    report.constants = guarantee_constants(seq.n, seq.m());
    return report;
}

std::string report_to_json(const SequenceReport& report, int indent) {
    nlohmann::json doc;
    doc["sequence"] = format_sequence(report.sequence);
    doc["n"] = report.sequence.n;
    doc["m"] = report.sequence.m();
    doc["valid"] = report.valid;
    doc["canonical_prefix"] = report.canonical_prefix;
    doc["recursively_balanced"] = report.recursively_balanced;
    doc["balanced_member"] = report.balanced_member;
    if (report.balanced_member) {
        doc["irregular"] = *report.irregular;
        doc["alpha"] = rational_str(*report.alpha);
        doc["alpha_regular_formula"] = rational_str(*report.alpha_regular_formula);
        doc["best"] = *report.best;
        doc["worst"] = *report.worst;
        doc["alpha_max"] = rational_str(report.constants->alpha_max);
        doc["alpha_min"] = rational_str(report.constants->alpha_min);
    }
    return doc.dump(indent);
}

std::string report_one_line(const SequenceReport& report) {
    std::string line = format_sequence(report.sequence);
    if (!report.valid) return line + "  invalid";
    if (!report.recursively_balanced) return line + "  not recursively balanced";
    if (!report.canonical_prefix) return line + "  recursively balanced, outside R_{n,m} (prefix not 1..n)";
    line += *report.irregular ? "  irregular" : "  regular";
    line += "  alpha=" + rational_str(*report.alpha);
    if (*report.best && *report.worst)
        line += "  [best+worst]";
    else if (*report.best)
        line += "  [best]";
    else if (*report.worst)
        line += "  [worst]";
    else
        line += "  [neither]";
    return line;
}

}  // namespace pickseq
