#include "adversary.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "mms.hpp"

namespace pickseq {

namespace {

void require_balanced(const PickingSequence& seq, int n, int m) {
    if (seq.n != n || seq.m() != m) throw std::invalid_argument("sequence shape does not match (n, m)");
    if (!in_balanced_class(seq)) throw std::domain_error("sequence must be in R_{n,m}");
}

std::vector<std::vector<Rational>> zero_matrix(int n, int m) {
    return std::vector<std::vector<Rational>>(n, std::vector<Rational>(m, Rational(0)));
}

// Smallest agent id with no pick in the (incomplete) second round.
int agent_missing_round2(const PickingSequence& seq) {
    std::vector<bool> picks_in_round2(seq.n + 1, false);
    for (int t = seq.n + 1; t <= std::min(2 * seq.n, seq.m()); ++t) picks_in_round2[seq.at(t)] = true;
    for (int a = 1; a <= seq.n; ++a) {
        if (!picks_in_round2[a]) return a;
    }
    throw std::logic_error("second round is complete; no missing agent");
}

PickingSequence prefix_then_agent(int n, int m, int k) {
    PickingSequence seq{n, {}};
    for (int i = 1; i <= n; ++i) seq.picks.push_back(i);
    for (int t = n + 1; t <= m; ++t) seq.picks.push_back(k);
    return seq;
}

}  // namespace

GeneratedInstance gen_ew_zero(int n, int m, const PickingSequence& seq) {
    require_balanced(seq, n, m);
    auto util = zero_matrix(n, m);
    util[0][0] = Rational(2);
    util[0][1] = Rational(1);
    util[1][0] = Rational(3);
    for (int i = 3; i <= n; ++i) util[i - 1][i - 1] = Rational(3);

    GeneratedInstance out;
    out.instance = make_instance(n, m, std::move(util));
    out.generator = "ew_zero n=" + std::to_string(n) + " m=" + std::to_string(m) +
                    " seq=" + format_sequence(seq);
    out.base_sequence = seq;
    PickingSequence swapped = seq;
    std::swap(swapped.picks[0], swapped.picks[1]);
    out.witness_sequence = swapped;
    out.expected = Rational(0);
    out.kind = ExpectedKind::WelfareOfBase;
    out.witness_welfare = Rational(1);
    return out;
}

GeneratedInstance gen_price_all(int n, int m, const PickingSequence& seq) {
    require_balanced(seq, n, m);
    if (m < n + 1) throw std::invalid_argument("price construction needs m >= n+1");
    auto util = zero_matrix(n, m);
    GeneratedInstance out;
    int k;
    if (m <= 2 * n - 1) {
        k = agent_missing_round2(seq);
        Rational share(BigInt(1), BigInt(m - n + 1));
        util[k - 1][k - 1] = share;
        for (int j = n + 1; j <= m; ++j) util[k - 1][j - 1] = share;
        out.expected = Rational(m - n + 1);
    } else {
        k = seq.at(2 * n);
        Rational share(BigInt(1), BigInt(n));
        util[k - 1][k - 1] = share;
        for (int j = n + 1; j <= 2 * n - 1; ++j) util[k - 1][j - 1] = share;
        out.expected = Rational(n);
    }
    for (int i = 1; i <= n; ++i) {
        if (i != k) util[i - 1][i - 1] = Rational(1);
    }
    out.instance = make_instance(n, m, std::move(util));
    out.generator = "price_all n=" + std::to_string(n) + " m=" + std::to_string(m) +
                    " seq=" + format_sequence(seq) + " k=" + std::to_string(k);
    out.target_agent = k;
    out.base_sequence = seq;
    out.witness_sequence = prefix_then_agent(n, m, k);
    out.kind = ExpectedKind::RatioExact;
    return out;
}

GeneratedInstance gen_price_rb(int n, int m, const PickingSequence& seq) {
    require_balanced(seq, n, m);
    if (m < n + 1) throw std::invalid_argument("price construction needs m >= n+1");
    auto util = zero_matrix(n, m);
    GeneratedInstance out;
    out.base_sequence = seq;
    if (m <= 2 * n - 1) {
        int k = agent_missing_round2(seq);
        for (int j = 1; j <= m; ++j) util[k - 1][j - 1] = Rational(BigInt(1), BigInt(m));
        for (int i = 1; i <= n; ++i) {
            if (i != k) util[i - 1][i - 1] = Rational(1);
        }
        out.instance = make_instance(n, m, std::move(util));
        out.generator = "price_rb n=" + std::to_string(n) + " m=" + std::to_string(m) +
                        " seq=" + format_sequence(seq) + " k=" + std::to_string(k) + " case=small";
        out.target_agent = k;
        // Witness: agent k leads the second round, remaining agents ascending.
        PickingSequence witness{n, {}};
        for (int i = 1; i <= n; ++i) witness.picks.push_back(i);
        witness.picks.push_back(k);
        for (int a = 1; a <= n && static_cast<int>(witness.picks.size()) < m; ++a) {
            if (a != k) witness.picks.push_back(a);
        }
        out.witness_sequence = witness;
        out.expected = Rational(2);
        out.kind = ExpectedKind::RatioExact;
        return out;
    }

    // Large case: round-2 order i_1..i_n of the base sequence; the witness
    // repeats that order reversed in every round after the first.
    std::vector<int> order;  // order[k-1] = i_k
    for (int t = n + 1; t <= 2 * n; ++t) order.push_back(seq.at(t));
    int last = order[n - 1];
    Rational eps(BigInt(1), BigInt(2LL * (2 * n - 1) * m));
    for (int j = 1; j <= 2 * n - 1; ++j) util[last - 1][j - 1] = Rational(BigInt(1), BigInt(2 * n - 1));
    for (int k = 1; k <= n - 1; ++k) {
        int agent = order[k - 1];
        long long block = 0;
        for (int j = n + 1; j <= n + k; ++j, ++block) util[agent - 1][j - 1] = eps;
        for (int j = 2 * n; j <= m; ++j, ++block) util[agent - 1][j - 1] = eps;
        util[agent - 1][agent - 1] = Rational(1) - Rational(BigInt(block), BigInt(1)) * eps;
    }
    out.instance = make_instance(n, m, std::move(util));
    out.generator = "price_rb n=" + std::to_string(n) + " m=" + std::to_string(m) +
                    " seq=" + format_sequence(seq) + " case=large";
    out.target_agent = last;
    PickingSequence witness{n, {}};
    for (int i = 1; i <= n; ++i) witness.picks.push_back(i);
    while (static_cast<int>(witness.picks.size()) < m) {
        for (int k = n; k >= 1 && static_cast<int>(witness.picks.size()) < m; --k)
            witness.picks.push_back(order[k - 1]);
    }
    out.witness_sequence = witness;
    GuaranteeConstants constants = guarantee_constants(n, m);
    int bound = std::min((m + n - 1) / n, constants.round_log_bound);
    out.expected = Rational(bound);
    out.kind = ExpectedKind::RatioAtLeast;
    return out;
}

GeneratedInstance gen_mms_agent(int n, int m, const PickingSequence& seq, int agent) {
    require_balanced(seq, n, m);
    if (agent < 1 || agent > n) throw std::invalid_argument("agent index out of range");
    AgentPickIndices indices = agent_pick_indices(seq, agent);
    TightnessBound bound = agent_ub_tightness(n, m, agent, indices);
    int s = bound.minimizing_round;
    int ts = indices.t(s);

    auto util = zero_matrix(n, m);
    for (int j = 1; j < agent; ++j) util[agent - 1][j - 1] = Rational(m);
    for (int j = agent; j <= ts - 1; ++j) util[agent - 1][j - 1] = Rational(1);
    for (int i = 1; i <= n; ++i) {
        if (i != agent) util[i - 1][i - 1] = Rational(1);
    }

    GeneratedInstance out;
    out.instance = make_instance(n, m, std::move(util));
    out.generator = "mms_agent n=" + std::to_string(n) + " m=" + std::to_string(m) +
                    " seq=" + format_sequence(seq) + " i=" + std::to_string(agent) +
                    " s=" + std::to_string(s);
    out.target_agent = agent;
    out.base_sequence = seq;
    out.expected = bound.value;
    out.kind = ExpectedKind::RatioExact;
    out.expected_mms = Rational((ts - agent) / (n + 1 - agent));
    out.expected_utility = Rational(s - 1);
    return out;
}

namespace {

GeneratedInstance gen_mms_agent_n(int n, int m, bool truncate_at_full_rounds) {
    if (n < 2 || m < n) throw std::invalid_argument("need n >= 2 and m >= n");
    auto util = zero_matrix(n, m);
    for (int i = 1; i < n; ++i) util[i - 1][i - 1] = Rational(m);
    for (int j = 1; j < n; ++j) util[n - 1][j - 1] = Rational(m);
    int top = truncate_at_full_rounds ? (m / n) * n : m;
    for (int j = n; j <= top; ++j) util[n - 1][j - 1] = Rational(1);
    GeneratedInstance out;
    out.instance = make_instance(n, m, std::move(util));
    out.target_agent = n;
    return out;
}

}  // namespace

GeneratedInstance gen_mms_I1(int n, int m) {
    GeneratedInstance out = gen_mms_agent_n(n, m, true);
    int f = m / n;
    out.generator = "mms_I1 n=" + std::to_string(n) + " m=" + std::to_string(m);
    out.expected = Rational(BigInt(f), BigInt(f * n - n + 1));
    out.kind = ExpectedKind::RatioExact;  // for every sequence in R_{n,m}
    out.expected_mms = Rational(f * n - n + 1);
    out.expected_utility = Rational(f);
    return out;
}

GeneratedInstance gen_mms_I2(int n, int m) {
    GeneratedInstance out = gen_mms_agent_n(n, m, false);
    out.generator = "mms_I2 n=" + std::to_string(n) + " m=" + std::to_string(m);
    out.expected = Rational(BigInt((m + n - 1) / n), BigInt(m - n + 1));
    out.kind = ExpectedKind::RatioAtMost;
    out.expected_mms = Rational(m - n + 1);
    return out;
}

GeneratedInstance gen_ef1_counterexample(const PickingSequence& seq) {
    if (!is_valid_sequence(seq) || seq.m() < seq.n)
        throw std::invalid_argument("invalid picking sequence");
    if (is_recursively_balanced(seq)) throw std::domain_error("sequence is recursively balanced");

    const int n = seq.n;
    std::vector<int> count(n + 1, 0);
    int prefix_len = 0;
    int ahead = 0, behind = 0;
    for (int t = 1; t <= seq.m(); ++t) {
        int j = seq.at(t);
        ++count[j];
        for (int i = 1; i <= n; ++i) {
            if (count[j] - count[i] >= 2) {
                prefix_len = t;
                ahead = j;
                behind = i;
                break;
            }
        }
        if (prefix_len > 0) break;
    }

    auto util = zero_matrix(n, seq.m());
    for (int i = 1; i <= n; ++i) {
        int top = (i == ahead || i == behind) ? prefix_len : seq.m();
        for (int j = 1; j <= top; ++j) util[i - 1][j - 1] = Rational(1);
    }
    GeneratedInstance out;
    out.instance = make_instance(n, seq.m(), std::move(util));
    out.generator = "ef1_counterexample n=" + std::to_string(n) + " m=" + std::to_string(seq.m()) +
                    " seq=" + format_sequence(seq) + " prefix=" + std::to_string(prefix_len);
    out.base_sequence = seq;
    out.kind = ExpectedKind::Ef1Violation;
    out.envier = behind;
    out.envied = ahead;
    return out;
}

std::string generated_to_json(const GeneratedInstance& gen, int indent) {
    nlohmann::json doc;
    doc["generator"] = gen.generator;
    doc["n"] = gen.instance.n;
    doc["m"] = gen.instance.m;
    if (gen.target_agent > 0) doc["target_agent"] = gen.target_agent;
    if (!gen.base_sequence.picks.empty()) doc["sequence"] = format_sequence(gen.base_sequence);
    if (gen.witness_sequence) doc["witness_sequence"] = format_sequence(*gen.witness_sequence);
    switch (gen.kind) {
        case ExpectedKind::WelfareOfBase:
            doc["expected_welfare"] = rational_str(gen.expected);
            break;
        case ExpectedKind::RatioExact:
            doc["expected_ratio"] = rational_str(gen.expected);
            break;
        case ExpectedKind::RatioAtLeast:
            doc["expected_ratio_at_least"] = rational_str(gen.expected);
            break;
        case ExpectedKind::RatioAtMost:
            doc["expected_ratio_at_most"] = rational_str(gen.expected);
            break;
        case ExpectedKind::Ef1Violation:
            doc["ef1_violation"] = nlohmann::json::array({gen.envier, gen.envied});
            break;
    }
    if (gen.witness_welfare) doc["witness_welfare"] = rational_str(*gen.witness_welfare);
    if (gen.expected_mms) doc["expected_mms"] = rational_str(*gen.expected_mms);
    if (gen.expected_utility) doc["expected_utility"] = rational_str(*gen.expected_utility);
    doc["instance"] = nlohmann::json::parse(instance_to_json(gen.instance));
    return doc.dump(indent);
}

}  // namespace pickseq
