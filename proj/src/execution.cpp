#include "execution.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace pickseq {

Allocation execute(const Instance& inst, const PickingSequence& seq) {
    if (!is_valid_sequence(seq)) throw std::invalid_argument("invalid picking sequence");
    if (seq.n != inst.n || seq.m() != inst.m)
        throw std::invalid_argument("sequence shape does not match instance (n, m)");

    Allocation alloc;
    alloc.bundles.assign(inst.n, {});
    alloc.pick_log.reserve(inst.m);
    std::vector<bool> taken(inst.m + 1, false);
    for (int turn = 1; turn <= inst.m; ++turn) {
        int agent = seq.at(turn);
        int chosen = 0;
        for (int g : inst.preference(agent)) {
            if (!taken[g]) {
                chosen = g;
                break;
            }
        }
        taken[chosen] = true;
        alloc.bundles[agent - 1].push_back(chosen);
        alloc.pick_log.push_back(PickEvent{turn, agent, chosen});
    }
    for (auto& bundle : alloc.bundles) std::sort(bundle.begin(), bundle.end());
    return alloc;
}

WelfareReport egalitarian_welfare(const Instance& inst, const Allocation& alloc) {
    WelfareReport report;
    report.per_agent.reserve(inst.n);
    for (int i = 1; i <= inst.n; ++i) report.per_agent.push_back(bundle_utility(inst, i, alloc.bundles[i - 1]));
    report.egalitarian = *std::min_element(report.per_agent.begin(), report.per_agent.end());
    return report;
}

Ef1Result is_ef1(const Instance& inst, const Allocation& alloc) {
    std::vector<Rational> own(inst.n + 1);
    for (int i = 1; i <= inst.n; ++i) own[i] = bundle_utility(inst, i, alloc.bundles[i - 1]);
    for (int i = 1; i <= inst.n; ++i) {
        for (int j = 1; j <= inst.n; ++j) {
            if (i == j || alloc.bundles[j - 1].empty()) continue;
            Rational total(0);
            Rational best(0);
            bool first = true;
            for (int g : alloc.bundles[j - 1]) {
                const Rational& u = inst.utility(i, g);
                total += u;
                if (first || u > best) best = u;
                first = false;
            }
            if (own[i] < total - best) return Ef1Result{false, i, j};
        }
    }
    return Ef1Result{true, 0, 0};
}

Ratio welfare_ratio(const Instance& inst, const PickingSequence& seq_num, const PickingSequence& seq_den) {
    Rational num = egalitarian_welfare(inst, execute(inst, seq_num)).egalitarian;
    Rational den = egalitarian_welfare(inst, execute(inst, seq_den)).egalitarian;
    return make_ratio(num, den);
}

std::string welfare_to_json(const WelfareReport& report, int indent) {
    nlohmann::json doc;
    nlohmann::json per = nlohmann::json::array();
    for (const auto& v : report.per_agent) per.push_back(rational_str(v));
    doc["per_agent"] = std::move(per);
    doc["egalitarian"] = rational_str(report.egalitarian);
    return doc.dump(indent);
}

}  // namespace pickseq
