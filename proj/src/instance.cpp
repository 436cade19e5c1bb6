#include "instance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace pickseq {

std::vector<std::vector<int>> default_preferences(const std::vector<std::vector<Rational>>& utilities) {
    std::vector<std::vector<int>> prefs;
    prefs.reserve(utilities.size());
    for (const auto& row : utilities) {
        std::vector<int> order(row.size());
        std::iota(order.begin(), order.end(), 1);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return row[a - 1] > row[b - 1];  // descending utility, stable keeps ascending index on ties
        });
        prefs.push_back(std::move(order));
    }
    return prefs;
}

Instance make_instance(int n, int m, std::vector<std::vector<Rational>> utilities,
                       std::vector<std::vector<int>> preferences) {
    Instance inst;
    inst.n = n;
    inst.m = m;
    inst.utilities = std::move(utilities);
    inst.preferences = preferences.empty() ? default_preferences(inst.utilities) : std::move(preferences);
    auto violations = validate_instance(inst);
    if (!violations.empty()) {
        std::string msg = "invalid instance:";
        for (const auto& v : violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
    return inst;
}

std::vector<std::string> validate_instance(const Instance& inst) {
    std::vector<std::string> out;
    if (inst.n < 2) out.push_back("n < 2");
    if (inst.m < inst.n) out.push_back("m < n");
    if (static_cast<int>(inst.utilities.size()) != inst.n) {
        out.push_back("utilities row count != n");
        return out;
    }
    for (int i = 1; i <= inst.n; ++i) {
        const auto& row = inst.utilities[i - 1];
        if (static_cast<int>(row.size()) != inst.m) {
            out.push_back("utilities row " + std::to_string(i) + " length != m");
            return out;
        }
        for (int j = 1; j <= inst.m; ++j) {
            if (row[j - 1] < 0)
                out.push_back("negative utility for agent " + std::to_string(i) + ", good " + std::to_string(j));
        }
    }
    if (static_cast<int>(inst.preferences.size()) != inst.n) {
        out.push_back("preference list count != n");
        return out;
    }
    for (int i = 1; i <= inst.n; ++i) {
        const auto& order = inst.preferences[i - 1];
        if (static_cast<int>(order.size()) != inst.m) {
            out.push_back("preferences of agent " + std::to_string(i) + " not a permutation");
            continue;
        }
        std::vector<bool> seen(inst.m + 1, false);
        bool perm = true;
        for (int g : order) {
            if (g < 1 || g > inst.m || seen[g]) {
                perm = false;
                break;
            }
            seen[g] = true;
        }
        if (!perm) {
            out.push_back("preferences of agent " + std::to_string(i) + " not a permutation");
            continue;
        }
        // Consistency: a strictly more valuable good must come first.
        for (std::size_t a = 0; a < order.size(); ++a) {
            for (std::size_t b = a + 1; b < order.size(); ++b) {
                if (inst.utility(i, order[b]) > inst.utility(i, order[a])) {
                    out.push_back("inconsistent order for agent " + std::to_string(i) + ": good " +
                                  std::to_string(order[b]) + " listed after good " + std::to_string(order[a]));
                    a = order.size();  // one message per agent is enough
                    break;
                }
            }
        }
    }
    return out;
}

Rational bundle_utility(const Instance& inst, int agent, const std::vector<int>& bundle) {
    if (agent < 1 || agent > inst.n) throw std::out_of_range("agent index out of range");
    Rational sum(0);
    for (int g : bundle) {
        if (g < 1 || g > inst.m) throw std::out_of_range("good index out of range");
        sum += inst.utility(agent, g);
    }
    return sum;
}

std::vector<std::string> validate_allocation(const Instance& inst, const Allocation& alloc) {
    std::vector<std::string> out;
    if (static_cast<int>(alloc.bundles.size()) != inst.n) {
        out.push_back("bundle count != n");
        return out;
    }
    std::vector<int> owner(inst.m + 1, 0);
    for (int i = 1; i <= inst.n; ++i) {
        for (int g : alloc.bundles[i - 1]) {
            if (g < 1 || g > inst.m) {
                out.push_back("good index out of range in bundle " + std::to_string(i));
                return out;
            }
            if (owner[g] != 0) out.push_back("good " + std::to_string(g) + " allocated twice");
            owner[g] = i;
        }
    }
    for (int g = 1; g <= inst.m; ++g) {
        if (owner[g] == 0) out.push_back("good " + std::to_string(g) + " unallocated");
    }
    if (!alloc.pick_log.empty()) {
        if (static_cast<int>(alloc.pick_log.size()) != inst.m) out.push_back("pick log length != m");
        std::vector<bool> seen(inst.m + 1, false);
        for (std::size_t k = 0; k < alloc.pick_log.size(); ++k) {
            const auto& ev = alloc.pick_log[k];
            if (ev.turn != static_cast<int>(k) + 1) out.push_back("pick log turns not sequential");
            if (ev.good < 1 || ev.good > inst.m || seen[ev.good]) {
                out.push_back("pick log repeats or misindexes a good");
                break;
            }
            seen[ev.good] = true;
            if (ev.agent < 1 || ev.agent > inst.n || owner[ev.good] != ev.agent) {
                out.push_back("pick log disagrees with bundles");
                break;
            }
        }
    }
    return out;
}

namespace {

using nlohmann::json;

Rational rational_from_json(const json& value) {
    if (value.is_number_integer()) return Rational(BigInt(value.get<long long>()));
    if (value.is_string()) return parse_rational(value.get<std::string>());
    throw std::invalid_argument("rational must be an integer or a \"p/q\" string");
}

json rational_to_json(const Rational& value) {
    if (denominator(value) == 1) {
        const BigInt& num = numerator(value);
        if (num >= std::numeric_limits<long long>::min() && num <= std::numeric_limits<long long>::max())
            return json(static_cast<long long>(num));
    }
    return json(rational_str(value));
}

}  // namespace

Instance instance_from_json(const std::string& json_text) {
    json doc = json::parse(json_text, nullptr, true, /*ignore_comments=*/true);
    if (!doc.is_object()) throw std::invalid_argument("instance JSON must be an object");
    Instance inst;
    inst.n = doc.at("n").get<int>();
    inst.m = doc.at("m").get<int>();
    const json& util = doc.at("utilities");
    if (!util.is_array()) throw std::invalid_argument("\"utilities\" must be an array of rows");
    for (const json& row : util) {
        std::vector<Rational> values;
        for (const json& cell : row) values.push_back(rational_from_json(cell));
        inst.utilities.push_back(std::move(values));
    }
    if (doc.contains("preferences") && !doc["preferences"].is_null()) {
        for (const json& row : doc["preferences"]) inst.preferences.push_back(row.get<std::vector<int>>());
    } else {
        inst.preferences = default_preferences(inst.utilities);
    }
    auto violations = validate_instance(inst);
    if (!violations.empty()) {
        std::string msg = "invalid instance:";
        for (const auto& v : violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
    return inst;
}

std::string instance_to_json(const Instance& inst, int indent) {
    json doc;
    doc["n"] = inst.n;
    doc["m"] = inst.m;
    json rows = json::array();
    for (const auto& row : inst.utilities) {
        json cells = json::array();
        for (const auto& v : row) cells.push_back(rational_to_json(v));
        rows.push_back(std::move(cells));
    }
    doc["utilities"] = std::move(rows);
    doc["preferences"] = inst.preferences;
    return doc.dump(indent);
}

std::string allocation_to_json(const Allocation& alloc, int indent) {
    json doc;
    doc["bundles"] = alloc.bundles;
    json log = json::array();
    for (const auto& ev : alloc.pick_log) log.push_back(json::array({ev.turn, ev.agent, ev.good}));
    doc["pick_log"] = std::move(log);
    return doc.dump(indent);
}

Allocation allocation_from_json(const std::string& json_text) {
    json doc = json::parse(json_text, nullptr, true, /*ignore_comments=*/true);
    Allocation alloc;
    alloc.bundles = doc.at("bundles").get<std::vector<std::vector<int>>>();
    if (doc.contains("pick_log")) {
        for (const json& row : doc["pick_log"]) {
            if (!row.is_array() || row.size() != 3) throw std::invalid_argument("pick_log rows must be [turn,agent,good]");
            alloc.pick_log.push_back(PickEvent{row[0].get<int>(), row[1].get<int>(), row[2].get<int>()});
        }
    }
    return alloc;
}

}  // namespace pickseq
