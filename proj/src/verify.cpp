#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "adversary.hpp"
#include "errors.hpp"
#include "execution.hpp"

namespace pickseq {

namespace {

const std::vector<std::pair<TheoremId, std::string>>& theorem_table() {
    static const std::vector<std::pair<TheoremId, std::string>> table = {
        {TheoremId::prop_2_1, "prop_2_1"},
        {TheoremId::prop_3_1, "prop_3_1"},
        {TheoremId::thm_3_3, "thm_3_3"},
        {TheoremId::thm_3_4, "thm_3_4"},
        {TheoremId::lem_3_5, "lem_3_5"},
        {TheoremId::lem_3_6, "lem_3_6"},
        {TheoremId::lem_4_1, "lem_4_1"},
        {TheoremId::lem_4_2, "lem_4_2"},
        {TheoremId::lem_4_3, "lem_4_3"},
        {TheoremId::lem_4_4, "lem_4_4"},
        {TheoremId::lem_4_5, "lem_4_5"},
        {TheoremId::lem_4_6, "lem_4_6"},
        {TheoremId::lem_4_7, "lem_4_7"},
        {TheoremId::thm_regular, "thm_regular"},
        {TheoremId::thm_irregular, "thm_irregular"},
        {TheoremId::thm_best, "thm_best"},
        {TheoremId::thm_worst, "thm_worst"},
        {TheoremId::cor_two_agents, "cor_two_agents"},
        {TheoremId::example_3_7, "example_3_7"},
    };
    return table;
}

std::uint64_t theorem_index(TheoremId id) {
    const auto& table = theorem_table();
    for (std::size_t k = 0; k < table.size(); ++k) {
        if (table[k].first == id) return k;
    }
    return 0;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::vector<long long> grid_to_ints(const std::vector<Rational>& values) {
    BigInt common(1);
    for (const Rational& v : values) common = boost::multiprecision::lcm(common, denominator(v));
    std::vector<long long> out;
    for (const Rational& v : values)
        out.push_back((numerator(v) * (common / denominator(v))).convert_to<long long>());
    return out;
}

void fail(TheoremCheck& check, const std::string& what, const std::string& detail,
          const std::string& instance_json = {}, const std::string& sequence = {},
          const std::string& witness = {}) {
    check.pass = false;
    if (!check.counterexample) {
        SweepViolation violation;
        violation.check = what;
        violation.detail = detail;
        violation.instance_json = instance_json;
        violation.sequence = sequence;
        violation.witness_sequence = witness;
        check.counterexample = violation;
    }
}

void absorb(TheoremCheck& check, const SweepReport& report) {
    check.space_covered += report.instances_covered;
    check.executions += report.executions;
    if (!report.pass) {
        check.pass = false;
        if (!check.counterexample) check.counterexample = report.violation;
    }
}

Rational realized_utility(const Instance& inst, const PickingSequence& seq, int agent) {
    Allocation alloc = execute(inst, seq);
    return bundle_utility(inst, agent, alloc.bundles[agent - 1]);
}

bool pair_violates_ef1(const Instance& inst, const Allocation& alloc, int i, int j) {
    if (alloc.bundles[j - 1].empty()) return false;
    Rational own = bundle_utility(inst, i, alloc.bundles[i - 1]);
    Rational total(0), best(0);
    for (int g : alloc.bundles[j - 1]) {
        const Rational& u = inst.utility(i, g);
        total += u;
        if (u > best) best = u;
    }
    return own < total - best;
}

std::optional<PickingSequence> sample_non_balanced(int n, int m, std::mt19937_64& rng) {
    if (m < n + 2) return std::nullopt;  // every member of Pi_{n,m} is recursively balanced
    for (int tries = 0; tries < 100000; ++tries) {
        PickingSequence seq{n, {}};
        for (int i = 1; i <= n; ++i) seq.picks.push_back(i);
        for (int t = n; t < m; ++t) seq.picks.push_back(static_cast<int>(rng() % n) + 1);
        if (!is_recursively_balanced(seq)) return seq;
    }
    throw std::logic_error("failed to sample a non-balanced sequence");
}

SweepReport run_guarantee_space(int n, int m, const SearchSpec& spec, const SweepChecks& checks) {
    if (spec.mode == SearchSpec::Mode::ExhaustiveGrid)
        return exhaustive_guarantee_sweep(n, m, grid_to_ints(spec.utility_values), checks);
    RandomSweepOptions options;
    options.count = spec.sample_count;
    options.seed = spec.seed;
    options.checks = checks;
    options.price_bounds = false;
    return random_sweep(n, m, options);
}

// ---------------------------------------------------------------------------
// Per-theorem runners.

void run_prop_2_1(TheoremCheck& check, int n, int m, const SearchSpec& spec) {
    check.claim = "a picking sequence always yields EF1 iff it is recursively balanced";
    SweepChecks checks{false, true, false};
    absorb(check, run_guarantee_space(n, m, spec, checks));
    if (!check.pass) return;

    // Forward direction: proof-constructed counterexamples for non-balanced
    // sequences, 100 seeded samples.
    std::mt19937_64 rng(spec.seed);
    int produced = 0;
    for (int k = 0; k < 100; ++k) {
        auto seq = sample_non_balanced(n, m, rng);
        if (!seq) break;
        GeneratedInstance gen = gen_ef1_counterexample(*seq);
        Allocation alloc = execute(gen.instance, *seq);
        Ef1Result verdict = is_ef1(gen.instance, alloc);
        if (verdict.satisfied || !pair_violates_ef1(gen.instance, alloc, gen.envier, gen.envied)) {
            fail(check, "ef1_forward", "generated instance failed to break EF1",
                 instance_to_json(gen.instance), format_sequence(*seq));
            return;
        }
        ++produced;
        ++check.executions;
    }
    check.notes += produced > 0 ? "forward counterexamples checked: " + std::to_string(produced)
                                : "no non-balanced sequences exist in Pi_{n,m} (m < n+2); forward direction vacuous";
}

void run_prop_3_1(TheoremCheck& check, int n, int m, const SearchSpec& spec) {
    check.claim = "identical utilities: EW(pi) >= EW(round robin) for every pi in R_{n,m}";
    absorb(check, exhaustive_identical_welfare_sweep(n, m, grid_to_ints(spec.utility_values)));
}

void run_price_generators(TheoremCheck& check, int n, int m, bool balanced_space) {
    if (m < n + 1) {
        check.notes += "m = n: both spaces collapse to the identity sequence, price 1; ";
        return;
    }
    for (const PickingSequence& seq : enumerate_sequences(n, m, SequenceSpace::Balanced)) {
        GeneratedInstance gen = balanced_space ? gen_price_rb(n, m, seq) : gen_price_all(n, m, seq);
        Ratio ratio = welfare_ratio(gen.instance, *gen.witness_sequence, seq);
        check.executions += 2;
        check.space_covered += 1;
        bool ok = gen.kind == ExpectedKind::RatioExact ? ratio == Ratio::of(gen.expected)
                                                       : !(ratio < Ratio::of(gen.expected));
        if (!ok) {
            fail(check, "price_lower_bound",
                 "generator ratio " + ratio.str() + " vs expected " + rational_str(gen.expected) +
                     (gen.kind == ExpectedKind::RatioExact ? " (exact)" : " (at least)"),
                 instance_to_json(gen.instance), format_sequence(seq),
                 format_sequence(*gen.witness_sequence));
            return;
        }
    }
}

void run_price_falsification(TheoremCheck& check, int n, int m, const SearchSpec& spec) {
    if (spec.mode == SearchSpec::Mode::ExhaustiveGrid) {
        absorb(check, exhaustive_price_sweep(n, m, grid_to_ints(spec.utility_values)));
        return;
    }
    if (spec.sample_count <= 0) return;
    RandomSweepOptions options;
    options.count = spec.sample_count;
    options.seed = spec.seed;
    options.checks = SweepChecks{false, false, false};
    options.price_bounds = true;
    absorb(check, random_sweep(n, m, options));
}

void run_thm_3_3(TheoremCheck& check, int n, int m, const SearchSpec& spec) {
    check.claim = "egalitarian price over Pi_{n,m} equals min{m-n+1, n}";
    run_price_generators(check, n, m, false);
    if (check.pass) run_price_falsification(check, n, m, spec);
}

void run_thm_3_4(TheoremCheck& check, int n, int m, const SearchSpec& spec) {
    check.claim = "egalitarian price over R_{n,m} equals min{ceil(m/n), floor(log2 n)+1}";
    run_price_generators(check, n, m, true);
    if (check.pass) run_price_falsification(check, n, m, spec);
}

void run_lem_3_5(TheoremCheck& check, int n, int m, const SearchSpec& spec) {
    check.claim = "round-s pick under pi is weakly preferred to the round-((s-1)L+1) pick under pi'";
    absorb(check, exhaustive_pick_preference_sweep(n, m, grid_to_ints(spec.utility_values)));
}

void run_lem_3_6(TheoremCheck& check, int n, int m, const SearchSpec&) {
    check.claim = "availability counts floor(n/2^(r-2))-1 replay exactly on the epsilon-instance";
    std::vector<PickingSequence> bases = {make_round_robin(n, m), make_balanced_alternation(n, m)};
    for (const PickingSequence& base : bases) {
        AvailabilityReplay replay = replay_availability_counts(n, base);
        check.executions += 1;
        check.space_covered += 1;
        if (!replay.pass) {
            fail(check, "availability_replay", replay.notes, {}, format_sequence(base));
            return;
        }
        check.notes += replay.notes + "; ";
    }
}

void run_agent_bound_sweep(TheoremCheck& check, int n, int m, const SearchSpec& spec,
                           const std::string& claim) {
    check.claim = claim;
    SweepChecks checks{false, false, true};
    absorb(check, run_guarantee_space(n, m, spec, checks));
}

void run_lem_4_3_formula(TheoremCheck& check, int n, int m) {
    for (const PickingSequence& seq : enumerate_sequences(n, m, SequenceSpace::Balanced)) {
        for (int i = 1; i <= n; ++i) {
            AgentPickIndices indices = agent_pick_indices(seq, i);
            if (agent_lb_general(n, m, i, indices) < agent_lb_large_m(n, i)) {
                fail(check, "lem_4_3_formula",
                     "pick-index bound fell below (n+1-i)/(2n-i) for agent " + std::to_string(i), {},
                     format_sequence(seq));
                return;
            }
        }
    }
}

void run_lem_4_2(TheoremCheck& check, int n, int m, const SearchSpec&) {
    check.claim = "tightness instance gives agent i exactly (s-1)/floor((t_s-i)/(n+1-i)) of her MMS";
    for (const PickingSequence& seq : enumerate_sequences(n, m, SequenceSpace::Balanced)) {
        for (int i = 1; i <= n; ++i) {
            GeneratedInstance gen = gen_mms_agent(n, m, seq, i);
            Rational utility = realized_utility(gen.instance, seq, i);
            MmsResult mms = mms_exact(gen.instance, i);
            check.executions += 1;
            check.space_covered += 1;
            if (mms.value != *gen.expected_mms || mms.value < 1) {
                fail(check, "lem_4_2_mms",
                     "MMS " + rational_str(mms.value) + " vs expected " + rational_str(*gen.expected_mms),
                     instance_to_json(gen.instance), format_sequence(seq));
                return;
            }
            if (utility != *gen.expected_utility ||
                make_ratio(utility, mms.value) != Ratio::of(gen.expected)) {
                fail(check, "lem_4_2_ratio",
                     "agent " + std::to_string(i) + " got " + rational_str(utility) + ", expected " +
                         rational_str(*gen.expected_utility),
                     instance_to_json(gen.instance), format_sequence(seq));
                return;
            }
        }
    }
}

void run_lem_4_7(TheoremCheck& check, int n, int m, const SearchSpec&) {
    check.claim = "I1 pins agent n to floor(m/n)/(floor(m/n)n-n+1) exactly; I2 caps her at ceil(m/n)/(m-n+1)";
    GeneratedInstance i1 = gen_mms_I1(n, m);
    GeneratedInstance i2 = gen_mms_I2(n, m);
    Rational mms1 = mms_exact(i1.instance, n).value;
    Rational mms2 = mms_exact(i2.instance, n).value;
    if (mms1 != *i1.expected_mms || mms2 != *i2.expected_mms) {
        fail(check, "lem_4_7_mms", "I1/I2 MMS disagreed with the closed form", instance_to_json(i1.instance));
        return;
    }
    Rational alpha_max = guarantee_constants(n, m).alpha_max;
    for (const PickingSequence& seq : enumerate_sequences(n, m, SequenceSpace::Balanced)) {
        Ratio r1 = make_ratio(realized_utility(i1.instance, seq, n), mms1);
        Ratio r2 = make_ratio(realized_utility(i2.instance, seq, n), mms2);
        check.executions += 2;
        check.space_covered += 1;
        if (r1 != Ratio::of(i1.expected)) {
            fail(check, "lem_4_7_I1", "agent n ratio " + r1.str() + " != " + rational_str(i1.expected),
                 instance_to_json(i1.instance), format_sequence(seq));
            return;
        }
        if (Ratio::of(i2.expected) < r2) {
            fail(check, "lem_4_7_I2", "agent n ratio " + r2.str() + " exceeds " + rational_str(i2.expected),
                 instance_to_json(i2.instance), format_sequence(seq));
            return;
        }
        if (Ratio::of(alpha_max) < std::min(r1, r2)) {
            fail(check, "lem_4_7_alpha_max", "min of I1/I2 ratios exceeds alpha_max",
                 instance_to_json(i1.instance), format_sequence(seq));
            return;
        }
    }
}

void run_thm_regular(TheoremCheck& check, int n, int m, const SearchSpec& spec) {
    check.claim = "every agent gets >= guarantee_alpha(seq) of her MMS; tight for agent n on regular sequences";
    SweepChecks checks{true, false, false};
    absorb(check, run_guarantee_space(n, m, spec, checks));
    if (!check.pass) return;
    for (const PickingSequence& seq : enumerate_sequences(n, m, SequenceSpace::Balanced)) {
        if (is_irregular(seq)) continue;
        GeneratedInstance gen = gen_mms_agent(n, m, seq, n);
        Rational alpha = guarantee_alpha(seq);
        if (gen.expected != alpha) {
            fail(check, "thm_regular_tightness",
                 "tightness value " + rational_str(gen.expected) + " != alpha " + rational_str(alpha), {},
                 format_sequence(seq));
            return;
        }
        Ratio realized = make_ratio(realized_utility(gen.instance, seq, n), mms_exact(gen.instance, n).value);
        check.executions += 1;
        if (realized != Ratio::of(alpha)) {
            fail(check, "thm_regular_tightness", "realized ratio " + realized.str() + " != alpha",
                 instance_to_json(gen.instance), format_sequence(seq));
            return;
        }
    }
}

void run_thm_irregular(TheoremCheck& check, int n, int m, const SearchSpec& spec) {
    check.claim = "irregular sequences guarantee exactly 2/(m-n+2), tight for agent n-1";
    SweepChecks checks{true, false, false};
    absorb(check, run_guarantee_space(n, m, spec, checks));
    if (!check.pass) return;
    int irregular_count = 0;
    for (const PickingSequence& seq : enumerate_sequences(n, m, SequenceSpace::Balanced)) {
        if (!is_irregular(seq)) continue;
        ++irregular_count;
        Rational alpha = guarantee_alpha(seq);
        if (alpha != Rational(BigInt(2), BigInt(m - n + 2))) {
            fail(check, "thm_irregular_alpha", "irregular guarantee is not 2/(m-n+2)", {}, format_sequence(seq));
            return;
        }
        GeneratedInstance gen = gen_mms_agent(n, m, seq, n - 1);
        MmsResult mms = mms_exact(gen.instance, n - 1);
        Ratio realized = make_ratio(realized_utility(gen.instance, seq, n - 1), mms.value);
        check.executions += 1;
        if (mms.value < 1 || realized != Ratio::of(alpha)) {
            fail(check, "thm_irregular_tightness", "agent n-1 realized " + realized.str() + " != alpha",
                 instance_to_json(gen.instance), format_sequence(seq));
            return;
        }
    }
    check.notes += irregular_count > 0
                       ? "irregular sequences checked: " + std::to_string(irregular_count)
                       : "no irregular sequences at (n, m); tightness direction vacuous";
}

void run_thm_best(TheoremCheck& check, int n, int m, const SearchSpec&) {
    check.claim = "is_best iff guarantee_alpha = alpha_max; last-first is best; I1/I2 cap every sequence at alpha_max";
    GuaranteeConstants constants = guarantee_constants(n, m);
    PickingSequence last_first = make_last_first(n, m);
    if (!in_balanced_class(last_first) || !is_best(last_first)) {
        fail(check, "thm_best_construction", "last-first constructor is not classified best", {},
             format_sequence(last_first));
        return;
    }
    GeneratedInstance i1 = gen_mms_I1(n, m);
    GeneratedInstance i2 = gen_mms_I2(n, m);
    Rational mms1 = mms_exact(i1.instance, n).value;
    Rational mms2 = mms_exact(i2.instance, n).value;
    for (const PickingSequence& seq : enumerate_sequences(n, m, SequenceSpace::Balanced)) {
        bool best = is_best(seq);
        bool alpha_is_max = guarantee_alpha(seq) == constants.alpha_max;
        check.space_covered += 1;
        if (best != alpha_is_max) {
            fail(check, "thm_best_characterization", "is_best disagrees with alpha = alpha_max", {},
                 format_sequence(seq));
            return;
        }
        Ratio r1 = make_ratio(realized_utility(i1.instance, seq, n), mms1);
        Ratio r2 = make_ratio(realized_utility(i2.instance, seq, n), mms2);
        check.executions += 2;
        if (Ratio::of(constants.alpha_max) < std::min(r1, r2)) {
            fail(check, "thm_best_upper", "agent n kept more than alpha_max of her MMS on both I1 and I2",
                 instance_to_json(i1.instance), format_sequence(seq));
            return;
        }
    }
}

void run_thm_worst(TheoremCheck& check, int n, int m, const SearchSpec&) {
    check.claim = "is_worst iff guarantee_alpha = alpha_min; round-robin is worst; balanced alternation is worst when m >= 3n-1";
    GuaranteeConstants constants = guarantee_constants(n, m);
    if (!is_worst(make_round_robin(n, m))) {
        fail(check, "thm_worst_round_robin", "round-robin not classified worst");
        return;
    }
    if (m >= 3 * n - 1 && !is_worst(make_balanced_alternation(n, m))) {
        fail(check, "thm_worst_balanced_alternation", "balanced alternation not worst despite m >= 3n-1");
        return;
    }
    for (const PickingSequence& seq : enumerate_sequences(n, m, SequenceSpace::Balanced)) {
        bool worst = is_worst(seq);
        bool alpha_is_min = guarantee_alpha(seq) == constants.alpha_min;
        check.space_covered += 1;
        if (worst != alpha_is_min) {
            fail(check, "thm_worst_characterization", "is_worst disagrees with alpha = alpha_min", {},
                 format_sequence(seq));
            return;
        }
        if (worst) {
            GeneratedInstance gen = gen_mms_agent(n, m, seq, n);
            MmsResult mms = mms_exact(gen.instance, n);
            Ratio realized = make_ratio(realized_utility(gen.instance, seq, n), mms.value);
            check.executions += 1;
            if (mms.value < 1 || realized != Ratio::of(constants.alpha_min)) {
                fail(check, "thm_worst_tightness", "worst sequence did not realize alpha_min exactly",
                     instance_to_json(gen.instance), format_sequence(seq));
                return;
            }
        }
    }
}

void run_cor_two_agents(TheoremCheck& check, int n, int m, const SearchSpec&) {
    check.claim = "n=2: unique best sequence (agent 2 first from round 2) at 1/(2-1/floor(m/2)); all others worst at 1/2";
    if (n != 2 || m < 3) {
        fail(check, "cor_two_agents_shape", "corollary applies to n = 2, m >= 3");
        return;
    }
    PickingSequence expected_best = make_last_first(2, m);
    Rational best_alpha(BigInt(m / 2), BigInt(2 * (m / 2) - 1));
    Rational half(BigInt(1), BigInt(2));
    int best_count = 0;
    for (const PickingSequence& seq : enumerate_sequences(2, m, SequenceSpace::Balanced)) {
        check.space_covered += 1;
        Rational alpha = guarantee_alpha(seq);
        Rational via_corollary = two_agent_guarantee(seq);
        if (alpha != via_corollary) {
            fail(check, "cor_two_agents_consistency", "corollary classification disagrees with guarantee_alpha",
                 {}, format_sequence(seq));
            return;
        }
        if (is_best(seq)) {
            ++best_count;
            if (!(seq == expected_best) || alpha != best_alpha) {
                fail(check, "cor_two_agents_best", "unexpected best sequence or guarantee", {},
                     format_sequence(seq));
                return;
            }
        } else {
            if (!is_worst(seq) || alpha != half) {
                fail(check, "cor_two_agents_worst", "non-best sequence is not worst at 1/2", {},
                     format_sequence(seq));
                return;
            }
        }
        GeneratedInstance gen = gen_mms_agent(2, m, seq, 2);
        MmsResult mms = mms_exact(gen.instance, 2);
        Ratio realized = make_ratio(realized_utility(gen.instance, seq, 2), mms.value);
        check.executions += 1;
        if (mms.value < 1 || realized != Ratio::of(alpha)) {
            fail(check, "cor_two_agents_tightness", "guarantee not realized exactly",
                 instance_to_json(gen.instance), format_sequence(seq));
            return;
        }
    }
    if (best_count != 1) {
        fail(check, "cor_two_agents_unique", "expected exactly one best sequence, found " +
                                                 std::to_string(best_count));
    }
}

void run_example_3_7(TheoremCheck& check, int, int, const SearchSpec&) {
    check.claim = "R_{3,7} census: 18 sequences, 4 best, 6 worst, 8 intermediate";
    CensusResult result = census(3, 7);
    const std::set<std::string> expected_best = {
        "1,2,3|3,1,2|3",
        "1,2,3|1,3,2|3",
        "1,2,3|3,2,1|3",
        "1,2,3|2,3,1|3",
    };
    const std::set<std::string> expected_worst = {
        "1,2,3|1,2,3|1", "1,2,3|2,1,3|1", "1,2,3|1,2,3|2",
        "1,2,3|2,1,3|2", "1,2,3|1,2,3|3", "1,2,3|2,1,3|3",
    };
    check.space_covered = result.total;
    std::set<std::string> best(result.best.begin(), result.best.end());
    std::set<std::string> worst(result.worst.begin(), result.worst.end());
    if (result.total != 18 || best != expected_best || worst != expected_worst ||
        result.other.size() != 8 || result.constants.alpha_max != Rational(BigInt(1), BigInt(2)) ||
        result.constants.alpha_min != Rational(BigInt(1), BigInt(3))) {
        fail(check, "example_3_7_census", "census disagrees with the expected classification");
        return;
    }
    check.notes = "best: ";
    for (const auto& s : result.best) check.notes += s + " ";
}

}  // namespace

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> out;
        for (const auto& [id, name] : theorem_table()) out.push_back(id);
        return out;
    }();
    return ids;
}

std::string theorem_name(TheoremId id) {
    for (const auto& [key, name] : theorem_table()) {
        if (key == id) return name;
    }
    return "unknown";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
    for (const auto& [key, value] : theorem_table()) {
        if (value == name) return key;
    }
    return std::nullopt;
}

TheoremCheck check(TheoremId id, int n, int m, const SearchSpec& spec) {
    TheoremCheck result;
    result.id = id;
    result.n = n;
    result.m = m;
    result.spec = spec;
    result.pass = true;
    Timer timer;
    try {
        switch (id) {
            case TheoremId::prop_2_1: run_prop_2_1(result, n, m, spec); break;
            case TheoremId::prop_3_1: run_prop_3_1(result, n, m, spec); break;
            case TheoremId::thm_3_3: run_thm_3_3(result, n, m, spec); break;
            case TheoremId::thm_3_4: run_thm_3_4(result, n, m, spec); break;
            case TheoremId::lem_3_5: run_lem_3_5(result, n, m, spec); break;
            case TheoremId::lem_3_6: run_lem_3_6(result, n, m, spec); break;
            case TheoremId::lem_4_1:
                run_agent_bound_sweep(result, n, m, spec,
                                      "every agent's ratio >= min_r (r-1)(n+1-i)/(t_r-i)");
                break;
            case TheoremId::lem_4_2: run_lem_4_2(result, n, m, spec); break;
            case TheoremId::lem_4_3:
                run_agent_bound_sweep(result, n, m, spec, "every agent's ratio >= (n+1-i)/(2n-i)");
                if (result.pass) run_lem_4_3_formula(result, n, m);
                break;
            case TheoremId::lem_4_4:
                run_agent_bound_sweep(result, n, m, spec,
                                      "every agent's ratio >= 1/floor((m+1-i)/(n+1-i))");
                break;
            case TheoremId::lem_4_5:
                run_agent_bound_sweep(result, n, m, spec,
                                      "agent n-1 keeps alpha_max under the structural conditions");
                break;
            case TheoremId::lem_4_6:
                run_agent_bound_sweep(result, n, m, spec, "agents 1..n-2 always keep alpha_max");
                break;
            case TheoremId::lem_4_7: run_lem_4_7(result, n, m, spec); break;
            case TheoremId::thm_regular: run_thm_regular(result, n, m, spec); break;
            case TheoremId::thm_irregular: run_thm_irregular(result, n, m, spec); break;
            case TheoremId::thm_best: run_thm_best(result, n, m, spec); break;
            case TheoremId::thm_worst: run_thm_worst(result, n, m, spec); break;
            case TheoremId::cor_two_agents: run_cor_two_agents(result, n, m, spec); break;
            case TheoremId::example_3_7: run_example_3_7(result, n, m, spec); break;
        }
    } catch (const ResourceLimitError& e) {
        result.partial = true;
        result.pass = false;
        result.notes += std::string("resource cap: ") + e.what();
    }
    result.seconds = timer.elapsed();
    return result;
}

namespace {

SearchSpec grid_spec(std::initializer_list<int> values) {
    SearchSpec spec;
    spec.mode = SearchSpec::Mode::ExhaustiveGrid;
    spec.utility_values.clear();
    for (int v : values) spec.utility_values.push_back(Rational(v));
    return spec;
}

SearchSpec random_spec(int count, std::uint64_t seed) {
    SearchSpec spec;
    spec.mode = SearchSpec::Mode::Random;
    spec.sample_count = count;
    spec.seed = seed;
    return spec;
}

}  // namespace

std::vector<CheckConfig> default_configs(TheoremId id, std::uint64_t master_seed) {
    std::vector<CheckConfig> out;
    auto add = [&](int n, int m, SearchSpec spec) {
        spec.seed = fanout_seed(master_seed, theorem_index(id), static_cast<std::uint64_t>(n),
                                static_cast<std::uint64_t>(m));
        out.push_back(CheckConfig{n, m, std::move(spec)});
    };
    auto grid3 = [] { return grid_spec({0, 1, 2}); };
    switch (id) {
        case TheoremId::prop_2_1:
            add(2, 4, grid3());
            add(2, 5, grid3());
            add(3, 4, grid3());
            add(3, 5, grid3());
            add(2, 6, random_spec(5000, 0));
            add(3, 6, random_spec(5000, 0));
            break;
        case TheoremId::prop_3_1:
            for (int m = 2; m <= 6; ++m) add(2, m, grid_spec({0, 1, 2, 3}));
            for (int m = 3; m <= 6; ++m) add(3, m, grid_spec({0, 1, 2, 3}));
            break;
        case TheoremId::thm_3_3:
        case TheoremId::thm_3_4:
            for (int n = 2; n <= 4; ++n) {
                for (int m = n + 1; m <= 2 * n + 3; ++m) add(n, m, random_spec(500, 0));
            }
            break;
        case TheoremId::lem_3_5:
            for (int m = 2; m <= 6; ++m) add(2, m, grid3());
            add(3, 4, grid3());
            break;
        case TheoremId::lem_3_6:
            add(4, 12, grid3());
            add(8, 32, grid3());
            break;
        case TheoremId::lem_4_1:
            add(2, 5, grid3());
            add(3, 5, grid3());
            add(3, 6, random_spec(3000, 0));
            add(4, 8, random_spec(2000, 0));
            break;
        case TheoremId::lem_4_2:
            for (int m = 3; m <= 6; ++m) add(2, m, grid3());
            for (int m = 4; m <= 7; ++m) add(3, m, grid3());
            for (int m = 5; m <= 8; ++m) add(4, m, grid3());
            break;
        case TheoremId::lem_4_3:
            add(3, 5, grid3());
            add(3, 7, random_spec(2000, 0));
            add(4, 9, random_spec(1000, 0));
            break;
        case TheoremId::lem_4_4:
            add(2, 4, grid3());
            add(3, 5, grid3());
            add(3, 6, random_spec(2000, 0));
            break;
        case TheoremId::lem_4_5:
            add(3, 5, grid3());
            add(4, 6, random_spec(2000, 0));
            add(4, 7, random_spec(2000, 0));
            break;
        case TheoremId::lem_4_6:
            add(3, 5, grid3());
            add(4, 6, random_spec(2000, 0));
            break;
        case TheoremId::lem_4_7:
            for (int m = 3; m <= 6; ++m) add(2, m, grid3());
            for (int m = 4; m <= 7; ++m) add(3, m, grid3());
            for (int m = 5; m <= 9; ++m) add(4, m, grid3());
            break;
        case TheoremId::thm_regular:
            add(2, 3, grid3());
            add(2, 4, grid3());
            add(2, 5, grid3());
            add(3, 4, grid3());
            add(3, 5, grid3());
            add(2, 6, random_spec(5000, 0));
            add(3, 6, random_spec(5000, 0));
            break;
        case TheoremId::thm_irregular:
            add(3, 5, grid3());
            add(4, 6, random_spec(3000, 0));
            add(5, 7, random_spec(3000, 0));  // m-n even and m <= 2n-1, so irregulars exist
            break;
        case TheoremId::thm_best:
        case TheoremId::thm_worst:
            for (int m = 3; m <= 8; ++m) add(2, m, grid3());
            for (int m = 4; m <= 9; ++m) add(3, m, grid3());
            for (int m = 5; m <= 10; ++m) add(4, m, grid3());
            break;
        case TheoremId::cor_two_agents:
            for (int m = 3; m <= 8; ++m) add(2, m, grid3());
            break;
        case TheoremId::example_3_7:
            add(3, 7, grid3());
            break;
    }
    return out;
}

std::vector<TheoremCheck> run_default(TheoremId id, std::uint64_t master_seed) {
    std::vector<TheoremCheck> out;
    for (const CheckConfig& config : default_configs(id, master_seed))
        out.push_back(check(id, config.n, config.m, config.spec));
    return out;
}

std::vector<TheoremCheck> run_default_suite(std::uint64_t master_seed) {
    std::vector<TheoremCheck> out;
    for (TheoremId id : all_theorems()) {
        std::vector<TheoremCheck> checks = run_default(id, master_seed);
        out.insert(out.end(), checks.begin(), checks.end());
    }
    return out;
}

CensusResult census(int n, int m, std::uint64_t cap) {
    CensusResult result;
    result.n = n;
    result.m = m;
    result.constants = guarantee_constants(n, m);
    result.total = rb_count(n, m);
    for (const PickingSequence& seq : enumerate_sequences(n, m, SequenceSpace::Balanced, cap)) {
        SequenceReport report = classify(seq);
        std::string text = format_sequence(seq);
        if (*report.best) result.best.push_back(text);
        if (*report.worst) result.worst.push_back(text);
        if (!*report.best && !*report.worst) result.other.push_back(text);
        result.reports.push_back(std::move(report));
    }
    return result;
}

PriceSearchResult price_search(int n, int m, const PickingSequence& base, SequenceSpace space,
                               const SearchSpec& spec) {
    if (!in_balanced_class(base) || base.n != n || base.m() != m)
        throw std::invalid_argument("base sequence must belong to R_{n,m}");
    PriceSearchResult result;
    result.n = n;
    result.m = m;
    result.base = format_sequence(base);
    result.space = space;
    if (space == SequenceSpace::All) {
        result.bound = Rational(std::min(m - n + 1, n));
    } else {
        result.bound = Rational(std::min((m + n - 1) / n, guarantee_constants(n, m).round_log_bound));
    }

    // The proof instance first: it realizes the bound (or its large-case floor).
    if (m >= n + 1) {
        GeneratedInstance gen =
            space == SequenceSpace::All ? gen_price_all(n, m, base) : gen_price_rb(n, m, base);
        Ratio ratio = welfare_ratio(gen.instance, *gen.witness_sequence, base);
        result.instances += 1;
        if (result.max_observed < ratio) {
            result.max_observed = ratio;
            result.witness_sequence = format_sequence(*gen.witness_sequence);
            result.witness_instance_json = instance_to_json(gen.instance);
        }
        result.notes += "generator ratio " + ratio.str() + "; ";
    }

    if (spec.mode == SearchSpec::Mode::Random && spec.sample_count > 0) {
        PriceProbeResult probe = random_price_probe(n, m, base, space, spec.sample_count, spec.seed);
        result.instances += probe.instances;
        if (result.max_observed < probe.max_ratio) {
            result.max_observed = probe.max_ratio;
            result.witness_sequence = probe.witness_sequence;
            result.witness_instance_json = probe.instance_json;
        }
    } else if (spec.mode == SearchSpec::Mode::ExhaustiveGrid) {
        PriceProbeResult probe = grid_price_probe(n, m, base, space, grid_to_ints(spec.utility_values));
        result.instances += probe.instances;
        if (result.max_observed < probe.max_ratio) {
            result.max_observed = probe.max_ratio;
            result.witness_sequence = probe.witness_sequence;
            result.witness_instance_json = probe.instance_json;
        }
    }
    result.exceeded = Ratio::of(result.bound) < result.max_observed;
    return result;
}

AvailabilityReplay replay_availability_counts(int n, const PickingSequence& base) {
    AvailabilityReplay result;
    const int m = base.m();
    if (m < 2 * n) {
        result.notes = "needs m >= 2n";
        return result;
    }
    GeneratedInstance gen = gen_price_rb(n, m, base);
    Allocation alloc = execute(gen.instance, *gen.witness_sequence);
    GuaranteeConstants constants = guarantee_constants(n, m);
    const int upto = std::min(constants.round_log_bound, (m + n - 1) / n);

    std::vector<bool> taken(m + 1, false);
    int logged = 0;
    for (int r = 2; r <= upto; ++r) {
        while (logged < (r - 1) * n) {
            taken[alloc.pick_log[logged].good] = true;
            ++logged;
        }
        bool tail_available = false;
        for (int j = 2 * n; j <= m; ++j) {
            if (!taken[j]) {
                tail_available = true;
                break;
            }
        }
        if (!tail_available) continue;
        int expected = n;
        for (int k = 0; k < r - 2; ++k) expected /= 2;
        expected -= 1;
        int available = 0;
        for (int j = n + 1; j <= 2 * n - 1; ++j) {
            if (!taken[j]) ++available;
        }
        bool exact_suffix = true;
        for (int j = 2 * n - expected; j <= 2 * n - 1; ++j) {
            if (j >= n + 1 && taken[j]) exact_suffix = false;
        }
        if (available != expected || !exact_suffix) {
            result.notes = "round " + std::to_string(r) + ": " + std::to_string(available) +
                           " goods of M' available, expected " + std::to_string(expected);
            return result;
        }
        ++result.rounds_checked;
    }
    if (result.rounds_checked == 0) {
        result.notes = "availability precondition never held";
        return result;
    }
    result.pass = true;
    result.notes = "rounds verified: " + std::to_string(result.rounds_checked);
    return result;
}

namespace {

using nlohmann::json;

json violation_to_json(const SweepViolation& violation) {
    json doc;
    doc["check"] = violation.check;
    doc["detail"] = violation.detail;
    if (!violation.sequence.empty()) doc["sequence"] = violation.sequence;
    if (!violation.witness_sequence.empty()) doc["witness_sequence"] = violation.witness_sequence;
    if (!violation.instance_json.empty()) doc["instance"] = json::parse(violation.instance_json);
    return doc;
}

}  // namespace

std::string check_to_json(const TheoremCheck& check, int indent) {
    json doc;
    doc["theorem"] = theorem_name(check.id);
    doc["n"] = check.n;
    doc["m"] = check.m;
    doc["mode"] = check.spec.mode == SearchSpec::Mode::ExhaustiveGrid ? "exhaustive-grid" : "random";
    if (check.spec.mode == SearchSpec::Mode::ExhaustiveGrid) {
        json grid = json::array();
        for (const Rational& v : check.spec.utility_values) grid.push_back(rational_str(v));
        doc["grid"] = std::move(grid);
    } else {
        doc["samples"] = check.spec.sample_count;
        doc["seed"] = check.spec.seed;
    }
    doc["verdict"] = check.pass ? "pass" : "fail";
    doc["partial"] = check.partial;
    doc["claim"] = check.claim;
    doc["instances_covered"] = check.space_covered.str();
    doc["executions"] = check.executions;
    doc["seconds"] = check.seconds;
    if (!check.notes.empty()) doc["notes"] = check.notes;
    if (check.counterexample) doc["counterexample"] = violation_to_json(*check.counterexample);
    return doc.dump(indent);
}

std::string check_to_csv_row(const TheoremCheck& check) {
    return theorem_name(check.id) + "," + std::to_string(check.n) + "," + std::to_string(check.m) + "," +
           (check.pass ? "pass" : "fail");
}

std::string census_to_json(const CensusResult& result, int indent) {
    json doc;
    doc["n"] = result.n;
    doc["m"] = result.m;
    doc["total"] = result.total.str();
    doc["alpha_max"] = rational_str(result.constants.alpha_max);
    doc["alpha_min"] = rational_str(result.constants.alpha_min);
    doc["best"] = result.best;
    doc["worst"] = result.worst;
    doc["other"] = result.other;
    json reports = json::array();
    for (const SequenceReport& report : result.reports) reports.push_back(json::parse(report_to_json(report)));
    doc["sequences"] = std::move(reports);
    return doc.dump(indent);
}

std::string price_search_to_json(const PriceSearchResult& result, int indent) {
    json doc;
    doc["n"] = result.n;
    doc["m"] = result.m;
    doc["sequence"] = result.base;
    doc["space"] = result.space == SequenceSpace::All ? "pi" : "rb";
    doc["bound"] = rational_str(result.bound);
    doc["max_observed"] = result.max_observed.str();
    doc["instances"] = result.instances.str();
    doc["exceeded"] = result.exceeded;
    if (!result.witness_sequence.empty()) doc["witness_sequence"] = result.witness_sequence;
    if (!result.witness_instance_json.empty())
        doc["witness_instance"] = json::parse(result.witness_instance_json);
    if (!result.notes.empty()) doc["notes"] = result.notes;
    return doc.dump(indent);
}

}  // namespace pickseq
