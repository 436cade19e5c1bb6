#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "mms.hpp"
#include "oracles.hpp"

using namespace pickseq;

namespace {

Rational frac(long long p, long long q) { return make_rational(p, q); }

void check_witness(const Instance& inst, const MmsResult& result) {
    std::vector<bool> seen(inst.m + 1, false);
    Rational minimum;
    bool first = true;
    REQUIRE(result.witness.size() == static_cast<std::size_t>(inst.n));
    for (const auto& bundle : result.witness) {
        Rational value = bundle_utility(inst, result.agent, bundle);
        if (first || value < minimum) minimum = value;
        first = false;
        for (int g : bundle) {
            CHECK_FALSE(seen[g]);
            seen[g] = true;
        }
    }
    for (int g = 1; g <= inst.m; ++g) CHECK(seen[g]);
    CHECK(minimum == result.value);
}

}  // namespace

TEST_CASE("exact MMS on the worked examples") {
    Instance irregular = oracle::irregular_example();
    MmsResult agent2 = mms_exact(irregular, 2);
    CHECK(agent2.value == Rational(2));
    check_witness(irregular, agent2);

    Instance units = oracle::from_ints({{1, 1, 1, 1}, {1, 1, 1, 1}});
    CHECK(mms_exact(units, 1).value == Rational(2));

    Instance lopsided = oracle::from_ints({{6, 0, 0, 0, 0}, {1, 1, 1, 1, 1}, {2, 2, 1, 0, 0}});
    CHECK(mms_exact(lopsided, 1).value == Rational(0));
    check_witness(lopsided, mms_exact(lopsided, 3));
}

TEST_CASE("pruned search equals the naive enumerator") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        int m = n + static_cast<int>(rng() % 4);
        std::vector<std::vector<long long>> util(n, std::vector<long long>(m));
        for (auto& row : util) {
            for (auto& cell : row) cell = static_cast<long long>(rng() % 4);
        }
        Instance inst = oracle::from_ints(util);
        for (int agent = 1; agent <= n; ++agent) {
            MmsResult result = mms_exact(inst, agent);
            CHECK(result.value == oracle::naive_mms(inst, agent));
            check_witness(inst, result);
        }
    }
}

TEST_CASE("MMS search honors its node cap") {
    Instance inst = oracle::from_ints({{3, 3, 2, 2, 1, 1}, {1, 1, 1, 1, 1, 1}});
    CHECK_THROWS_AS(mms_exact(inst, 1, 2), ResourceLimitError);
}

TEST_CASE("ratio profile on the irregular example") {
    Instance inst = oracle::irregular_example();
    auto ratios = mms_ratio_profile(inst, parse_sequence("1,2,3|3,1"));
    CHECK(ratios[1] == Ratio::of(frac(1, 2)));
}

TEST_CASE("with one good per agent every ratio is at least one") {
    Instance inst = oracle::from_ints({{5, 1, 0}, {0, 5, 1}, {1, 0, 5}});
    for (const auto& seq : enumerate_sequences(3, 3, SequenceSpace::Balanced)) {
        for (const Ratio& r : mms_ratio_profile(inst, seq)) CHECK_FALSE(r < Ratio::of(Rational(1)));
    }
}

TEST_CASE("per-agent guarantee formulas") {
    AgentPickIndices rr3 = agent_pick_indices(make_round_robin(3, 7), 3);
    CHECK(agent_lb_general(3, 7, 3, rr3) == frac(1, 3));
    AgentPickIndices irregular3 = agent_pick_indices(parse_sequence("1,2,3|3,1"), 3);
    CHECK(agent_lb_general(3, 5, 3, irregular3) == frac(2, 3));
    AgentPickIndices last = agent_pick_indices(make_round_robin(3, 3), 3);
    CHECK(agent_lb_general(3, 3, 3, last) == Rational(1));

    TightnessBound bound = agent_ub_tightness(3, 7, 3, rr3);
    CHECK(bound.value == frac(1, 3));
    CHECK(bound.minimizing_round == 2);
    AgentPickIndices irregular2 = agent_pick_indices(parse_sequence("1,2,3|3,1"), 2);
    CHECK(agent_ub_tightness(3, 5, 2, irregular2).value == frac(1, 2));
    CHECK(agent_ub_tightness(3, 3, 3, last).value == Rational(1));

    CHECK(agent_lb_large_m(3, 3) == frac(1, 3));
    CHECK(agent_lb_large_m(2, 1) == frac(2, 3));
    CHECK(agent_lb_large_m(5, 1) == frac(5, 9));

    CHECK(agent_lb_small_m(3, 5, 2) == frac(1, 2));
    CHECK(agent_lb_small_m(3, 3, 2) == Rational(1));
    CHECK(agent_lb_small_m(2, 5, 2) == frac(1, 4));
}

TEST_CASE("irregularity classification") {
    CHECK(is_irregular(parse_sequence("1,2,3|3,1")));
    CHECK_FALSE(is_irregular(parse_sequence("1,2,3|1,3")));
    CHECK_FALSE(is_irregular(make_round_robin(3, 3)));
    CHECK_FALSE(is_irregular(make_round_robin(3, 7)));
    CHECK_THROWS_AS(is_irregular(PickingSequence{3, {1, 2, 2, 3, 3}}), std::domain_error);

    // Irregularity is confined to n+2 <= m <= 2n-1.
    for (int n = 2; n <= 4; ++n) {
        for (int m = n; m <= 2 * n + 2 && m <= 10; ++m) {
            for (const auto& seq : enumerate_sequences(n, m, SequenceSpace::Balanced)) {
                if (is_irregular(seq)) {
                    CHECK(m >= n + 2);
                    CHECK(m <= 2 * n - 1);
                }
            }
        }
    }
}

TEST_CASE("guarantee alpha dispatches on irregularity") {
    PickingSequence irregular = parse_sequence("1,2,3|3,1");
    CHECK(guarantee_alpha(irregular) == frac(1, 2));
    CHECK(regular_formula_alpha(irregular) == frac(2, 3));  // would-be value, inapplicable
    CHECK(guarantee_alpha(make_round_robin(3, 7)) == frac(1, 3));
    CHECK(guarantee_alpha(make_last_first(3, 7)) == frac(1, 2));
}

TEST_CASE("guarantee constants") {
    GuaranteeConstants c37 = guarantee_constants(3, 7);
    CHECK(c37.alpha_max == frac(1, 2));
    CHECK(c37.alpha_min == frac(1, 3));
    GuaranteeConstants c24 = guarantee_constants(2, 4);
    CHECK(c24.alpha_max == frac(2, 3));
    CHECK(c24.alpha_min == frac(1, 2));
    GuaranteeConstants c44 = guarantee_constants(4, 4);
    CHECK(c44.alpha_max == Rational(1));
    CHECK(c44.alpha_min == Rational(1));
    CHECK(guarantee_constants(2, 9).round_log_bound == 2);
    CHECK(guarantee_constants(3, 9).round_log_bound == 2);
    CHECK(guarantee_constants(4, 9).round_log_bound == 3);
    CHECK(guarantee_constants(8, 9).round_log_bound == 4);
}

TEST_CASE("best and worst membership") {
    CHECK(is_best(parse_sequence("1,2,3|3,1,2|3")));
    CHECK(is_best(parse_sequence("1,2,3|1,3,2|3")));
    CHECK_FALSE(is_best(make_round_robin(3, 7)));

    CHECK(is_worst(parse_sequence("1,2,3|1,2,3|1")));
    CHECK_FALSE(is_worst(parse_sequence("1,2,3|1,3,2|1")));
    CHECK(is_worst(make_balanced_alternation(3, 8)));  // m >= 3n-1
    CHECK_FALSE(is_worst(make_balanced_alternation(3, 7)));

    // Ordering chain and the characterizations as equalities.
    for (int n = 2; n <= 3; ++n) {
        for (int m = n; m <= 8; ++m) {
            GuaranteeConstants constants = guarantee_constants(n, m);
            for (const auto& seq : enumerate_sequences(n, m, SequenceSpace::Balanced)) {
                Rational alpha = guarantee_alpha(seq);
                CHECK(constants.alpha_min <= alpha);
                CHECK(alpha <= constants.alpha_max);
                CHECK(is_best(seq) == (alpha == constants.alpha_max));
                CHECK(is_worst(seq) == (alpha == constants.alpha_min));
            }
        }
    }

    // Constructor classifications across the desk range.
    for (int n = 2; n <= 4; ++n) {
        for (int m = n; m <= 12; ++m) {
            if (m <= 10) {
                CHECK(is_worst(make_round_robin(n, m)));
                CHECK(is_best(make_last_first(n, m)));
            }
            if (m >= 3 * n - 1) CHECK(is_worst(make_balanced_alternation(n, m)));
        }
    }
}

TEST_CASE("two-agent classification") {
    CHECK(two_agent_guarantee(parse_sequence("1,2|2,1|2")) == frac(2, 3));
    CHECK(two_agent_guarantee(parse_sequence("1,2|1,2")) == frac(1, 2));
    CHECK(two_agent_guarantee(parse_sequence("1,2|2")) == Rational(1));
    CHECK_THROWS_AS(two_agent_guarantee(make_round_robin(3, 5)), std::domain_error);
    CHECK_THROWS_AS(two_agent_guarantee(make_round_robin(2, 2)), std::domain_error);

    for (int m = 3; m <= 8; ++m) {
        for (const auto& seq : enumerate_sequences(2, m, SequenceSpace::Balanced))
            CHECK(two_agent_guarantee(seq) == guarantee_alpha(seq));
    }
}

TEST_CASE("classification reports") {
    SequenceReport report = classify(parse_sequence("1,2,3|3,1"));
    CHECK(report.balanced_member);
    CHECK(*report.irregular);
    CHECK(*report.alpha == frac(1, 2));
    CHECK(*report.alpha_regular_formula == frac(2, 3));
    CHECK_FALSE(*report.best);
    CHECK_FALSE(*report.worst);
    CHECK(report_one_line(report) == "1,2,3|3,1  irregular  alpha=1/2  [neither]");

    SequenceReport unbalanced = classify(PickingSequence{3, {1, 2, 2, 3, 3, 3, 3}});
    CHECK_FALSE(unbalanced.recursively_balanced);
    CHECK_FALSE(unbalanced.alpha.has_value());

    SequenceReport shifted = classify(PickingSequence{2, {2, 1, 1, 2}});
    CHECK(shifted.recursively_balanced);
    CHECK_FALSE(shifted.balanced_member);

    std::string json_text = report_to_json(report);
    CHECK(json_text.find("\"alpha\":\"1/2\"") != std::string::npos);
    CHECK(json_text.find("\"irregular\":true") != std::string::npos);
}
