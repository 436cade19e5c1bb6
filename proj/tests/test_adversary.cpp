#include <doctest.h>

#include "adversary.hpp"
#include "execution.hpp"
#include "mms.hpp"
#include "oracles.hpp"

using namespace pickseq;

namespace {

Rational frac(long long p, long long q) { return make_rational(p, q); }

Ratio agent_ratio(const Instance& inst, const PickingSequence& seq, int agent) {
    Allocation alloc = execute(inst, seq);
    return make_ratio(bundle_utility(inst, agent, alloc.bundles[agent - 1]), mms_exact(inst, agent).value);
}

}  // namespace

TEST_CASE("zero-welfare instance with a positive-welfare prefix swap") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {2, 4}}) {
        GeneratedInstance gen = gen_ew_zero(n, m, make_round_robin(n, m));
        CHECK(validate_instance(gen.instance).empty());
        CHECK(egalitarian_welfare(gen.instance, execute(gen.instance, gen.base_sequence)).egalitarian ==
              Rational(0));
        CHECK(egalitarian_welfare(gen.instance, execute(gen.instance, *gen.witness_sequence)).egalitarian ==
              Rational(1));
        CHECK_FALSE(has_canonical_prefix(*gen.witness_sequence));
    }
}

TEST_CASE("price construction against all sequences hits min(m-n+1, n) exactly") {
    GeneratedInstance small = gen_price_all(2, 3, parse_sequence("1,2,1"));
    CHECK(small.target_agent == 2);
    CHECK(small.expected == Rational(2));
    CHECK(welfare_ratio(small.instance, *small.witness_sequence, small.base_sequence) ==
          Ratio::of(Rational(2)));

    GeneratedInstance large = gen_price_all(2, 4, make_round_robin(2, 4));
    CHECK(large.target_agent == 2);  // the agent picking at turn 2n
    CHECK(large.expected == Rational(2));
    CHECK(welfare_ratio(large.instance, *large.witness_sequence, large.base_sequence) ==
          Ratio::of(Rational(2)));

    GeneratedInstance mid = gen_price_all(3, 4, parse_sequence("1,2,3,1"));
    CHECK(mid.expected == Rational(2));  // m-n+1
    CHECK(welfare_ratio(mid.instance, *mid.witness_sequence, mid.base_sequence) == Ratio::of(Rational(2)));

    CHECK_THROWS_AS(gen_price_all(3, 3, make_round_robin(3, 3)), std::invalid_argument);

    for (int n = 2; n <= 4; ++n) {
        for (int m = n + 1; m <= 2 * n + 3; ++m) {
            Rational bound(std::min(m - n + 1, n));
            for (const auto& seq : enumerate_sequences(n, m, SequenceSpace::Balanced)) {
                GeneratedInstance gen = gen_price_all(n, m, seq);
                CHECK(validate_instance(gen.instance).empty());
                CHECK(gen.expected == bound);
                CHECK(welfare_ratio(gen.instance, *gen.witness_sequence, seq) == Ratio::of(bound));
                CHECK(has_canonical_prefix(*gen.witness_sequence));
            }
        }
    }
}

TEST_CASE("price construction against balanced sequences") {
    GeneratedInstance small = gen_price_rb(2, 3, parse_sequence("1,2,1"));
    CHECK(small.kind == ExpectedKind::RatioExact);
    CHECK(welfare_ratio(small.instance, *small.witness_sequence, small.base_sequence) ==
          Ratio::of(Rational(2)));
    CHECK(in_balanced_class(*small.witness_sequence));

    GeneratedInstance large = gen_price_rb(2, 4, make_round_robin(2, 4));
    CHECK(large.kind == ExpectedKind::RatioAtLeast);
    CHECK(large.expected == Rational(2));
    Ratio achieved = welfare_ratio(large.instance, *large.witness_sequence, large.base_sequence);
    CHECK(achieved == Ratio::of(Rational(2)));  // exactly two here

    GeneratedInstance rr48 = gen_price_rb(4, 8, make_round_robin(4, 8));
    CHECK(rr48.expected == Rational(2));  // min{2, 3}
    CHECK_FALSE(welfare_ratio(rr48.instance, *rr48.witness_sequence, rr48.base_sequence) <
                Ratio::of(Rational(2)));

    for (int n = 2; n <= 4; ++n) {
        for (int m = n + 1; m <= 2 * n + 3; ++m) {
            for (const auto& seq : enumerate_sequences(n, m, SequenceSpace::Balanced)) {
                GeneratedInstance gen = gen_price_rb(n, m, seq);
                CHECK(validate_instance(gen.instance).empty());
                CHECK(in_balanced_class(*gen.witness_sequence));
                Ratio ratio = welfare_ratio(gen.instance, *gen.witness_sequence, seq);
                if (gen.kind == ExpectedKind::RatioExact) {
                    CHECK(ratio == Ratio::of(gen.expected));
                } else {
                    CHECK_FALSE(ratio < Ratio::of(gen.expected));
                }
            }
        }
    }
}

TEST_CASE("per-agent MMS tightness instances") {
    GeneratedInstance agent2 = gen_mms_agent(3, 5, parse_sequence("1,2,3|3,1"), 2);
    CHECK(*agent2.expected_mms == Rational(2));
    CHECK(agent2.expected == frac(1, 2));
    CHECK(mms_exact(agent2.instance, 2).value == Rational(2));
    CHECK(agent_ratio(agent2.instance, agent2.base_sequence, 2) == Ratio::of(frac(1, 2)));

    GeneratedInstance agent3 = gen_mms_agent(3, 7, make_round_robin(3, 7), 3);
    CHECK(agent3.expected == frac(1, 3));
    CHECK(agent_ratio(agent3.instance, agent3.base_sequence, 3) == Ratio::of(frac(1, 3)));

    GeneratedInstance square = gen_mms_agent(3, 3, make_round_robin(3, 3), 2);
    CHECK(square.expected == Rational(1));
    CHECK(agent_ratio(square.instance, square.base_sequence, 2) == Ratio::of(Rational(1)));

    for (const auto& seq : enumerate_sequences(3, 6, SequenceSpace::Balanced)) {
        for (int agent = 1; agent <= 3; ++agent) {
            GeneratedInstance gen = gen_mms_agent(3, 6, seq, agent);
            CHECK(validate_instance(gen.instance).empty());
            Allocation alloc = execute(gen.instance, seq);
            CHECK(bundle_utility(gen.instance, agent, alloc.bundles[agent - 1]) == *gen.expected_utility);
            CHECK(mms_exact(gen.instance, agent).value == *gen.expected_mms);
            CHECK(*gen.expected_mms >= 1);
            CHECK(agent_ratio(gen.instance, seq, agent) == Ratio::of(gen.expected));
        }
    }
}

TEST_CASE("the I1 and I2 instances pin agent n across every balanced sequence") {
    GeneratedInstance i1 = gen_mms_I1(3, 7);
    CHECK(*i1.expected_mms == Rational(4));
    CHECK(i1.expected == frac(1, 2));
    GeneratedInstance i2 = gen_mms_I2(3, 7);
    CHECK(*i2.expected_mms == Rational(5));
    CHECK(i2.expected == frac(3, 5));

    CHECK(mms_exact(i1.instance, 3).value == Rational(4));
    CHECK(mms_exact(i2.instance, 3).value == Rational(5));

    for (const auto& seq : enumerate_sequences(3, 7, SequenceSpace::Balanced)) {
        CHECK(agent_ratio(i1.instance, seq, 3) == Ratio::of(frac(1, 2)));
        Ratio r2 = agent_ratio(i2.instance, seq, 3);
        CHECK_FALSE(Ratio::of(frac(3, 5)) < r2);
    }

    GeneratedInstance square = gen_mms_I1(3, 3);
    CHECK(square.expected == Rational(1));
    CHECK(agent_ratio(square.instance, make_round_robin(3, 3), 3) == Ratio::of(Rational(1)));
}

TEST_CASE("EF1 counterexamples for unbalanced sequences") {
    GeneratedInstance serial = gen_ef1_counterexample(PickingSequence{3, {1, 2, 2, 3, 3, 3, 3}});
    CHECK(serial.envier == 3);
    CHECK(serial.envied == 2);
    Allocation alloc = execute(serial.instance, serial.base_sequence);
    CHECK_FALSE(is_ef1(serial.instance, alloc).satisfied);
    CHECK_FALSE(oracle::naive_ef1(serial.instance, alloc));

    GeneratedInstance pair = gen_ef1_counterexample(PickingSequence{2, {1, 1}});
    CHECK(pair.envier == 2);
    CHECK(pair.envied == 1);
    CHECK_FALSE(is_ef1(pair.instance, execute(pair.instance, pair.base_sequence)).satisfied);

    GeneratedInstance tail = gen_ef1_counterexample(PickingSequence{2, {1, 2, 1, 1}});
    CHECK(tail.envier == 2);
    CHECK(tail.envied == 1);
    CHECK_FALSE(is_ef1(tail.instance, execute(tail.instance, tail.base_sequence)).satisfied);

    CHECK_THROWS_AS(gen_ef1_counterexample(make_round_robin(2, 4)), std::domain_error);
}

TEST_CASE("generated instances serialize with provenance") {
    GeneratedInstance gen = gen_price_all(2, 3, parse_sequence("1,2,1"));
    std::string text = generated_to_json(gen);
    CHECK(text.find("price_all") != std::string::npos);
    CHECK(text.find("expected_ratio") != std::string::npos);
    CHECK(text.find("witness_sequence") != std::string::npos);
    // The embedded instance parses back.
    auto doc_start = text.find("\"instance\"");
    CHECK(doc_start != std::string::npos);
}
