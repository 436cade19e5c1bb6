#include <doctest.h>

#include <set>

#include "verify.hpp"

using namespace pickseq;

TEST_CASE("theorem names round trip") {
    for (TheoremId id : all_theorems()) {
        auto back = theorem_from_name(theorem_name(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK(all_theorems().size() == 19);
    CHECK_FALSE(theorem_from_name("thm_42").has_value());
}

TEST_CASE("census of the three-agent seven-good space") {
    CensusResult result = census(3, 7);
    CHECK(result.total == 18);
    CHECK(result.best.size() == 4);
    CHECK(result.worst.size() == 6);
    CHECK(result.other.size() == 8);
    std::set<std::string> best(result.best.begin(), result.best.end());
    CHECK(best.count("1,2,3|3,1,2|3") == 1);
    CHECK(best.count("1,2,3|2,3,1|3") == 1);
}

TEST_CASE("small censuses") {
    CensusResult c24 = census(2, 4);
    CHECK(c24.total == 2);
    REQUIRE(c24.best.size() == 1);
    CHECK(c24.best[0] == "1,2|2,1");
    REQUIRE(c24.worst.size() == 1);
    CHECK(c24.worst[0] == "1,2|1,2");
    CHECK(c24.other.empty());

    CensusResult c22 = census(2, 2);
    CHECK(c22.total == 1);
    CHECK(c22.best.size() == 1);  // the single sequence is simultaneously best and worst
    CHECK(c22.worst.size() == 1);
    CHECK(c22.other.empty());
    REQUIRE(c22.reports.size() == 1);
    CHECK(*c22.reports[0].best);
    CHECK(*c22.reports[0].worst);
}

TEST_CASE("representative theorem checks pass") {
    SearchSpec grid;
    grid.mode = SearchSpec::Mode::ExhaustiveGrid;

    TheoremCheck example = check(TheoremId::example_3_7, 3, 7, grid);
    CHECK(example.pass);

    SearchSpec random;
    random.mode = SearchSpec::Mode::Random;
    random.sample_count = 200;
    random.seed = 5;
    CHECK(check(TheoremId::thm_3_3, 2, 3, random).pass);
    CHECK(check(TheoremId::thm_3_4, 3, 5, random).pass);
    CHECK(check(TheoremId::cor_two_agents, 2, 5, grid).pass);
    CHECK(check(TheoremId::thm_best, 3, 7, grid).pass);
    CHECK(check(TheoremId::thm_worst, 3, 7, grid).pass);
    CHECK(check(TheoremId::lem_4_2, 3, 5, grid).pass);
    CHECK(check(TheoremId::lem_4_7, 3, 7, grid).pass);
    CHECK(check(TheoremId::prop_3_1, 2, 4, SearchSpec{SearchSpec::Mode::ExhaustiveGrid,
                                                      {Rational(0), Rational(1), Rational(2), Rational(3)},
                                                      0,
                                                      1})
              .pass);

    TheoremCheck p21 = check(TheoremId::prop_2_1, 2, 4, grid);
    CHECK(p21.pass);
    CHECK(p21.notes.find("forward counterexamples checked: 100") != std::string::npos);

    TheoremCheck p21_small = check(TheoremId::prop_2_1, 2, 3, grid);
    CHECK(p21_small.pass);
    CHECK(p21_small.notes.find("vacuous") != std::string::npos);

    TheoremCheck irregular = check(TheoremId::thm_irregular, 3, 5, grid);
    CHECK(irregular.pass);
    CHECK(irregular.notes.find("irregular sequences checked") != std::string::npos);
}

TEST_CASE("availability replay for the reversed witness") {
    AvailabilityReplay replay = replay_availability_counts(4, make_round_robin(4, 12));
    CHECK(replay.pass);
    CHECK(replay.rounds_checked == 2);  // rounds 2 and 3

    TheoremCheck check36 = check(TheoremId::lem_3_6, 4, 12, SearchSpec{});
    CHECK(check36.pass);
}

TEST_CASE("price search reports the generator ratio and respects bounds") {
    SearchSpec spec;
    spec.mode = SearchSpec::Mode::Random;
    spec.sample_count = 150;
    spec.seed = 9;
    PriceSearchResult result = price_search(2, 3, parse_sequence("1,2,1"), SequenceSpace::All, spec);
    CHECK(result.bound == Rational(2));
    CHECK(result.max_observed == Ratio::of(Rational(2)));
    CHECK_FALSE(result.exceeded);

    PriceSearchResult balanced =
        price_search(2, 4, make_round_robin(2, 4), SequenceSpace::Balanced, spec);
    CHECK(balanced.bound == Rational(2));
    CHECK(balanced.max_observed == Ratio::of(Rational(2)));
    CHECK_FALSE(balanced.exceeded);

    PriceSearchResult self = price_search(2, 2, make_round_robin(2, 2), SequenceSpace::All, spec);
    CHECK(self.max_observed <= Ratio::of(Rational(1)));
}

TEST_CASE("default configurations exist for every theorem") {
    for (TheoremId id : all_theorems()) {
        auto configs = default_configs(id, 1);
        CHECK_FALSE(configs.empty());
        for (const auto& config : configs) {
            CHECK(config.n >= 2);
            CHECK(config.m >= config.n);
        }
    }
}

TEST_CASE("reports serialize to JSON and CSV") {
    SearchSpec grid;
    TheoremCheck result = check(TheoremId::example_3_7, 3, 7, grid);
    std::string json_text = check_to_json(result);
    CHECK(json_text.find("\"theorem\":\"example_3_7\"") != std::string::npos);
    CHECK(json_text.find("\"verdict\":\"pass\"") != std::string::npos);
    CHECK(check_to_csv_row(result) == "example_3_7,3,7,pass");

    std::string census_text = census_to_json(census(2, 4));
    CHECK(census_text.find("\"total\":\"2\"") != std::string::npos);
}
