#include <doctest.h>

#include <set>

#include "errors.hpp"
#include "oracles.hpp"
#include "sequence.hpp"

using namespace pickseq;

namespace {

PickingSequence seq_of(int n, std::vector<int> picks) { return PickingSequence{n, std::move(picks)}; }

}  // namespace

TEST_CASE("recursive balance predicate") {
    CHECK(is_recursively_balanced(seq_of(3, {1, 2, 3, 3, 1})));
    CHECK_FALSE(is_recursively_balanced(seq_of(3, {1, 2, 2, 3, 3, 3, 3})));
    CHECK(is_recursively_balanced(seq_of(4, {1, 2, 3, 4})));
    CHECK_FALSE(is_recursively_balanced(seq_of(2, {1, 1})));

    // Matches the recount-every-prefix oracle across all of Pi_{3,6}.
    for (const auto& seq : oracle::brute_force_space(3, 6, false))
        CHECK(is_recursively_balanced(seq) == oracle::naive_recursively_balanced(seq));
}

TEST_CASE("round splitting") {
    auto blocks = rounds(make_round_robin(3, 7));
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0] == std::vector<int>{1, 2, 3});
    CHECK(blocks[1] == std::vector<int>{1, 2, 3});
    CHECK(blocks[2] == std::vector<int>{1});
    blocks = rounds(seq_of(3, {1, 2, 3, 3, 1}));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[1] == std::vector<int>{3, 1});
    CHECK(rounds(seq_of(4, {1, 2, 3, 4})).size() == 1);
}

TEST_CASE("agent pick indices with sentinel") {
    AgentPickIndices idx = agent_pick_indices(make_round_robin(3, 7), 3);
    CHECK(idx.indices == std::vector<int>{3, 6});
    CHECK(idx.sentinel == 8);
    CHECK(idx.t(3) == 8);

    idx = agent_pick_indices(seq_of(3, {1, 2, 3, 3, 1}), 2);
    CHECK(idx.indices == std::vector<int>{2});
    CHECK(idx.sentinel == 6);

    idx = agent_pick_indices(seq_of(4, {1, 2, 3, 4}), 2);
    CHECK(idx.indices == std::vector<int>{2});
    CHECK(idx.sentinel == 5);
}

TEST_CASE("canonical constructors") {
    CHECK(make_round_robin(3, 7).picks == std::vector<int>{1, 2, 3, 1, 2, 3, 1});
    CHECK(make_round_robin(2, 4).picks == std::vector<int>{1, 2, 1, 2});
    CHECK(make_round_robin(3, 5).picks == std::vector<int>{1, 2, 3, 1, 2});
    CHECK(make_balanced_alternation(3, 7).picks == std::vector<int>{1, 2, 3, 3, 2, 1, 1});
    CHECK(make_balanced_alternation(2, 4).picks == std::vector<int>{1, 2, 2, 1});
    CHECK(make_balanced_alternation(3, 3).picks == std::vector<int>{1, 2, 3});
    CHECK(make_last_first(3, 7).picks == std::vector<int>{1, 2, 3, 3, 2, 1, 3});
    CHECK(make_last_first(2, 5).picks == std::vector<int>{1, 2, 2, 1, 2});
    CHECK(make_last_first(4, 4).picks == std::vector<int>{1, 2, 3, 4});
    CHECK_THROWS_AS(make_round_robin(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_round_robin(3, 2), std::invalid_argument);

    for (int n = 2; n <= 4; ++n) {
        for (int m = n; m <= 10; ++m) {
            CHECK(in_balanced_class(make_round_robin(n, m)));
            CHECK(in_balanced_class(make_balanced_alternation(n, m)));
            CHECK(in_balanced_class(make_last_first(n, m)));
        }
    }
}

TEST_CASE("text notation parses and formats") {
    PickingSequence seq = parse_sequence("1,2,3|3,1");
    CHECK(seq.n == 3);
    CHECK(seq.picks == std::vector<int>{1, 2, 3, 3, 1});
    CHECK(format_sequence(seq) == "1,2,3|3,1");
    CHECK(parse_sequence(" 1 , 2 | 2 , 1 ").picks == std::vector<int>{1, 2, 2, 1});
    CHECK(parse_sequence("1,2,1", 2).n == 2);
    CHECK_THROWS_AS(parse_sequence(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_sequence("1,x,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sequence("1,3", 2), std::invalid_argument);

    // Round-trip across everything in R_{3,7}.
    for (const auto& s : enumerate_sequences(3, 7, SequenceSpace::Balanced))
        CHECK(parse_sequence(format_sequence(s)).picks == s.picks);
}

TEST_CASE("prefix normalization relabels by first-round order") {
    PickingSequence seq = seq_of(2, {2, 1, 1, 2});
    std::vector<int> relabel;
    PickingSequence normalized = normalize_prefix(seq, &relabel);
    CHECK(normalized.picks == std::vector<int>{1, 2, 2, 1});
    CHECK(relabel[2] == 1);
    CHECK(relabel[1] == 2);
    CHECK(in_balanced_class(normalized));
    CHECK_THROWS_AS(normalize_prefix(seq_of(2, {1, 1, 2, 2})), std::invalid_argument);
}

TEST_CASE("census counts match the closed forms") {
    CHECK(rb_count(3, 7) == 18);
    CHECK(rb_count(2, 3) == 2);
    CHECK(rb_count(2, 2) == 1);
    CHECK(rb_count(4, 10) == 288);
    CHECK(pi_count(2, 5) == 8);
    for (int n = 2; n <= 4; ++n) {
        for (int m = n; m <= 9; ++m) {
            auto pi = enumerate_sequences(n, m, SequenceSpace::All);
            auto rb = enumerate_sequences(n, m, SequenceSpace::Balanced);
            CHECK(BigInt(pi.size()) == pi_count(n, m));
            CHECK(BigInt(rb.size()) == rb_count(n, m));
        }
    }
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 5}, {3, 7}, {4, 6}}) {
        for (bool balanced : {false, true}) {
            auto space = balanced ? SequenceSpace::Balanced : SequenceSpace::All;
            auto ours = enumerate_sequences(n, m, space);
            auto brute = oracle::brute_force_space(n, m, balanced);
            std::set<std::vector<int>> a, b;
            for (const auto& s : ours) a.insert(s.picks);
            for (const auto& s : brute) b.insert(s.picks);
            CHECK(a == b);
            CHECK(ours.size() == a.size());  // no duplicates
        }
    }

    auto rb23 = enumerate_sequences(2, 3, SequenceSpace::Balanced);
    REQUIRE(rb23.size() == 2);
    CHECK(rb23[0].picks == std::vector<int>{1, 2, 1});
    CHECK(rb23[1].picks == std::vector<int>{1, 2, 2});

    // Deterministic order: the first balanced sequence is round-robin.
    CHECK(enumerate_sequences(3, 7, SequenceSpace::Balanced).front().picks ==
          make_round_robin(3, 7).picks);
}

TEST_CASE("every enumerated balanced sequence is well formed") {
    for (const auto& seq : enumerate_sequences(3, 7, SequenceSpace::Balanced)) {
        CHECK(in_balanced_class(seq));
        auto blocks = rounds(seq);
        for (std::size_t r = 0; r + 1 < blocks.size(); ++r) {
            std::set<int> agents(blocks[r].begin(), blocks[r].end());
            CHECK(agents.size() == 3);  // complete rounds hold each agent once
        }
        for (int agent = 1; agent <= 3; ++agent) {
            AgentPickIndices idx = agent_pick_indices(seq, agent);
            for (int r = 1; r <= idx.count(); ++r) CHECK(idx.t(r) <= r * 3);
        }
    }
}

TEST_CASE("enumeration refuses to exceed the cap") {
    CHECK_THROWS_AS(enumerate_sequences(4, 10, SequenceSpace::All, 100), ResourceLimitError);
    CHECK_NOTHROW(enumerate_sequences(4, 10, SequenceSpace::Balanced, 300));
}
