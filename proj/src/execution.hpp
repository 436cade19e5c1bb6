#pragma once

#include <vector>

#include "instance.hpp"
#include "rational.hpp"
#include "sequence.hpp"

namespace pickseq {

/// Runs the picking sequence on the instance: at each turn the designated
/// agent takes her most-preferred available good. Deterministic; the pick
/// log records every turn. Throws std::invalid_argument when the sequence
/// does not match the instance shape.
Allocation execute(const Instance& inst, const PickingSequence& seq);

struct WelfareReport {
    std::vector<Rational> per_agent;
    Rational egalitarian;  // min over per_agent
};

WelfareReport egalitarian_welfare(const Instance& inst, const Allocation& alloc);

/// EF1 verdict; when violated, (envier, envied) is the first violating pair
/// in lexicographic scan order.
struct Ef1Result {
    bool satisfied = true;
    int envier = 0;
    int envied = 0;
};

Ef1Result is_ef1(const Instance& inst, const Allocation& alloc);

/// EW(seq_num) / EW(seq_den) under the 0/0 = 1, x/0 = +inf convention.
Ratio welfare_ratio(const Instance& inst, const PickingSequence& seq_num, const PickingSequence& seq_den);

std::string welfare_to_json(const WelfareReport& report, int indent = -1);

}  // namespace pickseq
