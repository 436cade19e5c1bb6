#pragma once

// Independent brute-force oracles used only by tests. These deliberately
// mirror the definitions rather than the production algorithms so the two
// paths can disagree when one is wrong.

#include <algorithm>
#include <vector>

#include "execution.hpp"
#include "instance.hpp"
#include "rational.hpp"
#include "sequence.hpp"

namespace oracle {

using pickseq::Allocation;
using pickseq::BigInt;
using pickseq::Instance;
using pickseq::PickingSequence;
using pickseq::Rational;

// Max over all n^m bundle assignments of the minimum bundle utility.
inline Rational naive_mms(const Instance& inst, int agent) {
    const int n = inst.n;
    const int m = inst.m;
    std::vector<int> assign(m, 0);
    Rational best(-1);
    for (;;) {
        std::vector<Rational> sums(n, Rational(0));
        for (int g = 1; g <= m; ++g) sums[assign[g - 1]] += inst.utility(agent, g);
        Rational minimum = *std::min_element(sums.begin(), sums.end());
        if (minimum > best) best = minimum;
        int pos = m - 1;
        while (pos >= 0 && assign[pos] == n - 1) assign[pos--] = 0;
        if (pos < 0) break;
        ++assign[pos];
    }
    return best;
}

// EF1 straight from the definition: try removing every single good.
inline bool naive_ef1(const Instance& inst, const Allocation& alloc) {
    for (int i = 1; i <= inst.n; ++i) {
        Rational own = pickseq::bundle_utility(inst, i, alloc.bundles[i - 1]);
        for (int j = 1; j <= inst.n; ++j) {
            if (i == j || alloc.bundles[j - 1].empty()) continue;
            bool fixable = false;
            for (int removed : alloc.bundles[j - 1]) {
                Rational rest(0);
                for (int g : alloc.bundles[j - 1]) {
                    if (g != removed) rest += inst.utility(i, g);
                }
                if (own >= rest) {
                    fixable = true;
                    break;
                }
            }
            if (!fixable) return false;
        }
    }
    return true;
}

// Recursive balance by recounting every prefix from scratch.
inline bool naive_recursively_balanced(const PickingSequence& seq) {
    for (int len = 1; len <= seq.m(); ++len) {
        std::vector<int> count(seq.n + 1, 0);
        for (int t = 1; t <= len; ++t) ++count[seq.at(t)];
        for (int a = 1; a <= seq.n; ++a) {
            for (int b = 1; b <= seq.n; ++b) {
                if (count[a] - count[b] > 1) return false;
            }
        }
    }
    return true;
}

// All members of Pi_{n,m} by suffix odometer, optionally filtered to the
// recursively balanced ones. Independent of the round-based enumerator.
inline std::vector<PickingSequence> brute_force_space(int n, int m, bool balanced_only) {
    std::vector<PickingSequence> out;
    PickingSequence seq{n, {}};
    for (int i = 1; i <= n; ++i) seq.picks.push_back(i);
    for (int t = n; t < m; ++t) seq.picks.push_back(1);
    for (;;) {
        if (!balanced_only || naive_recursively_balanced(seq)) out.push_back(seq);
        int pos = m - 1;
        while (pos >= n && seq.picks[pos] == n) seq.picks[pos--] = 1;
        if (pos < n) break;
        ++seq.picks[pos];
    }
    return out;
}

inline Instance from_ints(const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<Rational>> util;
    for (const auto& row : rows) {
        std::vector<Rational> cells;
        for (long long v : row) cells.push_back(Rational(v));
        util.push_back(std::move(cells));
    }
    return pickseq::make_instance(static_cast<int>(rows.size()),
                                  static_cast<int>(rows.front().size()), std::move(util));
}

// The worked four-good example: two agents, utilities (8,7,5,0) and (7,6,4,3).
inline Instance two_agent_example() { return from_ints({{8, 7, 5, 0}, {7, 6, 4, 3}}); }

// The irregular five-good example: utilities (6,0,0,0,0), (2,1,1,1,1), (6,0,0,0,0).
inline Instance irregular_example() {
    return from_ints({{6, 0, 0, 0, 0}, {2, 1, 1, 1, 1}, {6, 0, 0, 0, 0}});
}

}  // namespace oracle
