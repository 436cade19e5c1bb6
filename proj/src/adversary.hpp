#pragma once

#include <optional>
#include <string>

#include "instance.hpp"
#include "rational.hpp"
#include "sequence.hpp"

namespace pickseq {

/// What the `expected` value of a generated instance promises.
enum class ExpectedKind {
    WelfareOfBase,  // EW of the base sequence on this instance
    RatioExact,     // realized ratio equals `expected` exactly
    RatioAtLeast,   // realized ratio is at least `expected`
    RatioAtMost,    // realized ratio is at most `expected`
    Ef1Violation,   // executing the base sequence violates EF1 for (envier, envied)
};

/// A proof-constructed instance, parameterized exactly as in its source
/// argument, together with the value it is guaranteed to reproduce.
struct GeneratedInstance {
    Instance instance;
    std::string generator;  // id + parameters, used as the provenance header
    int target_agent = 0;   // 0 when not applicable
    PickingSequence base_sequence;
    std::optional<PickingSequence> witness_sequence;
    Rational expected;
    ExpectedKind kind = ExpectedKind::RatioExact;
    std::optional<Rational> witness_welfare;  // EW of the witness sequence, when pinned
    std::optional<Rational> expected_mms;     // target agent's MMS, when pinned
    std::optional<Rational> expected_utility; // target agent's realized utility, when pinned
    int envier = 0;
    int envied = 0;
};

/// Instance whose egalitarian welfare under `seq` is 0 while swapping the
/// first two picks yields welfare 1 (the witness sequence leaves the
/// canonical-prefix class).
GeneratedInstance gen_ew_zero(int n, int m, const PickingSequence& seq);

/// Egalitarian-price lower bound against all of Pi_{n,m}: the witness
/// (1..n, k, k, ..., k) achieves ratio exactly m-n+1 (if m <= 2n-1) or n
/// (if m >= 2n) over `seq`. Requires m >= n+1.
GeneratedInstance gen_price_all(int n, int m, const PickingSequence& seq);

/// Egalitarian-price lower bound against R_{n,m}: ratio exactly 2 in the
/// small case (m <= 2n-1), and at least min{ceil(m/n), floor(log2 n)+1} in
/// the large case via the reversed-rounds witness. Requires m >= n+1.
GeneratedInstance gen_price_rb(int n, int m, const PickingSequence& seq);

/// Per-agent MMS tightness instance: agent i has MMS
/// floor((t_s-i)/(n+1-i)) >= 1 and realizes exactly s-1, where s minimizes
/// the tightness bound.
GeneratedInstance gen_mms_agent(int n, int m, const PickingSequence& seq, int agent);

/// Agent n gets exactly floor(m/n)/(floor(m/n)n-n+1) of her MMS on every
/// sequence in R_{n,m}.
GeneratedInstance gen_mms_I1(int n, int m);

/// Agent n gets at most ceil(m/n)/(m-n+1) of her MMS on every sequence in
/// R_{n,m}.
GeneratedInstance gen_mms_I2(int n, int m);

/// For a sequence that is not recursively balanced: an instance on which
/// executing it violates EF1, with the violating pair taken from the
/// shortest unbalanced prefix. Throws std::domain_error if seq is
/// recursively balanced.
GeneratedInstance gen_ef1_counterexample(const PickingSequence& seq);

std::string generated_to_json(const GeneratedInstance& gen, int indent = -1);

}  // namespace pickseq
