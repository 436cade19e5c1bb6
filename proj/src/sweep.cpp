#include "sweep.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "errors.hpp"
#include "execution.hpp"
#include "mms.hpp"

namespace pickseq {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fanout_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t h = splitmix64(master);
    h = splitmix64(h ^ a);
    h = splitmix64(h ^ b);
    h = splitmix64(h ^ c);
    return h;
}

namespace {

struct IntMmsSearch {
    int n = 0;
    std::vector<long long> values;  // positive, descending
    std::vector<long long> suffix;
    std::vector<long long> sums;
    mutable std::vector<long long> sorted;
    long long best = -1;
    std::uint64_t nodes = 0;
    std::uint64_t cap = 0;

    long long upper_bound(int k) const {
        sorted = sums;
        std::sort(sorted.begin(), sorted.end());
        long long acc = 0;
        long long bound = sorted[0] + suffix[k];
        for (int t = 1; t <= n; ++t) {
            acc += sorted[t - 1];
            long long candidate = (acc + suffix[k]) / t;  // sums are integral, so flooring stays an upper bound
            bound = std::min(bound, candidate);
        }
        return bound;
    }

    void run(int k) {
        if (++nodes > cap) throw ResourceLimitError("integer MMS search exceeded node cap");
        if (k == static_cast<int>(values.size())) {
            best = std::max(best, *std::min_element(sums.begin(), sums.end()));
            return;
        }
        if (best >= 0 && upper_bound(k) <= best) return;
        for (int j = 0; j < n; ++j) {
            if (j > 0 && sums[j] == sums[j - 1]) continue;
            sums[j] += values[k];
            run(k + 1);
            sums[j] -= values[k];
        }
    }
};

}  // namespace

long long mms_int(const std::vector<long long>& util, int bundles) {
    IntMmsSearch search;
    search.n = bundles;
    for (long long v : util) {
        if (v > 0) search.values.push_back(v);
    }
    std::sort(search.values.begin(), search.values.end(), std::greater<>());
    search.suffix.assign(search.values.size() + 1, 0);
    for (int k = static_cast<int>(search.values.size()) - 1; k >= 0; --k)
        search.suffix[k] = search.suffix[k + 1] + search.values[k];
    search.sums.assign(bundles, 0);
    search.cap = default_mms_cap();
    search.run(0);
    return std::max(search.best, 0LL);
}

namespace {

struct Row {
    std::vector<long long> util;  // by good, 0-based
    std::vector<int> pref;        // goods by descending utility, index ties ascending
    std::vector<int> pref_pos;    // rank of each good in pref
    long long mms = 0;
};

Row make_row(std::vector<long long> util, int bundles, bool with_mms) {
    Row row;
    row.util = std::move(util);
    const int m = static_cast<int>(row.util.size());
    row.pref.resize(m);
    std::iota(row.pref.begin(), row.pref.end(), 0);
    std::stable_sort(row.pref.begin(), row.pref.end(),
                     [&](int a, int b) { return row.util[a] > row.util[b]; });
    row.pref_pos.resize(m);
    for (int k = 0; k < m; ++k) row.pref_pos[row.pref[k]] = k;
    if (with_mms) row.mms = mms_int(row.util, bundles);
    return row;
}

struct Bound {
    long long num = 0;
    long long den = 1;
};

Bound to_bound(const Rational& r) {
    return Bound{numerator(r).convert_to<long long>(), denominator(r).convert_to<long long>()};
}

struct NamedBound {
    std::string name;
    Bound bound;
};

struct SeqEntry {
    std::vector<int> picks;  // 0-based agents
    std::string text;
    Bound alpha;
    std::vector<Bound> lemma_combined;                   // per agent, max of the lemma bounds
    std::vector<std::vector<NamedBound>> lemma_parts;    // per agent, for failure attribution
};

bool lemma45_applies(const PickingSequence& seq) {
    const int n = seq.n;
    const int m = seq.m();
    if (m == n) return true;
    int round2_len = std::min(n, m - n);
    if (round2_len < n && round2_len % 2 == 1) return true;  // incomplete odd second round
    for (int t = n + 1; t <= n + round2_len; ++t) {
        if (seq.at(t) == n - 1) return true;
    }
    return false;
}

std::vector<SeqEntry> build_seq_entries(int n, int m) {
    std::vector<SeqEntry> entries;
    GuaranteeConstants constants = guarantee_constants(n, m);
    for (const PickingSequence& seq : enumerate_sequences(n, m, SequenceSpace::Balanced)) {
        SeqEntry entry;
        entry.text = format_sequence(seq);
        for (int a : seq.picks) entry.picks.push_back(a - 1);
        entry.alpha = to_bound(guarantee_alpha(seq));
        entry.lemma_combined.resize(n);
        entry.lemma_parts.resize(n);
        for (int i = 1; i <= n; ++i) {
            AgentPickIndices indices = agent_pick_indices(seq, i);
            std::vector<std::pair<std::string, Rational>> parts;
            parts.emplace_back("lem_4_1", agent_lb_general(n, m, i, indices));
            parts.emplace_back("lem_4_3", agent_lb_large_m(n, i));
            parts.emplace_back("lem_4_4", agent_lb_small_m(n, m, i));
            if (i <= n - 2) parts.emplace_back("lem_4_6", constants.alpha_max);
            if (i == n - 1 && lemma45_applies(seq)) parts.emplace_back("lem_4_5", constants.alpha_max);
            Rational best = parts.front().second;
            for (const auto& [name, value] : parts) best = std::max(best, value);
            entry.lemma_combined[i - 1] = to_bound(best);
            for (const auto& [name, value] : parts)
                entry.lemma_parts[i - 1].push_back(NamedBound{name, to_bound(value)});
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

struct Engine {
    int n = 0;
    int m = 0;
    std::vector<int> cursor;
    std::vector<long long> own;
    std::vector<int> picked;       // good per turn
    std::vector<int> bundle;       // flat n x m good lists
    std::vector<int> bundle_size;  // per agent

    void init(int n_, int m_) {
        if (m_ > 63) throw ResourceLimitError("sweep engine supports at most 63 goods");
        n = n_;
        m = m_;
        cursor.assign(n, 0);
        own.assign(n, 0);
        picked.assign(m, 0);
        bundle.assign(static_cast<std::size_t>(n) * m, 0);
        bundle_size.assign(n, 0);
    }

    void execute(const std::vector<int>& picks, const Row* const* rows) {
        std::uint64_t taken = 0;
        std::fill(cursor.begin(), cursor.end(), 0);
        std::fill(own.begin(), own.end(), 0LL);
        std::fill(bundle_size.begin(), bundle_size.end(), 0);
        for (int t = 0; t < m; ++t) {
            int a = picks[t];
            const Row& row = *rows[a];
            int k = cursor[a];
            const int* pref = row.pref.data();
            while (taken >> pref[k] & 1) ++k;
            int g = pref[k];
            cursor[a] = k + 1;
            taken |= 1ULL << g;
            own[a] += row.util[g];
            picked[t] = g;
            bundle[a * m + bundle_size[a]++] = g;
        }
    }

    long long welfare() const { return *std::min_element(own.begin(), own.end()); }

    // First EF1-violating ordered pair, or (-1,-1).
    std::pair<int, int> ef1_violation(const Row* const* rows) {
        for (int i = 0; i < n; ++i) {
            const long long* util = rows[i]->util.data();
            const long long mine = own[i];
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const int* goods = &bundle[j * m];
                long long total = 0, top = 0;
                for (int k = 0; k < bundle_size[j]; ++k) {
                    long long u = util[goods[k]];
                    total += u;
                    if (u > top) top = u;
                }
                if (mine < total - top) return {i, j};
            }
        }
        return {-1, -1};
    }
};

std::string rows_to_instance_json(int n, int m, const Row* const* rows, long long scale) {
    std::vector<std::vector<Rational>> util(n, std::vector<Rational>(m));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) util[i][j] = Rational(BigInt(rows[i]->util[j]), BigInt(scale));
    }
    return instance_to_json(make_instance(n, m, std::move(util)), 2);
}

// ratio >= num/den, i.e. value*den >= num*mms.
inline bool meets(long long value, long long mms, const Bound& bound) {
    return value * bound.den >= bound.num * mms;
}

std::string attribute_failure(const SeqEntry& entry, int agent0, long long value, long long mms) {
    for (const NamedBound& part : entry.lemma_parts[agent0]) {
        if (!meets(value, mms, part.bound)) return part.name;
    }
    return "lemma_bound";
}

void fill_violation(SweepReport& report, const std::string& check, const std::string& detail,
                    int n, int m, const Row* const* rows, long long scale, const std::string& seq_text,
                    const std::string& witness = {}) {
    report.pass = false;
    SweepViolation violation;
    violation.check = check;
    violation.detail = detail;
    violation.instance_json = rows_to_instance_json(n, m, rows, scale);
    violation.sequence = seq_text;
    violation.witness_sequence = witness;
    report.violation = violation;
}

// Guarantee + EF1 checks of all sequence entries on one instance; returns
// false (and fills the report) on the first violation.
bool check_instance(SweepReport& report, Engine& engine, const std::vector<SeqEntry>& entries,
                    const Row* const* rows, long long scale, const SweepChecks& checks) {
    const int n = engine.n;
    const int m = engine.m;
    for (const SeqEntry& entry : entries) {
        engine.execute(entry.picks, rows);
        ++report.executions;
        if (checks.alpha_guarantee || checks.agent_lower_bounds) {
            for (int i = 0; i < n; ++i) {
                long long value = engine.own[i];
                long long mms = rows[i]->mms;
                if (checks.alpha_guarantee && !meets(value, mms, entry.alpha)) {
                    fill_violation(report, "alpha_guarantee",
                                   "agent " + std::to_string(i + 1) + " got " + std::to_string(value) +
                                       "/" + std::to_string(scale) + " with MMS " + std::to_string(mms) +
                                       "/" + std::to_string(scale) + ", below alpha " +
                                       std::to_string(entry.alpha.num) + "/" + std::to_string(entry.alpha.den),
                                   n, m, rows, scale, entry.text);
                    return false;
                }
                if (checks.agent_lower_bounds && !meets(value, mms, entry.lemma_combined[i])) {
                    fill_violation(report, attribute_failure(entry, i, value, mms),
                                   "agent " + std::to_string(i + 1) + " ratio fell below the per-agent bound",
                                   n, m, rows, scale, entry.text);
                    return false;
                }
            }
        }
        if (checks.ef1) {
            auto [i, j] = engine.ef1_violation(rows);
            if (i >= 0) {
                fill_violation(report, "ef1",
                               "agent " + std::to_string(i + 1) + " envies agent " + std::to_string(j + 1) +
                                   " beyond one good",
                               n, m, rows, scale, entry.text);
                return false;
            }
        }
    }
    return true;
}

std::vector<Row> build_grid_rows(int n, int m, const std::vector<long long>& grid, bool with_mms) {
    const long long V = static_cast<long long>(grid.size());
    long long K = 1;
    for (int j = 0; j < m; ++j) {
        K *= V;
        if (K > 20'000'000) throw ResourceLimitError("grid row space too large");
    }
    std::vector<Row> rows;
    rows.reserve(K);
    for (long long id = 0; id < K; ++id) {
        std::vector<long long> util(m);
        long long rest = id;
        for (int j = 0; j < m; ++j) {
            util[j] = grid[rest % V];
            rest /= V;
        }
        rows.push_back(make_row(std::move(util), n, with_mms));
    }
    return rows;
}

// Exhaustive instance spaces are K^n; refuse ones that cannot finish.
void guard_instance_space(long long K, int n) {
    BigInt total = 1;
    for (int i = 0; i < n; ++i) total *= K;
    if (total > BigInt(10'000'000'000LL))
        throw ResourceLimitError("exhaustive instance space has " + total.str() + " matrices");
}

// Odometer over per-agent row ids, agent 1 most significant.
bool advance_odometer(std::vector<long long>& rid, long long K) {
    int pos = static_cast<int>(rid.size()) - 1;
    while (pos >= 0) {
        if (++rid[pos] < K) return true;
        rid[pos] = 0;
        --pos;
    }
    return false;
}

}  // namespace

SweepReport exhaustive_guarantee_sweep(int n, int m, const std::vector<long long>& grid,
                                       const SweepChecks& checks) {
    SweepReport report;
    std::vector<Row> cache = build_grid_rows(n, m, grid, checks.alpha_guarantee || checks.agent_lower_bounds);
    const long long K = static_cast<long long>(cache.size());
    guard_instance_space(K, n);
    std::vector<SeqEntry> entries = build_seq_entries(n, m);
    Engine engine;
    engine.init(n, m);

    std::vector<long long> rid(n, 0);
    std::vector<const Row*> rows(n);
    do {
        for (int i = 0; i < n; ++i) rows[i] = &cache[rid[i]];
        report.instances_covered += 1;
        if (!check_instance(report, engine, entries, rows.data(), 1, checks)) return report;
    } while (advance_odometer(rid, K));
    return report;
}

namespace {

// Random rational utilities: numerator 0..9, denominator 1..4, drawn
// agent-major then good-major (numerator before denominator), scaled
// exactly by 12 into integers.
constexpr long long kRandomScale = 12;

std::vector<Row> random_rows(std::mt19937_64& rng, int n, int m, bool with_mms) {
    std::vector<Row> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<long long> util(m);
        for (int j = 0; j < m; ++j) {
            long long num = static_cast<long long>(rng() % 10);
            long long den = static_cast<long long>(1 + rng() % 4);
            util[j] = num * (kRandomScale / den);
        }
        rows.push_back(make_row(std::move(util), n, with_mms));
    }
    return rows;
}

std::vector<std::vector<int>> flatten_space(int n, int m, SequenceSpace space) {
    std::vector<std::vector<int>> out;
    for (const PickingSequence& seq : enumerate_sequences(n, m, space)) {
        std::vector<int> picks;
        picks.reserve(m);
        for (int a : seq.picks) picks.push_back(a - 1);
        out.push_back(std::move(picks));
    }
    return out;
}

struct PriceBounds {
    std::vector<std::vector<int>> pi_space;
    std::vector<std::vector<int>> rb_space;
    long long bound_pi = 0;
    long long bound_rb = 0;
};

PriceBounds make_price_bounds(int n, int m) {
    PriceBounds out;
    out.pi_space = flatten_space(n, m, SequenceSpace::All);
    out.rb_space = flatten_space(n, m, SequenceSpace::Balanced);
    out.bound_pi = std::min(m - n + 1, n);
    int log2n = 0;
    while ((1 << (log2n + 1)) <= n) ++log2n;
    out.bound_rb = std::min((m + n - 1) / n, log2n + 1);  // L = floor(log2 n) + 1
    return out;
}

// Bound check for one instance: a zero welfare anywhere in R forces every
// optimum to zero as well; otherwise compare against bound * min over R.
bool price_check_instance(SweepReport& report, Engine& engine, const PriceBounds& bounds,
                          const Row* const* rows, long long scale, int n, int m,
                          const std::string& tag) {
    long long max_pi = 0;
    std::size_t arg_pi = 0;
    for (std::size_t s = 0; s < bounds.pi_space.size(); ++s) {
        engine.execute(bounds.pi_space[s], rows);
        ++report.executions;
        long long ew = engine.welfare();
        if (ew > max_pi) {
            max_pi = ew;
            arg_pi = s;
        }
    }
    long long min_rb = -1, max_rb = 0;
    for (const auto& picks : bounds.rb_space) {
        engine.execute(picks, rows);
        ++report.executions;
        long long ew = engine.welfare();
        if (min_rb < 0 || ew < min_rb) min_rb = ew;
        if (ew > max_rb) max_rb = ew;
    }
    bool ok = min_rb == 0 ? max_pi == 0
                          : max_pi <= bounds.bound_pi * min_rb && max_rb <= bounds.bound_rb * min_rb;
    if (!ok) {
        PickingSequence witness{n, {}};
        for (int a : bounds.pi_space[arg_pi]) witness.picks.push_back(a + 1);
        fill_violation(report, "price_bound",
                       "max EW over the sequence space exceeds the theorem bound" + tag, n, m, rows,
                       scale, "", format_sequence(witness));
        return false;
    }
    return true;
}

}  // namespace

SweepReport random_sweep(int n, int m, const RandomSweepOptions& options) {
    SweepReport report;
    std::vector<SeqEntry> entries = build_seq_entries(n, m);
    PriceBounds bounds;
    if (options.price_bounds) bounds = make_price_bounds(n, m);
    const bool need_mms = options.checks.alpha_guarantee || options.checks.agent_lower_bounds;
    Engine engine;
    engine.init(n, m);
    std::mt19937_64 rng(options.seed);
    std::vector<const Row*> rows(n);

    for (int index = 0; index < options.count; ++index) {
        std::vector<Row> inst = random_rows(rng, n, m, need_mms);
        for (int i = 0; i < n; ++i) rows[i] = &inst[i];
        report.instances_covered += 1;
        std::string tag = " (seed " + std::to_string(options.seed) + ", instance " +
                          std::to_string(index) + ")";
        if (!check_instance(report, engine, entries, rows.data(), kRandomScale, options.checks)) {
            report.violation->detail += tag;
            return report;
        }
        if (options.price_bounds &&
            !price_check_instance(report, engine, bounds, rows.data(), kRandomScale, n, m, tag))
            return report;
    }
    return report;
}

SweepReport exhaustive_price_sweep(int n, int m, const std::vector<long long>& grid) {
    SweepReport report;
    std::vector<Row> cache = build_grid_rows(n, m, grid, false);
    const long long K = static_cast<long long>(cache.size());
    guard_instance_space(K, n);
    PriceBounds bounds = make_price_bounds(n, m);
    Engine engine;
    engine.init(n, m);
    std::vector<long long> rid(n, 0);
    std::vector<const Row*> rows(n);
    do {
        for (int i = 0; i < n; ++i) rows[i] = &cache[rid[i]];
        report.instances_covered += 1;
        if (!price_check_instance(report, engine, bounds, rows.data(), 1, n, m, "")) return report;
    } while (advance_odometer(rid, K));
    return report;
}

SweepReport exhaustive_pick_preference_sweep(int n, int m, const std::vector<long long>& grid) {
    SweepReport report;
    std::vector<Row> cache = build_grid_rows(n, m, grid, false);
    const long long K = static_cast<long long>(cache.size());
    guard_instance_space(K, n);
    std::vector<std::vector<int>> space = flatten_space(n, m, SequenceSpace::Balanced);
    const int total_rounds = (m + n - 1) / n;
    const int L = guarantee_constants(n, m).round_log_bound;
    Engine engine;
    engine.init(n, m);

    const int S = static_cast<int>(space.size());
    std::vector<int> table(S * n * total_rounds);  // picked good per (seq, agent, round); -1 if none
    std::vector<long long> rid(n, 0);
    std::vector<const Row*> rows(n);
    do {
        for (int i = 0; i < n; ++i) rows[i] = &cache[rid[i]];
        report.instances_covered += 1;
        for (int s = 0; s < S; ++s) {
            engine.execute(space[s], rows.data());
            ++report.executions;
            int* slot = &table[s * n * total_rounds];
            std::fill(slot, slot + n * total_rounds, -1);
            for (int t = 0; t < m; ++t) slot[space[s][t] * total_rounds + t / n] = engine.picked[t];
        }
        for (int s1 = 0; s1 < S; ++s1) {
            for (int s2 = 0; s2 < S; ++s2) {
                for (int a = 0; a < n; ++a) {
                    const int* row1 = &table[(s1 * n + a) * total_rounds];
                    const int* row2 = &table[(s2 * n + a) * total_rounds];
                    const std::vector<int>& pos = rows[a]->pref_pos;
                    for (int s = 1; s <= total_rounds; ++s) {
                        int r2 = (s - 1) * L + 1;
                        int g1 = row1[s - 1];
                        int g2 = r2 <= total_rounds ? row2[r2 - 1] : -1;
                        int p1 = g1 < 0 ? m : pos[g1];
                        int p2 = g2 < 0 ? m : pos[g2];
                        if (p1 > p2) {
                            PickingSequence base{n, {}}, other{n, {}};
                            for (int v : space[s1]) base.picks.push_back(v + 1);
                            for (int v : space[s2]) other.picks.push_back(v + 1);
                            fill_violation(report, "pick_preference",
                                           "agent " + std::to_string(a + 1) + " round " + std::to_string(s) +
                                               " pick ranks below her round " + std::to_string(r2) +
                                               " pick under the second sequence",
                                           n, m, rows.data(), 1, format_sequence(base), format_sequence(other));
                            return report;
                        }
                    }
                }
            }
        }
    } while (advance_odometer(rid, K));
    return report;
}

SweepReport exhaustive_identical_welfare_sweep(int n, int m, const std::vector<long long>& grid) {
    SweepReport report;
    std::vector<Row> cache = build_grid_rows(n, m, grid, false);
    std::vector<std::vector<int>> space = flatten_space(n, m, SequenceSpace::Balanced);
    std::vector<int> round_robin;
    for (int t = 0; t < m; ++t) round_robin.push_back(t % n);
    Engine engine;
    engine.init(n, m);
    std::vector<const Row*> rows(n);
    for (const Row& row : cache) {
        for (int i = 0; i < n; ++i) rows[i] = &row;
        report.instances_covered += 1;
        engine.execute(round_robin, rows.data());
        ++report.executions;
        long long rr = engine.welfare();
        for (const auto& picks : space) {
            engine.execute(picks, rows.data());
            ++report.executions;
            if (engine.welfare() < rr) {
                PickingSequence seq{n, {}};
                for (int v : picks) seq.picks.push_back(v + 1);
                fill_violation(report, "identical_welfare",
                               "EW fell below the round-robin welfare on identical utilities", n, m,
                               rows.data(), 1, format_sequence(seq));
                return report;
            }
        }
    }
    return report;
}

namespace {

// Updates the probe result with one instance's max-over-space ratio.
void probe_instance(PriceProbeResult& result, Engine& engine, const std::vector<int>& base_picks,
                    const std::vector<std::vector<int>>& seqs, const Row* const* rows, long long scale,
                    int n, int m) {
    ++result.instances;
    engine.execute(base_picks, rows);
    long long base_ew = engine.welfare();
    long long best = 0;
    std::size_t arg = 0;
    for (std::size_t s = 0; s < seqs.size(); ++s) {
        engine.execute(seqs[s], rows);
        long long ew = engine.welfare();
        if (ew > best) {
            best = ew;
            arg = s;
        }
    }
    Ratio ratio = make_ratio(Rational(BigInt(best)), Rational(BigInt(base_ew)));
    if (result.max_ratio < ratio) {
        result.max_ratio = ratio;
        PickingSequence witness{n, {}};
        for (int a : seqs[arg]) witness.picks.push_back(a + 1);
        result.witness_sequence = format_sequence(witness);
        result.instance_json = rows_to_instance_json(n, m, rows, scale);
    }
}

std::vector<int> to_zero_based(const PickingSequence& seq) {
    std::vector<int> out;
    out.reserve(seq.m());
    for (int a : seq.picks) out.push_back(a - 1);
    return out;
}

}  // namespace

PriceProbeResult random_price_probe(int n, int m, const PickingSequence& base, SequenceSpace space,
                                    int count, std::uint64_t seed) {
    if (!in_balanced_class(base) || base.n != n || base.m() != m)
        throw std::invalid_argument("base sequence must belong to R_{n,m}");
    PriceProbeResult result;
    std::vector<std::vector<int>> seqs = flatten_space(n, m, space);
    std::vector<int> base_picks = to_zero_based(base);
    Engine engine;
    engine.init(n, m);
    std::mt19937_64 rng(seed);
    std::vector<const Row*> rows(n);
    for (int index = 0; index < count; ++index) {
        std::vector<Row> inst = random_rows(rng, n, m, false);
        for (int i = 0; i < n; ++i) rows[i] = &inst[i];
        probe_instance(result, engine, base_picks, seqs, rows.data(), kRandomScale, n, m);
    }
    return result;
}

PriceProbeResult grid_price_probe(int n, int m, const PickingSequence& base, SequenceSpace space,
                                  const std::vector<long long>& grid) {
    if (!in_balanced_class(base) || base.n != n || base.m() != m)
        throw std::invalid_argument("base sequence must belong to R_{n,m}");
    PriceProbeResult result;
    std::vector<Row> cache = build_grid_rows(n, m, grid, false);
    const long long K = static_cast<long long>(cache.size());
    guard_instance_space(K, n);
    std::vector<std::vector<int>> seqs = flatten_space(n, m, space);
    std::vector<int> base_picks = to_zero_based(base);
    Engine engine;
    engine.init(n, m);
    std::vector<long long> rid(n, 0);
    std::vector<const Row*> rows(n);
    do {
        for (int i = 0; i < n; ++i) rows[i] = &cache[rid[i]];
        probe_instance(result, engine, base_picks, seqs, rows.data(), 1, n, m);
    } while (advance_odometer(rid, K));
    return result;
}

}  // namespace pickseq
