#pragma once

// Exact combinatorics of delegation graphs and the Monte Carlo estimators
// for the impartial-culture probabilities: the tree-arrangement recursion,
// the total-graph identity, guru-free profile counts, and default-profile
// counts where every delegation cycle splits evenly.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "liqdem/bigint.hpp"
#include "liqdem/common.hpp"
#include "liqdem/graph.hpp"
#include "liqdem/rng.hpp"

namespace liqdem {

// f(n, m): arrangements of n labeled elements into rooted trees whose m
// roots are chosen among them. Recursion: pick the roots, then attach the
// remaining elements level by level.
//   f(n, m) = C(n, m) * sum_{0 <= k <= n-m} m^k f(n-m, k),
//   f(0, 0) = 1, f(n, 0) = 0 for n > 0.
inline const BigUint& tree_arrangements(int n, int m) {
    static std::map<std::pair<int, int>, BigUint> cache;
    static std::mutex mutex;
    if (n < 0 || m < 0) throw InputError("tree_arrangements: negative argument");
    std::scoped_lock lock(mutex);

    std::function<const BigUint&(int, int)> go = [&](int nn, int mm) -> const BigUint& {
        auto it = cache.find({nn, mm});
        if (it != cache.end()) return it->second;
        BigUint value;
        if (nn == 0 && mm == 0) value = 1;
        else if (mm == 0 || mm > nn) value = 0;
        else {
            BigUint sum = 0;
            BigUint m_pow = 1;
            for (int k = 0; k <= nn - mm; ++k) {
                sum += m_pow * go(nn - mm, k);
                m_pow.mul_small(static_cast<std::uint64_t>(mm));
            }
            value = big_binomial(nn, mm) * sum;
        }
        return cache.emplace(std::make_pair(nn, mm), std::move(value)).first->second;
    };
    return go(n, m);
}

// sum_k f(n, k) * k! must equal n^n: every endomap decomposes into trees
// rooted on a permuted subset.
struct IdentityReport {
    BigUint lhs;
    BigUint rhs;
    bool holds() const { return lhs == rhs; }
};

inline IdentityReport check_identity_total(int n) {
    if (n < 1) throw InputError("check_identity_total: need n >= 1");
    IdentityReport r;
    r.lhs = 0;
    for (int k = 1; k <= n; ++k)
        r.lhs += tree_arrangements(n, k) * big_factorial(k);
    r.rhs = BigUint(static_cast<std::uint64_t>(n)).pow(n);
    return r;
}

// H(k): permutations of k labeled elements into cycles of even length, each
// cycle carrying a value assignment that splits it exactly in half.
// Decomposition over the cycle containing the smallest element:
//   H(k) = sum_{j >= 1} C(k-1, 2j-1) * (2j-1)! * C(2j, j) * H(k - 2j).
inline const BigUint& even_hung_cycle_arrangements(int k) {
    static std::map<int, BigUint> cache;
    static std::mutex mutex;
    if (k < 0) throw InputError("even_hung_cycle_arrangements: negative argument");
    std::scoped_lock lock(mutex);

    std::function<const BigUint&(int)> go = [&](int kk) -> const BigUint& {
        auto it = cache.find(kk);
        if (it != cache.end()) return it->second;
        BigUint value;
        if (kk == 0) value = 1;
        else if (kk % 2 == 1) value = 0;
        else {
            for (int j = 1; 2 * j <= kk; ++j) {
                BigUint term = big_binomial(kk - 1, 2 * j - 1);
                term *= big_factorial(2 * j - 1);
                term *= big_binomial(2 * j, j);
                term *= go(kk - 2 * j);
                value += term;
            }
        }
        return cache.emplace(kk, std::move(value)).first->second;
    };
    return go(k);
}

// Number of default profiles (value and trustee per agent, 2n options each,
// 2^n * n^n in total) whose delegation graph has every cycle evenly split
// on its members' defaults; exactly these profiles translate to universal
// abstention. Cyclic agents contribute f(n,k) * H(k) arrangements, the
// remaining tree agents vote freely.
struct HungCountReport {
    BigUint count;
    BigUint space;       // 2^n * n^n
    double probability() const { return big_ratio(count, space); }
    BigRational exact_probability() const { return {count, space}; }
};

inline HungCountReport count_all_hung(int n) {
    if (n < 1) throw InputError("count_all_hung: need n >= 1");
    HungCountReport r;
    r.count = 0;
    for (int k = 2; k <= n; k += 2) {
        BigUint term = tree_arrangements(n, k) * even_hung_cycle_arrangements(k);
        term *= BigUint(2).pow(static_cast<std::uint64_t>(n - k));
        r.count += term;
    }
    r.space = BigUint(2).pow(n) * BigUint(static_cast<std::uint64_t>(n)).pow(n);
    return r;
}

// ((n-1)/(n+1))^n: the impartial-culture probability that a single-issue
// proxy profile has no guru at all. Exact expansion is reserved for desk
// sizes; the double value is computed in log space and valid for any n.
inline BigRational prob_guru_free_exact(int n) {
    if (n < 1) throw InputError("prob_guru_free_exact: need n >= 1");
    if (n > 20000)
        throw BudgetError("prob_guru_free_exact: expansion too large; use prob_guru_free");
    return {BigUint(static_cast<std::uint64_t>(n - 1)).pow(n),
            BigUint(static_cast<std::uint64_t>(n + 1)).pow(n)};
}

inline double prob_guru_free(std::uint64_t n) {
    if (n < 1) throw InputError("prob_guru_free: need n >= 1");
    if (n == 1) return 0.0;
    double x = static_cast<double>(n) * std::log1p(-2.0 / (static_cast<double>(n) + 1.0));
    return std::exp(x);
}

struct McConfig {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    int workers = 1;
};

struct McResult {
    double estimate = 0.0;
    double stderr_estimate = 0.0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    int workers = 1;
    const char* rng = SplitMix64::name();
};

namespace detail {

// Runs `per_sample` over worker substreams and merges hit counts; the merge
// is ordered by worker index, so results depend only on (seed, workers).
template <typename Fn>
McResult mc_run(const McConfig& cfg, Fn per_sample) {
    if (cfg.samples == 0) throw InputError("monte carlo: need at least one sample");
    if (cfg.workers < 1) throw InputError("monte carlo: need at least one worker");
    int workers = cfg.workers;
    std::vector<std::uint64_t> hits(workers, 0);
    std::vector<std::thread> threads;
    std::uint64_t base = cfg.samples / workers;
    std::uint64_t extra = cfg.samples % workers;

    auto work = [&](int w) {
        std::uint64_t count = base + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
        SplitMix64 rng = SplitMix64::substream(cfg.seed, static_cast<std::uint64_t>(w));
        std::uint64_t h = 0;
        for (std::uint64_t s = 0; s < count; ++s)
            if (per_sample(rng)) ++h;
        hits[w] = h;
    };
    if (workers == 1) {
        work(0);
    } else {
        threads.reserve(workers);
        for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }

    McResult r;
    r.samples = cfg.samples;
    r.seed = cfg.seed;
    r.workers = workers;
    for (std::uint64_t h : hits) r.hits += h;
    r.estimate = static_cast<double>(r.hits) / static_cast<double>(r.samples);
    r.stderr_estimate =
        std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(r.samples));
    return r;
}

} // namespace detail

// Samples single-issue proxy profiles under impartial culture (n + 1
// options per agent: two values, n - 1 trustees) and estimates the
// probability that nobody expresses a value.
inline McResult mc_guru_free(int n, const McConfig& cfg) {
    if (n < 2) throw InputError("mc_guru_free: need n >= 2");
    std::uint64_t options = static_cast<std::uint64_t>(n) + 1;
    return detail::mc_run(cfg, [n, options](SplitMix64& rng) {
        for (int i = 0; i < n; ++i)
            if (rng.bounded(options) < 2) return false; // someone voted
        return true;
    });
}

// Samples default profiles under impartial culture (2n options per agent:
// value times trustee, self allowed) and estimates the probability that
// every delegation cycle is evenly split.
inline McResult mc_all_abstain_default(int n, const McConfig& cfg) {
    if (n < 1) throw InputError("mc_all_abstain_default: need n >= 1");
    std::uint64_t options = 2ull * static_cast<std::uint64_t>(n);
    return detail::mc_run(cfg, [n, options](SplitMix64& rng) {
        std::vector<AgentId> next(n);
        std::vector<bool> value(n);
        for (int i = 0; i < n; ++i) {
            std::uint64_t opt = rng.bounded(options);
            value[i] = opt & 1u;
            next[i] = static_cast<AgentId>(opt >> 1);
        }
        FunctionalGraph g(std::move(next));
        for (const auto& cyc : g.cycles()) {
            int acc = 0;
            for (AgentId i : cyc) acc += value[i] ? 1 : 0;
            if (2 * acc != static_cast<int>(cyc.size())) return false;
        }
        return true;
    });
}

} // namespace liqdem
