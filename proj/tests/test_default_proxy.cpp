#include <doctest.h>

#include <vector>

#include "liqdem/default_proxy.hpp"
#include "liqdem/quota.hpp"
#include "liqdem/rng.hpp"

using namespace liqdem;

namespace {

// Single-issue default profile from (value, trustee) pairs.
DefaultProxyProfile single(std::vector<DefaultEntry> entries) {
    std::vector<std::vector<DefaultEntry>> ops;
    for (const DefaultEntry& e : entries) ops.push_back({e});
    return DefaultProxyProfile(std::move(ops), 1);
}

DefaultProxyProfile random_profile(int n, SplitMix64& rng) {
    std::vector<std::vector<DefaultEntry>> ops(n);
    for (AgentId i = 0; i < n; ++i) {
        std::uint64_t opt = rng.bounded(2ull * n);
        ops[i] = {{(opt & 1u) != 0, static_cast<AgentId>(opt >> 1)}};
    }
    return DefaultProxyProfile(std::move(ops), 1);
}

// Odometer over all 2n-option default profiles, single issue.
template <typename Fn>
void for_each_default_profile(int n, Fn&& fn) {
    std::vector<int> opt(n, 0);
    for (;;) {
        std::vector<std::vector<DefaultEntry>> ops(n);
        for (AgentId i = 0; i < n; ++i)
            ops[i] = {{(opt[i] & 1) != 0, opt[i] >> 1}};
        fn(DefaultProxyProfile(std::move(ops), 1));
        int i = n - 1;
        while (i >= 0 && opt[i] == 2 * n - 1) opt[i--] = 0;
        if (i < 0) break;
        ++opt[i];
    }
}

} // namespace

TEST_CASE("cycle decomposition") {
    // 0 -> 1, 1 self, 2 -> 0: one self-loop cycle representing everyone
    CycleDecomposition d = decompose(single({{true, 1}, {true, 1}, {false, 0}}), 0);
    REQUIRE(d.cycles.size() == 1);
    CHECK(d.cycles[0].members == std::vector<AgentId>{1});
    CHECK(d.cycles[0].weight == 3);

    // all self-trustees: n singleton cycles of weight one
    CycleDecomposition selfs = decompose(single({{true, 0}, {false, 1}, {true, 2}}), 0);
    CHECK(selfs.cycles.size() == 3);
    for (const CycleInfo& c : selfs.cycles) CHECK(c.weight == 1);

    // 0 <-> 1 with 2 feeding in: a single two-cycle speaking for all three
    CycleDecomposition pair = decompose(single({{true, 1}, {false, 0}, {true, 0}}), 0);
    REQUIRE(pair.cycles.size() == 1);
    CHECK(pair.cycles[0].members.size() == 2);
    CHECK(pair.cycles[0].weight == 3);
    CHECK(pair.cycles[0].hung());
}

TEST_CASE("cycle weights always partition the electorate") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng.bounded(7));
        CycleDecomposition d = decompose(random_profile(n, rng), 0);
        std::uint64_t total = 0;
        for (const CycleInfo& c : d.cycles) total += c.weight;
        CHECK(total == static_cast<std::uint64_t>(n));
    }
}

TEST_CASE("default proxy majority") {
    // single accepting self-loop with weight three
    CHECK(pv_default_majority(single({{true, 1}, {true, 1}, {false, 0}})).get(0) ==
          TriVal::Accept);
    // a hung two-cycle contributes to neither side
    CHECK(pv_default_majority(single({{true, 1}, {false, 0}})).get(0) == TriVal::Abstain);
    // two singleton cycles of equal weight, opposite defaults: tie
    CHECK(pv_default_majority(single({{true, 0}, {false, 1}})).get(0) == TriVal::Abstain);
    // hung cycle plus a decided singleton: the singleton wins
    CHECK(pv_default_majority(single({{true, 1}, {false, 0}, {false, 2}})).get(0) ==
          TriVal::Reject);
}

TEST_CASE("cycle verdict translation") {
    // 3 feeds a cycle {0,1,2} with defaults (1,1,0): majority accepts
    DefaultProxyProfile prof = single({{true, 1}, {true, 2}, {false, 0}, {true, 0}});
    OpinionProfile t = translate_t_prime(prof);
    for (AgentId i = 0; i < 4; ++i) CHECK(t[i].get(0) == TriVal::Accept);

    // hung two-cycle: everyone attached abstains
    DefaultProxyProfile hung = single({{true, 1}, {false, 0}, {true, 0}});
    OpinionProfile th = translate_t_prime(hung);
    for (AgentId i = 0; i < 3; ++i) CHECK(th[i].get(0) == TriVal::Abstain);

    // self-trustee keeps its own default
    DefaultProxyProfile solo = single({{false, 0}});
    CHECK(translate_t_prime(solo)[0].get(0) == TriVal::Reject);
}

TEST_CASE("default majority is one man one vote with respect to cycle verdicts") {
    for (int n = 1; n <= 4; ++n) {
        for_each_default_profile(n, [](const DefaultProxyProfile& prof) {
            CHECK(pv_default_majority(prof) == majority(translate_t_prime(prof)));
        });
    }
}

TEST_CASE("profiles whose cycles are all self-loops reduce to plain proxy voting") {
    SplitMix64 rng(9);
    int reduced = 0;
    for (int trial = 0; trial < 800; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(5));
        DefaultProxyProfile prof = random_profile(n, rng);
        CycleDecomposition d = decompose(prof, 0);
        bool all_loops = true;
        for (const CycleInfo& c : d.cycles)
            if (c.members.size() != 1) all_loops = false;
        if (!all_loops) continue;
        ++reduced;
        CHECK(pv_default_majority(prof) == pv_majority(to_plain_proxy(prof)));
    }
    CHECK(reduced > 20);
}

TEST_CASE("malformed default profiles are rejected") {
    CHECK_THROWS_AS(single({{true, 3}}), InputError);
    CHECK_THROWS_AS(DefaultProxyProfile({}, 1), InputError);
}
