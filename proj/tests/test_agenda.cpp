#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "liqdem/agenda.hpp"
#include "liqdem/formula.hpp"
#include "liqdem/semantics.hpp"

using namespace liqdem;

namespace {

using LitSet = std::set<std::pair<int, bool>>;

LitSet as_set(const std::vector<Literal>& lits) {
    LitSet s;
    for (const Literal& l : lits) s.insert({l.issue, l.positive});
    return s;
}

// Reference oracle: subsets of the agenda by bitmask, definition checked
// directly (inconsistent, all proper subsets consistent).
std::vector<LitSet> oracle_minimal_inconsistent(const std::vector<Literal>& agenda,
                                                const Theory& th) {
    int k = static_cast<int>(agenda.size());
    std::vector<std::uint32_t> inconsistent_masks;
    std::vector<LitSet> out;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<Literal> lits;
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1u) lits.push_back(agenda[i]);
        if (!th.consistent_with(lits)) inconsistent_masks.push_back(mask);
    }
    for (std::uint32_t mask : inconsistent_masks) {
        bool minimal = true;
        for (std::uint32_t other : inconsistent_masks)
            if (other != mask && (mask & other) == other) { minimal = false; break; }
        if (minimal) {
            std::vector<Literal> lits;
            for (int i = 0; i < k; ++i)
                if ((mask >> i) & 1u) lits.push_back(agenda[i]);
            out.push_back(as_set(lits));
        }
    }
    return out;
}

bool oracle_evenly_negatable(const std::vector<Literal>& agenda, const Theory& th) {
    for (const LitSet& xs : oracle_minimal_inconsistent(agenda, th)) {
        std::vector<Literal> x;
        for (auto [issue, sign] : xs) x.push_back({issue, sign});
        int k = static_cast<int>(x.size());
        for (std::uint32_t y = 0; y < (1u << k); ++y) {
            if (__builtin_popcount(y) % 2 != 0 || y == 0) continue;
            std::vector<Literal> swapped;
            for (int i = 0; i < k; ++i)
                swapped.push_back((y >> i) & 1u ? x[i].negated() : x[i]);
            if (th.consistent_with(swapped)) return true;
        }
    }
    return false;
}

bool oracle_conditional_entails(const Theory& th, Literal a, Literal b) {
    auto agenda = full_agenda(th.m());
    int k = static_cast<int>(agenda.size());
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<Literal> x;
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1u) x.push_back(agenda[i]);
        std::vector<Literal> xa = x, xnb = x;
        xa.push_back(a);
        xnb.push_back(b.negated());
        if (!th.consistent_with(xa) || !th.consistent_with(xnb)) continue;
        if (th.entails(xa, b)) return true;
    }
    return false;
}

bool oracle_path_connected(const Theory& th) {
    auto agenda = full_agenda(th.m());
    int k = static_cast<int>(agenda.size());
    std::vector<std::vector<bool>> r(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) r[i][j] = oracle_conditional_entails(th, agenda[i], agenda[j]);
    for (int via = 0; via < k; ++via)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (r[i][via] && r[via][j]) r[i][j] = true;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && !r[i][j]) return false;
    return true;
}

Theory make(const char* gamma, std::vector<std::string> labels) {
    IssueSet s(std::move(labels));
    return Theory(parse_formula(gamma, s), s);
}

} // namespace

TEST_CASE("minimal inconsistent sets for the three reference constraints") {
    Theory imp = make("(p&q)->r", {"p", "q", "r"});
    auto agenda = full_agenda(3);
    auto sets = minimal_inconsistent_sets(agenda, imp, 6);

    // {p, q, !r} is among them
    LitSet dilemma = {{0, true}, {1, true}, {2, false}};
    bool found = false;
    for (const auto& s : sets)
        if (as_set(s) == dilemma) found = true;
    CHECK(found);

    // tautology: exactly the complementary pairs
    Theory top = Theory::tautology(2);
    auto top_sets = minimal_inconsistent_sets(full_agenda(2), top, 4);
    REQUIRE(top_sets.size() == 2);
    for (const auto& s : top_sets) {
        REQUIRE(s.size() == 2);
        CHECK(s[0].issue == s[1].issue);
        CHECK(s[0].positive != s[1].positive);
    }

    // entailment chain: every minimal set has size 2
    Theory chain = make("(r->q)&(q->p)", {"p", "q", "r"});
    auto chain_sets = minimal_inconsistent_sets(full_agenda(3), chain, 6);
    for (const auto& s : chain_sets) CHECK(s.size() == 2);
}

TEST_CASE("minimal inconsistent sets match the bitmask oracle") {
    for (const char* gamma : {"T", "(p&q)->r", "(r->q)&(q->p)", "p", "p<->q", "p|q|r"}) {
        Theory th = make(gamma, {"p", "q", "r"});
        auto agenda = full_agenda(3);
        auto got = minimal_inconsistent_sets(agenda, th, 6);
        auto expected = oracle_minimal_inconsistent(agenda, th);
        REQUIRE_MESSAGE(got.size() == expected.size(), gamma);
        for (const auto& s : got) {
            CHECK(std::find(expected.begin(), expected.end(), as_set(s)) != expected.end());
            // definitional check: inconsistent, proper subsets consistent
            CHECK_FALSE(th.consistent_with(s));
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<Literal> sub;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) sub.push_back(s[i]);
                CHECK(th.consistent_with(sub));
            }
        }
    }
}

TEST_CASE("sets come out in ascending size order") {
    Theory th = make("p & (q | r)", {"p", "q", "r"});
    auto sets = minimal_inconsistent_sets(full_agenda(3), th, 6);
    for (std::size_t i = 1; i < sets.size(); ++i)
        CHECK(sets[i - 1].size() <= sets[i].size());
}

TEST_CASE("simplicity of the reference agendas") {
    CHECK_FALSE(is_simple(make("(p&q)->r", {"p", "q", "r"})));
    CHECK(is_simple(make("(r->q)&(q->p)", {"p", "q", "r"})));
    CHECK(is_simple(Theory::tautology(3)));
    // simple iff no minimal inconsistent set of size >= 3
    Theory th = make("(p&q)->r", {"p", "q", "r"});
    auto sets = minimal_inconsistent_sets(full_agenda(3), th, 6);
    bool big = std::any_of(sets.begin(), sets.end(), [](const auto& s) { return s.size() >= 3; });
    CHECK(is_simple(th) == !big);
}

TEST_CASE("even negatability") {
    // single issue, tautology: swapping both literals of {p, !p} changes nothing
    CHECK_FALSE(is_evenly_negatable(Theory::tautology(1)));
    // gamma = p: the only minimal set is {!p}, no even subset available
    CHECK_FALSE(is_evenly_negatable(make("p", {"p"})));
    for (const char* gamma : {"T", "(p&q)->r", "(r->q)&(q->p)", "p<->q", "p|q|r"}) {
        Theory th = make(gamma, {"p", "q", "r"});
        CHECK_MESSAGE(is_evenly_negatable(th) == oracle_evenly_negatable(full_agenda(3), th),
                      gamma);
    }
}

TEST_CASE("path connectedness") {
    // logically independent issues: no conditional entailment between distinct atoms
    CHECK_FALSE(is_path_connected(Theory::tautology(2)));
    CHECK_FALSE(is_path_connected(Theory::tautology(1)));
    for (const char* gamma : {"(r->q)&(q->p)", "(p&q)->r"}) {
        Theory th = make(gamma, {"p", "q", "r"});
        CHECK_MESSAGE(is_path_connected(th) == oracle_path_connected(th), gamma);
    }
    // two issues tied by equivalence: p entails q given nothing else, and
    // symmetrically, so every literal pair is chained
    Theory iff = make("p<->q", {"p", "q"});
    CHECK(is_path_connected(iff) == oracle_path_connected(iff));
}
