#include <doctest.h>

#include <vector>

#include "liqdem/formula.hpp"
#include "liqdem/opinion.hpp"
#include "liqdem/semantics.hpp"

using namespace liqdem;

namespace {

Theory make(const char* gamma, std::vector<std::string> labels) {
    IssueSet s(std::move(labels));
    return Theory(parse_formula(gamma, s), s);
}

} // namespace

TEST_CASE("opinion string round trip and accessors") {
    IncompleteOpinion o = IncompleteOpinion::from_string("10*");
    CHECK(o.get(0) == TriVal::Accept);
    CHECK(o.get(1) == TriVal::Reject);
    CHECK(o.get(2) == TriVal::Abstain);
    CHECK(o.to_string() == "10*");
    CHECK_FALSE(o.is_total());
    o.set(2, TriVal::Reject);
    CHECK(o.is_total());
    CHECK_THROWS_AS(IncompleteOpinion::from_string("1x"), InputError);
}

TEST_CASE("profile counts") {
    OpinionProfile prof({IncompleteOpinion::from_string("1*"),
                         IncompleteOpinion::from_string("0*"),
                         IncompleteOpinion::from_string("1*")});
    CHECK(prof.count_accept(0) == 2);
    CHECK(prof.count_reject(0) == 1);
    CHECK(prof.count_active(0) == 3);
    CHECK(prof.count_active(1) == 0);
}

TEST_CASE("consistency and closure of opinions") {
    Theory chain = make("(r->q)&(q->p)", {"p", "q", "r"});
    // accepting r and q entails p, so abstaining there is not closed
    IncompleteOpinion o(3);
    o.set(2, TriVal::Accept); // r
    o.set(1, TriVal::Accept); // q
    OpinionStatus st = check_opinion(o, chain);
    CHECK(st.consistent);
    CHECK_FALSE(st.closed);

    Theory top = Theory::tautology(3);
    for (const char* s : {"000", "111", "10*", "***"}) {
        OpinionStatus t = check_opinion(IncompleteOpinion::from_string(s), top);
        CHECK(t.consistent);
        CHECK(t.closed);
    }

    Theory imp = make("(p&q)->r", {"p", "q", "r"});
    CHECK_FALSE(check_opinion(IncompleteOpinion::from_string("110"), imp).consistent);
}

TEST_CASE("rational opinion pools") {
    // tautology imposes nothing: all 3^m opinions are rational
    CHECK(rational_opinions(Theory::tautology(1)).size() == 3);
    CHECK(rational_opinions(Theory::tautology(2)).size() == 9);

    // reference check against a direct filter
    Theory chain = make("(r->q)&(q->p)", {"p", "q", "r"});
    auto pool = rational_opinions(chain);
    int expected = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                IncompleteOpinion o(3);
                o.set(0, static_cast<TriVal>(a));
                o.set(1, static_cast<TriVal>(b));
                o.set(2, static_cast<TriVal>(c));
                if (check_opinion(o, chain).rational()) ++expected;
            }
    CHECK(static_cast<int>(pool.size()) == expected);
    for (const auto& o : pool) CHECK(check_opinion(o, chain).rational());
}

TEST_CASE("profile enumeration respects the budget") {
    auto pool = rational_opinions(Theory::tautology(2));
    int count = 0;
    for_each_profile(pool, 2, kDefaultBudget, [&](const OpinionProfile&) {
        ++count;
        return true;
    });
    CHECK(count == 81);
    CHECK_THROWS_AS(
        for_each_profile(pool, 12, 1000, [](const OpinionProfile&) { return true; }),
        BudgetError);
}
