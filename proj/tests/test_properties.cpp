#include <doctest.h>

#include <vector>

#include "liqdem/formula.hpp"
#include "liqdem/properties.hpp"

using namespace liqdem;

namespace {

Aggregator constant_abstain() {
    return {"const-*", [](const OpinionProfile& p) { return IncompleteOpinion(p.m()); }};
}

Aggregator dictatorship(AgentId d) {
    return {"dict", [d](const OpinionProfile& p) { return p[d]; }};
}

Aggregator inverted_majority() {
    return {"anti-maj", [](const OpinionProfile& p) {
                IncompleteOpinion out = majority(p);
                IncompleteOpinion flipped(p.m());
                for (IssueId q = 0; q < p.m(); ++q) {
                    TriVal v = out.get(q);
                    flipped.set(q, v == TriVal::Accept   ? TriVal::Reject
                                   : v == TriVal::Reject ? TriVal::Accept
                                                         : TriVal::Abstain);
                }
                return flipped;
            }};
}

// Majority of the successor issue's column; depends on foreign columns.
Aggregator crossed_majority() {
    return {"crossed-maj", [](const OpinionProfile& p) {
                IncompleteOpinion base = majority(p);
                IncompleteOpinion out(p.m());
                for (IssueId q = 0; q < p.m(); ++q)
                    out.set(q, base.get((q + 1) % p.m()));
                return out;
            }};
}

BaStructure chain_structure(int n) {
    IssueSet s({"p", "q", "r"});
    return BaStructure(n, Theory(parse_formula("(r->q)&(q->p)", s), s));
}

BaStructure dilemma_structure(int n) {
    IssueSet s({"p", "q", "r"});
    return BaStructure(n, Theory(parse_formula("(p&q)->r", s), s));
}

} // namespace

TEST_CASE("majority passes the whole battery on small structures") {
    BaStructure s = BaStructure::tautology(3, 2);
    Aggregator maj = make_majority();
    for (Property prop : {Property::Unanimous, Property::Anonymous, Property::Monotonic,
                          Property::Independent, Property::Neutral, Property::Responsive,
                          Property::Unbiased}) {
        PropertyCheck r = check_property(maj, prop, s);
        CHECK_MESSAGE(r.holds, property_name(prop), ": ", r.detail);
    }
}

TEST_CASE("every designed violation is caught with a witness") {
    BaStructure s = BaStructure::tautology(3, 2);

    PropertyCheck un = check_unanimous(constant_abstain(), s);
    CHECK_FALSE(un.holds);
    REQUIRE(!un.witnesses.empty());

    PropertyCheck an = check_anonymous(dictatorship(0), s);
    CHECK_FALSE(an.holds);
    REQUIRE(an.witnesses.size() == 2);
    // the two witness profiles indeed aggregate differently
    Aggregator dict = dictatorship(0);
    CHECK_FALSE(dict.apply(an.witnesses[0]) == dict.apply(an.witnesses[1]));

    PropertyCheck mo = check_monotonic(inverted_majority(), s);
    CHECK_FALSE(mo.holds);

    PropertyCheck in = check_independent(crossed_majority(), s);
    CHECK_FALSE(in.holds);

    // non-uniform quota rule: different thresholds across issues
    Aggregator skew = make_quota_rule(
        QuotaSpec({Rational(3, 5), Rational(1)}, {Rational(3, 5), Rational(1)}), "skew");
    PropertyCheck ne = check_neutral(skew, s);
    CHECK_FALSE(ne.holds);

    PropertyCheck re = check_responsive(constant_abstain(), s);
    CHECK_FALSE(re.holds);

    // asymmetric quota rule: acceptance needs unanimity, rejection one vote
    Aggregator lopsided = make_quota_rule(
        QuotaSpec::uniform(2, Rational(1), Rational(1, 3)), "lopsided");
    PropertyCheck ub = check_unbiased(lopsided, s);
    CHECK_FALSE(ub.holds);
}

TEST_CASE("neutrality and unbiasedness characterize uniform and symmetric quota rules") {
    // three voters: quotas 3/5 and 1 genuinely differ (they agree when n = 2)
    BaStructure s = BaStructure::tautology(3, 2);
    // uniform + symmetric: passes both
    Aggregator plain = make_quota_rule(QuotaSpec::uniform_symmetric(2, Rational(2, 3)));
    CHECK(check_neutral(plain, s).holds);
    CHECK(check_unbiased(plain, s).holds);
    // non-uniform fails neutral but, being per-issue symmetric, stays unbiased
    Aggregator nonuniform = make_quota_rule(
        QuotaSpec({Rational(3, 5), Rational(1)}, {Rational(3, 5), Rational(1)}));
    CHECK_FALSE(check_neutral(nonuniform, s).holds);
    CHECK(check_unbiased(nonuniform, s).holds);
    // non-symmetric fails unbiased but, being uniform, stays neutral
    Aggregator nonsymmetric = make_quota_rule(QuotaSpec::uniform(2, Rational(1), Rational(1, 2)));
    CHECK(check_neutral(nonsymmetric, s).holds);
    CHECK_FALSE(check_unbiased(nonsymmetric, s).holds);
}

TEST_CASE("quota rules pass the four characterizing checkers") {
    BaStructure s = BaStructure::tautology(3, 1);
    for (Rational q : {Rational(3, 5), Rational(2, 3), Rational(1)}) {
        Aggregator F = make_quota_rule(QuotaSpec::uniform_symmetric(1, q));
        CHECK(check_anonymous(F, s).holds);
        CHECK(check_independent(F, s).holds);
        CHECK(check_monotonic(F, s).holds);
        CHECK(check_responsive(F, s).holds);
    }
}

TEST_CASE("oligarchy detection") {
    BaStructure s = BaStructure::tautology(2, 1);
    PropertyCheck dict = check_oligarchic(dictatorship(1), s);
    CHECK(dict.holds);
    CHECK(dict.detail == "oligarchs {1}");
    CHECK_FALSE(check_oligarchic(make_majority(), s).holds);
    // single agent: majority is dictatorship of that agent
    BaStructure solo = BaStructure::tautology(1, 1);
    CHECK(check_oligarchic(make_majority(), solo).holds);
}

TEST_CASE("undecisiveness counts") {
    BaStructure s2 = BaStructure::tautology(2, 1);
    CHECK(undecisiveness(make_majority(), s2, 0) == 3);
    // with two voters every quota in (1/2, 1] acts like majority, so the
    // unanimity rule shares the same count
    CHECK(undecisiveness(make_quota_rule(QuotaSpec::unanimity(1)), s2, 0) == 3);

    BaStructure s1 = BaStructure::tautology(1, 1);
    CHECK(undecisiveness(make_majority(), s1, 0) == 1);

    BaStructure s3 = BaStructure::tautology(3, 1);
    CHECK(undecisiveness(make_quota_rule(QuotaSpec::unanimity(1)), s3, 0) >
          undecisiveness(make_majority(), s3, 0));
}

TEST_CASE("undecisiveness minimization across a quota grid") {
    // with three voters the quotas equivalent to majority are exactly (1/2, 2/3]
    BaStructure s3 = BaStructure::tautology(3, 1);
    UndecisivenessSweep r3 = sweep_undecisiveness(
        s3, {Rational(3, 5), Rational(2, 3), Rational(3, 4), Rational(1)});
    CHECK(r3.passed());
    std::vector<Rational> argmin;
    for (const auto& e : r3.entries)
        if (e.minimal) argmin.push_back(e.quota);
    CHECK(argmin == std::vector<Rational>{Rational(3, 5), Rational(2, 3)});
    for (const auto& e : r3.entries) CHECK(e.equals_majority == e.in_band);

    // n = 2 exposes the band's slack: every quota up to 1 acts like majority,
    // so quotas outside (1/2, 3/4] still minimize and the exact-argmin
    // equivalence fails
    BaStructure s2 = BaStructure::tautology(2, 1);
    UndecisivenessSweep r2 = sweep_undecisiveness(s2, {Rational(2, 3), Rational(3, 4), Rational(1)});
    CHECK_FALSE(r2.band_is_exact_argmin);
    for (const auto& e : r2.entries) {
        CHECK(e.minimal);
        CHECK(e.equals_majority);
    }

    // n = 4: the same slack sits between 5/8 and 2/3
    BaStructure s4 = BaStructure::tautology(4, 1);
    UndecisivenessSweep gap = sweep_undecisiveness(s4, {Rational(5, 8), Rational(2, 3)});
    CHECK(gap.entries[0].in_band);
    CHECK_FALSE(gap.entries[1].in_band);
    CHECK(gap.entries[1].equals_majority); // outside the band yet identical
    // a grid that avoids the slack interval behaves exactly
    UndecisivenessSweep clean = sweep_undecisiveness(
        s4, {Rational(13, 24), Rational(3, 5), Rational(5, 8), Rational(17, 24), Rational(3, 4),
             Rational(1)});
    CHECK(clean.passed());
}

TEST_CASE("majority rationality per agenda class") {
    MajorityRationalityReport chain = check_majority_rationality(chain_structure(3));
    CHECK(chain.agenda_simple);
    CHECK(chain.majority_rational);
    CHECK(chain.passed());

    MajorityRationalityReport top = check_majority_rationality(BaStructure::tautology(3, 2));
    CHECK(top.agenda_simple);
    CHECK(top.majority_rational);

    MajorityRationalityReport dilemma = check_majority_rationality(dilemma_structure(3));
    CHECK_FALSE(dilemma.agenda_simple);
    CHECK_FALSE(dilemma.majority_rational);
    REQUIRE(dilemma.witness.has_value());
    // the witness profile really is individually rational yet aggregates
    // to an outcome inconsistent with the constraint
    const OpinionProfile& w = *dilemma.witness;
    BaStructure s = dilemma_structure(3);
    for (int i = 0; i < w.n(); ++i) CHECK(check_opinion(w[i], s.theory).rational());
    CHECK_FALSE(check_opinion(majority(w), s.theory).rational());
    CHECK(dilemma.passed()); // non-simple agendas are allowed a witness
}

TEST_CASE("budget exhaustion is reported, not silently truncated") {
    BaStructure s = BaStructure::tautology(4, 2); // 81^4 profiles
    CHECK_THROWS_AS(undecisiveness(make_majority(), s, 0, 1000), BudgetError);
    CHECK_THROWS_AS(check_anonymous(make_majority(), s, 1000), BudgetError);
}
