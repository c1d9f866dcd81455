#include <doctest.h>

#include <vector>

#include "liqdem/opinion.hpp"
#include "liqdem/properties.hpp"
#include "liqdem/quota.hpp"

using namespace liqdem;

namespace {

OpinionProfile column(const std::vector<const char*>& rows) {
    std::vector<IncompleteOpinion> ops;
    for (const char* r : rows) ops.push_back(IncompleteOpinion::from_string(r));
    return OpinionProfile(std::move(ops));
}

} // namespace

TEST_CASE("majority on a single issue") {
    CHECK(majority(column({"1", "1", "0"})).get(0) == TriVal::Accept);
    CHECK(majority(column({"1", "0", "*"})).get(0) == TriVal::Abstain);
    CHECK(majority(column({"*", "*", "*"})).get(0) == TriVal::Abstain);
    CHECK(majority(column({"0", "0", "1"})).get(0) == TriVal::Reject);
}

TEST_CASE("quota constraint validation") {
    CHECK_THROWS_AS(QuotaSpec::uniform_symmetric(1, Rational(1, 2)), QuotaError);
    CHECK_THROWS_AS(QuotaSpec::uniform(1, Rational(1), Rational(0)), QuotaError);
    CHECK_THROWS_AS(QuotaSpec::uniform(1, Rational(3, 2), Rational(1)), QuotaError);
    CHECK_NOTHROW(QuotaSpec::uniform(1, Rational(1), Rational(1, 3)));
    QuotaSpec s = QuotaSpec::uniform(2, Rational(1), Rational(1, 3));
    CHECK(s.is_uniform());
    CHECK_FALSE(s.is_symmetric());
    CHECK(QuotaSpec::unanimity(2).is_symmetric());
}

TEST_CASE("unanimity rule") {
    QuotaSpec u = QuotaSpec::unanimity(1);
    CHECK(apply_quota(u, column({"1", "1", "1"})).get(0) == TriVal::Accept);
    CHECK(apply_quota(u, column({"1", "1", "0"})).get(0) == TriVal::Abstain);
    CHECK(apply_quota(u, column({"1", "*", "*"})).get(0) == TriVal::Accept);
    CHECK(apply_quota(u, column({"*", "*"})).get(0) == TriVal::Abstain);
    CHECK(apply_quota(u, column({"0", "0"})).get(0) == TriVal::Reject);
}

TEST_CASE("majority quota band endpoints") {
    MajorityQuotaBand b3 = majority_quota_band(3);
    CHECK(b3.lo_exclusive == Rational(1, 2));
    CHECK(b3.hi_inclusive == Rational(2, 3));
    CHECK(majority_quota_band(1).hi_inclusive == Rational(1));
    CHECK(majority_quota_band(10).hi_inclusive == Rational(11, 20));
    CHECK(b3.contains(Rational(3, 5)));
    CHECK_FALSE(b3.contains(Rational(1, 2)));
    CHECK_FALSE(b3.contains(Rational(3, 4)));
}

TEST_CASE("band quotas reproduce majority exhaustively") {
    for (int n : {1, 2, 3, 4}) {
        BaStructure s = BaStructure::tautology(n, 1);
        MajorityQuotaBand band = majority_quota_band(n);
        for (Rational q : {Rational(13, 24), Rational(3, 5), band.hi_inclusive}) {
            if (!band.contains(q)) continue;
            QuotaSpec spec = QuotaSpec::uniform_symmetric(1, q);
            for_each_profile(s.pool, n, kDefaultBudget, [&](const OpinionProfile& prof) {
                CHECK(apply_quota(spec, prof) == majority(prof));
                return true;
            });
        }
    }
    // two issues as well
    BaStructure s2 = BaStructure::tautology(3, 2);
    QuotaSpec spec = QuotaSpec::uniform_symmetric(2, Rational(3, 5));
    for_each_profile(s2.pool, 3, kDefaultBudget, [&](const OpinionProfile& prof) {
        CHECK(apply_quota(spec, prof) == majority(prof));
        return true;
    });
}

TEST_CASE("no quota rule ever resolves both ways") {
    // exhaustive over a grid of specs and all profiles, n <= 3
    std::vector<QuotaSpec> specs = {
        QuotaSpec::uniform_symmetric(1, Rational(2, 3)),
        QuotaSpec::uniform_symmetric(1, Rational(1)),
        QuotaSpec::uniform(1, Rational(1), Rational(1, 3)),
        QuotaSpec::uniform(1, Rational(4, 7), Rational(5, 7)),
    };
    BaStructure s = BaStructure::tautology(3, 1);
    for (const QuotaSpec& spec : specs)
        for_each_profile(s.pool, 3, kDefaultBudget, [&](const OpinionProfile& prof) {
            CHECK_NOTHROW(apply_quota(spec, prof)); // throws if both clauses fire
            return true;
        });
}

TEST_CASE("issue count mismatch is rejected") {
    CHECK_THROWS_AS(apply_quota(QuotaSpec::unanimity(2), column({"1", "1"})), InputError);
}
