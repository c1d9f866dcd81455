#include <doctest.h>

#include <cstdint>

#include "liqdem/bigint.hpp"
#include "liqdem/rational.hpp"
#include "liqdem/rng.hpp"

using namespace liqdem;

TEST_CASE("bigint arithmetic agrees with native on small operands") {
    SplitMix64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t a = rng.bounded(1u << 31), b = rng.bounded(1u << 31);
        CHECK(BigUint(a) + BigUint(b) == BigUint(a + b));
        CHECK(BigUint(a) * BigUint(b) == BigUint(a * b));
        CHECK((BigUint(a) < BigUint(b)) == (a < b));
    }
}

TEST_CASE("bigint decimal printing") {
    CHECK(BigUint(0).to_string() == "0");
    CHECK(BigUint(1234567890123456789ull).to_string() == "1234567890123456789");
    // 2^130
    CHECK(BigUint(2).pow(130).to_string() == "1361129467683753853853498429727072845824");
}

TEST_CASE("factorials and binomials") {
    CHECK(big_factorial(0) == BigUint(1));
    CHECK(big_factorial(10) == BigUint(3628800));
    CHECK(big_factorial(25).to_string() == "15511210043330985984000000");
    CHECK(big_binomial(10, 3) == BigUint(120));
    CHECK(big_binomial(40, 20).to_string() == "137846528820");
    CHECK(big_binomial(5, 9) == BigUint(0));
}

TEST_CASE("divmod by machine words") {
    BigUint v = big_factorial(20);
    BigUint w = v;
    CHECK(w.divmod_small(7) == 0); // 7 divides 20!
    CHECK(w * BigUint(7) == v);
    CHECK_THROWS_AS(BigUint(10).div_exact_small(3), Error);
}

TEST_CASE("pow and bit lengths") {
    CHECK(BigUint(3).pow(0) == BigUint(1));
    CHECK(BigUint(3).pow(5) == BigUint(243));
    CHECK(BigUint(1).bit_length() == 1);
    CHECK(BigUint(255).bit_length() == 8);
    CHECK(BigUint(256).bit_length() == 9);
    CHECK(BigUint(2).pow(100).bit_length() == 101);
}

TEST_CASE("big ratio stays accurate across magnitudes") {
    CHECK(big_ratio(BigUint(1), BigUint(8)) == doctest::Approx(0.125));
    // (10^40) / (2 * 10^40)
    BigUint num = BigUint(10).pow(40);
    BigUint den = num * BigUint(2);
    CHECK(big_ratio(num, den) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(big_ratio(BigUint(0), BigUint(5)) == 0.0);
}

TEST_CASE("rational ordering and ceilings are exact") {
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(5, 8).ceil_mul(4) == 3); // ceil(2.5)
    CHECK(Rational(1, 2).ceil_mul(4) == 2);
    CHECK(Rational(2, 3).ceil_mul(3) == 2);
    CHECK(Rational(1).ceil_mul(0) == 0);
    CHECK(Rational(7, -2) == Rational(-7, 2));
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("3/5") == Rational(3, 5));
    CHECK(Rational::parse("2") == Rational(2));
    CHECK_THROWS_AS(Rational::parse("x/y"), InputError);
}

TEST_CASE("splitmix substreams are deterministic and distinct") {
    SplitMix64 a = SplitMix64::substream(42, 0);
    SplitMix64 b = SplitMix64::substream(42, 0);
    SplitMix64 c = SplitMix64::substream(42, 1);
    CHECK(a.next() == b.next());
    CHECK(a.next() == b.next());
    SplitMix64 a2 = SplitMix64::substream(42, 0);
    CHECK(a2.next() != c.next());
}

TEST_CASE("bounded draws respect the bound") {
    SplitMix64 rng(99);
    for (int i = 0; i < 1000; ++i) CHECK(rng.bounded(7) < 7);
}
