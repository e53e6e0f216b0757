#include <doctest.h>

#include "dimlat/extval.hpp"
#include "../oracle/chain_oracle.hpp"
#include "../oracle/gen.hpp"

using namespace dimlat;

namespace {

std::vector<ExtValue> sample_values() {
    std::vector<ExtValue> out;
    for (long num : {0L, 1L, 2L, 3L, 7L, 12L})
        for (long den : {1L, 2L, 3L, 5L})
            out.push_back(ExtValue::fin(num, den));
    for (int i = 0; i <= 3; ++i)
        out.push_back(ExtValue::aleph(i));
    return out;
}

} // namespace

TEST_CASE("comparison") {
    CHECK(compare(ExtValue::fin(3, 2), ExtValue::fin(3, 2)) == std::strong_ordering::equal);
    CHECK(ExtValue::fin(1000000000) < ExtValue::aleph(0));
    CHECK(ExtValue::aleph(1) > ExtValue::aleph(0));
    CHECK(ExtValue::fin(6, 4) == ExtValue::fin(3, 2));
    CHECK(ExtValue{} == ExtValue::fin(0));
}

TEST_CASE("addition") {
    CHECK(ExtValue::fin(1, 2) + ExtValue::fin(1, 3) == ExtValue::fin(5, 6));
    CHECK(ExtValue::fin(7) + ExtValue::aleph(0) == ExtValue::aleph(0));
    CHECK(ExtValue::aleph(0) + ExtValue::aleph(2) == ExtValue::aleph(2));
}

TEST_CASE("scaling") {
    CHECK(scale(Rational{3}, ExtValue::fin(2, 3)) == ExtValue::fin(2));
    CHECK(scale(Rational{1, 7}, ExtValue::aleph(1)) == ExtValue::aleph(1));
    CHECK(scale(Rational{1}, ExtValue::fin(0)) == ExtValue::fin(0));
    CHECK(zero_scale(ExtValue::aleph(3)) == ExtValue::fin(0));
    CHECK_THROWS_AS(scale(Rational{-1}, ExtValue::fin(1)), DomainError);
    CHECK_THROWS_AS(scale(Rational{0}, ExtValue::fin(1)), DomainError);
}

TEST_CASE("domain checks") {
    CHECK_THROWS_AS(ExtValue::fin(-1), DomainError);
    CHECK_THROWS_AS(ExtValue::aleph(-1), DomainError);
    CHECK_THROWS_AS(ExtValue::aleph(max_aleph() + 1), DomainError);
    CHECK_THROWS_AS(ExtValue::fin(1, 0), DomainError);
    {
        MaxAlephScope scope{2};
        CHECK_THROWS_AS(ExtValue::aleph(3), DomainError);
        CHECK(ExtValue::aleph(2).aleph_level() == 2);
    }
    CHECK(max_aleph() == 8);
    CHECK_THROWS_AS(set_max_aleph(65), DomainError);
}

TEST_CASE("rendering") {
    CHECK(ExtValue::fin(3, 2).to_string() == "3/2");
    CHECK(ExtValue::fin(4).to_string() == "4");
    CHECK(ExtValue::aleph(0).to_string() == "aleph 0");
}

TEST_CASE("monoid and order laws on samples") {
    const auto vs = sample_values();
    for (const auto& a : vs) {
        CHECK(a + ExtValue{} == a);
        for (const auto& b : vs) {
            CHECK(a + b == b + a);
            CHECK((a <= b || b <= a));
            CHECK(oracle::less(oracle::from(a), oracle::from(b)) == (a < b));
            CHECK(a + b == oracle::to(oracle::add(oracle::from(a), oracle::from(b))));
            for (const auto& c : vs) {
                CHECK((a + b) + c == a + (b + c));
                if (a <= b)
                    CHECK(a + c <= b + c);
                if (a <= b && b <= c)
                    CHECK(a <= c);
            }
        }
    }
}

TEST_CASE("scaling distributes over finite sums") {
    gen::Source src{7};
    for (int k = 0; k < 500; ++k) {
        auto a = ExtValue::fin(src.uniform(0, 30), src.uniform(1, 9));
        auto b = ExtValue::fin(src.uniform(0, 30), src.uniform(1, 9));
        Rational lambda{src.uniform(1, 20), src.uniform(1, 9)};
        lambda.canonicalize();
        CHECK(scale(lambda, a + b) == scale(lambda, a) + scale(lambda, b));
        auto aleph = ExtValue::aleph(static_cast<int>(src.uniform(0, 3)));
        CHECK(scale(lambda, aleph) == aleph);
        CHECK(a + aleph == aleph);
    }
}
