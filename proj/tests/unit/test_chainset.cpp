#include <doctest.h>

#include "dimlat/chainset.hpp"

using namespace dimlat;

namespace {

Rational q(long n, long d = 1) {
    Rational r{n, d};
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("lub and glb") {
    CHECK(chain_lub(ChainSet::naturals()) == ExtValue::aleph(0));
    CHECK(chain_lub(ChainSet::points({ExtValue::fin(1, 2), ExtValue::fin(3, 4), ExtValue::aleph(1)})) ==
          ExtValue::aleph(1));
    CHECK(chain_glb(ChainSet::interval(q(0), false, q(1), true)) == ExtValue::fin(0));
    CHECK(chain_glb(ChainSet::interval(q(1), false, q(2), true)) == ExtValue::fin(1));
    CHECK(chain_lub(ChainSet{}) == ExtValue::fin(0));
    CHECK_THROWS_AS(chain_glb(ChainSet{}), DomainError);
    CHECK(chain_glb(ChainSet::points({ExtValue::aleph(2), ExtValue::aleph(1)})) == ExtValue::aleph(1));
    CHECK(chain_lub(ChainSet::interval(q(0), true, std::nullopt, false)) == ExtValue::aleph(0));
    CHECK(chain_lub(ChainSet::interval(q(0), true, q(3, 2), false)) == ExtValue::fin(3, 2));
}

TEST_CASE("lub is the least chain upper bound on a grid") {
    std::vector<ExtValue> grid;
    for (long k = 0; k <= 40; ++k)
        grid.push_back(ExtValue::fin(k, 4));
    for (int i = 0; i <= 3; ++i)
        grid.push_back(ExtValue::aleph(i));
    auto nat = ChainSet::naturals();
    auto lub = chain_lub(nat);
    for (const auto& g : grid) {
        bool upper = g.is_aleph();
        CHECK((lub <= g) == upper);
    }
}

TEST_CASE("canonical form") {
    auto a = ChainSet::of({RationalInterval{q(0), true, q(1), false}, RationalInterval{q(1, 2), true, q(2), true}}, {},
                          {q(1, 4), q(3)}, {1, 0, 1});
    CHECK(a.intervals().size() == 1);
    CHECK(a.intervals()[0] == RationalInterval{q(0), true, q(2), true});
    CHECK(a.fin_points() == std::vector<Rational>{q(3)});
    CHECK(a.alephs() == std::vector<int>{0, 1});
    CHECK(a.to_string() == "{ [0, 2], 3, aleph 0, aleph 1 }");

    auto b = ChainSet::of({RationalInterval{q(0), true, q(1), false}}, {}, {q(1)}, {});
    CHECK(b == ChainSet::interval(q(0), true, q(1), true));

    auto c = ChainSet::of({}, {IntegerRun{Integer{2}, Integer{5}}}, {q(6), q(1)}, {});
    CHECK(c.runs().size() == 1);
    CHECK(c.runs()[0] == IntegerRun{Integer{1}, Integer{6}});
    CHECK(c.fin_points().empty());
    CHECK(c.to_string() == "{ 1..6 }");

    CHECK(ChainSet::naturals().to_string() == "{ naturals }");
    CHECK(ChainSet{}.to_string() == "{}");
    CHECK(ChainSet::interval(q(1), false, std::nullopt, false).to_string() == "{ (1, inf) }");
}

TEST_CASE("empty and degenerate intervals") {
    CHECK(ChainSet::interval(q(1), false, q(1), true).empty());
    CHECK(ChainSet::interval(q(2), true, q(1), true).empty());
    CHECK(ChainSet::interval(q(1), true, q(1), true) == ChainSet::point(ExtValue::fin(1)));
}

TEST_CASE("membership") {
    auto s = ChainSet::of({RationalInterval{q(0), false, q(1), false}}, {IntegerRun{Integer{3}, std::nullopt}}, {},
                          {2});
    CHECK(!s.contains(ExtValue::fin(0)));
    CHECK(s.contains(ExtValue::fin(1, 2)));
    CHECK(!s.contains(ExtValue::fin(1)));
    CHECK(!s.contains(ExtValue::fin(2)));
    CHECK(s.contains(ExtValue::fin(1000)));
    CHECK(!s.contains(ExtValue::fin(7, 2)));
    CHECK(s.contains(ExtValue::aleph(2)));
    CHECK(!s.contains(ExtValue::aleph(1)));
    CHECK(s.fin_unbounded());
    CHECK(!s.fin_sup());
}

TEST_CASE("closure and union") {
    auto open = ChainSet::interval(q(0), false, q(1), false);
    CHECK(open.closure() == ChainSet::interval(q(0), true, q(1), true));
    auto pts = ChainSet::points({ExtValue::fin(1), ExtValue::fin(2)});
    CHECK(pts.closure() == pts);
    auto u = open.unite(pts);
    CHECK(u.contains(ExtValue::fin(1)));
    CHECK(u.contains(ExtValue::fin(2)));
    CHECK(u.fin_sup() == q(2));
    CHECK(u == ChainSet::of({RationalInterval{q(0), false, q(1), true}}, {}, {q(2)}, {}));
}
