#include <doctest.h>

#include "dimlat/complattice.hpp"
#include "../oracle/chain_oracle.hpp"
#include "../oracle/gen.hpp"

using namespace dimlat;

namespace {

AlgebraRef alg(std::vector<AtomType> types) {
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < types.size(); ++i)
        atoms.push_back(Atom{"a" + std::to_string(i + 1), types[i]});
    return AlgebraDesc::make(std::move(atoms));
}

DimElement el(const AlgebraRef& a, std::vector<ExtValue> v, ClassKind k = ClassKind::Projection) {
    return DimElement{a, std::move(v), k};
}

ExtValue F(long n, long d = 1) { return ExtValue::fin(n, d); }
const ExtValue A0 = ExtValue::aleph(0);
const ExtValue A1 = ExtValue::aleph(1);

Rational q(long n, long d = 1) {
    Rational r{n, d};
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("explicit suprema and infima") {
    auto a = alg({AtomType::ii_inf(0), AtomType::ii_inf(0)});
    ExplicitFamily f{{el(a, {F(1, 2), F(3)}), el(a, {F(2), F(1)})}};
    CHECK(family_sup(f) == el(a, {F(2), F(3)}));
    CHECK(family_inf(f) == el(a, {F(1, 2), F(1)}));

    auto x = el(a, {F(5, 2), A0});
    CHECK(family_sup(ExplicitFamily{{x}}) == x);
    CHECK(family_inf(ExplicitFamily{{x}}) == x);

    auto one = alg({AtomType::ii_inf(0)});
    CHECK(family_inf(ExplicitFamily{{el(one, {F(1, 2)}), el(one, {F(2)})}}) == el(one, {F(1, 2)}));
    auto iii = alg({AtomType::iii(1)});
    CHECK(family_inf(ExplicitFamily{{el(iii, {A1}), el(iii, {A0})}}) == el(iii, {A0}));
    CHECK_THROWS_AS(family_sup(ExplicitFamily{}), DomainError);
    CHECK_THROWS_AS(family_sup(ExplicitFamily{{el(one, {F(1)}), el(iii, {A0})}}), AlgebraMismatch);
}

TEST_CASE("slices of the supremum") {
    auto a = alg({AtomType::ii_inf(0), AtomType::ii_inf(0)});
    ExplicitFamily f{{el(a, {F(1, 2), F(3)}), el(a, {F(2), F(1)})}};
    auto fs = family_sup_slices(f);
    REQUIRE(fs.slices.size() == 2);
    CHECK(fs.slices[0].index == SliceIndex::integer(2));
    CHECK(fs.slices[0].support == CentralProjection::of(a, {"a1"}));
    CHECK(fs.slices[1].index == SliceIndex::integer(3));
    CHECK(fs.slices[1].support == CentralProjection::of(a, {"a2"}));
    CHECK(to_formal_sum(from_formal_sum(fs)).to_string() == fs.to_string());
}

TEST_CASE("described families") {
    auto one = alg({AtomType::ii_inf(1)});
    DescribedFamily nat{one, {ChainSet::naturals()}};
    validate_family(nat, ClassKind::Projection);
    CHECK(family_sup(nat) == el(one, {A0}));
    CHECK(family_inf(nat) == DimElement::zero(one));

    auto s = alg({AtomType::ii_inf(0)});
    DescribedFamily half_open{s, {ChainSet::interval(q(1), false, q(2), true)}};
    CHECK(family_inf(half_open) == el(s, {F(1)}));
    CHECK(family_sup(half_open) == el(s, {F(2)}));

    auto ii1 = alg({AtomType::ii_1()});
    CHECK_THROWS_AS(validate_family(DescribedFamily{ii1, {ChainSet::naturals()}}, ClassKind::Projection), DomainError);
    CHECK_THROWS_AS(validate_family(DescribedFamily{ii1, {ChainSet{}}}, ClassKind::Projection), DomainError);
    CHECK_THROWS_AS(validate_family(DescribedFamily{ii1, {ChainSet::naturals()}}, ClassKind::Cone), DomainError);
}

TEST_CASE("bound checks") {
    auto s = alg({AtomType::ii_inf(0)});
    ExplicitFamily f{{el(s, {F(1)}), el(s, {F(2)})}};
    CHECK(is_upper_bound(unit(s), f));
    CHECK(is_upper_bound(family_sup(f), f));
    std::vector<DimElement> grid;
    for (long k = 0; k <= 8; ++k)
        grid.push_back(el(s, {F(k, 2)}));
    grid.push_back(el(s, {A0}));
    CHECK(is_upper_bound(el(s, {F(3)}), f));
    CHECK(!is_least_upper_bound(el(s, {F(3)}), f, grid));
    CHECK(is_least_upper_bound(el(s, {F(2)}), f, grid));
    CHECK(is_greatest_lower_bound(el(s, {F(1)}), f, grid));
    CHECK(!is_greatest_lower_bound(el(s, {F(1, 2)}), f, grid));
    CHECK(lattice_bottom(s) == DimElement::zero(s));
    CHECK(lattice_top(s) == unit(s));
}

TEST_CASE("random families agree with the pointwise oracle") {
    gen::Source src{99};
    for (int k = 0; k < 500; ++k) {
        auto a = src.algebra();
        std::vector<DimElement> members;
        const long size = src.uniform(1, 6);
        for (long m = 0; m < size; ++m)
            members.push_back(src.coin() ? src.cone(a) : src.projection(a));
        ExplicitFamily f{members};
        auto sup = family_sup(f);
        auto inf = family_inf(f);
        CHECK(sup.values() == oracle::pointwise(members, true));
        CHECK(inf.values() == oracle::pointwise(members, false));
        for (const auto& fs : {family_sup_slices(f), family_inf_slices(f)}) {
            CentralProjection seen{a};
            for (const auto& s : fs.slices) {
                CHECK(cp_meet(seen, s.support).empty());
                seen = cp_join(seen, s.support);
            }
            CHECK(seen == CentralProjection::all(a));
        }
        if (members.size() >= 2) {
            ExplicitFamily pair{{members[0], members[1]}};
            CHECK(family_sup(pair) == pair_join(members[0], members[1]));
            CHECK(family_inf(pair) == pair_meet(members[0], members[1]));
            ExplicitFamily sub{{members[0]}};
            CHECK(d_leq(family_sup(sub), sup));
            CHECK(d_leq(inf, family_inf(sub)));
        }
    }
}
