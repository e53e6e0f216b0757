#include <doctest.h>

#include "dimlat/complattice.hpp"
#include "dimlat/representation.hpp"

using namespace dimlat;

namespace {

AlgebraRef single(const AtomType& t) { return AlgebraDesc::make({Atom{"a", t}}); }

ExtValue F(long n, long d = 1) { return ExtValue::fin(n, d); }

std::vector<DimElement> grid_of(const AlgebraRef& b, long den, long max_num, int levels) {
    std::vector<DimElement> out;
    for (long k = 0; k <= max_num; ++k)
        out.push_back(DimElement::unchecked(b, {F(k, den)}));
    for (int i = 0; i <= levels; ++i)
        out.push_back(DimElement::unchecked(b, {ExtValue::aleph(i)}));
    return out;
}

} // namespace

TEST_CASE("common representations over II_1") {
    auto a = single(AtomType::ii_1());
    std::vector<RepClass> fam{RepClass{a, {F(1, 2)}}, RepClass{a, {F(2)}}, RepClass{a, {ExtValue::aleph(0)}}};
    CHECK(rep_index(fam) == ExtValue::aleph(0));
    auto sub = rep_common_sub(fam);
    auto sup = rep_common_super(fam);
    CHECK(*sub.algebra == *single(AtomType::ii_inf(0)));
    CHECK(sub.value[0] == F(1, 2));
    CHECK(sup.value[0] == ExtValue::aleph(0));
    CHECK(is_projection_class(sub.value));
    CHECK(is_projection_class(sup.value));

    std::vector<DimElement> members;
    for (const auto& r : fam)
        members.push_back(rep_embed(r, sub.algebra));
    auto grid = grid_of(sub.algebra, 4, 16, 0);
    CHECK(is_greatest_lower_bound(sub.value, ExplicitFamily{members}, grid));
    CHECK(is_least_upper_bound(sup.value, ExplicitFamily{members}, grid));
    CHECK(rep_common_sub(members) == sub.value);
    CHECK(rep_common_super(members) == sup.value);
}

TEST_CASE("single representation") {
    auto a = single(AtomType::ii_1());
    std::vector<RepClass> fam{RepClass{a, {F(3, 2)}}};
    CHECK(rep_index(fam) == F(2));
    CHECK(rep_common_sub(fam).value == rep_common_super(fam).value);
    CHECK(rep_common_sub(fam).value[0] == F(3, 4));
}

TEST_CASE("matrix algebra representations") {
    auto m2 = single(AtomType::i_fin(2));
    auto r1 = RepClass::of_projection(DimElement{m2, {F(1, 2)}, ClassKind::Projection});
    auto r2 = RepClass::of_projection(DimElement{m2, {F(1)}, ClassKind::Projection});
    std::vector<RepClass> fam{r1, r2};
    auto sub = rep_common_sub(fam, F(2));
    auto sup = rep_common_super(fam, F(2));
    auto b = amplify(m2, F(2));
    CHECK(*sub.algebra == *single(AtomType::i_fin(4)));
    CHECK(sub.value == embed_class(DimElement{m2, {F(1, 2)}, ClassKind::Projection}, sub.algebra));
    CHECK(sup.value == embed_class(DimElement{m2, {F(1)}, ClassKind::Projection}, sup.algebra));
    CHECK(sub.value[0] == F(1, 4));
    CHECK(sup.value[0] == F(1, 2));
    CHECK(rep_index(fam) == F(1));
    CHECK(rep_common_sub(fam).value[0] == F(1, 2));
}

TEST_CASE("index selection") {
    auto m3 = single(AtomType::i_fin(3));
    CHECK(rep_index({RepClass{m3, {F(7, 3)}}}) == F(3));
    CHECK(rep_fits(RepClass{m3, {F(7, 3)}}, F(3)));
    CHECK(!rep_fits(RepClass{m3, {F(7, 3)}}, F(2)));
    CHECK_THROWS_AS(RepClass(m3, {F(1, 2)}), DomainError);
    auto iii = single(AtomType::iii(0));
    CHECK(rep_index({RepClass{iii, {ExtValue::aleph(2)}}}) == ExtValue::aleph(2));
    CHECK(rep_index({RepClass{iii, {ExtValue::aleph(0)}}}) == F(1));
    CHECK_THROWS_AS(rep_index({}), DomainError);
    auto mix = AlgebraDesc::make({Atom{"x", AtomType::i_fin(2)}, Atom{"y", AtomType::ii_inf(0)}});
    auto idx = rep_index({RepClass{mix, {F(5, 2), F(9)}}, RepClass{mix, {F(1), ExtValue::aleph(0)}}});
    CHECK(idx == F(3));
}
