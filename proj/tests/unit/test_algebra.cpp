#include <doctest.h>

#include "dimlat/dimfun.hpp"
#include "../oracle/gen.hpp"

using namespace dimlat;

namespace {

AlgebraRef alg(std::vector<AtomType> types) {
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < types.size(); ++i)
        atoms.push_back(Atom{"a" + std::to_string(i + 1), types[i]});
    return AlgebraDesc::make(std::move(atoms));
}

} // namespace

TEST_CASE("descriptor validation") {
    CHECK_THROWS_AS(AlgebraDesc::make({}), DomainError);
    CHECK_THROWS_AS(AlgebraDesc::make({Atom{"a", AtomType::ii_1()}, Atom{"a", AtomType::ii_1()}}), DomainError);
    CHECK_THROWS_AS(AtomType::i_fin(0), DomainError);
    CHECK_THROWS_AS(AtomType::iii(max_aleph() + 1), DomainError);
    auto a = alg({AtomType::i_fin(3), AtomType::ii_inf(1)});
    CHECK(a->kappa() == ExtValue::aleph(1));
    CHECK(alg({AtomType::ii_1()})->kappa() == ExtValue::aleph(0));
    CHECK(a->to_string() == "[a1: I_fin(3), a2: II_inf(aleph 1)]");
    CHECK(a->index_of("a2") == 1u);
    CHECK(!a->index_of("zz"));
}

TEST_CASE("central projections") {
    auto a = alg({AtomType::ii_1(), AtomType::ii_1(), AtomType::ii_1()});
    auto p = CentralProjection::of(a, {"a1", "a2"});
    auto q = CentralProjection::of(a, {"a2", "a3"});
    CHECK(cp_meet(p, q) == CentralProjection::of(a, {"a2"}));
    CHECK(cp_complement(CentralProjection{a}) == CentralProjection::all(a));
    CHECK(cp_diff(p, CentralProjection::of(a, {"a1"})) == CentralProjection::of(a, {"a2"}));
    CHECK(cp_join(p, q) == CentralProjection::all(a));
    CHECK(p.to_string() == "{a1, a2}");
    CHECK_THROWS_AS(CentralProjection::of(a, {"nope"}), DomainError);
    auto other = alg({AtomType::ii_1()});
    CHECK_THROWS_AS(cp_meet(p, CentralProjection{other}), AlgebraMismatch);
}

TEST_CASE("Boolean algebra laws on five atoms") {
    auto a = alg({AtomType::ii_1(), AtomType::ii_1(), AtomType::ii_1(), AtomType::ii_1(), AtomType::ii_1()});
    std::vector<CentralProjection> all;
    for (unsigned m = 0; m < 32; ++m) {
        CentralProjection p{a};
        for (std::size_t i = 0; i < 5; ++i)
            if (m & (1u << i))
                p.insert(i);
        all.push_back(p);
    }
    for (const auto& x : all) {
        CHECK(cp_complement(cp_complement(x)) == x);
        for (const auto& y : all) {
            CHECK(cp_complement(cp_meet(x, y)) == cp_join(cp_complement(x), cp_complement(y)));
            CHECK(cp_diff(x, y) == cp_meet(x, cp_complement(y)));
            CHECK(cp_leq(x, y) == (cp_meet(x, y) == x));
        }
    }
    for (std::size_t i = 0; i < all.size(); i += 3)
        for (std::size_t j = 0; j < all.size(); j += 2)
            for (const auto& z : all)
                CHECK(cp_meet(all[i], cp_join(all[j], z)) == cp_join(cp_meet(all[i], all[j]), cp_meet(all[i], z)));
}

TEST_CASE("unit element") {
    CHECK(unit(alg({AtomType::ii_1()}))[0] == ExtValue::fin(1));
    CHECK(unit(alg({AtomType::iii(0)}))[0] == ExtValue::aleph(0));
    auto u = unit(alg({AtomType::i_fin(3), AtomType::ii_inf(1)}));
    CHECK(u[0] == ExtValue::fin(1));
    CHECK(u[1] == ExtValue::aleph(1));
    CHECK(is_projection_class(u));
}

TEST_CASE("amplification") {
    CHECK(*amplify(alg({AtomType::i_fin(2)}), ExtValue::fin(3)) == *alg({AtomType::i_fin(6)}));
    CHECK(*amplify(alg({AtomType::ii_1()}), ExtValue::aleph(0)) == *alg({AtomType::ii_inf(0)}));
    CHECK(*amplify(alg({AtomType::iii(0)}), ExtValue::aleph(1)) == *alg({AtomType::iii(1)}));
    CHECK(*amplify(alg({AtomType::i_inf(2)}), ExtValue::aleph(1)) == *alg({AtomType::i_inf(2)}));
    CHECK(*amplify(alg({AtomType::i_fin(5)}), ExtValue::aleph(1)) == *alg({AtomType::i_inf(1)}));
    CHECK_THROWS_AS(amplify(alg({AtomType::ii_1()}), ExtValue::fin(1, 2)), DomainError);
    CHECK_THROWS_AS(amplify(alg({AtomType::ii_1()}), ExtValue::fin(0)), DomainError);

    gen::Source src{11};
    for (int k = 0; k < 200; ++k) {
        auto a = src.algebra();
        CHECK(*amplify(a, ExtValue::fin(1)) == *a);
        long m = src.uniform(1, 5), j = src.uniform(1, 5);
        CHECK(*amplify(amplify(a, ExtValue::fin(m)), ExtValue::fin(j)) == *amplify(a, ExtValue::fin(m * j)));
        auto b = amplify(a, ExtValue::fin(m));
        CHECK(same_algebra(b->amplified_from()->base, a));
    }
}

TEST_CASE("embedding into amplifications") {
    auto m2 = alg({AtomType::i_fin(2)});
    auto m6 = amplify(m2, ExtValue::fin(3));
    DimElement rank1{m2, {ExtValue::fin(1, 2)}, ClassKind::Projection};
    CHECK(embed_class(rank1, m6)[0] == ExtValue::fin(1, 6));
    CHECK(embed_class(DimElement::zero(m2), m6) == DimElement::zero(m6));

    auto ii1 = alg({AtomType::ii_1()});
    auto iiinf = amplify(ii1, ExtValue::aleph(0));
    CHECK(embed_class(unit(ii1), iiinf)[0] == ExtValue::fin(1));

    auto binf = amplify(m2, ExtValue::aleph(0));
    CHECK(embed_class(rank1, binf)[0] == ExtValue::fin(1));
    CHECK(embed_class(unit(m2), binf)[0] == ExtValue::fin(2));

    CHECK_THROWS_AS(embed_class(rank1, ii1), DomainError);
    CHECK_THROWS_AS(embed_class(DimElement{m2, {ExtValue::fin(3, 2)}, ClassKind::Cone}, m6), DomainError);
}

TEST_CASE("embedding is injective and order preserving on IFin grids") {
    auto a = alg({AtomType::i_fin(2), AtomType::i_fin(3)});
    for (const auto& index : {ExtValue::fin(2), ExtValue::fin(5), ExtValue::aleph(0)}) {
        auto b = amplify(a, index);
        std::vector<DimElement> src, img;
        for (long i = 0; i <= 2; ++i)
            for (long j = 0; j <= 3; ++j) {
                src.push_back(DimElement{a, {ExtValue::fin(i, 2), ExtValue::fin(j, 3)}, ClassKind::Projection});
                img.push_back(embed_class(src.back(), b));
            }
        for (std::size_t x = 0; x < src.size(); ++x)
            for (std::size_t y = 0; y < src.size(); ++y) {
                CHECK((img[x] == img[y]) == (x == y));
                CHECK(d_leq(src[x], src[y]) == d_leq(img[x], img[y]));
            }
    }
}
