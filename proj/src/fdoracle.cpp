#include "dimlat/fdoracle.hpp"

#include <set>

namespace dimlat::fd {

namespace {

void require_same_shape(const RankTuple& a, const RankTuple& b) {
    if (a.size() != b.size())
        throw DomainError("rank tuples of different shapes");
}

std::string tuple_text(const RankTuple& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i)
        out += (i ? "," : "") + std::to_string(t[i]);
    return out + ")";
}

} // namespace

void validate_shape(const Shape& shape) {
    if (shape.empty())
        throw DomainError("empty shape");
    for (long n : shape) {
        if (n < 1)
            throw DomainError("matrix sizes must be at least 1");
    }
}

std::vector<RankTuple> enumerate_classes(const Shape& shape) {
    validate_shape(shape);
    std::vector<RankTuple> out;
    RankTuple t(shape.size(), 0);
    for (;;) {
        out.push_back(t);
        std::size_t i = shape.size();
        while (i > 0) {
            --i;
            if (t[i] < shape[i]) {
                ++t[i];
                break;
            }
            t[i] = 0;
            if (i == 0)
                return out;
        }
    }
}

bool rank_leq(const RankTuple& a, const RankTuple& b) {
    require_same_shape(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i])
            return false;
    }
    return true;
}

RankTuple rank_meet(const RankTuple& a, const RankTuple& b) {
    require_same_shape(a, b);
    RankTuple out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = std::min(a[i], b[i]);
    return out;
}

RankTuple rank_join(const RankTuple& a, const RankTuple& b) {
    require_same_shape(a, b);
    RankTuple out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = std::max(a[i], b[i]);
    return out;
}

std::optional<RankTuple> rank_add(const Shape& shape, const RankTuple& a, const RankTuple& b) {
    require_same_shape(a, b);
    require_same_shape(a, shape);
    RankTuple out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
        if (out[i] > shape[i])
            return std::nullopt;
    }
    return out;
}

AlgebraRef shape_algebra(const Shape& shape) {
    validate_shape(shape);
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < shape.size(); ++i)
        atoms.push_back(Atom{"a" + std::to_string(i + 1), AtomType::i_fin(shape[i])});
    return AlgebraDesc::make(std::move(atoms));
}

DimElement to_dim_element(const AlgebraRef& alg, const RankTuple& t) {
    if (t.size() != alg->size())
        throw DomainError("rank tuple does not match the algebra");
    std::vector<ExtValue> vals;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& type = alg->atom(i).type;
        if (type.kind() != FactorKind::IFin)
            throw DomainError("rank tuples live on I_fin atoms only");
        vals.push_back(ExtValue::fin(t[i], type.size()));
    }
    return DimElement{alg, std::move(vals), ClassKind::Projection};
}

OracleReport check_shape(const Shape& shape) {
    OracleReport rep;
    const auto alg = shape_algebra(shape);
    const auto classes = enumerate_classes(shape);
    rep.classes = classes.size();

    std::vector<DimElement> images;
    images.reserve(classes.size());
    for (const auto& t : classes)
        images.push_back(to_dim_element(alg, t));

    auto fail = [&](const std::string& what, const RankTuple& a, const RankTuple& b) {
        if (rep.mismatches.size() < 20)
            rep.mismatches.push_back(what + " disagrees on " + tuple_text(a) + ", " + tuple_text(b));
        else if (rep.mismatches.size() == 20)
            rep.mismatches.push_back("...");
    };

    std::set<std::string> seen;
    for (const auto& e : images)
        seen.insert(e.to_string());
    ++rep.checks;
    if (seen.size() != images.size())
        rep.mismatches.push_back("to_dim_element is not injective");

    const auto top = unit(alg);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = 0; j < classes.size(); ++j) {
            const auto& a = classes[i];
            const auto& b = classes[j];
            const auto& da = images[i];
            const auto& db = images[j];
            rep.checks += 4;
            if (rank_leq(a, b) != d_leq(da, db))
                fail("order", a, b);
            if (to_dim_element(alg, rank_meet(a, b)) != pair_meet(da, db))
                fail("meet", a, b);
            if (to_dim_element(alg, rank_join(a, b)) != pair_join(da, db))
                fail("join", a, b);
            auto sum = rank_add(shape, a, b);
            auto dsum = d_add(da, db);
            bool realizable = d_leq(dsum, top) && is_projection_class(dsum);
            if (sum ? (!realizable || to_dim_element(alg, *sum) != dsum) : realizable)
                fail("sum", a, b);
        }
    }
    return rep;
}

} // namespace dimlat::fd
