#include "dimlat/representation.hpp"

#include <algorithm>

#include "dimlat/complattice.hpp"

namespace dimlat {

std::string rep_value_error(const AtomType& t, const ExtValue& v) {
    if (v.is_aleph())
        return {};
    const Rational& r = v.fin_value();
    switch (t.kind()) {
    case FactorKind::IFin:
        if (Rational{r * t.size()}.get_den() != 1)
            return "value " + v.to_string() + " is not a multiple of 1/" + std::to_string(t.size());
        return {};
    case FactorKind::II1:
    case FactorKind::IIInf:
        return {};
    case FactorKind::IInf:
        if (r.get_den() != 1)
            return "non-integer value " + v.to_string() + " on " + t.to_string() + " atom";
        return {};
    case FactorKind::III:
        if (sgn(r) != 0)
            return "finite nonzero value " + v.to_string() + " on " + t.to_string() + " atom";
        return {};
    }
    return {};
}

namespace {

const AlgebraRef& common_base(const std::vector<RepClass>& family) {
    if (family.empty())
        throw DomainError("empty family of representations");
    const auto& base = family.front().base();
    for (const auto& r : family)
        require_same_algebra(r.base(), base);
    return base;
}

ExtValue least_index(const RepClass& r) {
    Integer m{1};
    int level = -1;
    const auto& alg = *r.base();
    for (std::size_t i = 0; i < alg.size(); ++i) {
        const auto& t = alg.atom(i).type;
        const auto& v = r.values()[i];
        if (t.is_finite_type()) {
            if (v.is_aleph()) {
                level = std::max(level, v.aleph_level());
            } else {
                Integer c;
                mpz_cdiv_q(c.get_mpz_t(), v.fin_value().get_num_mpz_t(), v.fin_value().get_den_mpz_t());
                if (c > m)
                    m = c;
            }
        } else if (v.is_aleph() && v.aleph_level() > t.level()) {
            level = std::max(level, v.aleph_level());
        }
    }
    if (level >= 0)
        return ExtValue::aleph(level);
    return ExtValue::fin(Rational{m});
}

std::vector<DimElement> embed_all(const std::vector<RepClass>& family, const AlgebraRef& b) {
    std::vector<DimElement> out;
    out.reserve(family.size());
    for (const auto& r : family)
        out.push_back(rep_embed(r, b));
    return out;
}

} // namespace

RepClass::RepClass(AlgebraRef base, std::vector<ExtValue> values) : base_{std::move(base)}, values_{std::move(values)} {
    if (!base_)
        throw DomainError("representation without an algebra");
    if (values_.size() != base_->size())
        throw DomainError("value list does not match the algebra's atom count");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const auto& atom = base_->atom(i);
        auto err = rep_value_error(atom.type, values_[i]);
        if (!err.empty())
            throw DomainError("atom '" + atom.id + "': " + err);
    }
}

RepClass RepClass::of_projection(const DimElement& e) {
    if (!is_projection_class(e))
        throw DomainError(e.to_string() + " is not a projection class");
    return RepClass{e.algebra(), e.values()};
}

ExtValue rep_index(const std::vector<RepClass>& family) {
    common_base(family);
    ExtValue best = ExtValue::fin(1);
    for (const auto& r : family)
        best = max(best, least_index(r));
    return best;
}

bool rep_fits(const RepClass& r, const ExtValue& index) {
    const auto b = amplify(r.base(), index);
    const auto vals = embed_values(r.base(), index, r.values());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (!admissible(b->atom(i).type, vals[i], ClassKind::Projection))
            return false;
    }
    return true;
}

DimElement rep_embed(const RepClass& r, const AlgebraRef& b) {
    const auto& origin = b->amplified_from();
    if (!origin || !same_algebra(origin->base, r.base()))
        throw DomainError("target algebra is not an amplification of the representation's algebra");
    return DimElement{b, embed_values(r.base(), origin->index, r.values()), ClassKind::Projection};
}

RepBound rep_common_sub(const std::vector<RepClass>& family) { return rep_common_sub(family, rep_index(family)); }

RepBound rep_common_sub(const std::vector<RepClass>& family, const ExtValue& index) {
    auto b = amplify(common_base(family), index);
    return RepBound{b, family_inf(ExplicitFamily{embed_all(family, b)})};
}

RepBound rep_common_super(const std::vector<RepClass>& family) { return rep_common_super(family, rep_index(family)); }

RepBound rep_common_super(const std::vector<RepClass>& family, const ExtValue& index) {
    auto b = amplify(common_base(family), index);
    return RepBound{b, family_sup(ExplicitFamily{embed_all(family, b)})};
}

DimElement rep_common_sub(const std::vector<DimElement>& family) {
    validate_family(ExplicitFamily{family}, ClassKind::Projection);
    return family_inf(ExplicitFamily{family});
}

DimElement rep_common_super(const std::vector<DimElement>& family) {
    validate_family(ExplicitFamily{family}, ClassKind::Projection);
    return family_sup(ExplicitFamily{family});
}

} // namespace dimlat
