#include "dimlat/dimfun.hpp"

#include <map>

namespace dimlat {

DimElement::DimElement(AlgebraRef alg, std::vector<ExtValue> values) : alg_{std::move(alg)}, values_{std::move(values)} {
    if (!alg_)
        throw DomainError("dimension element without an algebra");
    if (values_.size() != alg_->size())
        throw DomainError("dimension element has " + std::to_string(values_.size()) + " values for " +
                          std::to_string(alg_->size()) + " atoms");
}

DimElement::DimElement(AlgebraRef alg, std::vector<ExtValue> values, ClassKind kind)
    : DimElement(std::move(alg), std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const auto& atom = alg_->atom(i);
        auto why = admissibility_error(atom.type, values_[i], kind);
        if (!why.empty())
            throw DomainError("atom '" + atom.id + "': " + why);
    }
}

DimElement DimElement::unchecked(AlgebraRef alg, std::vector<ExtValue> values) {
    return DimElement{std::move(alg), std::move(values)};
}

DimElement DimElement::zero(AlgebraRef alg) {
    std::vector<ExtValue> vals(alg->size());
    return DimElement{std::move(alg), std::move(vals)};
}

std::string DimElement::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        out += i ? ", " : " ";
        out += alg_->atom(i).id + ": " + values_[i].to_string();
    }
    return out + " }";
}

namespace {

bool all_admissible(const DimElement& e, ClassKind kind) {
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!admissible(e.algebra()->atom(i).type, e[i], kind))
            return false;
    }
    return true;
}

} // namespace

bool is_cone_class(const DimElement& e) { return all_admissible(e, ClassKind::Cone); }
bool is_projection_class(const DimElement& e) { return all_admissible(e, ClassKind::Projection); }

DimElement unit(const AlgebraRef& alg) {
    std::vector<ExtValue> vals;
    vals.reserve(alg->size());
    for (const auto& atom : alg->atoms())
        vals.push_back(unit_value(atom.type));
    return DimElement::unchecked(alg, std::move(vals));
}

bool d_leq(const DimElement& a, const DimElement& b) {
    require_same_algebra(a.algebra(), b.algebra());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i])
            return false;
    }
    return true;
}

DimElement d_add(const DimElement& a, const DimElement& b) {
    require_same_algebra(a.algebra(), b.algebra());
    std::vector<ExtValue> vals;
    vals.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        vals.push_back(a[i] + b[i]);
    return DimElement::unchecked(a.algebra(), std::move(vals));
}

DimElement d_scale(const CentralPositive& y, const DimElement& a) {
    require_same_algebra(y.algebra(), a.algebra());
    std::vector<ExtValue> vals;
    vals.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        vals.push_back(sgn(y[i]) == 0 ? zero_scale(a[i]) : scale(y[i], a[i]));
    return DimElement::unchecked(a.algebra(), std::move(vals));
}

CentralProjection central_support(const DimElement& a) {
    CentralProjection z{a.algebra()};
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero())
            z.insert(i);
    }
    return z;
}

CentralProjection finite_part_projection(const DimElement& a) {
    CentralProjection z{a.algebra()};
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_fin())
            z.insert(i);
    }
    return z;
}

CentralProjection comparison_projection(const DimElement& a, const DimElement& b) {
    require_same_algebra(a.algebra(), b.algebra());
    CentralProjection z{a.algebra()};
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] <= b[i])
            z.insert(i);
    }
    return z;
}

DimElement pair_meet(const DimElement& a, const DimElement& b) {
    const auto z = comparison_projection(a, b);
    std::vector<ExtValue> vals;
    vals.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        vals.push_back(z.contains(i) ? a[i] : b[i]);
    return DimElement::unchecked(a.algebra(), std::move(vals));
}

DimElement pair_join(const DimElement& a, const DimElement& b) {
    const auto z = comparison_projection(a, b);
    std::vector<ExtValue> vals;
    vals.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        vals.push_back(z.contains(i) ? b[i] : a[i]);
    return DimElement::unchecked(a.algebra(), std::move(vals));
}

DimElement complement_in(const DimElement& a, const DimElement& b) {
    if (!d_leq(a, b))
        throw DomainError("complement_in requires " + a.to_string() + " <= " + b.to_string());
    std::vector<ExtValue> vals;
    vals.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i].is_aleph())
            vals.push_back(b[i]);
        else
            vals.push_back(ExtValue::fin(Rational{b[i].fin_value() - a[i].fin_value()}));
    }
    return DimElement::unchecked(a.algebra(), std::move(vals));
}

std::string TraceValue::to_string() const { return infinite ? "+inf" : dimlat::to_string(value); }

TraceValue trace_collapse(const ExtValue& v) {
    if (v.is_aleph())
        return TraceValue{true, Rational{0}};
    return TraceValue{false, v.fin_value()};
}

std::vector<TraceValue> trace_collapse(const DimElement& a) {
    std::vector<TraceValue> out;
    out.reserve(a.size());
    for (const auto& v : a.values())
        out.push_back(trace_collapse(v));
    return out;
}

std::string SliceIndex::to_string() const { return is_aleph ? "aleph " + std::to_string(level) : n.get_str(); }

SliceIndex slice_of(const ExtValue& v) {
    if (v.is_aleph())
        return SliceIndex::aleph(v.aleph_level());
    const Rational& q = v.fin_value();
    Integer k;
    mpz_cdiv_q(k.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return SliceIndex::integer(std::move(k));
}

FormalSum to_formal_sum(const DimElement& a) {
    struct Acc {
        boost::dynamic_bitset<> support;
        std::vector<Rational> g;
    };
    std::map<SliceIndex, Acc> by_index;
    const auto n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, fresh] = by_index.try_emplace(slice_of(a[i]));
        if (fresh) {
            it->second.support.resize(n);
            it->second.g.assign(n, Rational{0});
        }
        it->second.support.set(i);
        if (a[i].is_fin())
            it->second.g[i] = a[i].fin_value();
    }
    FormalSum f{a.algebra(), {}};
    for (auto& [idx, acc] : by_index) {
        Slice s{idx, CentralProjection{a.algebra(), std::move(acc.support)}, std::nullopt};
        if (!idx.is_aleph)
            s.g = CentralPositive{a.algebra(), std::move(acc.g)};
        f.slices.push_back(std::move(s));
    }
    return f;
}

DimElement from_formal_sum(const FormalSum& f) {
    const auto& alg = f.algebra;
    if (!alg)
        throw DomainError("formal sum without an algebra");
    std::vector<std::optional<ExtValue>> vals(alg->size());
    for (const auto& s : f.slices) {
        require_same_algebra(s.support.algebra(), alg);
        if (s.g)
            require_same_algebra(s.g->algebra(), alg);
        if (!s.index.is_aleph && !s.g)
            throw DomainError("integer slice " + s.index.to_string() + " lacks its coefficient g");
        if (!s.index.is_aleph && s.index.n < 0)
            throw DomainError("negative slice index " + s.index.to_string());
        for (std::size_t i = 0; i < alg->size(); ++i) {
            if (!s.support.contains(i))
                continue;
            const auto& id = alg->atom(i).id;
            if (vals[i])
                throw DomainError("atom '" + id + "' lies in two slices");
            if (s.index.is_aleph) {
                vals[i] = ExtValue::aleph(s.index.level);
                continue;
            }
            const Rational& g = (*s.g)[i];
            const Rational k{s.index.n};
            bool ok = sgn(s.index.n) == 0 ? sgn(g) == 0 : (g > k - 1 && g <= k);
            if (!ok)
                throw DomainError("atom '" + id + "': coefficient " + dimlat::to_string(g) + " outside slice " +
                                  s.index.to_string());
            vals[i] = ExtValue::fin(g);
        }
    }
    std::vector<ExtValue> out;
    out.reserve(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (!vals[i])
            throw DomainError("atom '" + alg->atom(i).id + "' lies in no slice");
        out.push_back(std::move(*vals[i]));
    }
    return DimElement::unchecked(alg, std::move(out));
}

std::string FormalSum::to_string() const {
    std::string out;
    for (const auto& s : slices) {
        if (!out.empty())
            out += "; ";
        out += "slice " + s.index.to_string() + " ";
        if (s.index.is_aleph || sgn(s.index.n) == 0) {
            out += s.support.to_string();
            continue;
        }
        out += "{";
        bool first = true;
        for (std::size_t i = 0; i < algebra->size(); ++i) {
            if (!s.support.contains(i))
                continue;
            out += first ? "" : ", ";
            out += algebra->atom(i).id + ": " + dimlat::to_string((*s.g)[i]);
            first = false;
        }
        out += "}";
    }
    return out;
}

std::vector<ExtValue> embed_values(const AlgebraRef& a, const ExtValue& index, const std::vector<ExtValue>& values) {
    if (values.size() != a->size())
        throw DomainError("value list does not match the algebra's atom count");
    std::vector<ExtValue> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto& t = a->atom(i).type;
        const auto& v = values[i];
        if (v.is_aleph() || t.is_properly_infinite()) {
            out.push_back(v);
        } else if (index.is_fin()) {
            out.push_back(ExtValue::fin(Rational{v.fin_value() / index.fin_value()}));
        } else if (t.kind() == FactorKind::IFin) {
            out.push_back(ExtValue::fin(Rational{v.fin_value() * t.size()}));
        } else {
            out.push_back(v);
        }
    }
    return out;
}

DimElement embed_class(const DimElement& e, const AlgebraRef& b) {
    const auto& origin = b->amplified_from();
    if (!origin || !same_algebra(origin->base, e.algebra()))
        throw DomainError("target algebra is not an amplification of the element's algebra");
    if (!is_projection_class(e))
        throw DomainError(e.to_string() + " is not a projection class");
    return DimElement{b, embed_values(e.algebra(), origin->index, e.values()), ClassKind::Projection};
}

} // namespace dimlat
