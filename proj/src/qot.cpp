#include "dimlat/qot.hpp"

#include <algorithm>

namespace dimlat {

namespace {

const AlgebraRef& algebra_of(const ClassSetDescriptor& s) {
    return std::visit([](const auto& d) -> const AlgebraRef& { return d.algebra; }, s);
}

// Admissible projection values v on an atom with T(v) <= bound.
ChainSet trace_segment(const AtomType& t, const TraceValue& bound) {
    if (bound.infinite)
        return projection_values(t);
    const Rational& r = bound.value;
    switch (t.kind()) {
    case FactorKind::IIInf:
        return ChainSet::interval(Rational{0}, true, r, true);
    case FactorKind::II1:
        return ChainSet::interval(Rational{0}, true, std::min(r, Rational{1}), true);
    case FactorKind::IInf: {
        Integer top;
        mpz_fdiv_q(top.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
        return ChainSet::of({}, {IntegerRun{Integer{0}, top}}, {}, {});
    }
    case FactorKind::IFin: {
        std::vector<Rational> pts;
        for (long k = 0; k <= t.size(); ++k) {
            Rational v{k, t.size()};
            v.canonicalize();
            if (v <= r)
                pts.push_back(v);
        }
        return ChainSet::of({}, {}, std::move(pts), {});
    }
    case FactorKind::III:
        return ChainSet::point(ExtValue{});
    }
    return {};
}

void require_projection_class(const DimElement& e) {
    if (!is_projection_class(e))
        throw DomainError(e.to_string() + " is not a projection class");
}

std::optional<DimElement> as_single_element(const ProductSet& p) {
    std::vector<ExtValue> vals;
    for (const auto& s : p.per_atom) {
        bool single = (s.fin_points().size() + s.alephs().size() == 1) && s.intervals().empty() && s.runs().empty();
        if (!single)
            return std::nullopt;
        vals.push_back(s.alephs().empty() ? ExtValue::fin(s.fin_points().front()) : ExtValue::aleph(s.alephs().front()));
    }
    return DimElement::unchecked(p.algebra, std::move(vals));
}

void validate_product(const ProductSet& p) {
    if (p.per_atom.size() != p.algebra->size())
        throw DomainError("product set does not match the algebra's atom count");
    for (std::size_t i = 0; i < p.per_atom.size(); ++i) {
        const auto& atom = p.algebra->atom(i);
        if (!admissible_set(atom.type, p.per_atom[i], ClassKind::Projection))
            throw DomainError("atom '" + atom.id + "': value set " + p.per_atom[i].to_string() +
                              " contains non-projection values for " + atom.type.to_string());
    }
}

// Closure of a set of values at one atom: the order closure on finite-type atoms,
// the trace segment below the supremum on properly infinite ones.
ChainSet close_atom(const AtomType& t, const ChainSet& values) {
    if (values.empty())
        return values;
    if (t.is_finite_type())
        return values.closure();
    if (!values.alephs().empty() || values.fin_unbounded())
        return projection_values(t);
    return trace_segment(t, TraceValue{false, *values.fin_sup()});
}

} // namespace

bool contains(const ClassSetDescriptor& s, const DimElement& e) {
    if (const auto* ex = std::get_if<ExplicitSet>(&s))
        return std::any_of(ex->members.begin(), ex->members.end(), [&](const DimElement& m) { return m == e; });
    const auto& p = std::get<ProductSet>(s);
    require_same_algebra(p.algebra, e.algebra());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!p.per_atom[i].contains(e[i]))
            return false;
    }
    return true;
}

std::string to_string(const ClassSetDescriptor& s) {
    if (const auto* ex = std::get_if<ExplicitSet>(&s)) {
        std::string out = "[";
        for (std::size_t i = 0; i < ex->members.size(); ++i)
            out += (i ? ", " : " ") + ex->members[i].to_string();
        return out + (ex->members.empty() ? "]" : " ]");
    }
    const auto& p = std::get<ProductSet>(s);
    std::string out = "{";
    for (std::size_t i = 0; i < p.per_atom.size(); ++i) {
        out += i ? ", " : " ";
        out += p.algebra->atom(i).id + ": " + p.per_atom[i].to_string();
    }
    return out + " }";
}

ProductSet closure_singleton(const DimElement& p) {
    require_projection_class(p);
    ProductSet out{p.algebra(), {}};
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& t = p.algebra()->atom(i).type;
        if (t.is_finite_type())
            out.per_atom.push_back(ChainSet::point(p[i]));
        else
            out.per_atom.push_back(trace_segment(t, trace_collapse(p[i])));
    }
    return out;
}

ProductSet closure_factor_set(const ClassSetDescriptor& e) {
    const auto& alg = algebra_of(e);
    if (alg->size() != 1)
        throw UnsupportedClosure("closure of a set is implemented for factors only; algebra has " +
                                 std::to_string(alg->size()) + " atoms");
    ChainSet values;
    if (const auto* ex = std::get_if<ExplicitSet>(&e)) {
        std::vector<ExtValue> vs;
        for (const auto& m : ex->members) {
            require_same_algebra(m.algebra(), alg);
            require_projection_class(m);
            vs.push_back(m[0]);
        }
        values = ChainSet::points(vs);
    } else {
        const auto& p = std::get<ProductSet>(e);
        validate_product(p);
        values = p.per_atom.front();
    }

    return ProductSet{alg, {close_atom(alg->atom(0).type, values)}};
}

ClassSetDescriptor closure(const ClassSetDescriptor& e) {
    const auto& alg = algebra_of(e);
    if (const auto* ex = std::get_if<ExplicitSet>(&e)) {
        if (ex->members.size() == 1)
            return closure_singleton(ex->members.front());
        if (ex->members.empty())
            return e;
    } else {
        const auto& p = std::get<ProductSet>(e);
        validate_product(p);
        if (auto single = as_single_element(p))
            return closure_singleton(*single);
    }
    if (alg->size() == 1)
        return closure_factor_set(e);
    if (const auto* p = std::get_if<ProductSet>(&e)) {
        ProductSet out{alg, {}};
        for (std::size_t i = 0; i < alg->size(); ++i)
            out.per_atom.push_back(close_atom(alg->atom(i).type, p->per_atom[i]));
        return out;
    }
    if (alg->is_finite()) {
        for (const auto& m : std::get<ExplicitSet>(e).members) {
            require_same_algebra(m.algebra(), alg);
            require_projection_class(m);
        }
        return e;
    }
    throw UnsupportedClosure("closure of a general set over an algebra with " + std::to_string(alg->size()) +
                             " atoms and a properly infinite part is outside the implemented fragment");
}

bool in_closure(const DimElement& q, const ClassSetDescriptor& e) {
    require_projection_class(q);
    require_same_algebra(q.algebra(), algebra_of(e));
    return contains(closure(e), q);
}

bool is_T1(const AlgebraDesc& a) { return a.is_finite(); }

bool is_T0(const AlgebraDesc& a) {
    return std::all_of(a.atoms().begin(), a.atoms().end(),
                       [](const Atom& atom) { return atom.type.is_finite_type() || atom.type.level() == 0; });
}

bool quotient_maps_normal(const AlgebraDesc& a) { return is_T0(a); }

} // namespace dimlat
