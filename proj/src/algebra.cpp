#include "dimlat/algebra.hpp"

#include <algorithm>
#include <set>

namespace dimlat {

namespace {

std::string aleph_text(int level) { return "aleph " + std::to_string(level); }

std::vector<int> alephs_upto(int level) {
    std::vector<int> out;
    for (int i = 0; i <= level; ++i)
        out.push_back(i);
    return out;
}

const char* kind_name(FactorKind k) {
    switch (k) {
    case FactorKind::IFin:
        return "I_fin";
    case FactorKind::IInf:
        return "I_inf";
    case FactorKind::II1:
        return "II_1";
    case FactorKind::IIInf:
        return "II_inf";
    case FactorKind::III:
        return "III";
    }
    return "?";
}

} // namespace

AtomType AtomType::i_fin(long n) {
    if (n < 1)
        throw DomainError("I_fin size must be a positive integer");
    return AtomType{FactorKind::IFin, n, 0};
}

AtomType AtomType::i_inf(int level) {
    (void)ExtValue::aleph(level);
    return AtomType{FactorKind::IInf, 0, level};
}

AtomType AtomType::ii_1() { return AtomType{FactorKind::II1, 0, 0}; }

AtomType AtomType::ii_inf(int level) {
    (void)ExtValue::aleph(level);
    return AtomType{FactorKind::IIInf, 0, level};
}

AtomType AtomType::iii(int level) {
    (void)ExtValue::aleph(level);
    return AtomType{FactorKind::III, 0, level};
}

std::string AtomType::to_string() const {
    switch (kind_) {
    case FactorKind::IFin:
        return "I_fin(" + std::to_string(n_) + ")";
    case FactorKind::II1:
        return "II_1";
    default:
        return std::string{kind_name(kind_)} + "(" + aleph_text(level_) + ")";
    }
}

std::string admissibility_error(const AtomType& t, const ExtValue& v, ClassKind kind) {
    const std::string where = " on " + std::string{kind_name(t.kind())} + " atom";
    if (v.is_aleph()) {
        if (t.is_finite_type())
            return "aleph value not admissible" + where;
        if (v.aleph_level() > t.level())
            return v.to_string() + " exceeds the homogeneity cardinal " + aleph_text(t.level()) + where;
        return {};
    }
    const Rational& q = v.fin_value();
    if (t.kind() == FactorKind::III) {
        if (sgn(q) != 0)
            return "finite nonzero value " + v.to_string() + " not admissible" + where;
        return {};
    }
    if (kind == ClassKind::Cone)
        return {};
    switch (t.kind()) {
    case FactorKind::IFin: {
        Rational scaled = q * t.size();
        if (q > 1 || scaled.get_den() != 1)
            return "value " + v.to_string() + " is not a multiple k/" + std::to_string(t.size()) +
                   " with 0 <= k <= " + std::to_string(t.size()) + where;
        return {};
    }
    case FactorKind::II1:
        if (q > 1)
            return "value " + v.to_string() + " exceeds the unit 1" + where;
        return {};
    case FactorKind::IInf:
        if (q.get_den() != 1)
            return "non-integer value " + v.to_string() + " not admissible" + where;
        return {};
    default:
        return {};
    }
}

bool admissible(const AtomType& t, const ExtValue& v, ClassKind kind) { return admissibility_error(t, v, kind).empty(); }

bool admissible_set(const AtomType& t, const ChainSet& s, ClassKind kind) {
    for (int a : s.alephs()) {
        if (t.is_finite_type() || a > t.level())
            return false;
    }
    if (!s.has_fin())
        return true;
    auto all_points_ok = [&] {
        return std::all_of(s.fin_points().begin(), s.fin_points().end(),
                           [&](const Rational& q) { return admissible(t, ExtValue::fin(q), kind); });
    };
    switch (t.kind()) {
    case FactorKind::III:
        return s.intervals().empty() && s.runs().empty() && all_points_ok();
    case FactorKind::IFin:
    case FactorKind::II1: {
        if (s.fin_unbounded())
            return false;
        if (kind == ClassKind::Cone)
            return true;
        if (t.kind() == FactorKind::IFin && !s.intervals().empty())
            return false;
        auto sup = s.fin_sup();
        return *sup <= 1 && all_points_ok();
    }
    case FactorKind::IInf:
        return kind == ClassKind::Cone || (s.intervals().empty() && all_points_ok());
    case FactorKind::IIInf:
        return true;
    }
    return false;
}

ChainSet projection_values(const AtomType& t) {
    switch (t.kind()) {
    case FactorKind::IFin: {
        std::vector<Rational> pts;
        for (long k = 0; k <= t.size(); ++k)
            pts.emplace_back(k, t.size());
        return ChainSet::of({}, {}, std::move(pts), {});
    }
    case FactorKind::II1:
        return ChainSet::interval(Rational{0}, true, Rational{1}, true);
    case FactorKind::IInf:
        return ChainSet::of({}, {IntegerRun{Integer{0}, std::nullopt}}, {}, alephs_upto(t.level()));
    case FactorKind::IIInf:
        return ChainSet::of({RationalInterval{Rational{0}, true, std::nullopt, false}}, {}, {}, alephs_upto(t.level()));
    case FactorKind::III:
        return ChainSet::of({}, {}, {Rational{0}}, alephs_upto(t.level()));
    }
    return {};
}

ExtValue unit_value(const AtomType& t) {
    if (t.is_finite_type())
        return ExtValue::fin(1);
    return ExtValue::aleph(t.level());
}

AlgebraRef AlgebraDesc::make(std::vector<Atom> atoms, std::string name) {
    if (atoms.empty())
        throw DomainError("an algebra needs at least one atom");
    std::set<std::string> seen;
    for (const auto& a : atoms) {
        if (!seen.insert(a.id).second)
            throw DomainError("duplicate atom id '" + a.id + "'");
    }
    auto alg = std::shared_ptr<AlgebraDesc>(new AlgebraDesc);
    alg->atoms_ = std::move(atoms);
    alg->name_ = std::move(name);
    return alg;
}

std::optional<std::size_t> AlgebraDesc::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (atoms_[i].id == id)
            return i;
    }
    return std::nullopt;
}

ExtValue AlgebraDesc::kappa() const {
    int level = 0;
    for (const auto& a : atoms_) {
        if (a.type.is_properly_infinite())
            level = std::max(level, a.type.level());
    }
    return ExtValue::aleph(level);
}

bool AlgebraDesc::is_finite() const {
    return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.type.is_finite_type(); });
}

std::string AlgebraDesc::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (i)
            out += ", ";
        out += atoms_[i].id + ": " + atoms_[i].type.to_string();
    }
    return out + "]";
}

bool same_algebra(const AlgebraRef& a, const AlgebraRef& b) { return a == b || (a && b && *a == *b); }

void require_same_algebra(const AlgebraRef& a, const AlgebraRef& b) {
    if (!same_algebra(a, b))
        throw AlgebraMismatch{};
}

AlgebraRef amplify(const AlgebraRef& a, const ExtValue& index) {
    std::vector<Atom> atoms = a->atoms();
    if (index.is_fin()) {
        const Rational& m = index.fin_value();
        if (m.get_den() != 1 || sgn(m) <= 0)
            throw DomainError("amplification index " + index.to_string() + " is not a positive integer");
        if (!m.get_num().fits_slong_p())
            throw DomainError("amplification index " + index.to_string() + " is too large");
        const long mult = m.get_num().get_si();
        for (auto& atom : atoms) {
            if (atom.type.kind() == FactorKind::IFin)
                atom.type = AtomType::i_fin(atom.type.size() * mult);
        }
    } else {
        const int i = index.aleph_level();
        for (auto& atom : atoms) {
            const auto& t = atom.type;
            switch (t.kind()) {
            case FactorKind::IFin:
                atom.type = AtomType::i_inf(i);
                break;
            case FactorKind::II1:
                atom.type = AtomType::ii_inf(i);
                break;
            case FactorKind::IInf:
                atom.type = AtomType::i_inf(std::max(t.level(), i));
                break;
            case FactorKind::IIInf:
                atom.type = AtomType::ii_inf(std::max(t.level(), i));
                break;
            case FactorKind::III:
                atom.type = AtomType::iii(std::max(t.level(), i));
                break;
            }
        }
    }
    auto out = std::shared_ptr<AlgebraDesc>(new AlgebraDesc);
    out->atoms_ = std::move(atoms);
    out->name_ = a->name().empty() ? std::string{} : "amplify(" + a->name() + ", " + index.to_string() + ")";
    out->origin_ = Amplification{a, index};
    return out;
}

CentralProjection::CentralProjection(AlgebraRef alg) : alg_{std::move(alg)}, bits_(alg_->size()) {}

CentralProjection::CentralProjection(AlgebraRef alg, boost::dynamic_bitset<> bits)
    : alg_{std::move(alg)}, bits_{std::move(bits)} {
    if (bits_.size() != alg_->size())
        throw DomainError("central projection does not match the algebra's atom count");
}

CentralProjection CentralProjection::all(AlgebraRef alg) {
    CentralProjection p{std::move(alg)};
    p.bits_.set();
    return p;
}

CentralProjection CentralProjection::of(AlgebraRef alg, const std::vector<std::string>& ids) {
    CentralProjection p{std::move(alg)};
    for (const auto& id : ids) {
        auto i = p.alg_->index_of(id);
        if (!i)
            throw DomainError("unknown atom '" + id + "'");
        p.bits_.set(*i);
    }
    return p;
}

std::string CentralProjection::to_string() const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (!bits_.test(i))
            continue;
        out += first ? "" : ", ";
        out += alg_->atom(i).id;
        first = false;
    }
    return out + "}";
}

CentralProjection cp_meet(const CentralProjection& a, const CentralProjection& b) {
    require_same_algebra(a.algebra(), b.algebra());
    return CentralProjection{a.algebra(), a.bits() & b.bits()};
}

CentralProjection cp_join(const CentralProjection& a, const CentralProjection& b) {
    require_same_algebra(a.algebra(), b.algebra());
    return CentralProjection{a.algebra(), a.bits() | b.bits()};
}

CentralProjection cp_complement(const CentralProjection& a) { return CentralProjection{a.algebra(), ~a.bits()}; }

CentralProjection cp_diff(const CentralProjection& a, const CentralProjection& b) {
    require_same_algebra(a.algebra(), b.algebra());
    return CentralProjection{a.algebra(), a.bits() - b.bits()};
}

bool cp_leq(const CentralProjection& a, const CentralProjection& b) {
    require_same_algebra(a.algebra(), b.algebra());
    return a.bits().is_subset_of(b.bits());
}

CentralPositive::CentralPositive(AlgebraRef alg, std::vector<Rational> values)
    : alg_{std::move(alg)}, values_{std::move(values)} {
    if (values_.size() != alg_->size())
        throw DomainError("central element does not match the algebra's atom count");
    for (auto& v : values_) {
        v.canonicalize();
        if (sgn(v) < 0)
            throw DomainError("central positive element has a negative value " + dimlat::to_string(v));
    }
}

CentralPositive CentralPositive::constant(AlgebraRef alg, const Rational& c) {
    std::vector<Rational> vals(alg->size(), c);
    return CentralPositive{std::move(alg), std::move(vals)};
}

} // namespace dimlat
