#include "dimlat/complattice.hpp"

#include <algorithm>
#include <set>

namespace dimlat {

namespace {

enum class Bound { Upper, Lower };

// Slice construction shared by sup and inf. For each slice index k, taken in
// increasing order, y(k) is where all members (sup) or some member (inf) sit in
// slices <= k; z(k) = y(k) minus y of the previous index. Indices that occur in no
// member leave y unchanged and give an empty z, so only occurring indices are visited.
FormalSum slice_bound(const ExplicitFamily& f, Bound which) {
    if (f.members.empty())
        throw DomainError("empty family: use lattice_bottom()/lattice_top()");
    const AlgebraRef& alg = f.members.front().algebra();
    for (const auto& m : f.members)
        require_same_algebra(m.algebra(), alg);
    const std::size_t n = alg->size();

    std::vector<FormalSum> decomps;
    decomps.reserve(f.members.size());
    std::set<SliceIndex> indices;
    for (const auto& m : f.members) {
        decomps.push_back(to_formal_sum(m));
        for (const auto& s : decomps.back().slices)
            indices.insert(s.index);
    }

    std::vector<boost::dynamic_bitset<>> below(decomps.size(), boost::dynamic_bitset<>(n));
    std::vector<std::size_t> cursor(decomps.size(), 0);
    boost::dynamic_bitset<> prev_y(n);
    FormalSum out{alg, {}};

    for (const auto& k : indices) {
        std::vector<const Slice*> at_k(decomps.size(), nullptr);
        for (std::size_t a = 0; a < decomps.size(); ++a) {
            const auto& slices = decomps[a].slices;
            while (cursor[a] < slices.size() && !(k < slices[cursor[a]].index)) {
                const Slice& s = slices[cursor[a]];
                below[a] |= s.support.bits();
                if (s.index == k)
                    at_k[a] = &s;
                ++cursor[a];
            }
        }

        boost::dynamic_bitset<> y = below.front();
        for (std::size_t a = 1; a < below.size(); ++a) {
            if (which == Bound::Upper)
                y &= below[a];
            else
                y |= below[a];
        }
        boost::dynamic_bitset<> z = y - prev_y;
        prev_y = y;
        if (z.none())
            continue;

        Slice slice{k, CentralProjection{alg, z}, std::nullopt};
        if (!k.is_aleph) {
            std::vector<Rational> g(n, Rational{0});
            for (std::size_t i = 0; i < n; ++i) {
                if (!z.test(i))
                    continue;
                if (which == Bound::Upper) {
                    // sup over all members of g^a_k cut down to z; members outside
                    // slice k at this atom contribute 0.
                    for (std::size_t a = 0; a < decomps.size(); ++a) {
                        if (at_k[a] && at_k[a]->support.contains(i))
                            g[i] = std::max(g[i], (*at_k[a]->g)[i]);
                    }
                } else {
                    // Minimum over slice-k members only: at an atom of z every other
                    // member sits in a strictly higher slice, so its value exceeds
                    // every slice-k value and cannot be the minimum.
                    std::optional<Rational> best;
                    for (std::size_t a = 0; a < decomps.size(); ++a) {
                        if (at_k[a] && at_k[a]->support.contains(i)) {
                            const Rational& v = (*at_k[a]->g)[i];
                            if (!best || v < *best)
                                best = v;
                        }
                    }
                    g[i] = *best;
                }
            }
            slice.g = CentralPositive{alg, std::move(g)};
        }
        out.slices.push_back(std::move(slice));
    }

    if (!prev_y.all())
        throw std::logic_error("slice construction did not exhaust the center");
    return out;
}

DimElement described_bound(const DescribedFamily& f, Bound which) {
    if (f.per_atom.size() != f.algebra->size())
        throw DomainError("described family does not match the algebra's atom count");
    std::vector<ExtValue> vals;
    vals.reserve(f.per_atom.size());
    for (const auto& s : f.per_atom)
        vals.push_back(which == Bound::Upper ? chain_lub(s) : chain_glb(s));
    return DimElement::unchecked(f.algebra, std::move(vals));
}

} // namespace

const AlgebraRef& family_algebra(const FamilySpec& f) {
    if (const auto* e = std::get_if<ExplicitFamily>(&f)) {
        if (e->members.empty())
            throw DomainError("empty family");
        return e->members.front().algebra();
    }
    return std::get<DescribedFamily>(f).algebra;
}

void validate_family(const FamilySpec& f, ClassKind kind) {
    if (const auto* e = std::get_if<ExplicitFamily>(&f)) {
        if (e->members.empty())
            throw DomainError("empty family");
        const auto& alg = e->members.front().algebra();
        for (const auto& m : e->members) {
            require_same_algebra(m.algebra(), alg);
            (void)DimElement{m.algebra(), m.values(), kind};
        }
        return;
    }
    const auto& d = std::get<DescribedFamily>(f);
    if (!d.algebra)
        throw DomainError("described family without an algebra");
    if (d.per_atom.size() != d.algebra->size())
        throw DomainError("described family does not match the algebra's atom count");
    for (std::size_t i = 0; i < d.per_atom.size(); ++i) {
        const auto& atom = d.algebra->atom(i);
        if (d.per_atom[i].empty())
            throw DomainError("atom '" + atom.id + "': empty value set");
        if (!admissible_set(atom.type, d.per_atom[i], kind))
            throw DomainError("atom '" + atom.id + "': value set " + d.per_atom[i].to_string() +
                              " not admissible on " + atom.type.to_string() + " atom");
    }
}

FormalSum family_sup_slices(const ExplicitFamily& f) { return slice_bound(f, Bound::Upper); }
FormalSum family_inf_slices(const ExplicitFamily& f) { return slice_bound(f, Bound::Lower); }

DimElement family_sup(const FamilySpec& f) {
    if (const auto* e = std::get_if<ExplicitFamily>(&f))
        return from_formal_sum(slice_bound(*e, Bound::Upper));
    return described_bound(std::get<DescribedFamily>(f), Bound::Upper);
}

DimElement family_inf(const FamilySpec& f) {
    if (const auto* e = std::get_if<ExplicitFamily>(&f))
        return from_formal_sum(slice_bound(*e, Bound::Lower));
    return described_bound(std::get<DescribedFamily>(f), Bound::Lower);
}

DimElement lattice_bottom(const AlgebraRef& alg) { return DimElement::zero(alg); }
DimElement lattice_top(const AlgebraRef& alg) { return unit(alg); }

bool is_upper_bound(const DimElement& h, const FamilySpec& f) {
    if (const auto* e = std::get_if<ExplicitFamily>(&f))
        return std::all_of(e->members.begin(), e->members.end(), [&](const DimElement& m) { return d_leq(m, h); });
    const auto& d = std::get<DescribedFamily>(f);
    require_same_algebra(h.algebra(), d.algebra);
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] < chain_lub(d.per_atom[i]))
            return false;
    }
    return true;
}

bool is_lower_bound(const DimElement& h, const FamilySpec& f) {
    if (const auto* e = std::get_if<ExplicitFamily>(&f))
        return std::all_of(e->members.begin(), e->members.end(), [&](const DimElement& m) { return d_leq(h, m); });
    const auto& d = std::get<DescribedFamily>(f);
    require_same_algebra(h.algebra(), d.algebra);
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (d.per_atom[i].empty())
            continue;
        if (h[i] > chain_glb(d.per_atom[i]))
            return false;
    }
    return true;
}

bool is_least_upper_bound(const DimElement& h, const FamilySpec& f, const std::vector<DimElement>& grid) {
    if (!is_upper_bound(h, f))
        return false;
    return std::all_of(grid.begin(), grid.end(),
                       [&](const DimElement& g) { return !is_upper_bound(g, f) || d_leq(h, g); });
}

bool is_greatest_lower_bound(const DimElement& h, const FamilySpec& f, const std::vector<DimElement>& grid) {
    if (!is_lower_bound(h, f))
        return false;
    return std::all_of(grid.begin(), grid.end(),
                       [&](const DimElement& g) { return !is_lower_bound(g, f) || d_leq(g, h); });
}

} // namespace dimlat
