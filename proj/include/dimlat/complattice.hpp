#pragma once

#include <variant>
#include <vector>

#include "dimlat/chainset.hpp"
#include "dimlat/dimfun.hpp"

namespace dimlat {

/// A finite, explicitly listed family of dimension elements.
struct ExplicitFamily {
    std::vector<DimElement> members;
};

/// A possibly infinite family given atom-wise: every value combination drawn from
/// the per-atom sets belongs to the family.
struct DescribedFamily {
    AlgebraRef algebra;
    std::vector<ChainSet> per_atom;
};

using FamilySpec = std::variant<ExplicitFamily, DescribedFamily>;

/// Throws DomainError unless the family is nonempty, over one algebra, and every
/// member (or every per-atom set) lies in the admissible values for `kind`.
void validate_family(const FamilySpec& f, ClassKind kind);
const AlgebraRef& family_algebra(const FamilySpec& f);

/// Supremum via the slice construction on formal sums (explicit families) or the
/// atom-wise chain lub (described families).
DimElement family_sup(const FamilySpec& f);
/// Infimum, dual to family_sup.
DimElement family_inf(const FamilySpec& f);

/// Slice decomposition of the supremum before assembly; exposed for inspection.
FormalSum family_sup_slices(const ExplicitFamily& f);
FormalSum family_inf_slices(const ExplicitFamily& f);

/// Sup of the empty family and inf of the empty family of projection classes.
DimElement lattice_bottom(const AlgebraRef& alg);
DimElement lattice_top(const AlgebraRef& alg);

bool is_upper_bound(const DimElement& h, const FamilySpec& f);
bool is_lower_bound(const DimElement& h, const FamilySpec& f);
/// h is an upper bound and lies below every upper bound found in `grid`.
bool is_least_upper_bound(const DimElement& h, const FamilySpec& f, const std::vector<DimElement>& grid);
bool is_greatest_lower_bound(const DimElement& h, const FamilySpec& f, const std::vector<DimElement>& grid);

} // namespace dimlat
