#pragma once

#include <string>
#include <vector>

#include "dimlat/dimfun.hpp"

/// Representations of an algebra A as projection classes of an amplification
/// B = amplify(A, I).
namespace dimlat {

/// Isomorphism class of a normal representation of A, given per atom in A-units:
/// on I_fin(n) a multiple of 1/n, on II_1 any nonnegative rational, on properly
/// infinite atoms their usual class values; any atom may carry an aleph.
class RepClass {
  public:
    /// Throws DomainError naming the first atom whose value is not a representation value.
    RepClass(AlgebraRef base, std::vector<ExtValue> values);
    [[nodiscard]] const AlgebraRef& base() const { return base_; }
    [[nodiscard]] const std::vector<ExtValue>& values() const { return values_; }
    /// The class of a projection of A, i.e. a subrepresentation of the standard one.
    static RepClass of_projection(const DimElement& e);

  private:
    AlgebraRef base_;
    std::vector<ExtValue> values_;
};

/// Why v is not a representation value on an atom of type t (empty when it is).
std::string rep_value_error(const AtomType& t, const ExtValue& v);

/// Smallest amplification index at which every member is a projection class:
/// the least Fin(m) when the family has no aleph values on finite atoms and none
/// above kappa on properly infinite ones, otherwise the least adequate aleph.
ExtValue rep_index(const std::vector<RepClass>& family);

/// Does r fit below the unit of amplify(r.base(), index)?
bool rep_fits(const RepClass& r, const ExtValue& index);

/// Image of r in an amplification b of its base algebra.
DimElement rep_embed(const RepClass& r, const AlgebraRef& b);

struct RepBound {
    AlgebraRef algebra;
    DimElement value;
};

/// Largest representation contained in every member (family infimum) and smallest
/// representation containing every member (family supremum), computed in the
/// amplification at rep_index or at an explicit index.
RepBound rep_common_sub(const std::vector<RepClass>& family);
RepBound rep_common_sub(const std::vector<RepClass>& family, const ExtValue& index);
RepBound rep_common_super(const std::vector<RepClass>& family);
RepBound rep_common_super(const std::vector<RepClass>& family, const ExtValue& index);

/// Members already given as projection classes of a common amplification.
DimElement rep_common_sub(const std::vector<DimElement>& family);
DimElement rep_common_super(const std::vector<DimElement>& family);

} // namespace dimlat
