#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dimlat/chainset.hpp"
#include "dimlat/dimfun.hpp"

namespace dimlat {

/// Raised for closure questions outside the implemented fragment (explicit sets
/// over algebras with several atoms and a properly infinite part).
class UnsupportedClosure : public DomainError {
  public:
    using DomainError::DomainError;
};

struct ExplicitSet {
    AlgebraRef algebra;
    std::vector<DimElement> members;
    friend bool operator==(const ExplicitSet& a, const ExplicitSet& b) {
        return same_algebra(a.algebra, b.algebra) && a.members == b.members;
    }
};

/// The product of per-atom value sets.
struct ProductSet {
    AlgebraRef algebra;
    std::vector<ChainSet> per_atom;
    friend bool operator==(const ProductSet& a, const ProductSet& b) {
        return same_algebra(a.algebra, b.algebra) && a.per_atom == b.per_atom;
    }
};

using ClassSetDescriptor = std::variant<ExplicitSet, ProductSet>;

bool contains(const ClassSetDescriptor& s, const DimElement& e);
std::string to_string(const ClassSetDescriptor& s);

/// Closure of {p} in the quotient operator topology, atom by atom: a point on
/// finite-type atoms; every admissible q with T(q) <= T(p) on properly infinite atoms.
ProductSet closure_singleton(const DimElement& p);

/// Closure of a set of classes over a factor (single-atom algebra). Finite type:
/// closure of the trace values. Properly infinite: everything whose trace is at most
/// the supremum of the traces in E.
ProductSet closure_factor_set(const ClassSetDescriptor& e);

/// Closure of E where supported: singletons and product sets anywhere (atom by
/// atom), any set over a factor, and any set over a finite algebra, where explicit
/// sets are closed and come back unchanged. Throws UnsupportedClosure otherwise.
ClassSetDescriptor closure(const ClassSetDescriptor& e);

bool in_closure(const DimElement& q, const ClassSetDescriptor& e);

/// Singletons are closed, i.e. every atom has finite type.
bool is_T1(const AlgebraDesc& a);
/// Every properly infinite atom is aleph-0 homogeneous (kappa_M <= aleph 0).
bool is_T0(const AlgebraDesc& a);
/// Normality of the quotient maps; equivalent to the T0 property.
bool quotient_maps_normal(const AlgebraDesc& a);

} // namespace dimlat
