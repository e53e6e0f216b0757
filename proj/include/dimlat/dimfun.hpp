#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dimlat/algebra.hpp"
#include "dimlat/extval.hpp"

namespace dimlat {

/// A dimension value: one point of the value chain per atom of the center.
///
/// Projection classes (the range of the dimension function) and positive-cone
/// classes (the range of the fully extended trace) are the subsets singled out by
/// is_projection_class() and is_cone_class().
class DimElement {
  public:
    /// Validating constructor; throws DomainError naming the first offending atom.
    DimElement(AlgebraRef alg, std::vector<ExtValue> values, ClassKind kind);

    /// No admissibility check, only the arity is verified.
    static DimElement unchecked(AlgebraRef alg, std::vector<ExtValue> values);
    static DimElement zero(AlgebraRef alg);

    [[nodiscard]] const AlgebraRef& algebra() const { return alg_; }
    [[nodiscard]] const std::vector<ExtValue>& values() const { return values_; }
    [[nodiscard]] const ExtValue& operator[](std::size_t atom) const { return values_.at(atom); }
    [[nodiscard]] std::size_t size() const { return values_.size(); }

    friend bool operator==(const DimElement& a, const DimElement& b) {
        return same_algebra(a.alg_, b.alg_) && a.values_ == b.values_;
    }

    /// "{ a: 1/2, b: aleph 0 }"
    [[nodiscard]] std::string to_string() const;

  private:
    DimElement(AlgebraRef alg, std::vector<ExtValue> values);

    AlgebraRef alg_;
    std::vector<ExtValue> values_;
};

bool is_cone_class(const DimElement& e);
bool is_projection_class(const DimElement& e);

/// Dimension of the identity: 1 on finite-type atoms, the homogeneity aleph elsewhere.
DimElement unit(const AlgebraRef& alg);

/// Pointwise order. Subequivalence for projection classes, Kadison-Pedersen
/// subequivalence for cone classes.
bool d_leq(const DimElement& a, const DimElement& b);
DimElement d_add(const DimElement& a, const DimElement& b);
/// Action of the positive center. Atoms where y vanishes are annihilated.
DimElement d_scale(const CentralPositive& y, const DimElement& a);

/// Atoms where the value is nonzero.
CentralProjection central_support(const DimElement& a);
/// Largest central projection on which a is finite: atoms holding a Fin value.
CentralProjection finite_part_projection(const DimElement& a);

/// Comparison-theorem projection: atoms where a <= b.
CentralProjection comparison_projection(const DimElement& a, const DimElement& b);
/// [zp + z'q] with z the comparison projection; equals the pointwise minimum.
DimElement pair_meet(const DimElement& a, const DimElement& b);
/// [z'p + zq]; equals the pointwise maximum.
DimElement pair_join(const DimElement& a, const DimElement& b);

/// Some c with a + c = b. Finite atoms get b - a. Wherever b is an aleph the
/// result is b itself, including when a == b: a properly infinite class
/// splits into two copies of itself.
DimElement complement_in(const DimElement& a, const DimElement& b);

/// Value of the [0, +inf]-valued extended center-valued trace at one atom.
struct TraceValue {
    bool infinite = false;
    Rational value; ///< meaningful only when !infinite
    friend bool operator==(const TraceValue&, const TraceValue&) = default;
    friend bool operator<=(const TraceValue& a, const TraceValue& b) {
        return b.infinite || (!a.infinite && a.value <= b.value);
    }
    [[nodiscard]] std::string to_string() const;
};

TraceValue trace_collapse(const ExtValue& v);
/// Forgets cardinalities: every aleph becomes +inf.
std::vector<TraceValue> trace_collapse(const DimElement& a);

/// Index of a slice in the canonical decomposition: a nonnegative integer or an aleph.
struct SliceIndex {
    bool is_aleph = false;
    Integer n;     ///< integer slice
    int level = 0; ///< aleph slice

    static SliceIndex integer(Integer k) { return SliceIndex{false, std::move(k), 0}; }
    static SliceIndex aleph(int level) { return SliceIndex{true, Integer{0}, level}; }

    friend bool operator==(const SliceIndex& a, const SliceIndex& b) {
        return a.is_aleph == b.is_aleph && (a.is_aleph ? a.level == b.level : a.n == b.n);
    }
    friend bool operator<(const SliceIndex& a, const SliceIndex& b) {
        if (a.is_aleph != b.is_aleph)
            return !a.is_aleph;
        return a.is_aleph ? a.level < b.level : a.n < b.n;
    }
    [[nodiscard]] std::string to_string() const;
};

/// The slice of a dimension value containing v: 0 for zero, ceil(v) for other
/// finite values, the aleph itself otherwise.
SliceIndex slice_of(const ExtValue& v);

/// One term g z of the decomposition. For integer index k >= 1, g restricted to the
/// support satisfies k-1 < g <= k; for index 0, g = 0; aleph slices carry no g.
struct Slice {
    SliceIndex index;
    CentralProjection support;
    std::optional<CentralPositive> g;
};

/// Canonical formal-sum decomposition sum_k g_k z_k of a dimension value:
/// supports partition the atoms and slices are sorted by index. Only nonempty
/// slices are stored.
struct FormalSum {
    AlgebraRef algebra;
    std::vector<Slice> slices;

    [[nodiscard]] std::string to_string() const;
};

FormalSum to_formal_sum(const DimElement& a);
/// Inverse of to_formal_sum. Throws DomainError when supports overlap or miss atoms,
/// or a g leaves its slice bounds. Empty slices are accepted and ignored.
DimElement from_formal_sum(const FormalSum& f);

/// Translate per-atom values over A into the amplification B = amplify(A, index)
/// (B's provenance must name A). Finite index m divides finite values on IFin and
/// II_1 atoms by m; an aleph index turns the value k/n on an IFin(n) atom into k
/// abelian projections and leaves II_1 values as they are (the old unit becomes
/// the unit finite projection of the II_inf atom). Values on properly infinite
/// atoms never change.
std::vector<ExtValue> embed_values(const AlgebraRef& a, const ExtValue& index, const std::vector<ExtValue>& values);

/// Image of a projection class of A in an amplification B of A.
DimElement embed_class(const DimElement& e, const AlgebraRef& b);

} // namespace dimlat
