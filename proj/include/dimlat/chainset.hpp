#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dimlat/extval.hpp"

namespace dimlat {

/// Rational interval with open/closed ends. hi == nullopt means unbounded above
/// (hi_closed is then ignored and kept false).
struct RationalInterval {
    Rational lo;
    bool lo_closed = true;
    std::optional<Rational> hi;
    bool hi_closed = true;

    [[nodiscard]] bool contains(const Rational& q) const;
    friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

/// The consecutive integers lo, lo+1, ..., hi (or without end when hi is absent).
struct IntegerRun {
    Integer lo;
    std::optional<Integer> hi;

    [[nodiscard]] bool contains(const Rational& q) const;
    friend bool operator==(const IntegerRun&, const IntegerRun&) = default;
};

/// A subset of the value chain at a single atom: finitely many rational intervals,
/// integer runs (possibly unbounded), isolated rational points and aleph levels.
///
/// Always held in canonical form, so structural equality is set equality:
///  - intervals are nonempty, sorted, pairwise disjoint and not mergeable;
///  - an open interval end never coincides with a point or run element
///    (such an end is closed instead);
///  - runs hold at least two elements (or are unbounded), avoid every interval,
///    and are neither adjacent nor overlapping;
///  - points avoid intervals and runs, and no two points or point and run are
///    consecutive integers.
class ChainSet {
  public:
    ChainSet() = default;

    static ChainSet of(std::vector<RationalInterval> intervals, std::vector<IntegerRun> runs,
                       std::vector<Rational> points, std::vector<int> alephs);
    static ChainSet point(const ExtValue& v);
    static ChainSet points(const std::vector<ExtValue>& vs);
    static ChainSet interval(Rational lo, bool lo_closed, std::optional<Rational> hi, bool hi_closed);
    /// {0, 1, 2, ...}
    static ChainSet naturals();

    [[nodiscard]] const std::vector<RationalInterval>& intervals() const { return intervals_; }
    [[nodiscard]] const std::vector<IntegerRun>& runs() const { return runs_; }
    [[nodiscard]] const std::vector<Rational>& fin_points() const { return points_; }
    [[nodiscard]] const std::vector<int>& alephs() const { return alephs_; }

    [[nodiscard]] bool empty() const;
    [[nodiscard]] bool has_fin() const;
    [[nodiscard]] bool contains(const ExtValue& v) const;
    /// True when the finite part has no rational upper bound.
    [[nodiscard]] bool fin_unbounded() const;
    /// Supremum of the finite part, when the finite part is nonempty and bounded.
    [[nodiscard]] std::optional<Rational> fin_sup() const;

    [[nodiscard]] ChainSet unite(const ChainSet& other) const;
    /// Closure of the finite part in the order topology of the reals: finite
    /// interval ends become closed. Discrete parts are already closed.
    [[nodiscard]] ChainSet closure() const;

    friend bool operator==(const ChainSet&, const ChainSet&) = default;

    /// "{ [0, 1], 2..5, 7/2, aleph 0 }"
    [[nodiscard]] std::string to_string() const;

  private:
    void canonicalize();

    std::vector<RationalInterval> intervals_;
    std::vector<IntegerRun> runs_;
    std::vector<Rational> points_;
    std::vector<int> alephs_;
};

/// Least upper bound in the chain. The empty set has lub Fin(0); a set whose finite
/// part is unbounded and which has no aleph has lub aleph 0.
ExtValue chain_lub(const ChainSet& s);
/// Greatest lower bound in the chain; throws DomainError on the empty set.
/// The bound need not belong to s: the glb of (a, b] is Fin(a).
ExtValue chain_glb(const ChainSet& s);

} // namespace dimlat
