#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dimlat/dimfun.hpp"

/// Ground truth on finite-dimensional algebras M_{n1} + ... + M_{nk}.
///
/// A projection in M_n is determined up to equivalence by its rank, so the classes
/// of the direct sum are the rank tuples (k1, ..., km) with 0 <= ki <= ni, ordered
/// and combined coordinatewise with plain integer arithmetic.
namespace dimlat::fd {

using Shape = std::vector<long>;
using RankTuple = std::vector<long>;

/// Throws DomainError on an empty shape or a size below 1.
void validate_shape(const Shape& shape);

/// All prod(ni + 1) rank tuples, in lexicographic order.
std::vector<RankTuple> enumerate_classes(const Shape& shape);

bool rank_leq(const RankTuple& a, const RankTuple& b);
RankTuple rank_meet(const RankTuple& a, const RankTuple& b);
RankTuple rank_join(const RankTuple& a, const RankTuple& b);
/// Orthogonal sum; nullopt when some ki + li exceeds ni.
std::optional<RankTuple> rank_add(const Shape& shape, const RankTuple& a, const RankTuple& b);

/// [a1: I_fin(n1), a2: I_fin(n2), ...]
AlgebraRef shape_algebra(const Shape& shape);
/// Normalized trace ki / ni on each atom.
DimElement to_dim_element(const AlgebraRef& alg, const RankTuple& t);

struct OracleReport {
    std::size_t classes = 0;
    std::size_t checks = 0;
    std::vector<std::string> mismatches;
    [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

/// Exhaustive comparison of d_leq, pair_meet, pair_join and d_add against the rank
/// arithmetic on every pair of classes, plus injectivity of to_dim_element.
OracleReport check_shape(const Shape& shape);

} // namespace dimlat::fd
