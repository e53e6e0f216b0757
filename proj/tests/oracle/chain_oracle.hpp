#pragma once

// Pointwise reference model for the value chain, written without the library's
// ordering and arithmetic: a value is a (tier, q) pair where tier 0 holds the
// finite rational q and tier 1 + i stands for aleph i.

#include <algorithm>
#include <vector>

#include <gmpxx.h>

#include "dimlat/dimfun.hpp"

namespace oracle {

struct Val {
    int tier = 0;
    mpq_class q = 0;
};

inline Val from(const dimlat::ExtValue& v) {
    if (v.is_aleph())
        return Val{1 + v.aleph_level(), 0};
    return Val{0, v.fin_value()};
}

inline dimlat::ExtValue to(const Val& v) {
    if (v.tier > 0)
        return dimlat::ExtValue::aleph(v.tier - 1);
    return dimlat::ExtValue::fin(v.q);
}

inline bool less(const Val& a, const Val& b) {
    if (a.tier != b.tier)
        return a.tier < b.tier;
    return a.tier == 0 && a.q < b.q;
}

inline bool leq(const Val& a, const Val& b) { return !less(b, a); }

inline Val add(const Val& a, const Val& b) {
    if (a.tier == 0 && b.tier == 0)
        return Val{0, a.q + b.q};
    return Val{std::max(a.tier, b.tier), 0};
}

inline Val vmax(const Val& a, const Val& b) { return less(a, b) ? b : a; }
inline Val vmin(const Val& a, const Val& b) { return less(a, b) ? a : b; }

/// Atom-wise maximum / minimum of a nonempty explicit family.
inline std::vector<dimlat::ExtValue> pointwise(const std::vector<dimlat::DimElement>& family, bool upper) {
    const std::size_t n = family.front().size();
    std::vector<dimlat::ExtValue> out;
    for (std::size_t i = 0; i < n; ++i) {
        Val acc = from(family.front()[i]);
        for (const auto& m : family)
            acc = upper ? vmax(acc, from(m[i])) : vmin(acc, from(m[i]));
        out.push_back(to(acc));
    }
    return out;
}

inline bool pointwise_leq(const dimlat::DimElement& a, const dimlat::DimElement& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!leq(from(a[i]), from(b[i])))
            return false;
    }
    return true;
}

} // namespace oracle
