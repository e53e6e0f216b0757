#include "dimlat/extval.hpp"

#include <atomic>

namespace dimlat {

namespace {
std::atomic<int> g_max_aleph{8};
constexpr int kAlephCeiling = 64;
} // namespace

int max_aleph() noexcept { return g_max_aleph.load(std::memory_order_relaxed); }

void set_max_aleph(int level) {
    if (level < 0 || level > kAlephCeiling)
        throw DomainError("max aleph index must lie in 0.." + std::to_string(kAlephCeiling));
    g_max_aleph.store(level, std::memory_order_relaxed);
}

ExtValue ExtValue::fin(Rational q) {
    q.canonicalize();
    if (sgn(q) < 0)
        throw DomainError("negative value " + dimlat::to_string(q) + " is not on the value chain");
    return ExtValue{std::move(q)};
}

ExtValue ExtValue::fin(long num, long den) {
    if (den == 0)
        throw DomainError("zero denominator");
    return fin(Rational{num, den});
}

ExtValue ExtValue::aleph(int level) {
    if (level < 0 || level > max_aleph())
        throw DomainError("aleph " + std::to_string(level) + " exceeds the configured maximum aleph " +
                          std::to_string(max_aleph()));
    return ExtValue{Aleph{level}};
}

std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
    if (a.is_fin() && b.is_fin()) {
        int c = cmp(a.fin_value(), b.fin_value());
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    if (a.is_fin())
        return std::strong_ordering::less;
    if (b.is_fin())
        return std::strong_ordering::greater;
    return a.aleph_level() <=> b.aleph_level();
}

std::strong_ordering compare(const ExtValue& a, const ExtValue& b) { return a <=> b; }

ExtValue operator+(const ExtValue& a, const ExtValue& b) {
    if (a.is_fin() && b.is_fin())
        return ExtValue::fin(Rational{a.fin_value() + b.fin_value()});
    return max(a, b);
}

ExtValue scale(const Rational& lambda, const ExtValue& a) {
    if (sgn(lambda) <= 0)
        throw DomainError("scale factor must be positive, got " + to_string(lambda));
    if (a.is_aleph())
        return a;
    return ExtValue::fin(Rational{lambda * a.fin_value()});
}

ExtValue zero_scale(const ExtValue&) { return ExtValue{}; }

const ExtValue& min(const ExtValue& a, const ExtValue& b) { return (b < a) ? b : a; }
const ExtValue& max(const ExtValue& a, const ExtValue& b) { return (a < b) ? b : a; }

std::string to_string(const Rational& q) { return q.get_str(); }

std::string ExtValue::to_string() const {
    if (is_aleph())
        return "aleph " + std::to_string(aleph_level());
    return dimlat::to_string(fin_value());
}

} // namespace dimlat
