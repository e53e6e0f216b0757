#include "dimlat/chainset.hpp"

#include <algorithm>

namespace dimlat {

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

bool interval_empty(const RationalInterval& iv) {
    if (!iv.hi)
        return false;
    int c = cmp(iv.lo, *iv.hi);
    return c > 0 || (c == 0 && !(iv.lo_closed && iv.hi_closed));
}

bool interval_degenerate(const RationalInterval& iv) {
    return iv.hi && cmp(iv.lo, *iv.hi) == 0 && iv.lo_closed && iv.hi_closed;
}

// Integers covered by an interval, as [first, last] (last absent when unbounded).
// Returns false when no integer is covered.
bool covered_integers(const RationalInterval& iv, Integer& first, std::optional<Integer>& last) {
    first = iv.lo_closed ? ceil_of(iv.lo) : Integer{floor_of(iv.lo) + 1};
    last.reset();
    if (iv.hi) {
        Integer l = iv.hi_closed ? floor_of(*iv.hi) : Integer{ceil_of(*iv.hi) - 1};
        if (l < first)
            return false;
        last = l;
    }
    return true;
}

bool run_has(const std::vector<IntegerRun>& runs, const Rational& q) {
    return std::any_of(runs.begin(), runs.end(), [&](const IntegerRun& r) { return r.contains(q); });
}

bool point_has(const std::vector<Rational>& pts, const Rational& q) {
    return std::any_of(pts.begin(), pts.end(), [&](const Rational& p) { return cmp(p, q) == 0; });
}

void normalize_intervals(std::vector<RationalInterval>& ivs, std::vector<Rational>& points) {
    std::vector<RationalInterval> kept;
    for (auto& iv : ivs) {
        if (!iv.hi)
            iv.hi_closed = false;
        if (interval_degenerate(iv))
            points.push_back(iv.lo);
        else if (!interval_empty(iv))
            kept.push_back(std::move(iv));
    }
    std::sort(kept.begin(), kept.end(), [](const RationalInterval& a, const RationalInterval& b) {
        int c = cmp(a.lo, b.lo);
        if (c != 0)
            return c < 0;
        return a.lo_closed && !b.lo_closed;
    });
    ivs.clear();
    for (auto& iv : kept) {
        if (!ivs.empty()) {
            auto& cur = ivs.back();
            bool touches = !cur.hi;
            if (!touches) {
                int c = cmp(iv.lo, *cur.hi);
                touches = c < 0 || (c == 0 && (cur.hi_closed || iv.lo_closed));
            }
            if (touches) {
                if (cur.hi) {
                    if (!iv.hi) {
                        cur.hi.reset();
                        cur.hi_closed = false;
                    } else {
                        int c = cmp(*iv.hi, *cur.hi);
                        if (c > 0) {
                            cur.hi = iv.hi;
                            cur.hi_closed = iv.hi_closed;
                        } else if (c == 0) {
                            cur.hi_closed = cur.hi_closed || iv.hi_closed;
                        }
                    }
                }
                continue;
            }
        }
        ivs.push_back(std::move(iv));
    }
}

void subtract(std::vector<IntegerRun>& runs, const Integer& first, const std::optional<Integer>& last) {
    std::vector<IntegerRun> out;
    for (auto& r : runs) {
        bool disjoint = (last && *last < r.lo) || (r.hi && first > *r.hi);
        if (disjoint) {
            out.push_back(std::move(r));
            continue;
        }
        if (first > r.lo)
            out.push_back(IntegerRun{r.lo, Integer{first - 1}});
        if (last && (!r.hi || *last + 1 <= *r.hi))
            out.push_back(IntegerRun{Integer{*last + 1}, r.hi});
    }
    runs = std::move(out);
}

} // namespace

bool RationalInterval::contains(const Rational& q) const {
    int c = cmp(q, lo);
    if (c < 0 || (c == 0 && !lo_closed))
        return false;
    if (!hi)
        return true;
    c = cmp(q, *hi);
    return c < 0 || (c == 0 && hi_closed);
}

bool IntegerRun::contains(const Rational& q) const {
    if (!is_integer(q))
        return false;
    const Integer n = q.get_num();
    return n >= lo && (!hi || n <= *hi);
}

ChainSet ChainSet::of(std::vector<RationalInterval> intervals, std::vector<IntegerRun> runs,
                      std::vector<Rational> points, std::vector<int> alephs) {
    ChainSet s;
    s.intervals_ = std::move(intervals);
    s.runs_ = std::move(runs);
    s.points_ = std::move(points);
    s.alephs_ = std::move(alephs);
    s.canonicalize();
    return s;
}

ChainSet ChainSet::point(const ExtValue& v) { return points({v}); }

ChainSet ChainSet::points(const std::vector<ExtValue>& vs) {
    std::vector<Rational> pts;
    std::vector<int> als;
    for (const auto& v : vs) {
        if (v.is_fin())
            pts.push_back(v.fin_value());
        else
            als.push_back(v.aleph_level());
    }
    return of({}, {}, std::move(pts), std::move(als));
}

ChainSet ChainSet::interval(Rational lo, bool lo_closed, std::optional<Rational> hi, bool hi_closed) {
    return of({RationalInterval{std::move(lo), lo_closed, std::move(hi), hi_closed}}, {}, {}, {});
}

ChainSet ChainSet::naturals() { return of({}, {IntegerRun{Integer{0}, std::nullopt}}, {}, {}); }

void ChainSet::canonicalize() {
    for (int a : alephs_) {
        if (a < 0 || a > max_aleph())
            throw DomainError("aleph " + std::to_string(a) + " exceeds the configured maximum aleph " +
                              std::to_string(max_aleph()));
    }
    std::sort(alephs_.begin(), alephs_.end());
    alephs_.erase(std::unique(alephs_.begin(), alephs_.end()), alephs_.end());

    for (auto& q : points_) {
        q.canonicalize();
        if (sgn(q) < 0)
            throw DomainError("negative value " + dimlat::to_string(q) + " in chain set");
    }
    for (auto& iv : intervals_) {
        iv.lo.canonicalize();
        if (iv.hi)
            iv.hi->canonicalize();
        if (sgn(iv.lo) < 0)
            throw DomainError("negative interval end " + dimlat::to_string(iv.lo) + " in chain set");
    }
    for (const auto& r : runs_) {
        if (r.lo < 0)
            throw DomainError("negative run start in chain set");
    }
    runs_.erase(std::remove_if(runs_.begin(), runs_.end(), [](const IntegerRun& r) { return r.hi && *r.hi < r.lo; }),
                runs_.end());

    // Close open ends that coincide with discrete members; closing can enable merges.
    for (;;) {
        normalize_intervals(intervals_, points_);
        bool changed = false;
        for (auto& iv : intervals_) {
            if (!iv.lo_closed && (point_has(points_, iv.lo) || run_has(runs_, iv.lo))) {
                iv.lo_closed = true;
                changed = true;
            }
            if (iv.hi && !iv.hi_closed && (point_has(points_, *iv.hi) || run_has(runs_, *iv.hi))) {
                iv.hi_closed = true;
                changed = true;
            }
        }
        if (!changed)
            break;
    }

    points_.erase(std::remove_if(points_.begin(), points_.end(),
                                 [this](const Rational& q) {
                                     return std::any_of(intervals_.begin(), intervals_.end(),
                                                        [&](const RationalInterval& iv) { return iv.contains(q); });
                                 }),
                  points_.end());

    for (const auto& iv : intervals_) {
        Integer first;
        std::optional<Integer> last;
        if (covered_integers(iv, first, last))
            subtract(runs_, first, last);
    }

    // Integer points join the runs; maximal blocks of consecutive integers are rebuilt.
    std::vector<Rational> fractional;
    for (auto& q : points_) {
        if (is_integer(q))
            runs_.push_back(IntegerRun{q.get_num(), Integer{q.get_num()}});
        else
            fractional.push_back(std::move(q));
    }
    std::sort(runs_.begin(), runs_.end(), [](const IntegerRun& a, const IntegerRun& b) { return a.lo < b.lo; });
    std::vector<IntegerRun> merged;
    for (auto& r : runs_) {
        if (!merged.empty()) {
            auto& cur = merged.back();
            if (!cur.hi || r.lo <= *cur.hi + 1) {
                if (cur.hi && (!r.hi || *r.hi > *cur.hi))
                    cur.hi = r.hi;
                continue;
            }
        }
        merged.push_back(std::move(r));
    }
    runs_.clear();
    for (auto& r : merged) {
        if (r.hi && *r.hi == r.lo)
            fractional.push_back(Rational{r.lo});
        else
            runs_.push_back(std::move(r));
    }
    std::sort(fractional.begin(), fractional.end());
    fractional.erase(std::unique(fractional.begin(), fractional.end()), fractional.end());
    points_ = std::move(fractional);
}

bool ChainSet::empty() const { return !has_fin() && alephs_.empty(); }

bool ChainSet::has_fin() const { return !intervals_.empty() || !runs_.empty() || !points_.empty(); }

bool ChainSet::contains(const ExtValue& v) const {
    if (v.is_aleph())
        return std::binary_search(alephs_.begin(), alephs_.end(), v.aleph_level());
    const Rational& q = v.fin_value();
    return point_has(points_, q) || run_has(runs_, q) ||
           std::any_of(intervals_.begin(), intervals_.end(), [&](const RationalInterval& iv) { return iv.contains(q); });
}

bool ChainSet::fin_unbounded() const {
    return std::any_of(intervals_.begin(), intervals_.end(), [](const RationalInterval& iv) { return !iv.hi; }) ||
           std::any_of(runs_.begin(), runs_.end(), [](const IntegerRun& r) { return !r.hi; });
}

std::optional<Rational> ChainSet::fin_sup() const {
    if (!has_fin() || fin_unbounded())
        return std::nullopt;
    std::optional<Rational> best;
    auto offer = [&](const Rational& q) {
        if (!best || q > *best)
            best = q;
    };
    for (const auto& iv : intervals_)
        offer(*iv.hi);
    for (const auto& r : runs_)
        offer(Rational{*r.hi});
    for (const auto& p : points_)
        offer(p);
    return best;
}

ChainSet ChainSet::unite(const ChainSet& other) const {
    auto ivs = intervals_;
    ivs.insert(ivs.end(), other.intervals_.begin(), other.intervals_.end());
    auto runs = runs_;
    runs.insert(runs.end(), other.runs_.begin(), other.runs_.end());
    auto pts = points_;
    pts.insert(pts.end(), other.points_.begin(), other.points_.end());
    auto als = alephs_;
    als.insert(als.end(), other.alephs_.begin(), other.alephs_.end());
    return of(std::move(ivs), std::move(runs), std::move(pts), std::move(als));
}

ChainSet ChainSet::closure() const {
    auto ivs = intervals_;
    for (auto& iv : ivs) {
        iv.lo_closed = true;
        if (iv.hi)
            iv.hi_closed = true;
    }
    return of(std::move(ivs), runs_, points_, alephs_);
}

std::string ChainSet::to_string() const {
    struct Item {
        Rational key;
        std::string text;
    };
    std::vector<Item> items;
    for (const auto& iv : intervals_) {
        std::string t = iv.lo_closed ? "[" : "(";
        t += dimlat::to_string(iv.lo) + ", ";
        t += iv.hi ? dimlat::to_string(*iv.hi) + (iv.hi_closed ? "]" : ")") : std::string{"inf)"};
        items.push_back({iv.lo, t});
    }
    for (const auto& r : runs_) {
        std::string t;
        if (r.lo == 0 && !r.hi)
            t = "naturals";
        else
            t = r.lo.get_str() + ".." + (r.hi ? r.hi->get_str() : std::string{"inf"});
        items.push_back({Rational{r.lo}, t});
    }
    for (const auto& p : points_)
        items.push_back({p, dimlat::to_string(p)});
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.key < b.key; });

    std::string out = "{";
    bool first = true;
    for (const auto& it : items) {
        out += first ? " " : ", ";
        out += it.text;
        first = false;
    }
    for (int a : alephs_) {
        out += first ? " " : ", ";
        out += "aleph " + std::to_string(a);
        first = false;
    }
    out += first ? "}" : " }";
    return out;
}

ExtValue chain_lub(const ChainSet& s) {
    if (!s.alephs().empty())
        return ExtValue::aleph(s.alephs().back());
    if (s.fin_unbounded())
        return ExtValue::aleph(0);
    if (auto sup = s.fin_sup())
        return ExtValue::fin(*sup);
    return ExtValue{};
}

ExtValue chain_glb(const ChainSet& s) {
    if (s.empty())
        throw DomainError("greatest lower bound of an empty chain set");
    if (!s.has_fin())
        return ExtValue::aleph(s.alephs().front());
    std::optional<Rational> best;
    auto offer = [&](const Rational& q) {
        if (!best || q < *best)
            best = q;
    };
    if (!s.intervals().empty())
        offer(s.intervals().front().lo);
    if (!s.runs().empty())
        offer(Rational{s.runs().front().lo});
    if (!s.fin_points().empty())
        offer(s.fin_points().front());
    return ExtValue::fin(*best);
}

} // namespace dimlat
