#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace dimlat {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when a value or operand lies outside the domain an operation accepts.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Largest representable aleph index. Process-wide, default 8.
int max_aleph() noexcept;
/// Throws DomainError unless 0 <= level <= 64.
void set_max_aleph(int level);

/// RAII override of max_aleph(), restored on scope exit. Tests only; not thread-safe
/// with respect to concurrent readers that expect a fixed bound.
class MaxAlephScope {
  public:
    explicit MaxAlephScope(int level) : saved_{max_aleph()} { set_max_aleph(level); }
    ~MaxAlephScope() { set_max_aleph(saved_); }
    MaxAlephScope(const MaxAlephScope&) = delete;
    MaxAlephScope& operator=(const MaxAlephScope&) = delete;

  private:
    int saved_;
};

struct Aleph {
    int level = 0;
    friend auto operator<=>(const Aleph&, const Aleph&) = default;
};

/// A point of the value chain [0, inf) ∩ Q  ∪  {aleph_0, ..., aleph_max}.
///
/// Every finite value is below every aleph. Addition absorbs finite values into
/// alephs and takes the larger of two alephs, which is cardinal arithmetic with
/// the positive reals adjoined below aleph_0.
class ExtValue {
  public:
    ExtValue() = default;

    static ExtValue fin(Rational q);
    static ExtValue fin(long num, long den = 1);
    static ExtValue aleph(int level);

    [[nodiscard]] bool is_fin() const noexcept { return std::holds_alternative<Rational>(v_); }
    [[nodiscard]] bool is_aleph() const noexcept { return std::holds_alternative<Aleph>(v_); }
    [[nodiscard]] bool is_zero() const noexcept { return is_fin() && sgn(fin_value()) == 0; }

    /// Precondition: is_fin().
    [[nodiscard]] const Rational& fin_value() const { return std::get<Rational>(v_); }
    /// Precondition: is_aleph().
    [[nodiscard]] int aleph_level() const { return std::get<Aleph>(v_).level; }

    friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b);
    friend bool operator==(const ExtValue& a, const ExtValue& b) { return (a <=> b) == 0; }

    [[nodiscard]] std::string to_string() const;

  private:
    explicit ExtValue(Rational q) : v_{std::move(q)} {}
    explicit ExtValue(Aleph a) : v_{a} {}

    std::variant<Rational, Aleph> v_{Rational{0}};
};

std::strong_ordering compare(const ExtValue& a, const ExtValue& b);

ExtValue operator+(const ExtValue& a, const ExtValue& b);

/// lambda * a for lambda > 0. Alephs are fixed by every positive scalar.
ExtValue scale(const Rational& lambda, const ExtValue& a);

/// 0 * a. Always Fin(0); kept apart from scale() because the scaling laws hold for lambda > 0 only.
ExtValue zero_scale(const ExtValue& a);

const ExtValue& min(const ExtValue& a, const ExtValue& b);
const ExtValue& max(const ExtValue& a, const ExtValue& b);

std::string to_string(const Rational& q);

} // namespace dimlat
