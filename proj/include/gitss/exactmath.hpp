#pragma once

// Exact rationals, univariate polynomials over Q and the eventual ordering
// used for every "(⪰)" comparison of Hilbert-polynomial expressions.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gitss/error.hpp"

namespace gitss {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

/// Canonical "p/q" text, or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
  std::string s = numerator_of(q).str();
  if (!is_integral(q)) s += "/" + denominator_of(q).str();
  return s;
}

namespace detail {

inline bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') return false;
  out = Integer(std::string(text[0] == '+' ? text.substr(1) : text));
  return true;
}

}  // namespace detail

/// Parses "p", "-p" or "p/q" with q nonzero. Non-canonical input such as
/// "2/4" is accepted and reduced.
inline Rational parse_rational(std::string_view text) {
  Integer num, den{1};
  auto slash = text.find('/');
  bool ok = slash == std::string_view::npos
                ? detail::parse_integer(text, num)
                : detail::parse_integer(text.substr(0, slash), num) &&
                      detail::parse_integer(text.substr(slash + 1), den);
  require(ok, ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  require(den != 0, ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline Integer factorial(unsigned n) {
  Integer f{1};
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

inline Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer b{1};
  for (std::int64_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

enum class Order { Less, Equal, Greater };

inline std::string_view to_string(Order o) {
  switch (o) {
    case Order::Less: return "Less";
    case Order::Equal: return "Equal";
    case Order::Greater: return "Greater";
  }
  return "?";
}

/// Dense univariate polynomial over Q, constant term first. The zero
/// polynomial has no coefficients, so equality is structural.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return UniPoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
  }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const Rational& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(out));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Euclidean division; divisor must be nonzero.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    require(!b.is_zero(), ErrorCode::OutOfRange, "polynomial division by zero");
    UniPoly rem = a;
    if (a.degree() < b.degree()) return {UniPoly{}, rem};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const Rational lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
      Rational c = rem.leading() / lead;
      quot[shift] = c;
      rem -= monomial(c, shift) * b;
    }
    return {UniPoly(std::move(quot)), rem};
  }

  /// Scales to leading coefficient one (zero stays zero).
  UniPoly monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading());
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Eventual comparison: p ≺ q iff p(n) < q(n) for all n ≫ 0. Decided by the
/// sign of the leading coefficient of p − q.
inline Order poly_order(const UniPoly& p, const UniPoly& q) {
  UniPoly diff = p - q;
  if (diff.is_zero()) return Order::Equal;
  return diff.leading() > 0 ? Order::Greater : Order::Less;
}

/// True iff δ(n) > 0 for all n ≫ 0.
inline bool is_positive(const UniPoly& delta) { return poly_order(delta, UniPoly{}) == Order::Greater; }

/// p ⪰ 0, or p ≻ 0 when strict.
inline bool eventually_nonnegative(const UniPoly& p, bool strict) {
  Order o = poly_order(p, UniPoly{});
  return strict ? o == Order::Greater : o != Order::Less;
}

inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational a = c < 0 ? Rational(-c) : c;
    if (i == 0 || a != 1) os << to_string(a);
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os;
}

}  // namespace gitss
