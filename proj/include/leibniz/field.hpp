#pragma once

// Exact coefficient arithmetic: arbitrary-precision rationals (GMP) and
// prime fields F_p with runtime modulus.  Nothing here ever rounds; every
// value has one canonical representation, so equality is grid equality
// everywhere downstream.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace leibniz {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a map fails to descend to a quotient; usually signals a wrong
// relation subspace (or an invalid crossed module) upstream.
struct not_well_defined : error {
  using error::error;
};

struct non_commuting_square : error {
  using error::error;
};

struct exactness_prereq_failed : error {
  using error::error;
};

struct capacity_exceeded : error {
  using error::error;
};

struct invalid_algebra : error {
  std::vector<std::array<int, 3>> violations;  // 1-based basis triples
  explicit invalid_algebra(const std::string& msg,
                           std::vector<std::array<int, 3>> v = {})
      : error(msg), violations(std::move(v)) {}
};

struct parse_failure : error {
  int line = 0;
  int column = 0;
  parse_failure(const std::string& msg, int l, int c)
      : error(msg + " (line " + std::to_string(l) + ", column " +
              std::to_string(c) + ")"),
        line(l),
        column(c) {}
};

inline bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

struct FieldSpec {
  enum class Kind { rationals, prime_field };
  Kind kind = Kind::rationals;
  std::uint32_t p = 0;  // characteristic; 0 for the rationals

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p) {
    if (!is_prime_u32(p) || p >= (1u << 31))
      throw error("field characteristic must be a prime < 2^31, got " +
                  std::to_string(p));
    return {Kind::prime_field, p};
  }

  bool operator==(const FieldSpec&) const = default;

  std::string str() const {
    return kind == Kind::rationals ? "Q" : "F" + std::to_string(p);
  }
};

// ---------------------------------------------------------------------------
// Rational: canonical arbitrary-precision fraction (den > 0, reduced).

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design for literals

  static Rational from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  bool is_zero() const { return sgn(v_) == 0; }

  Rational operator-() const { return from_raw(-v_); }
  Rational operator+(const Rational& o) const { return from_raw(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return from_raw(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return from_raw(v_ * o.v_); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw error("division by zero");
    return from_raw(v_ / o.v_);
  }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }

  std::string str() const { return v_.get_str(); }

 private:
  static Rational from_raw(mpq_class q) {
    // mpq arithmetic keeps canonical form when inputs are canonical.
    Rational r;
    r.v_ = std::move(q);
    return r;
  }
  mpq_class v_;
};

// ---------------------------------------------------------------------------
// Fp: element of F_p, 0 <= value < p.  A default-constructed element is the
// field-agnostic zero (p == 0); it may combine with any element.  Two nonzero
// elements with different moduli never meet (checked).

class Fp {
 public:
  Fp() = default;
  Fp(long n) {  // NOLINT: zero literal only; anything else needs a modulus
    if (n != 0)
      throw error("Fp constants other than 0 require a modulus; "
                  "use scalar_of<Fp>(field, n)");
  }
  Fp(std::int64_t v, std::uint32_t p) : p_(p) {
    if (p == 0) throw error("Fp modulus must be nonzero");
    v_ = static_cast<std::int64_t>(((v % p) + p) % p);
    if (v_ == 0) p_ = 0;
  }

  std::uint32_t modulus() const { return p_; }
  std::int64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const {
    if (is_zero()) return {};
    return Fp(p_ - v_, p_);
  }
  Fp operator+(const Fp& o) const {
    std::uint32_t p = join(o);
    if (p == 0) return {};
    return Fp(v_ + o.v_, p);
  }
  Fp operator-(const Fp& o) const {
    std::uint32_t p = join(o);
    if (p == 0) return {};
    return Fp(v_ - o.v_, p);
  }
  Fp operator*(const Fp& o) const {
    if (is_zero() || o.is_zero()) return {};
    join(o);
    return Fp(v_ * o.v_, p_);
  }
  Fp operator/(const Fp& o) const {
    if (o.is_zero()) throw error("division by zero");
    if (is_zero()) return {};
    join(o);
    return *this * o.inverse();
  }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp inverse() const {
    if (is_zero()) throw error("division by zero");
    // extended Euclid on (v, p)
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      a -= q * b;
      std::swap(a, b);
      x0 -= q * x1;
      std::swap(x0, x1);
    }
    return Fp(x0, p_);
  }

  bool operator==(const Fp& o) const {
    return v_ == o.v_ && (v_ == 0 || p_ == o.p_);
  }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  std::string str() const { return std::to_string(v_); }

 private:
  // common modulus of two operands; 0 iff both are zero
  std::uint32_t join(const Fp& o) const {
    if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
      throw error("mixing elements of F" + std::to_string(p_) + " and F" +
                  std::to_string(o.p_));
    return p_ != 0 ? p_ : o.p_;
  }

  std::int64_t v_ = 0;
  std::uint32_t p_ = 0;
};

template <class K>
concept ScalarType = requires(K a, K b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
};

// Mint a constant in the given field.
template <ScalarType K>
K scalar_of(const FieldSpec& fs, long n);

template <>
inline Rational scalar_of<Rational>(const FieldSpec&, long n) {
  return Rational(n);
}
template <>
inline Fp scalar_of<Fp>(const FieldSpec& fs, long n) {
  if (fs.kind != FieldSpec::Kind::prime_field)
    throw error("Fp scalar requested from a non prime-field spec");
  return Fp(n, fs.p);
}

inline bool valid_fraction_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i >= s.size()) return false;
  bool seen_slash = false, digit_here = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (seen_slash || !digit_here) return false;
      seen_slash = true;
      digit_here = false;
    } else if (s[i] >= '0' && s[i] <= '9') {
      digit_here = true;
    } else {
      return false;
    }
  }
  return digit_here;
}

// Parse "a" or "a/b".
template <ScalarType K>
K parse_scalar(const FieldSpec& fs, const std::string& s);

template <>
inline Rational parse_scalar<Rational>(const FieldSpec&, const std::string& s) {
  if (!valid_fraction_literal(s)) throw error("bad scalar literal '" + s + "'");
  mpq_class q(s);
  if (sgn(q.get_den()) == 0) throw error("zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational::from_mpq(q);
}

template <>
inline Fp parse_scalar<Fp>(const FieldSpec& fs, const std::string& s) {
  if (!valid_fraction_literal(s)) throw error("bad scalar literal '" + s + "'");
  auto slash = s.find('/');
  auto part = [&](const std::string& t) {
    return Fp(std::stoll(t), fs.p);
  };
  if (slash == std::string::npos) return part(s);
  return part(s.substr(0, slash)) / part(s.substr(slash + 1));
}

}  // namespace leibniz
