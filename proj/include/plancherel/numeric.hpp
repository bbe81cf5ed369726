#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace plancherel {

// Arbitrary-precision integer. n! overflows 64 bits already at n = 21, and
// dimensions/path counts grow super-exponentially, so everything exact is
// carried in cpp_int.
using Int = boost::multiprecision::cpp_int;

// Thrown when an exact identity that must hold fails (signals a bug, not bad input).
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Thrown when an internal consistency check fails (e.g. a character sum that
// must be a non-negative integer is not).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Thrown when a requested exact computation exceeds the enumeration cap.
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact rational with positive, reduced denominator. A thin wrapper over
// cpp_int rather than cpp_rational so the constructor set stays small and
// the type nests cleanly inside Eigen expressions.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}            // NOLINT: implicit by design
  Rational(long long v) : num_(v), den_(1) {}      // NOLINT
  Rational(Int v) : num_(std::move(v)), den_(1) {} // NOLINT
  Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Denominators are positive, so cross-multiplication preserves order.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_, den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline double to_double(const Rational& r) {
  // cpp_rational's conversion handles scaling/rounding for huge operands.
  boost::multiprecision::cpp_rational q(r.num(), r.den());
  return q.convert_to<double>();
}

inline double to_double(const Int& v) { return v.convert_to<double>(); }

inline std::string to_string(const Rational& r) {
  std::string s = r.num().str();
  if (r.den() != 1) s += "/" + r.den().str();
  return s;
}

// Parses "p" or "p/q".
inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << to_string(r);
}

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// x(x-1)...(x-k+1); empty product for k = 0.
inline Int falling_factorial(Int x, int k) {
  Int p = 1;
  for (int i = 0; i < k; ++i) p *= x - i;
  return p;
}

// (x+1)(x+2)...(x+k).
inline Int rising_factorial(Int x, int k) {
  Int p = 1;
  for (int i = 1; i <= k; ++i) p *= x + i;
  return p;
}

inline Int binomial2(const Int& x) { return x * (x - 1) / 2; }

inline Int int_pow(Int base, int exp) {
  Int r = 1;
  while (exp > 0) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

inline Rational rat_pow(const Rational& base, int exp) {
  return Rational(int_pow(base.num(), exp), int_pow(base.den(), exp));
}

// Cap for exhaustive enumeration of partitions of n; overridable via the
// PLANCHEREL_EXACT_CAP environment variable.
inline int exact_cap() {
  if (const char* env = std::getenv("PLANCHEREL_EXACT_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 40;
}

}  // namespace plancherel

namespace Eigen {

template <>
struct NumTraits<plancherel::Rational> : GenericNumTraits<plancherel::Rational> {
  using Real = plancherel::Rational;
  using NonInteger = plancherel::Rational;
  using Literal = plancherel::Rational;
  using Nested = plancherel::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40,
  };
  static plancherel::Rational epsilon() { return plancherel::Rational(0); }
  static plancherel::Rational dummy_precision() { return plancherel::Rational(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace plancherel {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatRowVector = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

}  // namespace plancherel
