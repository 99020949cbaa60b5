#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cellab {

/// Thrown when an operation is not defined for the active field
/// (e.g. radical computations in positive characteristic).
struct unsupported_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "p/q" or "p" (optionally signed decimal integers).
  static Rational parse(const std::string& s);

  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Element of the prime field GF(p), p prime < 2^61.
///
/// A default-constructed element is the zero of an unspecified prime field
/// (modulus 0); it combines with any element and adopts its modulus. Mixing
/// two elements with distinct nonzero moduli is an error.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(std::uint64_t v, std::uint64_t p) : p_(p) {
    if (p == 0) throw std::invalid_argument("Fp: zero modulus");
    v_ = v % p;
  }
  static Fp from_long(long v, std::uint64_t p) {
    long r = v % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  std::string str() const { return std::to_string(v_); }

  Fp operator-() const { return p_ == 0 ? Fp() : Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o);
  Fp inverse() const;

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) {
    return a.v_ == b.v_ && (a.v_ == 0 || a.p_ == b.p_ || a.p_ == 0 || b.p_ == 0);
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

 private:
  std::uint64_t join_modulus(const Fp& o) const;
  std::uint64_t v_, p_;
};

// --- uniform helpers used by scalar-generic code -------------------------
// The "like" argument supplies the field context (the modulus for GF(p));
// code that needs constants keeps a unit scalar around and builds from it.

inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational scalar_from_long(const Rational&, long v) { return Rational(v); }
inline Rational scalar_from_rational(const Rational&, const Rational& q) { return q; }
inline long field_characteristic(const Rational&) { return 0; }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline std::string scalar_str(const Rational& x) { return x.str(); }
inline Rational scalar_parse(const Rational&, const std::string& s) { return Rational::parse(s); }

inline Fp zero_like(const Fp& like) { return Fp(0, like.modulus()); }
inline Fp one_like(const Fp& like) { return Fp(1, like.modulus()); }
inline Fp scalar_from_long(const Fp& like, long v) { return Fp::from_long(v, like.modulus()); }
Fp scalar_from_rational(const Fp& like, const Rational& q);
inline long field_characteristic(const Fp& like) { return static_cast<long>(like.modulus()); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline std::string scalar_str(const Fp& x) { return x.str(); }
inline Fp scalar_parse(const Fp& like, const std::string& s);

inline Fp scalar_parse(const Fp& like, const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Fp: empty scalar string");
  return Fp(std::stoull(s), like.modulus());
}

/// Unit of GF(p); validates primality (p prime, p < 2^61).
Fp make_prime_field_one(std::uint64_t p);

}  // namespace cellab
