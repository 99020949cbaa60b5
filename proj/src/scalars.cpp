#include "cellab/scalars.hpp"

namespace cellab {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpq_class v(s, 10);
      v.canonicalize();
      return Rational(v);
    }
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(s.substr(slash + 1), 10);
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_class v(num, den);
    v.canonicalize();
    return Rational(v);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) { d >>= 1; ++r; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t Fp::join_modulus(const Fp& o) const {
  if (p_ == 0) return o.p_;
  if (o.p_ == 0 || o.p_ == p_) return p_;
  throw std::invalid_argument("Fp: mixing elements of GF(" + std::to_string(p_) +
                              ") and GF(" + std::to_string(o.p_) + ")");
}

Fp& Fp::operator+=(const Fp& o) {
  p_ = join_modulus(o);
  if (p_ == 0) return *this;  // 0 + 0 of unspecified fields
  v_ = (v_ + o.v_) % p_;
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  p_ = join_modulus(o);
  if (p_ == 0) return *this;
  v_ = (v_ + p_ - o.v_ % p_) % p_;
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  p_ = join_modulus(o);
  if (p_ == 0) return *this;
  v_ = mulmod(v_ % p_, o.v_, p_);
  return *this;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
  // extended Euclid; p_ is prime so any nonzero value is invertible
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p_), newr = static_cast<long long>(v_);
  while (newr != 0) {
    long long q = r / newr;
    t -= q * newt; std::swap(t, newt);
    r -= q * newr; std::swap(r, newr);
  }
  if (t < 0) t += static_cast<long long>(p_);
  return Fp(static_cast<std::uint64_t>(t), p_);
}

Fp& Fp::operator/=(const Fp& o) {
  std::uint64_t p = join_modulus(o);
  if (o.v_ == 0) throw std::domain_error("Fp: division by zero");
  Fp inv = Fp(o.v_, p).inverse();
  p_ = p;
  v_ = mulmod(v_ % p, inv.v_, p);
  return *this;
}

Fp scalar_from_rational(const Fp& like, const Rational& q) {
  std::uint64_t p = like.modulus();
  mpz_class num = q.raw().get_num();
  mpz_class den = q.raw().get_den();
  mpz_class pz = mpz_class(static_cast<unsigned long>(p));
  mpz_class num_mod = ((num % pz) + pz) % pz;
  mpz_class den_mod = den % pz;
  if (den_mod == 0) {
    throw std::domain_error("rational " + q.str() + " has no image in GF(" + std::to_string(p) + ")");
  }
  Fp n(num_mod.get_ui(), p), d(den_mod.get_ui(), p);
  return n / d;
}

Fp make_prime_field_one(std::uint64_t p) {
  if (p >= (1ull << 61)) throw std::invalid_argument("GF(p): modulus must be < 2^61");
  if (!is_prime_u64(p)) throw std::invalid_argument("GF(p): modulus " + std::to_string(p) + " is not prime");
  return Fp(1, p);
}

}  // namespace cellab
