// Exact coefficient fields: the rationals (arbitrary precision, GMP) and
// prime fields F_p for odd primes p < 2^31.
//
// Every algorithm in fiberlab is a template over a field policy `F` with the
// interface of PrimeField / RationalField below. Elements are plain values
// (`F::Element`); the policy object carries the characteristic.

#ifndef FIBERLAB_COEFFS_HPP
#define FIBERLAB_COEFFS_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include <gmpxx.h>

namespace fiberlab {

inline constexpr std::uint32_t kDefaultPrime = 32003;

enum class FieldKind { rationals, prime_field };

struct FieldSpec {
  FieldKind kind = FieldKind::prime_field;
  std::uint32_t characteristic = kDefaultPrime;

  static FieldSpec rationals() { return {FieldKind::rationals, 0}; }
  static FieldSpec prime(std::uint64_t p);
  /// 0 selects the rationals, anything else must be an odd prime.
  static FieldSpec from_characteristic(std::uint64_t c) {
    return c == 0 ? rationals() : prime(c);
  }

  std::string to_string() const {
    return kind == FieldKind::rationals ? std::string("QQ")
                                        : "ZZ/" + std::to_string(characteristic);
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

inline FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2) throw std::invalid_argument("characteristic 2 is not supported (must be 0 or an odd prime)");
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  // Elements are < 2^31, so a*b + c < 2^62 never overflows 64-bit arithmetic.
  if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("prime characteristic must be below 2^31");
  return {FieldKind::prime_field, static_cast<std::uint32_t>(p)};
}

/// Inverse of a modulo m by the extended Euclidean algorithm; requires gcd(a, m) = 1.
inline std::uint32_t modular_inverse(std::uint32_t a, std::uint32_t m) {
  std::int64_t r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  if (r0 != 1) throw std::domain_error("element is not invertible");
  if (s0 < 0) s0 += m;
  return static_cast<std::uint32_t>(s0);
}

class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(FieldSpec::prime(p).characteristic) {}

  FieldSpec spec() const { return {FieldKind::prime_field, p_}; }
  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element from_mpz(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Element>(r.get_ui());
  }

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("division by zero in " + spec().to_string());
    return modular_inverse(a, p_);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  /// Uniform nonzero element. Uses the raw engine output so that draws are
  /// identical on every standard library.
  Element random_nonzero(std::mt19937_64& rng) const {
    return static_cast<Element>(1 + rng() % (p_ - 1));
  }

  /// Symmetric representative in (-p/2, p/2], which the parser maps back to
  /// the same residue.
  std::string to_string(Element a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }
  /// Integer value of the symmetric representative.
  std::int64_t to_int(Element a) const {
    return a > p_ / 2 ? -static_cast<std::int64_t>(p_ - a) : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Element = mpq_class;

  /// Magnitude bound for random coefficients (nonzero integers in [-bound, bound]).
  static constexpr std::uint64_t kRandomBound = 100;

  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::uint32_t characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  Element from_mpz(const mpz_class& v) const { return Element(v); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero in QQ");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  Element random_nonzero(std::mt19937_64& rng) const {
    std::int64_t v = static_cast<std::int64_t>(1 + rng() % kRandomBound);
    if (rng() & 1) v = -v;
    return from_int(v);
  }

  std::string to_string(const Element& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// A field element bundled with its field, for callers that want value
/// semantics and mismatch checking. The algorithms use the bare policy form.
template <class F>
class FieldElement {
 public:
  using Element = typename F::Element;

  FieldElement(F field, Element value) : field_(std::move(field)), value_(std::move(value)) {}
  static FieldElement from_int(const F& field, std::int64_t v) { return {field, field.from_int(v)}; }

  const F& field() const { return field_; }
  const Element& value() const { return value_; }
  FieldSpec spec() const { return field_.spec(); }
  bool is_zero() const { return field_.is_zero(value_); }

  FieldElement inverse() const { return {field_, field_.inv(value_)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_.add(a.value_, b.value_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_.sub(a.value_, b.value_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_.mul(a.value_, b.value_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_.div(a.value_, b.value_)};
  }
  friend FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_.neg(a.value_)}; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.spec() == b.spec() && a.field_.equal(a.value_, b.value_);
  }

  std::string to_string() const { return field_.to_string(value_); }

 private:
  static void check(const FieldElement& a, const FieldElement& b) {
    if (!(a.spec() == b.spec()))
      throw std::invalid_argument("field mismatch: " + a.spec().to_string() + " vs " + b.spec().to_string());
  }

  F field_;
  Element value_;
};

}  // namespace fiberlab

#endif  // FIBERLAB_COEFFS_HPP
