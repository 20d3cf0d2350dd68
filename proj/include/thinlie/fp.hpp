#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace thinlie {

/// Residue of an element of F_p, always in [0, p).
using Residue = std::uint32_t;

class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The prime field F_p for an odd prime p < 2^16.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 16;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Residue reduce(std::int64_t a) const {
    const auto m = static_cast<std::int64_t>(p_);
    const auto r = a % m;
    return static_cast<Residue>(r < 0 ? r + m : r);
  }
  Residue add(Residue a, Residue b) const {
    const Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Residue inv(Residue a) const;
  Residue pow(Residue a, std::uint64_t e) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// An element of F_p carrying its modulus, for use outside the hot loops.
class Scalar {
 public:
  Scalar(const PrimeField& field, std::int64_t value)
      : p_(field.modulus()), v_(field.reduce(value)) {}

  Residue value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  PrimeField field() const { return PrimeField(p_); }
  bool is_zero() const { return v_ == 0; }

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  Scalar(std::uint32_t p, Residue v, int) : p_(p), v_(v) {}
  std::uint32_t p_;
  Residue v_;
};

/// C(a, b) mod p by Lucas' theorem (product of base-p digit binomials).
/// Returns 0 when b > a.
Residue lucas_binomial(std::uint64_t a, std::uint64_t b, const PrimeField& field);

inline Scalar lucas_binomial_scalar(std::uint64_t a, std::uint64_t b,
                                    const PrimeField& field) {
  return Scalar(field, lucas_binomial(a, b, field));
}

/// Integer power p^n, throwing on overflow past 2^31.
std::uint64_t int_pow(std::uint64_t base, unsigned exp);

}  // namespace thinlie
