#include "thinlie/fp.hpp"

#include <limits>
#include <vector>

namespace thinlie {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= kMaxModulus)
    throw FieldError("modulus " + std::to_string(p) + " exceeds the supported bound 2^16");
  if (p == 2 || !is_prime(p))
    throw FieldError("modulus " + std::to_string(p) + " is not an odd prime");
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const {
  Residue result = 1 % p_;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw FieldError("division by zero in F_p");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  return reduce(t);
}

namespace {
void require_same(const Scalar& a, const Scalar& b) {
  if (a.modulus() != b.modulus())
    throw FieldError("mixed moduli: " + std::to_string(a.modulus()) + " and " +
                     std::to_string(b.modulus()));
}
}  // namespace

Scalar Scalar::operator-() const { return Scalar(p_, field().neg(v_), 0); }
Scalar Scalar::inverse() const { return Scalar(p_, field().inv(v_), 0); }

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return Scalar(a.p_, a.field().add(a.v_, b.v_), 0);
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return Scalar(a.p_, a.field().sub(a.v_, b.v_), 0);
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return Scalar(a.p_, a.field().mul(a.v_, b.v_), 0);
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return a * b.inverse();
}

Residue lucas_binomial(std::uint64_t a, std::uint64_t b, const PrimeField& field) {
  const std::uint64_t p = field.modulus();
  Residue result = 1;
  while (b > 0) {
    const std::uint64_t ai = a % p, bi = b % p;
    if (bi > ai) return 0;
    // C(ai, bi) with ai < p: ratio of factorials, all invertible
    Residue num = 1, den = 1;
    for (std::uint64_t j = 0; j < bi; ++j) {
      num = field.mul(num, static_cast<Residue>(ai - j));
      den = field.mul(den, static_cast<Residue>(j + 1));
    }
    result = field.mul(result, field.mul(num, field.inv(den)));
    a /= p;
    b /= p;
  }
  return result;
}

std::uint64_t int_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::int32_t>::max() / base)
      throw std::overflow_error("integer power overflow");
    r *= base;
  }
  return r;
}

}  // namespace thinlie
