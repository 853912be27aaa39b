#include "coclass/linalg/field.hpp"

#include <utility>

namespace coclass::linalg {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p == 2) {
    throw FieldError("characteristic 2 is not supported");
  }
  if (p >= max_modulus) {
    throw FieldError("prime modulus " + std::to_string(p) + " exceeds 2^16");
  }
  if (!linalg::is_prime(p)) {
    throw FieldError(std::to_string(p) + " is not prime");
  }
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p_;
  return static_cast<value_type>(t);
}

PrimeField::value_type PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<value_type>(r);
}

std::optional<PrimeField::value_type> PrimeField::from_rational(const Rational& q) const {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt n = num % p_;
  if (n < 0) n += p_;
  const BigInt d = den % p_;
  if (d == 0) return std::nullopt;
  return mul(static_cast<value_type>(n), inv(static_cast<value_type>(d)));
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  PrimeField check(p);  // validates
  FieldSpec spec;
  spec.p_ = check.modulus();
  return spec;
}

std::uint32_t FieldSpec::modulus() const {
  if (p_ == 0) throw FieldError("rational field has no modulus");
  return p_;
}

std::string FieldSpec::name() const {
  return is_prime() ? "F_" + std::to_string(p_) : "Q";
}

}  // namespace coclass::linalg
