#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace coclass::linalg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_prime(std::uint64_t n) noexcept;

/// Raised when a field description is unusable (p = 2, composite, too large).
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arithmetic in F_p for an odd prime p < 2^16. Elements are canonical
/// residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  static constexpr std::uint32_t max_modulus = 1u << 16;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }

  value_type add(value_type a, value_type b) const noexcept {
    const value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }
  value_type inv(value_type a) const;

  bool is_zero(value_type a) const noexcept { return a == 0; }

  value_type from_int(std::int64_t v) const noexcept;
  /// Reduces num/den mod p; empty when p divides the denominator.
  std::optional<value_type> from_rational(const Rational& q) const;

  /// Representative in (-p/2, p/2), used for printing integer grids.
  std::int64_t symmetric(value_type a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }
  Rational to_rational(value_type a) const { return Rational(a); }
  std::string to_string(value_type a) const { return std::to_string(a); }
  std::string name() const { return "F_" + std::to_string(p_); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// Exact arithmetic in Q. Only used for identity checks, never enumeration.
class RationalField {
 public:
  using value_type = Rational;

  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw std::domain_error("inverse of zero in Q");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return a == 0; }

  value_type from_int(std::int64_t v) const { return Rational(v); }
  std::optional<value_type> from_rational(const Rational& q) const { return q; }

  Rational to_rational(const value_type& a) const { return a; }
  std::string to_string(const value_type& a) const { return a.str(); }
  std::string name() const { return "Q"; }

  bool operator==(const RationalField&) const = default;
};

template <class F>
concept Field = std::equality_comparable<F> && requires(const F& f, const typename F::value_type& a,
                                                        std::int64_t i, const Rational& q) {
  typename F::value_type;
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.neg(a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.from_int(i) } -> std::convertible_to<typename F::value_type>;
  { f.from_rational(q) };
  { f.to_string(a) } -> std::convertible_to<std::string>;
};

/// Field choice as it appears in catalog files and on the command line.
class FieldSpec {
 public:
  static FieldSpec prime(std::uint32_t p);
  static FieldSpec rational() { return FieldSpec(); }

  bool is_prime() const noexcept { return p_ != 0; }
  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t modulus() const;

  PrimeField prime_field() const { return PrimeField(modulus()); }
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec() = default;
  std::uint32_t p_ = 0;
};

}  // namespace coclass::linalg
