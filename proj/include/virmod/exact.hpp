#pragma once

// Exact scalars: arbitrary-precision rationals (GMP-backed) and residues
// modulo an odd prime.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace virmod {

/// Raised when a caller breaks a documented precondition.
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Exact fraction num/den, always in lowest terms with den >= 1.
class BigRational {
public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(implicit)
  BigRational(long num, long den);
  BigRational(const mpz_class& num, const mpz_class& den);
  explicit BigRational(mpq_class value);

  /// Parses "N", "-N" or "N/D". Throws std::invalid_argument on bad input
  /// or a zero denominator.
  static BigRational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;
  /// Always "n/d", including "0/1" and "3/1"; the serialized report form.
  std::string to_fraction_string() const;

  BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
  BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
  BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.value_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

/// Element of F_p for an odd prime p < 2^31.
class ModP {
public:
  ModP(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  ModP inverse() const;

  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend ModP operator-(const ModP& a) { return ModP(0, a.modulus_) - a; }

  friend bool operator==(const ModP&, const ModP&) = default;

  std::string to_string() const { return std::to_string(value_); }

private:
  void check_same_field(const ModP& o) const;

  std::uint32_t value_;
  std::uint32_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const ModP& x);

/// Image of a rational in F_p; empty (Undefined) when p divides the reduced
/// denominator.
using ModularValue = std::optional<ModP>;

// Embeds an integer into the scalar type of `like`. Lets field-generic code
// build constants without carrying a separate field object.
inline BigRational embed(long n, const BigRational&) { return BigRational(n); }
inline ModP embed(long n, const ModP& like) { return ModP(n, like.modulus()); }

inline bool is_zero(const BigRational& x) { return x.is_zero(); }
inline bool is_zero(const ModP& x) { return x.is_zero(); }

bool is_prime(std::uint64_t n);
/// All primes in [2, limit], ascending.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// v such that q = p^v * a/b with p dividing neither a nor b.
/// Throws std::domain_error for q == 0.
long p_valuation(const BigRational& q, std::uint32_t p);

/// Throws ContractViolation unless p is an odd prime.
ModularValue reduce_mod_p(const BigRational& q, std::uint32_t p);

}  // namespace virmod
