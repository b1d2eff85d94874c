#include "virmod/exact.hpp"

#include <ostream>

namespace virmod {

BigRational::BigRational(long num, long den) : BigRational(mpz_class(num), mpz_class(den)) {}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("BigRational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::invalid_argument("BigRational: zero denominator");
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigRational: empty integer in '" + std::string(text) + "'");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("BigRational: bad integer '" + std::string(s) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("BigRational: bad integer '" + std::string(s) + "'");
    }
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_int(text), mpz_class(1));
  return BigRational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string BigRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_str();
}

std::string BigRational::to_fraction_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

ModP::ModP(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  if (modulus < 3 || modulus >= (1u << 31))
    throw ContractViolation("ModP: modulus must be an odd prime below 2^31");
  std::int64_t r = value % static_cast<std::int64_t>(modulus);
  if (r < 0) r += modulus;
  value_ = static_cast<std::uint32_t>(r);
}

void ModP::check_same_field(const ModP& o) const {
  if (modulus_ != o.modulus_) throw ContractViolation("ModP: mixed moduli");
}

ModP& ModP::operator+=(const ModP& o) {
  check_same_field(o);
  std::uint64_t s = std::uint64_t(value_) + o.value_;
  value_ = static_cast<std::uint32_t>(s >= modulus_ ? s - modulus_ : s);
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  check_same_field(o);
  value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + (modulus_ - o.value_);
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  check_same_field(o);
  value_ = static_cast<std::uint32_t>(std::uint64_t(value_) * o.value_ % modulus_);
  return *this;
}

ModP ModP::inverse() const {
  if (value_ == 0) throw std::domain_error("ModP: inverse of zero");
  // Fermat: x^(p-2).
  std::uint64_t base = value_, result = 1, e = modulus_ - 2;
  while (e) {
    if (e & 1) result = result * base % modulus_;
    base = base * base % modulus_;
    e >>= 1;
  }
  return ModP(static_cast<std::int64_t>(result), modulus_);
}

std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.value(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

long p_valuation(const BigRational& q, std::uint32_t p) {
  if (q.is_zero()) throw std::domain_error("p_valuation: valuation of zero is infinite");
  if (!is_prime(p)) throw ContractViolation("p_valuation: " + std::to_string(p) + " is not prime");
  const mpz_class prime(p);
  auto count = [&](mpz_class v) {
    mpz_class rest;
    v = abs(v);
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), v.get_mpz_t(), prime.get_mpz_t()));
  };
  return count(q.numerator()) - count(q.denominator());
}

ModularValue reduce_mod_p(const BigRational& q, std::uint32_t p) {
  if (p == 2 || !is_prime(p)) throw ContractViolation("reduce_mod_p: modulus must be an odd prime");
  const mpz_class prime(p);
  mpz_class den = q.denominator();
  if (mpz_divisible_p(den.get_mpz_t(), prime.get_mpz_t())) return std::nullopt;
  mpz_class num = q.numerator() % prime;  // may be negative
  mpz_class d = den % prime;
  ModP n(num.get_si(), p);
  return n / ModP(d.get_si(), p);
}

}  // namespace virmod
