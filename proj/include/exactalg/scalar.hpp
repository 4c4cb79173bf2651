#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace exactalg {

class Scalar;

// Prime field F_p (p < 2^32) or the rationals (characteristic 0).
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);
  static Field from_characteristic(std::uint64_t c);
  // Accepts "Q", "0", or a prime such as "2".
  static Field parse(std::string_view text);

  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime() const noexcept { return p_ != 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  // Residue r (reduced mod p); prime fields only.
  Scalar element(std::uint64_t r) const;
  Scalar parse_scalar(std::string_view text) const;
  // Rationals only.
  Scalar from_rational(const mpq_class& q) const;

  // "Q" or the decimal characteristic.
  std::string name() const;

  friend bool operator==(Field a, Field b) noexcept { return a.p_ == b.p_; }

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

class Scalar {
 public:
  Field field() const noexcept { return Field(p_); }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  // Residue in [0, p); throws on rationals.
  std::uint64_t residue() const;
  // Throws on prime fields.
  const mpq_class& rational() const;

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  friend class Field;
  Scalar(std::uint64_t p, std::uint64_t r) : p_(p), v_(r) {}
  explicit Scalar(mpq_class q) : p_(0), v_(std::move(q)) {}
  void require_same(const Scalar& o) const;

  std::uint64_t p_;
  std::variant<std::uint64_t, mpq_class> v_;
};

}  // namespace exactalg
