#include "exactalg/scalar.hpp"

#include <charconv>
#include <stdexcept>

namespace exactalg {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) throw std::invalid_argument("characteristic too large (need p < 2^32)");
  if (!is_prime_u64(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::from_characteristic(std::uint64_t c) { return c == 0 ? rationals() : prime(c); }

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "Q" || text == "q" || text == "0") return rationals();
  if (!text.empty() && (text[0] == 'F' || text[0] == 'f')) {
    text.remove_prefix(1);
    if (!text.empty() && text[0] == '_') text.remove_prefix(1);
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("unrecognised field '" + std::string(text) + "' (expected Q or a prime)");
  return prime(p);
}

Scalar Field::zero() const { return p_ == 0 ? Scalar(mpq_class(0)) : Scalar(p_, 0); }
Scalar Field::one() const { return p_ == 0 ? Scalar(mpq_class(1)) : Scalar(p_, 1); }

Scalar Field::from_int(std::int64_t v) const {
  if (p_ == 0) return Scalar(mpq_class(static_cast<long>(v)));
  std::int64_t m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return Scalar(p_, static_cast<std::uint64_t>(r));
}

Scalar Field::element(std::uint64_t r) const {
  if (p_ == 0) throw std::logic_error("element() needs a prime field");
  return Scalar(p_, r % p_);
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (p_ != 0) throw std::logic_error("from_rational() needs the rationals");
  mpq_class c = q;
  c.canonicalize();
  return Scalar(std::move(c));
}

Scalar Field::parse_scalar(std::string_view text) const {
  text = trim(text);
  auto slash = text.find('/');
  mpz_class num = parse_integer(slash == std::string_view::npos ? text : text.substr(0, slash));
  mpz_class den = slash == std::string_view::npos ? mpz_class(1) : parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (p_ == 0) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class n = num % pz;
  if (n < 0) n += pz;
  mpz_class d = den % pz;
  if (d < 0) d += pz;
  if (d == 0) throw std::invalid_argument("denominator vanishes mod " + std::to_string(p_));
  Scalar a(p_, n.get_ui());
  Scalar b(p_, d.get_ui());
  return a / b;
}

std::string Field::name() const { return p_ == 0 ? "Q" : std::to_string(p_); }

bool Scalar::is_zero() const noexcept {
  if (p_ != 0) return std::get<std::uint64_t>(v_) == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (p_ != 0) return std::get<std::uint64_t>(v_) == 1;
  return std::get<mpq_class>(v_) == 1;
}

std::uint64_t Scalar::residue() const {
  if (p_ == 0) throw std::logic_error("residue() on a rational scalar");
  return std::get<std::uint64_t>(v_);
}

const mpq_class& Scalar::rational() const {
  if (p_ != 0) throw std::logic_error("rational() on a prime-field scalar");
  return std::get<mpq_class>(v_);
}

void Scalar::require_same(const Scalar& o) const {
  if (p_ != o.p_) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (p_ != 0) return Scalar(p_, pow_mod(std::get<std::uint64_t>(v_), p_ - 2, p_));
  mpq_class q = 1 / std::get<mpq_class>(v_);
  return Scalar(std::move(q));
}

Scalar Scalar::pow(std::uint64_t e) const {
  if (p_ != 0) return Scalar(p_, pow_mod(std::get<std::uint64_t>(v_), e, p_));
  Scalar r = field().one();
  Scalar b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string Scalar::to_string() const {
  if (p_ != 0) return std::to_string(std::get<std::uint64_t>(v_));
  return std::get<mpq_class>(v_).get_str();
}

Scalar Scalar::operator-() const {
  if (p_ != 0) {
    auto r = std::get<std::uint64_t>(v_);
    return Scalar(p_, r == 0 ? 0 : p_ - r);
  }
  mpq_class q = -std::get<mpq_class>(v_);
  return Scalar(std::move(q));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (p_ != 0) {
    auto& r = std::get<std::uint64_t>(v_);
    r += std::get<std::uint64_t>(o.v_);
    if (r >= p_) r -= p_;
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  if (p_ != 0) {
    auto& r = std::get<std::uint64_t>(v_);
    auto s = std::get<std::uint64_t>(o.v_);
    r = r >= s ? r - s : r + p_ - s;
  } else {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  if (p_ != 0) {
    auto& r = std::get<std::uint64_t>(v_);
    r = mul_mod(r, std::get<std::uint64_t>(o.v_), p_);
  } else {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  if (a.p_ != 0) return std::get<std::uint64_t>(a.v_) == std::get<std::uint64_t>(b.v_);
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

}  // namespace exactalg
