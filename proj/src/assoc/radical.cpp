#include <stdexcept>

#include "exactalg/algebra.hpp"

namespace exactalg {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Square integer matrix with entries reduced mod a prime power.
struct IntMatrix {
  std::size_t n;
  std::vector<u64> d;
};

IntMatrix lift(const Matrix& m) {
  IntMatrix out{m.rows(), std::vector<u64>(m.rows() * m.cols())};
  for (std::size_t i = 0; i < out.d.size(); ++i) out.d[i] = m.data()[i].residue();
  return out;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b, u64 mod) {
  const std::size_t n = a.n;
  IntMatrix c{n, std::vector<u64>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      u64 x = a.d[i * n + k];
      if (!x) continue;
      for (std::size_t j = 0; j < n; ++j)
        c.d[i * n + j] = static_cast<u64>((c.d[i * n + j] + static_cast<u128>(x) * b.d[k * n + j]) % mod);
    }
  return c;
}

IntMatrix power(IntMatrix base, u64 e, u64 mod) {
  const std::size_t n = base.n;
  IntMatrix r{n, std::vector<u64>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) r.d[i * n + i] = 1 % mod;
  while (e) {
    if (e & 1) r = mul(r, base, mod);
    e >>= 1;
    if (e) base = mul(base, base, mod);
  }
  return r;
}

u64 trace(const IntMatrix& a, u64 mod) {
  u128 t = 0;
  for (std::size_t i = 0; i < a.n; ++i) t += a.d[i * a.n + i];
  return static_cast<u64>(t % mod);
}

// Tr(x y) without forming the product.
Scalar product_trace(const Matrix& x, const Matrix& y) {
  Scalar t = x.field().zero();
  const std::size_t n = x.rows();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      if (!x(r, s).is_zero() && !y(s, r).is_zero()) t += x(r, s) * y(s, r);
  return t;
}

Matrix combine(Field f, const std::vector<Matrix>& basis, const Vector& coeffs, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!coeffs[k].is_zero()) m += coeffs[k] * basis[k];
  return m;
}

// Kernel of the functional table: coefficient vectors c on the current basis
// with sum_k c_k table(k, b) = 0 for every b, mapped back to full coordinates.
std::vector<Vector> restrict_layer(const std::vector<Vector>& current, const Matrix& table, Field f, std::size_t m) {
  Subspace keep = null_space(table.transpose());
  std::vector<Vector> next;
  for (auto& c : keep.basis_vectors()) {
    Vector full = zero_vector(f, m);
    for (std::size_t k = 0; k < current.size(); ++k)
      if (!c[k].is_zero()) axpy(full, c[k], current[k]);
    next.push_back(std::move(full));
  }
  return next;
}

Subspace radical_unverified(Field f, const std::vector<Matrix>& basis) {
  const std::size_t m = basis.size();
  if (m == 0) return Subspace::zero(f, 0);
  const std::size_t n = basis[0].rows();
  std::vector<Vector> current;
  for (std::size_t k = 0; k < m; ++k) current.push_back(unit_vector(f, m, k));

  // Layer 0 (and the whole answer in characteristic 0): the trace form kernel.
  {
    Matrix table(f, m, m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) table(a, b) = product_trace(basis[a], basis[b]);
    current = restrict_layer(current, table, f, m);
  }
  if (f.is_prime()) {
    // Iterated power traces g_i(x) = Tr(x~^(p^i)) / p^i mod p on integer lifts.
    const u64 p = f.characteristic();
    std::size_t layers = 0;
    for (u64 q = p; q <= n; q *= p) ++layers;
    u64 pi = 1;
    for (std::size_t i = 1; i <= layers && !current.empty(); ++i) {
      pi *= p;
      const u64 mod = pi * p;
      std::vector<IntMatrix> lifted;
      for (auto& c : current) lifted.push_back(lift(combine(f, basis, c, n)));
      std::vector<IntMatrix> lifted_basis;
      for (auto& b : basis) lifted_basis.push_back(lift(b));
      Matrix table(f, current.size(), m);
      for (std::size_t a = 0; a < current.size(); ++a)
        for (std::size_t b = 0; b < m; ++b) {
          // Reduce the product mod p before lifting, as the functional is defined on A.
          IntMatrix x = mul(lifted[a], lifted_basis[b], p);
          u64 t = trace(power(x, pi, mod), mod);
          if (t % pi != 0) throw VerificationError("power trace not divisible on a radical layer");
          table(a, b) = f.element((t / pi) % p);
        }
      current = restrict_layer(current, table, f, m);
    }
  }
  return Subspace::span(f, m, current);
}

std::vector<Matrix> regular_representation(const Algebra& a) { return a.left_basis_maps(); }

}  // namespace

Subspace matrix_algebra_radical(Field f, const std::vector<Matrix>& basis) {
  for (const auto& b : basis)
    if (b.rows() != b.cols() || (!basis.empty() && b.rows() != basis[0].rows()) || !(b.field() == f))
      throw std::invalid_argument("matrix_algebra_radical: basis matrices must be square of one size");
  return radical_unverified(f, basis);
}

Subspace radical(const Algebra& a) {
  Subspace rad = radical_unverified(a.field(), regular_representation(a));
  if (!is_two_sided_ideal(a, rad)) throw VerificationError("radical is not a two-sided ideal");
  if (!is_nilpotent_ideal(a, rad).first) throw VerificationError("radical is not nilpotent");
  if (!rad.is_zero()) {
    auto q = quotient_algebra(a, rad);
    if (!radical_unverified(q.algebra.field(), regular_representation(q.algebra)).is_zero())
      throw VerificationError("quotient by the radical is not semisimple");
  }
  return rad;
}

}  // namespace exactalg
