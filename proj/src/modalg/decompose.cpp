#include <stdexcept>
#include <string>

#include "exactalg/module_algebra.hpp"

namespace exactalg {

namespace {

// Polynomials, lowest coefficient first, no trailing zeros.
using Poly = std::vector<Scalar>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

long degree(const Poly& p) { return static_cast<long>(p.size()) - 1; }

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), b.front().field().zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, a.front().field().zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  const Field f = b.front().field();
  Poly q;
  if (degree(a) >= degree(b)) q.assign(a.size() - b.size() + 1, f.zero());
  const Scalar lead_inv = b.back().inverse();
  while (!a.empty() && degree(a) >= degree(b)) {
    const std::size_t shift = a.size() - b.size();
    Scalar c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly monic(Poly p) {
  Scalar inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

Poly gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : monic(a);
}

Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
  const Field f = mod.front().field();
  Poly r{f.one()};
  base = divmod(base, mod).second;
  while (e) {
    if (e & 1) r = divmod(mul(r, base), mod).second;
    e >>= 1;
    if (e) base = divmod(mul(base, base), mod).second;
  }
  return r;
}

Scalar evaluate(const Poly& p, const Scalar& x) {
  Scalar acc = x.field().zero();
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Roots of a squarefree polynomial that splits into linear factors over F_p.
void split_roots(const Poly& f, std::vector<Scalar>& out) {
  const Field k = f.front().field();
  const std::uint64_t p = k.characteristic();
  if (degree(f) <= 0) return;
  if (degree(f) == 1) {
    out.push_back(-f[0] / f[1]);
    return;
  }
  if (p == 2) {
    for (std::uint64_t c = 0; c < 2; ++c)
      if (evaluate(f, k.element(c)).is_zero()) out.push_back(k.element(c));
    return;
  }
  for (std::uint64_t a = 0;; ++a) {
    Poly shifted{k.element(a), k.one()};
    Poly g = sub(powmod(shifted, (p - 1) / 2, f), Poly{k.one()});
    g = gcd(f, g);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      split_roots(g, out);
      split_roots(divmod(f, g).first, out);
      return;
    }
  }
}

// Rational roots by the rational root test; gives up on large coefficients.
std::vector<Scalar> rational_roots(const Poly& f, bool& gave_up) {
  const Field q = Field::rationals();
  std::vector<Scalar> roots;
  mpz_class den = 1;
  for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : f) z.push_back(mpz_class(c.rational() * den));
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) roots.push_back(q.zero());
  const mpz_class a0 = abs(z[low]), an = abs(z.back());
  const mpz_class limit = mpz_class("1000000000000");
  if (a0 > limit || an > limit) {
    gave_up = true;
    return roots;
  }
  auto divisors = [](const mpz_class& n) {
    std::vector<mpz_class> d;
    for (mpz_class i = 1; i * i <= n; ++i)
      if (n % i == 0) {
        d.push_back(i);
        if (i * i != n) d.push_back(n / i);
      }
    return d;
  };
  for (const auto& r : divisors(a0))
    for (const auto& s : divisors(an))
      for (int sign : {1, -1}) {
        mpq_class cand(sign * r, s);
        cand.canonicalize();
        Scalar c = q.from_rational(cand);
        if (!evaluate(f, c).is_zero()) continue;
        bool dup = false;
        for (const auto& x : roots) dup = dup || x == c;
        if (!dup) roots.push_back(c);
      }
  return roots;
}

Vector power(const Algebra& a, const Vector& unit, Vector x, std::uint64_t e) {
  Vector r = unit;
  while (e) {
    if (e & 1) r = a.multiply(r, x);
    e >>= 1;
    if (e) x = a.multiply(x, x);
  }
  return r;
}

// p(z) with e as the unit.
Vector evaluate_at(const Algebra& a, const Poly& p, const Vector& z, const Vector& e) {
  Vector acc = zero_vector(a.field(), a.dim());
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = a.multiply(acc, z);
    axpy(acc, p[i], e);
  }
  return acc;
}

// Minimal polynomial of z in the unital subalgebra with unit e.
Poly minimal_polynomial(const Algebra& a, const Vector& z, const Vector& e) {
  const Field f = a.field();
  std::vector<Vector> powers{e};
  while (true) {
    Vector next = a.multiply(powers.back(), z);
    Matrix m = Matrix::from_columns(f, a.dim(), powers);
    if (auto c = solve(m, next)) {
      Poly p;
      for (const auto& x : *c) p.push_back(-x);
      p.push_back(f.one());
      return p;
    }
    powers.push_back(std::move(next));
  }
}

struct Piece {
  Vector idempotent;
  bool field_certified = false;
  bool unsplit = false;
};

Subspace piece_space(const Algebra& a, const Subspace& e_space, const Vector& e) {
  std::vector<Vector> gens;
  for (const auto& w : e_space.basis_vectors()) gens.push_back(a.multiply(e, w));
  return Subspace::span(a.field(), a.dim(), gens);
}

// Idempotents e_c with z e_c = c e_c, one per root of the minimal polynomial.
std::vector<Vector> lagrange_idempotents(const Algebra& a, const Vector& z, const Vector& e, const Poly& minpoly,
                                         const std::vector<Scalar>& roots) {
  const Field f = a.field();
  std::vector<Vector> out;
  for (const auto& c : roots) {
    Poly q = divmod(minpoly, Poly{-c, f.one()}).first;
    Vector v = evaluate_at(a, q, z, e);
    out.push_back(scale(evaluate(q, c).inverse(), v));
  }
  return out;
}

void split_prime(const Algebra& a, const Subspace& e_space, const Vector& e, std::vector<Piece>& out) {
  const Field f = a.field();
  Subspace p = piece_space(a, e_space, e);
  if (p.dim() <= 1) {
    out.push_back({e, true, false});
    return;
  }
  // Berlekamp subalgebra {z : z^p = z}; its dimension counts primitive idempotents.
  Matrix frob(f, p.dim(), p.dim());
  auto basis = p.basis_vectors();
  for (std::size_t k = 0; k < basis.size(); ++k)
    frob.set_column(k, p.coordinates(power(a, e, basis[k], f.characteristic())));
  Subspace fixed = null_space(frob - Matrix::identity(f, p.dim()));
  if (fixed.dim() == 1) {
    out.push_back({e, true, false});
    return;
  }
  Subspace line = Subspace::span(f, a.dim(), {e});
  for (const auto& c : fixed.basis_vectors()) {
    Vector z = p.inclusion().apply(c);
    if (line.contains(z)) continue;
    Poly m = minimal_polynomial(a, z, e);
    std::vector<Scalar> roots;
    split_roots(m, roots);
    for (auto& idem : lagrange_idempotents(a, z, e, m, roots)) split_prime(a, e_space, idem, out);
    return;
  }
  throw VerificationError("Berlekamp subalgebra has no element outside the unit line");
}

void split_rational(const Algebra& a, const Subspace& e_space, const Vector& e, std::vector<Piece>& out,
                    std::vector<std::string>& notes) {
  const Field f = a.field();
  Subspace p = piece_space(a, e_space, e);
  if (p.dim() <= 1) {
    out.push_back({e, true, false});
    return;
  }
  auto basis = p.basis_vectors();
  std::vector<Vector> candidates = basis;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) candidates.push_back(add(basis[i], scale(f.from_int(static_cast<long>(j + 1)), basis[j])));
  bool gave_up = false;
  for (const auto& z : candidates) {
    Poly m = minimal_polynomial(a, z, e);
    if (degree(m) < 2) continue;
    auto roots = rational_roots(m, gave_up);
    if (roots.empty()) continue;
    Vector ec = lagrange_idempotents(a, z, e, m, {roots.front()}).front();
    Vector rest = add(e, scale(-f.one(), ec));
    split_rational(a, e_space, ec, out, notes);
    split_rational(a, e_space, rest, out, notes);
    return;
  }
  notes.push_back("field extension needed: a " + std::to_string(p.dim()) +
                  "-dimensional piece of the invariant center has no rational splitting" +
                  (gave_up ? " (root search gave up on large coefficients)" : ""));
  out.push_back({e, false, true});
}

SimpleFactor make_factor(const ModuleAlgebra& ma, const Vector& e) {
  const Algebra& a = *ma.algebra();
  const Field f = ma.field();
  const std::size_t n = a.dim();
  Subspace support = image(a.right_mult(e));
  Vector complement = add(a.unit(), scale(-f.one(), e));
  Subspace kernel = image(a.right_mult(complement));
  auto basis = support.basis_vectors();
  const std::size_t d = basis.size();
  auto alg = std::make_shared<const Algebra>(Algebra::from_products(
      f, d, [&](std::size_t i, std::size_t j) { return support.coordinates(a.multiply(basis[i], basis[j])); },
      support.coordinates(e)));
  std::vector<Matrix> rho;
  for (const auto& m : ma.rhos()) {
    Matrix r(f, d, d);
    for (std::size_t k = 0; k < d; ++k) r.set_column(k, support.coordinates(m.apply(basis[k])));
    rho.push_back(std::move(r));
  }
  Matrix proj(f, d, n);
  for (std::size_t i = 0; i < n; ++i) proj.set_column(i, support.coordinates(a.multiply(unit_vector(f, n, i), e)));
  return SimpleFactor{e, std::move(kernel), std::move(support), ModuleAlgebra(ma.hopf(), alg, std::move(rho)),
                      std::move(proj), false, ""};
}

}  // namespace

Decomposition decompose_simple_factors(const ModuleAlgebra& ma, std::uint64_t bound) {
  if (!is_exact(ma)) throw std::invalid_argument("decompose_simple_factors: the module algebra is not exact");
  const Algebra& a = *ma.algebra();
  const Field f = ma.field();
  Decomposition out;
  if (a.dim() == 0) return out;
  Subspace e_space = invariant_center(ma);
  std::vector<Piece> pieces;
  if (f.is_prime())
    split_prime(a, e_space, a.unit(), pieces);
  else
    split_rational(a, e_space, a.unit(), pieces, out.notes);
  for (const auto& piece : pieces) {
    SimpleFactor factor = make_factor(ma, piece.idempotent);
    if (a.multiply(piece.idempotent, piece.idempotent) != piece.idempotent)
      throw VerificationError("splitting produced a non-idempotent");
    if (enumeration_feasible(f, factor.factor.dim(), bound)) {
      factor.certified = is_ideal_object_simple_exhaustive(factor.factor, bound);
      factor.certificate = "exhaustive";
      if (!factor.certified) throw VerificationError("factor has a proper nonzero ideal object");
    } else if (piece.field_certified) {
      // An exact factor whose invariant center is a field has no proper ideal object.
      factor.certified = is_exact(factor.factor);
      factor.certificate = "invariant center is a field";
    }
    if (piece.unsplit) out.complete = false;
    out.factors.push_back(std::move(factor));
  }
  // The pieces are orthogonal and sum to the unit.
  Vector total = zero_vector(f, a.dim());
  for (const auto& fac : out.factors) total = add(total, fac.idempotent);
  if (total != a.unit()) throw VerificationError("factor idempotents do not sum to the unit");
  return out;
}

}  // namespace exactalg
