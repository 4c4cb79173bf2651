#include <stdexcept>

#include "kleisli_internal.hpp"

namespace exactalg {

namespace kl {

TwistPair twist_pair(const HModule& x) {
  const HopfAlgebra& h = *x.hopf();
  const Field f = h.field();
  const std::size_t n = h.dim(), d = x.dim();
  std::vector<Matrix> s_act;
  for (std::size_t l = 0; l < n; ++l) s_act.push_back(x.act(h.antipode().column(l)));
  Matrix tw(f, n * d, n * d), un(f, n * d, n * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const Scalar& c = h.comult_coeff(i, j, l);
        if (c.is_zero()) continue;
        // b_i (x) v -> c b_j (x) b_l v, resp. c b_j (x) S(b_l) v.
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t k = 0; k < d; ++k) {
            if (!x.action(l)(r, k).is_zero()) tw(j * d + r, i * d + k) += c * x.action(l)(r, k);
            if (!s_act[l](r, k).is_zero()) un(j * d + r, i * d + k) += c * s_act[l](r, k);
          }
      }
  return {std::move(tw), std::move(un)};
}

void split_copies(const TwistPair& tp, std::size_t n, std::size_t d, std::vector<Matrix>& iota, std::vector<Matrix>& pi) {
  const Field f = tp.twist.field();
  for (std::size_t k = 0; k < d; ++k) {
    Matrix in(f, n * d, n), out(f, n, n * d);
    for (std::size_t i = 0; i < n; ++i) {
      in.set_column(i, tp.twist.column(i * d + k));
      out.set_row(i, tp.untwist.row(i * d + k));
    }
    iota.push_back(std::move(in));
    pi.push_back(std::move(out));
  }
}

Vector kron_apply(const Matrix& m, const Vector& v, std::size_t da) {
  Vector out = zero_vector(m.field(), m.rows() * da);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& c = m(i, j);
      if (c.is_zero()) continue;
      for (std::size_t a = 0; a < da; ++a)
        if (!v[j * da + a].is_zero()) out[i * da + a] += c * v[j * da + a];
    }
  return out;
}

Vector block_apply(const Matrix& m, const Vector& v) {
  const std::size_t blocks = v.size() / m.cols();
  Vector out = zero_vector(m.field(), blocks * m.rows());
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Scalar& x = v[b * m.cols() + j];
        if (!x.is_zero() && !m(i, j).is_zero()) out[b * m.rows() + i] += m(i, j) * x;
      }
  return out;
}

Vector unit_input(const KleisliContext& ctx, std::size_t s, std::size_t j) {
  const Field f = ctx.field();
  const Vector& uh = ctx.hopf()->algebra()->unit();
  const Vector& ua = ctx.module_algebra()->algebra()->unit();
  const std::size_t dx = ctx.cofactor(s).dim(), da = ctx.module_algebra()->dim();
  Vector w = zero_vector(f, ctx.free_dim(s));
  for (std::size_t i = 0; i < uh.size(); ++i) {
    if (uh[i].is_zero()) continue;
    for (std::size_t a = 0; a < da; ++a)
      if (!ua[a].is_zero()) w[(i * dx + j) * da + a] = uh[i] * ua[a];
  }
  return w;
}

Matrix coordinate_matrix(const KleisliContext& ctx, std::size_t s, std::size_t t, const Vector& c) {
  if (c.size() != ctx.hom_dim(s, t)) throw std::invalid_argument("hom coordinates have the wrong length");
  return Matrix::from_flat(ctx.field(), ctx.free_dim(t), ctx.cofactor(s).dim(), c);
}

Vector flatten(const Matrix& m) { return m.data(); }

Vector coordinates_of(const KleisliContext& ctx, std::size_t s, const Matrix& f) {
  const std::size_t dx = ctx.cofactor(s).dim();
  Matrix c(ctx.field(), f.rows(), dx);
  for (std::size_t j = 0; j < dx; ++j) c.set_column(j, f.apply(unit_input(ctx, s, j)));
  return flatten(c);
}

Vector compose_coordinates(const KleisliContext& ctx, const Matrix& g, std::size_t s, std::size_t t, const Vector& fc) {
  Matrix c = coordinate_matrix(ctx, s, t, fc);
  Matrix out(ctx.field(), g.rows(), c.cols());
  for (std::size_t j = 0; j < c.cols(); ++j) out.set_column(j, g.apply(c.column(j)));
  return flatten(out);
}

Matrix mate_unchecked(const KleisliContext& ctx, const Matrix& g) {
  const Algebra& a = *ctx.module_algebra()->algebra();
  const std::size_t da = a.dim(), dq = g.rows() / da, dp = g.cols();
  Matrix out(ctx.field(), dq * da, dp * da);
  for (std::size_t q = 0; q < dq; ++q)
    for (std::size_t x = 0; x < da; ++x)
      for (std::size_t p = 0; p < dp; ++p) {
        const Scalar& c = g(q * da + x, p);
        if (c.is_zero()) continue;
        for (std::size_t y = 0; y < da; ++y)
          for (std::size_t z = 0; z < da; ++z) {
            const Scalar& k = a.constant(x, y, z);
            if (!k.is_zero()) out(q * da + z, p * da + y) += c * k;
          }
      }
  return out;
}

}  // namespace kl

using namespace kl;

KleisliContext::KleisliContext(ModuleAlgebraPtr ma, std::size_t depth) : ma_(std::move(ma)) {
  if (!ma_) throw std::invalid_argument("Kleisli context over a null module algebra");
  if (depth == 0) throw std::invalid_argument("Kleisli context needs at least the regular probe");
  const HopfPtr& h = ma_->hopf();
  HModule reg = regular_module(h);
  HModule x = trivial_module(h);
  for (std::size_t k = 0; k < depth; ++k) {
    HModule p = tensor_module(reg, x);
    TwistPair tp = twist_pair(x);
    Probe pr{p, x, tensor_module(p, ma_->hmodule()), tp.untwist, {}, {}};
    split_copies(tp, h->dim(), x.dim(), pr.iota, pr.pi);
    probes_.push_back(std::move(pr));
    x = tensor_module(reg, x);
  }
  TwistPair sq = twist_pair(reg);
  split_copies(sq, h->dim(), h->dim(), square_iota_, square_pi_);
}

std::size_t default_probe_depth(const ModuleAlgebra& ma) {
  const std::size_t n = ma.hopf()->dim();
  return n * n * ma.dim() <= 64 ? 2 : 1;
}

Matrix KleisliContext::augmentation(std::size_t k) const {
  Matrix q = hopf()->counit();
  for (std::size_t i = 0; i < k; ++i) q = tensor(q, hopf()->counit());
  return q;
}

std::size_t KleisliContext::hom_dim(std::size_t s, std::size_t t) const {
  return cofactor(s).dim() * free_dim(t);
}

bool is_kleisli_hom(const KleisliContext& ctx, std::size_t s, std::size_t t, const Matrix& m) {
  if (m.rows() != ctx.free_dim(t) || m.cols() != ctx.free_dim(s)) return false;
  if (!is_module_map(ctx.free_hmodule(s), ctx.free_hmodule(t), m)) return false;
  const Algebra& a = *ctx.module_algebra()->algebra();
  const Field f = ctx.field();
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Matrix src = tensor(Matrix::identity(f, ctx.probe(s).dim()), a.right_basis(j));
    Matrix tgt = tensor(Matrix::identity(f, ctx.probe(t).dim()), a.right_basis(j));
    if (!(m * src == tgt * m)) return false;
  }
  return true;
}

Matrix probe_map(const KleisliContext& ctx, std::size_t k, const HModule& y, const Matrix& c) {
  const std::size_t n = ctx.hopf()->dim(), dx = ctx.cofactor(k).dim();
  if (c.rows() != y.dim() || c.cols() != dx) throw std::invalid_argument("probe_map: coordinates have the wrong shape");
  Matrix fl(ctx.field(), y.dim(), n * dx);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix block = y.action(i) * c;
    for (std::size_t x = 0; x < dx; ++x) fl.set_column(i * dx + x, block.column(x));
  }
  return fl * ctx.untwist(k);
}

std::vector<Matrix> probe_hom_basis(const KleisliContext& ctx, std::size_t k, const HModule& y) {
  const std::size_t dx = ctx.cofactor(k).dim();
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < y.dim(); ++r)
    for (std::size_t x = 0; x < dx; ++x) {
      Matrix c(ctx.field(), y.dim(), dx);
      c(r, x) = ctx.field().one();
      out.push_back(probe_map(ctx, k, y, c));
    }
  return out;
}

KleisliHom hom_from_coordinates(const KleisliContext& ctx, std::size_t s, std::size_t t, const Vector& c) {
  Matrix g = probe_map(ctx, s, ctx.free_hmodule(t), coordinate_matrix(ctx, s, t, c));
  return {s, t, mate_unchecked(ctx, g)};
}

Vector hom_coordinates(const KleisliContext& ctx, const KleisliHom& f) { return coordinates_of(ctx, f.source, f.matrix); }

std::vector<KleisliHom> hom_space(const KleisliContext& ctx, std::size_t s, std::size_t t) {
  std::vector<KleisliHom> out;
  const std::size_t d = ctx.hom_dim(s, t);
  for (std::size_t i = 0; i < d; ++i) out.push_back(hom_from_coordinates(ctx, s, t, unit_vector(ctx.field(), d, i)));
  return out;
}

KleisliHom identity_hom(const KleisliContext& ctx, std::size_t p) {
  return {p, p, Matrix::identity(ctx.field(), ctx.free_dim(p))};
}

KleisliHom compose(const KleisliHom& g, const KleisliHom& f) {
  if (g.source != f.target) throw std::invalid_argument("compose: probes do not match");
  return {f.source, g.target, g.matrix * f.matrix};
}

KleisliHom mate_free(const KleisliContext& ctx, const Matrix& g, std::size_t s, std::size_t t) {
  if (!is_module_map(ctx.probe(s), ctx.free_hmodule(t), g)) throw std::invalid_argument("mate_free: map is not H-linear");
  return {s, t, mate_unchecked(ctx, g)};
}

Matrix unit_restrict(const KleisliContext& ctx, const KleisliHom& f) {
  const Algebra& a = *ctx.module_algebra()->algebra();
  Matrix eta = Matrix::from_columns(ctx.field(), a.dim(), {a.unit()});
  return f.matrix * tensor(Matrix::identity(ctx.field(), ctx.probe(f.source).dim()), eta);
}

}  // namespace exactalg
