#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "exactalg/matrix.hpp"

namespace exactalg {

// Subspace of k^n held by its reduced row echelon basis, so two subspaces
// are equal exactly when their bases agree.
class Subspace {
 public:
  static Subspace zero(Field f, std::size_t n);
  static Subspace full(Field f, std::size_t n);
  static Subspace span(Field f, std::size_t n, const std::vector<Vector>& vectors);
  // Row space of m.
  static Subspace row_space(const Matrix& m);

  Field field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient(); }

  // Rows form the echelon basis.
  const Matrix& basis() const noexcept { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  // Indices that are not pivots; they coordinatise k^n / this.
  std::vector<std::size_t> complement_coordinates() const;

  // v minus its echelon combination; zero iff v lies in the subspace.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  // Coefficients against the echelon basis; throws if v is not in the span.
  Vector coordinates(const Vector& v) const;
  // Linear map k^n -> k^n / this in complement coordinates.
  Matrix quotient_projection() const;
  // n x dim matrix whose columns are the basis vectors.
  Matrix inclusion() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  friend class SpanBuilder;
  friend void for_each_subspace(Field, std::size_t, std::uint64_t,
                                const std::function<bool(const Subspace&)>&);

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// Incrementally grown span kept fully reduced.
class SpanBuilder {
 public:
  SpanBuilder(Field f, std::size_t n);
  explicit SpanBuilder(const Subspace& start);

  std::size_t dim() const noexcept { return rows_.size(); }
  Vector reduce(const Vector& v) const;
  // True when v enlarged the span.
  bool add(const Vector& v);
  Subspace build() const;

 private:
  Field field_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

Subspace null_space(const Matrix& m);
// Column space.
Subspace image(const Matrix& m);
// m applied to every vector of u.
Subspace image_of(const Matrix& m, const Subspace& u);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
// { x : m x in v }.
Subspace preimage(const Matrix& m, const Subspace& v);
// Largest U inside w with f(U) in U for every f.
Subspace largest_invariant_subspace(const std::vector<Matrix>& maps, const Subspace& w);
// Smallest subspace containing u and stable under every f.
Subspace invariant_closure(const std::vector<Matrix>& maps, const Subspace& u);
bool is_invariant(const Subspace& u, const std::vector<Matrix>& maps);

// Basis of { F : F src[j] = tgt[j] F for all j }, F a tgt_dim x src_dim matrix.
std::vector<Matrix> intertwiners(Field f, std::size_t src_dim, std::size_t tgt_dim,
                                 const std::vector<Matrix>& src, const std::vector<Matrix>& tgt);
// Unflatten a row-major vector of a null space into matrices.
std::vector<Matrix> as_matrices(const Subspace& s, std::size_t rows, std::size_t cols);

inline constexpr std::uint64_t kDefaultEnumerationBound = std::uint64_t{1} << 16;

// Visits every subspace of F_p^n (ordered by dimension, then pivot set, then
// free entries); the callback returns false to stop. Throws over Q or when
// p^n exceeds the bound.
void for_each_subspace(Field f, std::size_t n, std::uint64_t bound,
                       const std::function<bool(const Subspace&)>& visit);
std::vector<Subspace> enumerate_subspaces(Field f, std::size_t n,
                                          std::uint64_t bound = kDefaultEnumerationBound);
bool enumeration_feasible(Field f, std::size_t n, std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace exactalg
