#pragma once

#include "exactalg/kleisli.hpp"

namespace exactalg::kl {

struct TwistPair {
  // H (x) X_trivial -> H (x) X and its inverse.
  Matrix twist;
  Matrix untwist;
};

TwistPair twist_pair(const HModule& x);
void split_copies(const TwistPair& tp, std::size_t n, std::size_t d, std::vector<Matrix>& iota, std::vector<Matrix>& pi);

// (m (x) id_A) v for v in V (x) A, dim A = da.
Vector kron_apply(const Matrix& m, const Vector& v, std::size_t da);
// (id (x) m) v.
Vector block_apply(const Matrix& m, const Vector& v);
// 1_H (x) x_j (x) 1_A in P_s (x) A.
Vector unit_input(const KleisliContext& ctx, std::size_t s, std::size_t j);
Matrix coordinate_matrix(const KleisliContext& ctx, std::size_t s, std::size_t t, const Vector& c);
Vector flatten(const Matrix& m);
// Coordinates of a Kleisli map out of probe s given as a full matrix.
Vector coordinates_of(const KleisliContext& ctx, std::size_t s, const Matrix& f);
// Coordinates of g o f from g's matrix and f's coordinates.
Vector compose_coordinates(const KleisliContext& ctx, const Matrix& g, std::size_t s, std::size_t t, const Vector& fc);
Matrix mate_unchecked(const KleisliContext& ctx, const Matrix& g);

}  // namespace exactalg::kl
