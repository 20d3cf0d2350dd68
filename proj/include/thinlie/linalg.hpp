#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "thinlie/fp.hpp"

namespace thinlie {

using Index = Eigen::Index;

/// Dense column vector of residues mod p.
using Vec = Eigen::Matrix<Residue, Eigen::Dynamic, 1>;
/// Dense row-major matrix of residues mod p.
using Mat = Eigen::Matrix<Residue, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline Vec zero_vec(Index n) { return Vec::Zero(n); }
inline Vec unit_vec(Index n, Index i) {
  Vec v = Vec::Zero(n);
  v(i) = 1;
  return v;
}

inline bool is_zero(const Vec& v) { return (v.array() == 0).all(); }

/// y += a * x
void axpy(Vec& y, Residue a, const Vec& x, const PrimeField& f);

Vec scaled(const Vec& x, Residue a, const PrimeField& f);
Vec added(const Vec& a, const Vec& b, const PrimeField& f);
Vec subtracted(const Vec& a, const Vec& b, const PrimeField& f);
Vec negated(const Vec& a, const PrimeField& f);

/// Index of the first nonzero entry, or -1.
Index leading_index(const Vec& v);

/// Incrementally maintained reduced row echelon form.
///
/// The stored rows are always the unique RREF of the span of the inserted
/// vectors, so pivots and the reduced rows do not depend on insertion order.
/// Pivots are the leftmost nonzero entry of each row.
class RowEchelon {
 public:
  RowEchelon(Index ncols, PrimeField field) : ncols_(ncols), field_(field) {}

  Index cols() const { return ncols_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  /// Adds a vector to the span; returns false if it was already contained.
  bool insert(Vec v);

  /// Reduces v modulo the row space; entries in pivot columns become zero.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }

  /// Rows sorted by pivot column.
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  /// Columns without a pivot, ascending.
  std::vector<Index> free_columns() const;

 private:
  Index ncols_;
  PrimeField field_;
  std::vector<Vec> rows_;
  std::vector<Index> pivots_;
};

/// Basis of {v : A v = 0}, one vector per free column, with a 1 in that
/// column and zeros in the other free columns.
std::vector<Vec> nullspace(const Mat& a, const PrimeField& f);

/// Rank of the span of the given vectors.
Index span_rank(const std::vector<Vec>& vs, Index ncols, const PrimeField& f);

/// If target = c * source for a scalar c, returns c; source must be nonzero.
std::optional<Residue> proportionality(const Vec& target, const Vec& source,
                                       const PrimeField& f);

}  // namespace thinlie
