#include "thinlie/linalg.hpp"

#include <algorithm>

namespace thinlie {

void axpy(Vec& y, Residue a, const Vec& x, const PrimeField& f) {
  if (a == 0) return;
  for (Index i = 0; i < y.size(); ++i)
    if (x(i) != 0) y(i) = f.add(y(i), f.mul(a, x(i)));
}

Vec scaled(const Vec& x, Residue a, const PrimeField& f) {
  Vec r(x.size());
  for (Index i = 0; i < x.size(); ++i) r(i) = f.mul(a, x(i));
  return r;
}

Vec added(const Vec& a, const Vec& b, const PrimeField& f) {
  Vec r(a.size());
  for (Index i = 0; i < a.size(); ++i) r(i) = f.add(a(i), b(i));
  return r;
}

Vec subtracted(const Vec& a, const Vec& b, const PrimeField& f) {
  Vec r(a.size());
  for (Index i = 0; i < a.size(); ++i) r(i) = f.sub(a(i), b(i));
  return r;
}

Vec negated(const Vec& a, const PrimeField& f) {
  Vec r(a.size());
  for (Index i = 0; i < a.size(); ++i) r(i) = f.neg(a(i));
  return r;
}

Index leading_index(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return i;
  return -1;
}

Vec RowEchelon::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Residue c = v(pivots_[r]);
    if (c != 0) axpy(v, field_.neg(c), rows_[r], field_);
  }
  return v;
}

bool RowEchelon::insert(Vec v) {
  v = reduce(std::move(v));
  const Index lead = leading_index(v);
  if (lead < 0) return false;
  v = scaled(v, field_.inv(v(lead)), field_);
  for (auto& row : rows_) {
    const Residue c = row(lead);
    if (c != 0) axpy(row, field_.neg(c), v, field_);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

std::vector<Index> RowEchelon::free_columns() const {
  std::vector<Index> out;
  std::size_t k = 0;
  for (Index c = 0; c < ncols_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::vector<Vec> nullspace(const Mat& a, const PrimeField& f) {
  RowEchelon ech(a.cols(), f);
  for (Index r = 0; r < a.rows(); ++r) ech.insert(a.row(r).transpose());
  std::vector<Vec> basis;
  for (Index c : ech.free_columns()) {
    Vec v = unit_vec(a.cols(), c);
    for (std::size_t r = 0; r < ech.rows().size(); ++r)
      v(ech.pivots()[r]) = f.neg(ech.rows()[r](c));
    basis.push_back(std::move(v));
  }
  return basis;
}

Index span_rank(const std::vector<Vec>& vs, Index ncols, const PrimeField& f) {
  RowEchelon ech(ncols, f);
  for (const auto& v : vs) ech.insert(v);
  return ech.rank();
}

std::optional<Residue> proportionality(const Vec& target, const Vec& source,
                                       const PrimeField& f) {
  const Index lead = leading_index(source);
  if (lead < 0) return std::nullopt;
  const Residue c = f.mul(target(lead), f.inv(source(lead)));
  for (Index i = 0; i < source.size(); ++i)
    if (target(i) != f.mul(c, source(i))) return std::nullopt;
  return c;
}

}  // namespace thinlie
