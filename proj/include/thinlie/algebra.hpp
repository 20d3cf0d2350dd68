#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thinlie/linalg.hpp"
#include "thinlie/presentation.hpp"

namespace thinlie {

class AlgebraError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A homogeneous element: coordinates in the basis of one component.
struct HomElement {
  int degree = 0;
  Vec coeffs;

  bool is_zero() const { return thinlie::is_zero(coeffs); }
  friend bool operator==(const HomElement& a, const HomElement& b) {
    return a.degree == b.degree && a.coeffs.size() == b.coeffs.size() && a.coeffs == b.coeffs;
  }
};

/// How a basis element of degree d >= 2 arises: [parent, letter], with the
/// parent given in coordinates of degree d - 1. In degree one the parent is
/// empty and the element is the generator itself.
struct BasisLabel {
  Vec parent;
  Letter letter;
};

/// One homogeneous component together with the right action of x and y on it.
struct Component {
  std::vector<BasisLabel> labels;
  /// action[2 * i + g] = [b_i, g] in the next component (empty at the top).
  std::vector<Vec> action;
  /// Indices of relators imposed while constructing this component.
  std::vector<int> relators_imposed;

  Index dim() const { return static_cast<Index>(labels.size()); }
};

/// A graded Lie algebra generated by x, y in degree one, known up to
/// max_degree. Immutable once built; every accessor is safe to call from
/// several threads.
class GradedAlgebra {
 public:
  using ProductTable = std::map<std::pair<int, int>, std::vector<Vec>>;

  /// Builds from components 1..max_degree (components[0] is degree one) and
  /// derives the full table of structure constants from labels and actions.
  GradedAlgebra(PrimeField field, std::vector<Component> components);
  /// Takes a precomputed table of structure constants.
  GradedAlgebra(PrimeField field, std::vector<Component> components, ProductTable products);

  const PrimeField& field() const { return field_; }
  int max_degree() const { return static_cast<int>(components_.size()); }
  /// Zero outside 1..max_degree.
  Index dim(int d) const;
  const Component& component(int d) const;

  /// [b_i, g] for b_i in degree d < max_degree.
  const Vec& action(int d, Index i, Letter g) const;
  /// [b_i, b_j] for b_i in degree d1, b_j in degree d2, d1 + d2 <= max_degree.
  const Vec& product(int d1, Index i, int d2, Index j) const;

  HomElement zero(int d) const { return {d, zero_vec(dim(d))}; }
  HomElement basis_element(int d, Index i) const { return {d, unit_vec(dim(d), i)}; }
  HomElement generator(Letter g) const { return basis_element(1, index_of(g)); }

 private:
  void derive_products();

  PrimeField field_;
  std::vector<Component> components_;
  // products_[{d1, d2}] holds dim(d1) * dim(d2) vectors, row-major in (i, j)
  ProductTable products_;
};

struct ComputeOptions {
  /// Stop early once a component vanishes (every later one is zero).
  bool stop_at_collapse = false;
};

/// The maximal graded Lie algebra on x, y of degree one satisfying the
/// homogeneous relators of the presentation, up to max_degree.
GradedAlgebra compute(const Presentation& pres, int max_degree, const ComputeOptions& opts = {});

/// Left-normed evaluation [a1 a2 ... ak] through the action tables.
HomElement evaluate_word(const GradedAlgebra& alg, const Word& word);
/// Linear combination of words as in a relator.
HomElement evaluate_relator(const GradedAlgebra& alg, const Relator& rel);

/// Bilinear bracket of homogeneous elements.
HomElement bracket(const GradedAlgebra& alg, const HomElement& u, const HomElement& v);
/// [u, g]
HomElement act(const GradedAlgebra& alg, const HomElement& u, Letter g);
/// [u, a] for a degree-one element a = a_x x + a_y y.
HomElement act(const GradedAlgebra& alg, const HomElement& u, const Vec& a);

HomElement add(const GradedAlgebra& alg, const HomElement& a, const HomElement& b);
HomElement sub(const GradedAlgebra& alg, const HomElement& a, const HomElement& b);
HomElement scale(const GradedAlgebra& alg, const HomElement& a, Residue c);

/// Basis of {z in L_d : [z, x] = [z, y] = 0}. Requires d + 1 <= max_degree.
std::vector<HomElement> graded_center_component(const GradedAlgebra& alg, int d);

/// Quotient by a graded ideal given degreewise by spanning vectors, truncated
/// to new_max_degree. The ideal must be closed under the action.
GradedAlgebra quotient(const GradedAlgebra& alg, const std::vector<std::vector<Vec>>& ideal,
                       int new_max_degree);

/// Restriction to degrees 1..new_max_degree.
GradedAlgebra truncate(const GradedAlgebra& alg, int new_max_degree);

/// Repeatedly quotients by the graded centre in degrees <= reliable_bound
/// until none remains there, then discards degrees above reliable_bound.
/// The highest nonzero component of a finite-dimensional algebra is kept,
/// as it is central in any finite-dimensional thin algebra.
GradedAlgebra thin_core(const GradedAlgebra& alg, int reliable_bound);
inline GradedAlgebra thin_core(const GradedAlgebra& alg) {
  return thin_core(alg, alg.max_degree() - 2);
}

/// dim(L_d) for d = 1..max_degree.
std::vector<Index> dims(const GradedAlgebra& alg);

}  // namespace thinlie
