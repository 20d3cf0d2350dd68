#include "thinlie/algebra.hpp"

#include <algorithm>

namespace thinlie {

namespace {

constexpr Letter kLetters[2] = {Letter::X, Letter::Y};

/// Products landing in one degree, indexed by split (a, b) with a + b = degree.
using SplitTable = std::map<int, std::vector<Vec>>;

}  // namespace

// ---------------------------------------------------------------------------
// GradedAlgebra

GradedAlgebra::GradedAlgebra(PrimeField field, std::vector<Component> components)
    : field_(field), components_(std::move(components)) {
  derive_products();
}

GradedAlgebra::GradedAlgebra(PrimeField field, std::vector<Component> components,
                             ProductTable products)
    : field_(field), components_(std::move(components)), products_(std::move(products)) {}

Index GradedAlgebra::dim(int d) const {
  if (d < 1 || d > max_degree()) return 0;
  return components_[d - 1].dim();
}

const Component& GradedAlgebra::component(int d) const {
  if (d < 1 || d > max_degree())
    throw AlgebraError("degree " + std::to_string(d) + " outside computed range 1.." +
                       std::to_string(max_degree()));
  return components_[d - 1];
}

const Vec& GradedAlgebra::action(int d, Index i, Letter g) const {
  if (d >= max_degree())
    throw AlgebraError("action of degree " + std::to_string(d) +
                       " elements exceeds computed range " + std::to_string(max_degree()));
  return component(d).action[2 * i + index_of(g)];
}

const Vec& GradedAlgebra::product(int d1, Index i, int d2, Index j) const {
  if (d1 + d2 > max_degree())
    throw AlgebraError("bracket of degree " + std::to_string(d1 + d2) +
                       " exceeds computed range " + std::to_string(max_degree()));
  return products_.at({d1, d2})[i * dim(d2) + j];
}

void GradedAlgebra::derive_products() {
  const auto& f = field_;
  for (int t = 2; t <= max_degree(); ++t) {
    for (int b = 1; b < t; ++b) {
      const int a = t - b;
      const Index da = dim(a), db = dim(b), dt = dim(t);
      std::vector<Vec> table(da * db, zero_vec(dt));
      for (Index i = 0; i < da; ++i) {
        for (Index j = 0; j < db; ++j) {
          Vec& out = table[i * db + j];
          if (b == 1) {
            out = action(a, i, kLetters[j]);
            continue;
          }
          // [b_i, [pi, g]] = [[b_i, pi], g] - [[b_i, g], pi]
          const BasisLabel& label = component(b).labels[j];
          const Vec& pi = label.parent;
          const auto& lower = products_.at({a, b - 1});
          const auto& same = products_.at({a + 1, b - 1});
          const Index dprev = dim(b - 1);
          Vec inner = zero_vec(dim(t - 1));
          for (Index m = 0; m < dprev; ++m) axpy(inner, pi(m), lower[i * dprev + m], f);
          for (Index l = 0; l < inner.size(); ++l)
            axpy(out, inner(l), action(t - 1, l, label.letter), f);
          const Vec& ig = action(a, i, label.letter);
          for (Index k = 0; k < ig.size(); ++k) {
            if (ig(k) == 0) continue;
            for (Index m = 0; m < dprev; ++m)
              axpy(out, f.neg(f.mul(ig(k), pi(m))), same[k * dprev + m], f);
          }
        }
      }
      products_[{a, b}] = std::move(table);
    }
  }
}

// ---------------------------------------------------------------------------
// Construction

namespace {

/// Builder state while components are computed one degree at a time.
class Builder {
 public:
  Builder(const Presentation& pres) : pres_(pres), f_(pres.field) {}

  GradedAlgebra run(int max_degree, const ComputeOptions& opts);

 private:
  Index dim(int d) const { return d >= 1 && d <= static_cast<int>(comps_.size()) ? comps_[d - 1].dim() : 0; }
  const Vec& action(int d, Index i, int g) const { return comps_[d - 1].action[2 * i + g]; }
  const Vec& product(int a, Index i, int b, Index j) const {
    return products_.at({a, b})[i * dim(b) + j];
  }

  /// Formal element [v, g] for v in the top component, as a candidate vector.
  Vec candidate(const Vec& v, int g, Index ncand) const {
    Vec c = zero_vec(ncand);
    for (Index l = 0; l < v.size(); ++l) c(2 * l + g) = v(l);
    return c;
  }

  Vec evaluate_candidate(const Word& w, Index ncand) const;
  void build_degree(int d);

  const Presentation& pres_;
  PrimeField f_;
  std::vector<Component> comps_;
  GradedAlgebra::ProductTable products_;
};

Vec Builder::evaluate_candidate(const Word& w, Index ncand) const {
  const auto& letters = w.letters();
  Vec cur = unit_vec(2, index_of(letters[0]));
  for (std::size_t k = 1; k + 1 < letters.size(); ++k) {
    const int deg = static_cast<int>(k);
    Vec next = zero_vec(dim(deg + 1));
    for (Index i = 0; i < cur.size(); ++i) axpy(next, cur(i), action(deg, i, index_of(letters[k])), f_);
    cur = std::move(next);
  }
  return candidate(cur, index_of(letters.back()), ncand);
}

void Builder::build_degree(int d) {
  const Index prev = dim(d - 1);
  const Index ncand = 2 * prev;

  // Formal products [b_i, b_j] with deg b_i + deg b_j = d, as candidates.
  SplitTable formal;
  for (int b = 1; b < d; ++b) {
    const int a = d - b;
    const Index da = dim(a), db = dim(b);
    std::vector<Vec> table(da * db);
    for (Index i = 0; i < da; ++i) {
      for (Index j = 0; j < db; ++j) {
        if (b == 1) {
          table[i * db + j] = unit_vec(ncand, 2 * i + j);
          continue;
        }
        const BasisLabel& label = comps_[b - 1].labels[j];
        const int g = index_of(label.letter);
        const Index dprev = dim(b - 1);
        Vec inner = zero_vec(prev);
        for (Index m = 0; m < dprev; ++m)
          if (label.parent(m) != 0) axpy(inner, label.parent(m), product(a, i, b - 1, m), f_);
        Vec out = candidate(inner, g, ncand);
        const Vec& ig = action(a, i, g);
        const auto& same = formal.at(b - 1);
        for (Index k = 0; k < ig.size(); ++k) {
          if (ig(k) == 0) continue;
          for (Index m = 0; m < dprev; ++m)
            if (label.parent(m) != 0)
              axpy(out, f_.neg(f_.mul(ig(k), label.parent(m))), same[k * dprev + m], f_);
        }
        table[i * db + j] = std::move(out);
      }
    }
    formal[b] = std::move(table);
  }
  auto formal_at = [&](int a, Index i, int b, Index j) -> const Vec& {
    (void)a;
    return formal.at(b)[i * dim(b) + j];
  };

  RowEchelon rows(ncand, f_);

  // Antisymmetry: [u, v] + [v, u] = 0 (includes [u, u] = 0 and the degree-2 seeds).
  for (int a = 1; 2 * a <= d; ++a) {
    const int b = d - a;
    for (Index i = 0; i < dim(a); ++i)
      for (Index j = (a == b ? i : 0); j < dim(b); ++j)
        rows.insert(added(formal_at(a, i, b, j), formal_at(b, j, a, i), f_));
  }

  // Jacobi: [u, [v, g]] = [[u, v], g] - [[u, g], v] whenever [v, g] is not
  // itself a basis element (for those it is the definition of the bracket).
  for (int b = 1; b + 1 < d; ++b) {
    const int a = d - 1 - b;
    const auto& next_labels = comps_[b].labels;  // degree b + 1
    for (Index v = 0; v < dim(b); ++v) {
      for (int g = 0; g < 2; ++g) {
        const bool is_definition = std::any_of(next_labels.begin(), next_labels.end(), [&](const BasisLabel& l) {
          return index_of(l.letter) == g && leading_index(l.parent) == v &&
                 l.parent(v) == 1 && (l.parent.array() != 0).count() == 1;
        });
        if (is_definition) continue;
        const Vec& vg = action(b, v, g);
        for (Index u = 0; u < dim(a); ++u) {
          Vec row = zero_vec(ncand);
          for (Index k = 0; k < vg.size(); ++k)
            if (vg(k) != 0) axpy(row, vg(k), formal_at(a, u, b + 1, k), f_);
          row = subtracted(row, candidate(product(a, u, b, v), g, ncand), f_);
          const Vec& ug = action(a, u, g);
          for (Index k = 0; k < ug.size(); ++k)
            if (ug(k) != 0) axpy(row, ug(k), formal_at(a + 1, k, b, v), f_);
          rows.insert(std::move(row));
        }
      }
    }
  }

  // Relators of exactly this degree.
  Component comp;
  for (std::size_t r = 0; r < pres_.relators.size(); ++r) {
    const Relator& rel = pres_.relators[r];
    if (rel.degree() != d) continue;
    Vec row = zero_vec(ncand);
    for (const auto& t : rel.terms()) axpy(row, t.coeff, evaluate_candidate(t.word, ncand), f_);
    rows.insert(std::move(row));
    comp.relators_imposed.push_back(static_cast<int>(r));
  }

  // Basis: candidates without a pivot, in candidate order.
  const std::vector<Index> free = rows.free_columns();
  for (Index c : free)
    comp.labels.push_back({unit_vec(prev, c / 2), kLetters[c % 2]});
  auto to_basis = [&](const Vec& formal_vec) {
    const Vec reduced = rows.reduce(formal_vec);
    Vec out(static_cast<Index>(free.size()));
    for (std::size_t k = 0; k < free.size(); ++k) out(static_cast<Index>(k)) = reduced(free[k]);
    return out;
  };

  auto& prev_comp = comps_[d - 2];
  prev_comp.action.resize(ncand);
  for (Index c = 0; c < ncand; ++c) prev_comp.action[c] = to_basis(unit_vec(ncand, c));
  for (auto& [b, table] : formal) {
    std::vector<Vec> mapped;
    mapped.reserve(table.size());
    for (const auto& v : table) mapped.push_back(to_basis(v));
    products_[{d - b, b}] = std::move(mapped);
  }
  comps_.push_back(std::move(comp));
}

GradedAlgebra Builder::run(int max_degree, const ComputeOptions& opts) {
  for (const auto& r : pres_.relators) {
    if (r.degree() > max_degree)
      throw AlgebraError("relator of degree " + std::to_string(r.degree()) +
                         " exceeds max_degree " + std::to_string(max_degree));
    if (r.degree() < 2) throw AlgebraError("relators must have degree at least 2");
  }
  Component first;
  first.labels = {{Vec(), Letter::X}, {Vec(), Letter::Y}};
  comps_.push_back(std::move(first));
  for (int d = 2; d <= max_degree; ++d) {
    if (dim(d - 1) == 0) {
      // generated in degree one: nothing survives past a zero component
      if (opts.stop_at_collapse) break;
      Component zero;
      for (const auto& r : pres_.relators)
        if (r.degree() == d) zero.relators_imposed.push_back(static_cast<int>(&r - pres_.relators.data()));
      comps_.push_back(std::move(zero));
      for (int b = 1; b < d; ++b)
        products_[{d - b, b}] = std::vector<Vec>(dim(d - b) * dim(b), Vec());
      continue;
    }
    build_degree(d);
  }
  return GradedAlgebra(f_, std::move(comps_), std::move(products_));
}

}  // namespace

GradedAlgebra compute(const Presentation& pres, int max_degree, const ComputeOptions& opts) {
  if (max_degree < 2) throw AlgebraError("max_degree must be at least 2");
  return Builder(pres).run(max_degree, opts);
}

// ---------------------------------------------------------------------------
// Elements

HomElement add(const GradedAlgebra& alg, const HomElement& a, const HomElement& b) {
  if (a.degree != b.degree) throw AlgebraError("adding elements of different degrees");
  return {a.degree, added(a.coeffs, b.coeffs, alg.field())};
}

HomElement sub(const GradedAlgebra& alg, const HomElement& a, const HomElement& b) {
  if (a.degree != b.degree) throw AlgebraError("subtracting elements of different degrees");
  return {a.degree, subtracted(a.coeffs, b.coeffs, alg.field())};
}

HomElement scale(const GradedAlgebra& alg, const HomElement& a, Residue c) {
  return {a.degree, scaled(a.coeffs, c, alg.field())};
}

HomElement act(const GradedAlgebra& alg, const HomElement& u, Letter g) {
  const int d = u.degree;
  if (d + 1 > alg.max_degree())
    throw AlgebraError("degree " + std::to_string(d + 1) + " exceeds computed range " +
                       std::to_string(alg.max_degree()));
  HomElement out = alg.zero(d + 1);
  for (Index i = 0; i < u.coeffs.size(); ++i)
    axpy(out.coeffs, u.coeffs(i), alg.action(d, i, g), alg.field());
  return out;
}

HomElement act(const GradedAlgebra& alg, const HomElement& u, const Vec& a) {
  const auto& f = alg.field();
  HomElement out = scale(alg, act(alg, u, Letter::X), a(0));
  axpy(out.coeffs, a(1), act(alg, u, Letter::Y).coeffs, f);
  return out;
}

HomElement evaluate_word(const GradedAlgebra& alg, const Word& word) {
  if (word.empty()) throw AlgebraError("empty word");
  if (word.degree() > alg.max_degree())
    throw AlgebraError("word of degree " + std::to_string(word.degree()) +
                       " exceeds computed range " + std::to_string(alg.max_degree()));
  const auto& letters = word.letters();
  HomElement cur = alg.generator(letters[0]);
  for (std::size_t k = 1; k < letters.size(); ++k) cur = act(alg, cur, letters[k]);
  return cur;
}

HomElement evaluate_relator(const GradedAlgebra& alg, const Relator& rel) {
  HomElement out = alg.zero(rel.degree());
  for (const auto& t : rel.terms())
    axpy(out.coeffs, t.coeff, evaluate_word(alg, t.word).coeffs, alg.field());
  return out;
}

HomElement bracket(const GradedAlgebra& alg, const HomElement& u, const HomElement& v) {
  const int d = u.degree + v.degree;
  if (d > alg.max_degree())
    throw AlgebraError("bracket of degree " + std::to_string(d) + " exceeds computed range " +
                       std::to_string(alg.max_degree()));
  const auto& f = alg.field();
  HomElement out = alg.zero(d);
  for (Index i = 0; i < u.coeffs.size(); ++i) {
    if (u.coeffs(i) == 0) continue;
    for (Index j = 0; j < v.coeffs.size(); ++j) {
      if (v.coeffs(j) == 0) continue;
      axpy(out.coeffs, f.mul(u.coeffs(i), v.coeffs(j)), alg.product(u.degree, i, v.degree, j), f);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Centre and quotients

std::vector<HomElement> graded_center_component(const GradedAlgebra& alg, int d) {
  if (d < 1 || d + 1 > alg.max_degree())
    throw AlgebraError("insufficient computed range: centrality in degree " + std::to_string(d) +
                       " needs degree " + std::to_string(d + 1) + ", computed up to " +
                       std::to_string(alg.max_degree()));
  const Index n = alg.dim(d), m = alg.dim(d + 1);
  Mat a = Mat::Zero(2 * m, n);
  for (Index i = 0; i < n; ++i)
    for (int g = 0; g < 2; ++g) {
      const Vec& img = alg.action(d, i, kLetters[g]);
      for (Index r = 0; r < m; ++r) a(g * m + r, i) = img(r);
    }
  std::vector<HomElement> out;
  for (auto& v : nullspace(a, alg.field())) out.push_back({d, std::move(v)});
  return out;
}

GradedAlgebra quotient(const GradedAlgebra& alg, const std::vector<std::vector<Vec>>& ideal,
                       int new_max_degree) {
  const auto& f = alg.field();
  const int top = std::min(new_max_degree, alg.max_degree());
  std::vector<RowEchelon> ech;
  std::vector<std::vector<Index>> kept;
  for (int d = 1; d <= top; ++d) {
    RowEchelon e(alg.dim(d), f);
    if (d - 1 < static_cast<int>(ideal.size()))
      for (const auto& v : ideal[d - 1]) e.insert(v);
    kept.push_back(e.free_columns());
    ech.push_back(std::move(e));
  }
  auto project = [&](int d, const Vec& v) {
    const Vec r = ech[d - 1].reduce(v);
    const auto& cols = kept[d - 1];
    Vec out(static_cast<Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) out(static_cast<Index>(k)) = r(cols[k]);
    return out;
  };

  std::vector<Component> comps;
  for (int d = 1; d <= top; ++d) {
    const Component& old = alg.component(d);
    Component c;
    c.relators_imposed = old.relators_imposed;
    for (Index j : kept[d - 1]) {
      const BasisLabel& l = old.labels[j];
      c.labels.push_back({d == 1 ? Vec() : project(d - 1, l.parent), l.letter});
      if (d < top)
        for (int g = 0; g < 2; ++g) c.action.push_back(project(d + 1, alg.action(d, j, kLetters[g])));
    }
    comps.push_back(std::move(c));
  }
  GradedAlgebra::ProductTable products;
  for (int t = 2; t <= top; ++t)
    for (int b = 1; b < t; ++b) {
      const int a = t - b;
      const auto& ka = kept[a - 1];
      const auto& kb = kept[b - 1];
      std::vector<Vec> table;
      table.reserve(ka.size() * kb.size());
      for (Index i : ka)
        for (Index j : kb) table.push_back(project(t, alg.product(a, i, b, j)));
      products[{a, b}] = std::move(table);
    }
  return GradedAlgebra(f, std::move(comps), std::move(products));
}

GradedAlgebra truncate(const GradedAlgebra& alg, int new_max_degree) {
  return quotient(alg, {}, new_max_degree);
}

GradedAlgebra thin_core(const GradedAlgebra& alg, int reliable_bound) {
  if (reliable_bound < 1 || reliable_bound + 1 > alg.max_degree())
    throw AlgebraError("insufficient computed range: reliable bound " +
                       std::to_string(reliable_bound) + " needs max_degree >= " +
                       std::to_string(reliable_bound + 1));
  GradedAlgebra cur = alg;
  for (;;) {
    // highest nonzero component inside the reliable range, if the algebra dies there
    int last_nonzero = 0;
    bool dies = false;
    for (int d = 1; d <= reliable_bound + 1; ++d) {
      if (cur.dim(d) > 0)
        last_nonzero = d;
      else {
        dies = true;
        break;
      }
    }
    std::vector<std::vector<Vec>> ideal(reliable_bound);
    bool found = false;
    for (int d = 1; d <= reliable_bound; ++d) {
      if (dies && d >= last_nonzero) break;
      for (auto& z : graded_center_component(cur, d)) {
        ideal[d - 1].push_back(std::move(z.coeffs));
        found = true;
      }
    }
    if (!found) break;
    cur = quotient(cur, ideal, cur.max_degree());
  }
  return truncate(cur, reliable_bound);
}

std::vector<Index> dims(const GradedAlgebra& alg) {
  std::vector<Index> out;
  for (int d = 1; d <= alg.max_degree(); ++d) out.push_back(alg.dim(d));
  return out;
}

}  // namespace thinlie
