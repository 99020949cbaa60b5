#pragma once

#include <string>
#include <vector>

#include "cellab/cell_datum.hpp"
#include "cellab/matrix.hpp"

namespace cellab {

/// Finite-dimensional left module, given by the action matrix of every
/// algebra basis element. Cell modules carry their cell index in `lambda`;
/// other modules (regular module, subquotients) use lambda = -1.
template <class K>
struct ModuleRep {
  std::string name;
  int lambda = -1;
  std::vector<std::string> basis_labels;
  std::vector<Matrix<K>> action;  // indexed by algebra basis index

  int dim() const { return static_cast<int>(basis_labels.size()); }

  Matrix<K> act(const AlgebraElement<K>& a) const {
    Matrix<K> m(dim(), dim());
    for (const auto& [i, c] : a.terms()) m = m + c * action[i];
    return m;
  }
};

/// Matrix of `a` on the cell module Delta(lambda) in the basis {c^lambda_s}:
/// column s holds the lambda-layer coefficients of a * c^lambda_{s,t0} for
/// the fixed reference column t0 = first(T(lambda)).
template <class K>
Matrix<K> action_matrix(const CellDatum<K>& d, int lambda, const AlgebraElement<K>& a) {
  if (lambda < 0 || lambda >= d.n_cells()) throw std::invalid_argument("action_matrix: unknown cell");
  const int n = d.t_size(lambda);
  Matrix<K> m(n, n);
  for (int s = 0; s < n; ++s) {
    AlgebraElement<K> p = d.multiply(a, d.basis_element(d.triple_index(lambda, s, 0)));
    for (const auto& [k, c] : p.terms()) {
      auto tr = d.triple(k);
      if (tr.lambda == lambda && tr.t == 0) m(tr.s, s) = c;
    }
  }
  return m;
}

/// The cell module Delta(lambda) with the action of every basis element.
template <class K>
ModuleRep<K> cell_module(const CellDatum<K>& d, int lambda) {
  if (lambda < 0 || lambda >= d.n_cells()) throw std::invalid_argument("cell_module: unknown cell");
  ModuleRep<K> m;
  m.name = "Delta(" + d.poset().label(lambda) + ")";
  m.lambda = lambda;
  m.basis_labels = d.t_set(lambda);
  m.action.reserve(d.dim());
  const int n = d.t_size(lambda);
  for (int a = 0; a < d.dim(); ++a) {
    Matrix<K> mat(n, n);
    for (int s = 0; s < n; ++s) {
      const AlgebraElement<K>& p = d.basis_product(a, d.triple_index(lambda, s, 0));
      for (const auto& [k, c] : p.terms()) {
        auto tr = d.triple(k);
        if (tr.lambda == lambda && tr.t == 0) mat(tr.s, s) = c;
      }
    }
    m.action.push_back(std::move(mat));
  }
  return m;
}

/// Left regular module: action of a basis element on the algebra itself.
template <class K>
ModuleRep<K> regular_module(const CellDatum<K>& d) {
  ModuleRep<K> m;
  m.name = "regular";
  const int dim = d.dim();
  m.basis_labels.reserve(dim);
  for (int i = 0; i < dim; ++i) m.basis_labels.push_back(d.triple_name(i));
  m.action.reserve(dim);
  for (int a = 0; a < dim; ++a) {
    Matrix<K> mat(dim, dim);
    for (int c = 0; c < dim; ++c)
      for (const auto& [k, coeff] : d.basis_product(a, c).terms()) mat(k, c) = coeff;
    m.action.push_back(std::move(mat));
  }
  return m;
}

/// Gram data of a cell: the matrix of the canonical bilinear form, its rank
/// and the radical subspace.
template <class K>
struct GramData {
  int lambda;
  Matrix<K> matrix;
  int rank;
  Subspace<K> radical;
  K determinant;
};

/// Entry (s,t) is read from c^l_{u0,s} * c^l_{t,b0} mod A^{>l} with
/// u0 = b0 = first(T(l)); well-definedness over the choice of (u0, b0)
/// is a validation property, exercised in the test tier.
template <class K>
GramData<K> gram_matrix(const CellDatum<K>& d, int lambda) {
  if (lambda < 0 || lambda >= d.n_cells()) throw std::invalid_argument("gram_matrix: unknown cell");
  const int n = d.t_size(lambda);
  Matrix<K> g(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const AlgebraElement<K>& p = d.basis_product(d.triple_index(lambda, 0, s), d.triple_index(lambda, t, 0));
      g(s, t) = p.coeff(d.triple_index(lambda, 0, 0));
    }
  GramData<K> out{lambda, g, 0, Subspace<K>(n), det(g, d.one())};
  out.rank = rank(g);
  out.radical = nullspace(g, d.one());
  return out;
}

/// Gram matrix recomputed at arbitrary reference indices (u, b); used by the
/// well-definedness property checks.
template <class K>
Matrix<K> gram_matrix_at(const CellDatum<K>& d, int lambda, int u, int b) {
  const int n = d.t_size(lambda);
  Matrix<K> g(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const AlgebraElement<K>& p = d.basis_product(d.triple_index(lambda, u, s), d.triple_index(lambda, t, b));
      g(s, t) = p.coeff(d.triple_index(lambda, u, b));
    }
  return g;
}

/// Cells whose bilinear form is nonzero; these index the simple modules.
template <class K>
std::vector<int> lambda_zero(const CellDatum<K>& d) {
  std::vector<int> out;
  for (int l = 0; l < d.n_cells(); ++l)
    if (!gram_matrix(d, l).matrix.is_zero_matrix()) out.push_back(l);
  return out;
}

template <class K>
bool in_lambda_zero(const CellDatum<K>& d, int lambda) {
  return !gram_matrix(d, lambda).matrix.is_zero_matrix();
}

/// dim L(lambda) = rank of the Gram matrix; defined only on Lambda^0.
template <class K>
int simple_dim(const CellDatum<K>& d, int lambda) {
  GramData<K> g = gram_matrix(d, lambda);
  if (g.matrix.is_zero_matrix())
    throw std::domain_error("simple_dim: " + d.poset().label(lambda) + " is not in Lambda^0");
  return g.rank;
}

template <class K>
struct SemisimpleVerdict {
  bool semisimple;
  std::vector<K> determinants;  // per cell, declared order
};

/// Semisimple iff det G(lambda) != 0 for every cell.
template <class K>
SemisimpleVerdict<K> is_semisimple(const CellDatum<K>& d) {
  SemisimpleVerdict<K> v{true, {}};
  for (int l = 0; l < d.n_cells(); ++l) {
    K dt = gram_matrix(d, l).determinant;
    if (is_zero(dt)) v.semisimple = false;
    v.determinants.push_back(dt);
  }
  return v;
}

/// Simple module L(lambda) = Delta(lambda)/Rad, realized on the coordinate
/// complement of the pivot columns of the echelonized radical.
template <class K>
ModuleRep<K> simple_module(const CellDatum<K>& d, int lambda) {
  GramData<K> g = gram_matrix(d, lambda);
  if (g.matrix.is_zero_matrix())
    throw std::domain_error("simple_module: " + d.poset().label(lambda) + " is not in Lambda^0");
  const int n = d.t_size(lambda);
  const Subspace<K>& rad = g.radical;
  std::vector<bool> is_piv(n, false);
  for (int p : rad.pivots()) is_piv[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < n; ++j)
    if (!is_piv[j]) free_cols.push_back(j);

  ModuleRep<K> out;
  out.name = "L(" + d.poset().label(lambda) + ")";
  out.lambda = lambda;
  for (int j : free_cols) out.basis_labels.push_back(d.t_set(lambda)[j]);
  const int k = static_cast<int>(free_cols.size());
  ModuleRep<K> delta = cell_module(d, lambda);
  out.action.reserve(d.dim());
  for (int a = 0; a < d.dim(); ++a) {
    Matrix<K> mat(k, k);
    for (int col = 0; col < k; ++col) {
      std::vector<K> v(n, K());
      v[free_cols[col]] = d.one();
      std::vector<K> w = delta.action[a].apply(v);
      w = rad.reduce(std::move(w));
      for (int row = 0; row < k; ++row) mat(row, col) = w[free_cols[row]];
    }
    out.action.push_back(std::move(mat));
  }
  return out;
}

/// Module carried by a subspace V of M's coordinate space. Coordinates on V
/// are read off the pivot columns of its echelon basis.
template <class K>
ModuleRep<K> submodule_rep(const ModuleRep<K>& m, const Subspace<K>& v, const std::string& name) {
  const int k = v.dim();
  ModuleRep<K> out;
  out.name = name;
  for (int i = 0; i < k; ++i) out.basis_labels.push_back(name + ":" + std::to_string(i));
  out.action.reserve(m.action.size());
  for (const auto& A : m.action) {
    Matrix<K> mat(k, k);
    for (int col = 0; col < k; ++col) {
      std::vector<K> bas(v.ambient_dim());
      for (int j = 0; j < v.ambient_dim(); ++j) bas[j] = v.basis()(col, j);
      std::vector<K> w = A.apply(bas);
      // w must lie in V; its V-coordinates are its values at the pivots
      for (int row = 0; row < k; ++row) mat(row, col) = w[v.pivots()[row]];
    }
    out.action.push_back(std::move(mat));
  }
  return out;
}

/// Subquotient V/W of M, for invariant subspaces W inside V. The quotient is
/// realized on the V-coordinates not pivotal for W (expressed in V-coordinates).
template <class K>
ModuleRep<K> subquotient_rep(const ModuleRep<K>& m, const Subspace<K>& v, const Subspace<K>& w,
                             const K& one, const std::string& name) {
  ModuleRep<K> sub = submodule_rep(m, v, name + ".sub");
  // express W in V-coordinates
  Matrix<K> wrows(w.dim(), v.dim());
  for (int i = 0; i < w.dim(); ++i)
    for (int c = 0; c < v.dim(); ++c) wrows(i, c) = w.basis()(i, v.pivots()[c]);
  Subspace<K> winv = Subspace<K>::from_spanning_rows(wrows);

  std::vector<bool> is_piv(v.dim(), false);
  for (int p : winv.pivots()) is_piv[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < v.dim(); ++j)
    if (!is_piv[j]) free_cols.push_back(j);
  const int k = static_cast<int>(free_cols.size());

  ModuleRep<K> out;
  out.name = name;
  for (int i = 0; i < k; ++i) out.basis_labels.push_back(name + ":" + std::to_string(i));
  out.action.reserve(sub.action.size());
  for (const auto& A : sub.action) {
    Matrix<K> mat(k, k);
    for (int col = 0; col < k; ++col) {
      std::vector<K> e(v.dim(), K());
      e[free_cols[col]] = one;
      std::vector<K> img = winv.reduce(A.apply(e));
      for (int row = 0; row < k; ++row) mat(row, col) = img[free_cols[row]];
    }
    out.action.push_back(std::move(mat));
  }
  return out;
}

}  // namespace cellab
