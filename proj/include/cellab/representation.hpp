#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cellab/cell_datum.hpp"
#include "cellab/matrix.hpp"
#include "cellab/modules.hpp"
#include "cellab/union_find.hpp"

namespace cellab {

// --- trace form -----------------------------------------------------------

/// Gram matrix of the bilinear form (a, b) -> tr(L_{ab}) on any algebra
/// exposing dim() / basis_product() / one(). In characteristic 0 its
/// nullspace is the Jacobson radical.
template <class A, class K>
Matrix<K> trace_form_matrix_impl(const A& alg, const K& one) {
  const int n = alg.dim();
  std::vector<K> tr_left(n, K());
  for (int e = 0; e < n; ++e) {
    K t = zero_like(one);
    for (int c = 0; c < n; ++c) t += alg.basis_product(e, c).coeff(c);
    tr_left[e] = t;
  }
  Matrix<K> form(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      K v = K();
      for (const auto& [e, s] : alg.basis_product(a, b).terms())
        if (!is_zero(tr_left[e])) v += s * tr_left[e];
      form(a, b) = v;
    }
  return form;
}

template <class A>
auto trace_form_matrix(const A& alg) {
  return trace_form_matrix_impl(alg, alg.one());
}

/// Radical of the trace form; in characteristic 0 this equals the Jacobson
/// radical of the algebra. Elsewhere the trace-form criterion fails, so the
/// operation is refused.
template <class A>
auto trace_form_radical(const A& alg) {
  if (field_characteristic(alg.one()) != 0)
    throw unsupported_error("trace-form radical requires characteristic 0");
  return nullspace(trace_form_matrix(alg), alg.one());
}

template <class K>
Subspace<K> jacobson_radical(const CellDatum<K>& d) {
  return trace_form_radical(d);
}

template <class K>
AlgebraElement<K> element_from_coords(const std::vector<K>& coords) {
  std::vector<typename AlgebraElement<K>::Term> terms;
  for (size_t i = 0; i < coords.size(); ++i)
    if (!is_zero(coords[i])) terms.emplace_back(static_cast<int>(i), coords[i]);
  return AlgebraElement<K>::from_terms(std::move(terms));
}

// --- incremental reduced echelon of sparse rows ----------------------------

template <class K>
using SparseRow = std::vector<std::pair<int, K>>;  // (column, coeff), sorted

template <class K>
class IncrementalRref {
 public:
  explicit IncrementalRref(int cols) : cols_(cols), pivot_of_col_(cols, -1) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  /// Fully reduces and inserts; returns true when the rank grew.
  bool insert(SparseRow<K> row) {
    reduce(row);
    if (row.empty()) return false;
    K inv = one_like(row.front().second) / row.front().second;
    for (auto& [c, v] : row) v *= inv;
    int pivot = row.front().first;
    // back-reduce existing rows against the new pivot
    for (auto& r : rows_) {
      auto it = find_col(r, pivot);
      if (it == r.end()) continue;
      K f = it->second;
      axpy(r, f, row);
    }
    pivot_of_col_[pivot] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  /// Kernel of the stacked rows, as a canonical subspace of F^cols.
  Subspace<K> kernel(const K& one) const {
    std::vector<bool> is_piv(cols_, false);
    for (const auto& r : rows_) is_piv[r.front().first] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
      if (!is_piv[c]) free_cols.push_back(c);
    Matrix<K> span(static_cast<int>(free_cols.size()), cols_);
    for (size_t i = 0; i < free_cols.size(); ++i) {
      span(static_cast<int>(i), free_cols[i]) = one;
      for (const auto& r : rows_) {
        auto it = find_col(r, free_cols[i]);
        if (it != r.end()) span(static_cast<int>(i), r.front().first) = -it->second;
      }
    }
    return Subspace<K>::from_spanning_rows(span);
  }

 private:
  static typename SparseRow<K>::const_iterator find_col(const SparseRow<K>& r, int col) {
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const std::pair<int, K>& t, int c) { return t.first < c; });
    return (it != r.end() && it->first == col) ? it : r.end();
  }
  static typename SparseRow<K>::iterator find_col(SparseRow<K>& r, int col) {
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const std::pair<int, K>& t, int c) { return t.first < c; });
    return (it != r.end() && it->first == col) ? it : r.end();
  }

  // r -= f * s (sparse merge)
  static void axpy(SparseRow<K>& r, const K& f, const SparseRow<K>& s) {
    SparseRow<K> out;
    out.reserve(r.size() + s.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < s.size()) {
      if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
        out.push_back(r[i++]);
      } else if (i == r.size() || s[j].first < r[i].first) {
        K v = -(f * s[j].second);
        if (!is_zero(v)) out.emplace_back(s[j].first, std::move(v));
        ++j;
      } else {
        K v = r[i].second - f * s[j].second;
        if (!is_zero(v)) out.emplace_back(r[i].first, std::move(v));
        ++i; ++j;
      }
    }
    r = std::move(out);
  }

  void reduce(SparseRow<K>& row) const {
    while (!row.empty()) {
      int lead = row.front().first;
      int pr = pivot_of_col_[lead];
      if (pr < 0) return;
      axpy(row, row.front().second, rows_[pr]);
    }
  }

  int cols_;
  std::vector<int> pivot_of_col_;
  std::vector<SparseRow<K>> rows_;
};

// --- hom spaces -------------------------------------------------------------

template <class K>
struct HomSpace {
  int dim = 0;
  std::vector<Matrix<K>> basis;  // N.dim x M.dim intertwiners, echelonized vec order
};

/// Solves rho_N(a) X = X rho_M(a) over all algebra basis elements a.
/// Equations from elements with identical (or zero) action pairs are
/// deduplicated; the solution space itself is independent of such pruning.
template <class K>
HomSpace<K> hom_space(const CellDatum<K>& d, const ModuleRep<K>& m, const ModuleRep<K>& n) {
  const int md = m.dim(), nd = n.dim();
  const int vars = nd * md;  // X(r,c) at index r*md + c
  if (vars == 0) return {0, {}};

  auto matrix_key = [](const Matrix<K>& a) {
    std::string s = std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ":";
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) {
        s += scalar_str(a(i, j));
        s += ',';
      }
    return s;
  };

  IncrementalRref<K> sys(vars);
  std::set<std::string> seen;
  for (int a = 0; a < d.dim() && sys.rank() < vars; ++a) {
    const Matrix<K>& ma = m.action[a];
    const Matrix<K>& na = n.action[a];
    if (ma.is_zero_matrix() && na.is_zero_matrix()) continue;
    if (!seen.insert(matrix_key(ma) + "|" + matrix_key(na)).second) continue;
    for (int p = 0; p < nd && sys.rank() < vars; ++p)
      for (int q = 0; q < md; ++q) {
        std::map<int, K> row;
        for (int u = 0; u < nd; ++u)
          if (!is_zero(na(p, u))) row[u * md + q] += na(p, u);
        for (int v = 0; v < md; ++v)
          if (!is_zero(ma(v, q))) row[p * md + v] -= ma(v, q);
        SparseRow<K> r;
        for (auto& [c, x] : row)
          if (!is_zero(x)) r.emplace_back(c, std::move(x));
        if (!r.empty()) sys.insert(std::move(r));
      }
  }

  Subspace<K> sol = sys.kernel(d.one());
  HomSpace<K> out;
  out.dim = sol.dim();
  for (int i = 0; i < sol.dim(); ++i) {
    Matrix<K> x(nd, md);
    for (int r = 0; r < nd; ++r)
      for (int c = 0; c < md; ++c) x(r, c) = sol.basis()(i, r * md + c);
    out.basis.push_back(std::move(x));
  }
  return out;
}

// --- Loewy series and decomposition matrix ---------------------------------

template <class K>
struct SimpleCache {
  std::vector<int> lambda0;
  std::vector<ModuleRep<K>> simples;  // parallel to lambda0
  std::vector<int> end_dims;          // dim End(L(mu))
};

template <class K>
SimpleCache<K> build_simple_cache(const CellDatum<K>& d) {
  SimpleCache<K> c;
  c.lambda0 = lambda_zero(d);
  for (int mu : c.lambda0) {
    c.simples.push_back(simple_module(d, mu));
    c.end_dims.push_back(hom_space(d, c.simples.back(), c.simples.back()).dim);
  }
  return c;
}

/// One Loewy layer: multiplicities of the simples, as (index into Lambda^0
/// order, multiplicity), nonzero entries only.
using LoewyLayer = std::vector<std::pair<int, long>>;

/// Radical filtration M > JM > J^2 M > ...; each semisimple layer is
/// decomposed through Hom spaces into simples. Characteristic 0 only
/// (the trace-form radical theorem fails in characteristic p).
template <class K>
std::vector<LoewyLayer> loewy_series(const CellDatum<K>& d, const ModuleRep<K>& m,
                                     const Subspace<K>& jac, const SimpleCache<K>& cache) {
  if (field_characteristic(d.one()) != 0)
    throw unsupported_error("loewy_series requires characteristic 0");
  const int n = m.dim();
  std::vector<Matrix<K>> jmats;
  for (int i = 0; i < jac.dim(); ++i) {
    std::vector<K> coords(jac.ambient_dim());
    for (int j = 0; j < jac.ambient_dim(); ++j) coords[j] = jac.basis()(i, j);
    jmats.push_back(m.act(element_from_coords<K>(coords)));
  }

  Subspace<K> v = Subspace<K>::from_spanning_rows(Matrix<K>::identity(n, d.one()));
  std::vector<LoewyLayer> layers;
  while (v.dim() > 0) {
    // W = J V
    Matrix<K> span(static_cast<int>(jmats.size()) * v.dim(), n);
    int row = 0;
    for (const auto& jm : jmats)
      for (int i = 0; i < v.dim(); ++i) {
        std::vector<K> x(n);
        for (int j = 0; j < n; ++j) x[j] = v.basis()(i, j);
        std::vector<K> y = jm.apply(x);
        for (int j = 0; j < n; ++j) span(row, j) = y[j];
        ++row;
      }
    Subspace<K> w = Subspace<K>::from_spanning_rows(span);
    if (w.dim() >= v.dim())
      throw std::logic_error("loewy_series: radical filtration does not descend");

    ModuleRep<K> layer = subquotient_rep(m, v, w, d.one(), m.name + ".layer" + std::to_string(layers.size()));
    LoewyLayer decomposed;
    long dim_check = 0;
    for (size_t k = 0; k < cache.lambda0.size(); ++k) {
      int h = hom_space(d, layer, cache.simples[k]).dim;
      if (h == 0) continue;
      int e = cache.end_dims[k];
      if (h % e != 0) throw std::logic_error("loewy_series: Hom dimension not divisible by End dimension");
      long mult = h / e;
      decomposed.emplace_back(static_cast<int>(k), mult);
      dim_check += mult * cache.simples[k].dim();
    }
    if (dim_check != layer.dim())
      throw std::logic_error("loewy_series: layer did not decompose into simples");
    layers.push_back(std::move(decomposed));
    v = std::move(w);
  }
  return layers;
}

template <class K>
std::vector<LoewyLayer> loewy_series(const CellDatum<K>& d, const ModuleRep<K>& m) {
  Subspace<K> jac = jacobson_radical(d);
  SimpleCache<K> cache = build_simple_cache(d);
  return loewy_series(d, m, jac, cache);
}

template <class K>
struct DecompositionResult {
  std::vector<int> lambda0;                   // column order
  std::vector<std::vector<long>> d_matrix;    // |Lambda| x |Lambda^0|
  std::vector<std::vector<LoewyLayer>> loewy; // per cell
  std::vector<std::vector<long>> cartan;      // D^t D
  bool upper_ok = true;                       // d_{lm} = 0 unless l <= m
  bool lower_ok = true;                       // d_{lm} = 0 unless m <= l
  std::vector<std::string> triangularity_notes;
};

/// Multiplicities d_{lambda,mu} summed over the Loewy layers of each cell
/// module. The order-direction of triangularity is reported, not asserted.
template <class K>
DecompositionResult<K> decomposition_matrix(const CellDatum<K>& d) {
  if (field_characteristic(d.one()) != 0)
    throw unsupported_error("decomposition_matrix requires characteristic 0");
  DecompositionResult<K> out;
  Subspace<K> jac = jacobson_radical(d);
  SimpleCache<K> cache = build_simple_cache(d);
  out.lambda0 = cache.lambda0;
  const int nl = d.n_cells(), n0 = static_cast<int>(cache.lambda0.size());
  out.d_matrix.assign(nl, std::vector<long>(n0, 0));
  for (int l = 0; l < nl; ++l) {
    ModuleRep<K> delta = cell_module(d, l);
    auto layers = loewy_series(d, delta, jac, cache);
    for (const auto& layer : layers)
      for (const auto& [k, mult] : layer) out.d_matrix[l][k] += mult;
    out.loewy.push_back(std::move(layers));
  }
  // triangularity in each direction of the declared order
  const CellPoset& P = d.poset();
  for (int l = 0; l < nl; ++l)
    for (int k = 0; k < n0; ++k) {
      if (out.d_matrix[l][k] == 0) continue;
      int mu = cache.lambda0[k];
      if (l != mu && !P.less(l, mu)) {
        out.upper_ok = false;
        out.triangularity_notes.push_back("d[" + P.label(l) + "][" + P.label(mu) + "] != 0 but not " +
                                          P.label(l) + " < " + P.label(mu));
      }
      if (l != mu && !P.less(mu, l)) {
        out.lower_ok = false;
        out.triangularity_notes.push_back("d[" + P.label(l) + "][" + P.label(mu) + "] != 0 but not " +
                                          P.label(mu) + " < " + P.label(l));
      }
    }
  out.cartan.assign(n0, std::vector<long>(n0, 0));
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n0; ++j)
      for (int l = 0; l < nl; ++l) out.cartan[i][j] += out.d_matrix[l][i] * out.d_matrix[l][j];
  return out;
}

// --- blocks -----------------------------------------------------------------

struct BlocksResult {
  std::vector<std::vector<int>> cell_blocks;        // partition of Lambda
  std::vector<std::vector<int>> blocks_on_lambda0;  // intersections with Lambda^0
};

template <class K>
BlocksResult blocks_from_decomposition(const CellDatum<K>& d, const DecompositionResult<K>& dec) {
  UnionFind uf(d.n_cells());
  for (int l = 0; l < d.n_cells(); ++l)
    for (size_t k = 0; k < dec.lambda0.size(); ++k)
      if (dec.d_matrix[l][k] != 0) uf.merge(l, dec.lambda0[k]);
  BlocksResult out;
  out.cell_blocks = uf.classes();
  std::set<int> in0(dec.lambda0.begin(), dec.lambda0.end());
  for (const auto& c : out.cell_blocks) {
    std::vector<int> r;
    for (int x : c)
      if (in0.count(x)) r.push_back(x);
    if (!r.empty()) out.blocks_on_lambda0.push_back(std::move(r));
  }
  return out;
}

/// Union-find closure of the cell-linkage relation d_{lambda,mu} != 0.
template <class K>
BlocksResult blocks(const CellDatum<K>& d) {
  return blocks_from_decomposition(d, decomposition_matrix(d));
}

}  // namespace cellab
