#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cellab/assoc_algebra.hpp"
#include "cellab/cell_datum.hpp"
#include "cellab/diagrams.hpp"
#include "cellab/localization.hpp"
#include "cellab/representation.hpp"

namespace cellab {

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A constructed algebra instance: the cellular datum, the canonical
/// idempotent family (empty for plain TL), and, for diagram families,
/// the basis diagrams aligned with the basis order.
template <class K>
struct Family {
  std::shared_ptr<CellDatum<K>> datum;
  std::vector<std::string> idempotent_names;
  std::vector<AlgebraElement<K>> idempotents;
  std::vector<ColouredDiagram> basis_diagrams;  // empty for matrix/quiver
  int n = 0, m = 1;
  std::vector<Rational> deltas;

  IdempotentDecomposition<K> decomposition() const {
    return IdempotentDecomposition<K>::analyze(datum, idempotent_names, idempotents);
  }
};

// --- matrix algebra ---------------------------------------------------------

/// M_n with cellular basis c^n_{ij} = E_ij and idempotents E_ii.
template <class K>
Family<K> build_matrix_algebra(int n, const K& one) {
  if (n < 1) throw std::invalid_argument("build_matrix_algebra: n must be >= 1");
  std::vector<std::string> t;
  for (int i = 1; i <= n; ++i) t.push_back(std::to_string(i));
  auto datum = std::make_shared<CellDatum<K>>(one, CellPoset({std::to_string(n)}, {}),
                                              std::vector<std::vector<std::string>>{t});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (j == k)
            datum->set_product(datum->triple_index(0, i, j), datum->triple_index(0, k, l),
                               AlgebraElement<K>::single(datum->triple_index(0, i, l), one));
  std::vector<typename AlgebraElement<K>::Term> unit_terms;
  for (int i = 0; i < n; ++i) unit_terms.emplace_back(datum->triple_index(0, i, i), one);
  datum->set_unit(AlgebraElement<K>::from_terms(std::move(unit_terms)));

  Family<K> fam;
  fam.n = n;
  fam.datum = datum;
  for (int i = 0; i < n; ++i) {
    fam.idempotent_names.push_back(std::to_string(i + 1));
    fam.idempotents.push_back(AlgebraElement<K>::single(datum->triple_index(0, i, i), one));
  }
  return fam;
}

// --- quiver example ---------------------------------------------------------

/// The 6-dimensional algebra of the quiver 1 <-> 2 with relations
/// a12 a21 a12 = a21 a12 a21 = 0; cells l0 > l1 > l2. Path composition is
/// fixed so that e1 a12 = a12 = a12 e2.
template <class K>
Family<K> build_quiver_example(const K& one) {
  CellPoset poset({"l0", "l1", "l2"}, {{1, 0}, {2, 1}});
  std::vector<std::vector<std::string>> t_sets = {{"1"}, {"1", "2"}, {"2"}};
  auto datum = std::make_shared<CellDatum<K>>(one, std::move(poset), std::move(t_sets));
  // basis indices: z1 = a12 a21, e1, a12, a21, z2 = a21 a12, e2
  const int z1 = datum->triple_index(0, 0, 0);
  const int e1 = datum->triple_index(1, 0, 0);
  const int a12 = datum->triple_index(1, 0, 1);
  const int a21 = datum->triple_index(1, 1, 0);
  const int z2 = datum->triple_index(1, 1, 1);
  const int e2 = datum->triple_index(2, 0, 0);
  auto set = [&](int a, int b, int c) { datum->set_product(a, b, AlgebraElement<K>::single(c, one)); };
  set(e1, e1, e1);
  set(e1, a12, a12);
  set(e1, z1, z1);
  set(z1, e1, z1);
  set(a21, e1, a21);
  set(e2, e2, e2);
  set(e2, a21, a21);
  set(e2, z2, z2);
  set(z2, e2, z2);
  set(a12, e2, a12);
  set(a12, a21, z1);
  set(a21, a12, z2);
  datum->set_unit(AlgebraElement<K>::from_terms({{e1, one}, {e2, one}}));

  Family<K> fam;
  fam.datum = datum;
  fam.idempotent_names = {"1", "2"};
  fam.idempotents = {AlgebraElement<K>::single(e1, one), AlgebraElement<K>::single(e2, one)};
  return fam;
}

// --- diagram families: Temperley-Lieb and the bubble algebra ----------------

namespace detail {

/// Cell labels and declared order for through-count vectors: more through
/// strands first; multiplication only lowers through counts, so cells with
/// fewer strands sit higher in the poset.
inline std::string through_label(const std::vector<int>& k, int m) {
  std::string s;
  for (int c = 0; c < m; ++c) {
    if (c) s += ",";
    s += std::to_string(k[c]);
  }
  return s;
}

}  // namespace detail

inline std::string cup_only_label(const HalfDiagram& h) {
  std::string s;
  for (int i = 0; i < h.n; ++i)
    if (h.mate[i] > i) s += "(" + std::to_string(i + 1) + "," + std::to_string(h.mate[i] + 1) + ")";
  return s.empty() ? "-" : s;
}

/// Shared construction for TL (m = 1) and bubble algebras: basis diagrams are
/// joins of half-diagram pairs grouped by through vector; structure constants
/// come from coloured composition, with a removed loop of colour c worth
/// delta_c. Products whose interface colourings disagree vanish.
template <class K>
Family<K> build_coloured_tl(int n, int m, const std::vector<Rational>& deltas, const K& one,
                            bool with_idempotents) {
  if (n < 0 || m < 1) throw std::invalid_argument("build_coloured_tl: bad parameters");
  if (static_cast<int>(deltas.size()) != m)
    throw std::invalid_argument("build_coloured_tl: need one delta per colour");
  std::vector<K> delta_k;
  for (const auto& q : deltas) delta_k.push_back(scalar_from_rational(one, q));

  std::vector<HalfDiagram> halves = enumerate_half_diagrams(n, m);
  // group by through vector
  std::map<std::vector<int>, std::vector<int>> by_through;  // vector -> indices into halves
  for (size_t h = 0; h < halves.size(); ++h) by_through[halves[h].through_counts(m)].push_back(static_cast<int>(h));
  // declared order: total descending, then lexicographically descending
  std::vector<std::vector<int>> cells;
  for (auto& [k, _] : by_through) cells.push_back(k);
  std::sort(cells.begin(), cells.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int ta = 0, tb = 0;
    for (int x : a) ta += x;
    for (int x : b) tb += x;
    if (ta != tb) return ta > tb;
    return a > b;
  });

  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> t_sets;
  for (const auto& k : cells) {
    labels.push_back(detail::through_label(k, m));
    std::vector<std::string> ts;
    for (int h : by_through[k]) ts.push_back(m == 1 ? cup_only_label(halves[h]) : halves[h].label());
    t_sets.push_back(std::move(ts));
  }
  // strict order: lambda < mu iff through(lambda) >= through(mu) componentwise, !=
  std::vector<std::pair<int, int>> pairs;
  for (size_t a = 0; a < cells.size(); ++a)
    for (size_t b = 0; b < cells.size(); ++b) {
      if (a == b) continue;
      bool geq = true;
      for (int c = 0; c < m; ++c)
        if (cells[a][c] < cells[b][c]) geq = false;
      if (geq) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  auto datum = std::make_shared<CellDatum<K>>(one, CellPoset(labels, std::move(pairs)), t_sets);

  Family<K> fam;
  fam.n = n;
  fam.m = m;
  fam.deltas = deltas;
  fam.datum = datum;
  fam.basis_diagrams.reserve(datum->dim());
  std::map<std::string, int> diagram_index;
  for (size_t l = 0; l < cells.size(); ++l) {
    const auto& hs = by_through[cells[l]];
    for (size_t s = 0; s < hs.size(); ++s)
      for (size_t t = 0; t < hs.size(); ++t) {
        ColouredDiagram diag = join_half_diagrams(halves[hs[s]], halves[hs[t]], m);
        int idx = datum->triple_index(static_cast<int>(l), static_cast<int>(s), static_cast<int>(t));
        diagram_index[diag.key()] = idx;
        fam.basis_diagrams.push_back(std::move(diag));
      }
  }

  const int dim = datum->dim();
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      ColouredComposeResult comp = compose_coloured(fam.basis_diagrams[a], fam.basis_diagrams[b]);
      if (comp.zero) continue;
      K coeff = one;
      for (int c = 0; c < m; ++c)
        for (int rep = 0; rep < comp.removed[c]; ++rep) coeff *= delta_k[c];
      auto it = diagram_index.find(comp.diagram[0].key());
      if (it == diagram_index.end())
        throw std::logic_error("build_coloured_tl: composition left the diagram basis");
      datum->set_product(a, b, AlgebraElement<K>::single(it->second, coeff));
    }

  // unit: the sum of identity-shaped diagrams over all colourings present
  {
    std::vector<typename AlgebraElement<K>::Term> unit_terms;
    for (size_t h = 0; h < halves.size(); ++h) {
      bool all_defect = true;
      for (int v : halves[h].mate)
        if (v >= 0) all_defect = false;
      if (!all_defect) continue;
      ColouredDiagram e = join_half_diagrams(halves[h], halves[h], m);
      int idx = diagram_index.at(e.key());
      unit_terms.emplace_back(idx, one);
      if (with_idempotents) {
        std::string word;
        for (int c : halves[h].colour) word += colour_name(c);
        fam.idempotent_names.push_back(word);
        fam.idempotents.push_back(AlgebraElement<K>::single(idx, one));
      }
    }
    datum->set_unit(AlgebraElement<K>::from_terms(std::move(unit_terms)));
  }
  return fam;
}

/// Temperley-Lieb algebra TL_n(delta): the single-colour case, cells by
/// through-line count.
template <class K>
Family<K> build_tl(int n, const Rational& delta, const K& one) {
  return build_coloured_tl<K>(n, 1, {delta}, one, false);
}

/// Bubble algebra T_{n,m}(delta_0..delta_{m-1}): planar per colour,
/// cross-colour crossings allowed, idempotents indexed by the m^n strand
/// colourings of the identity diagram.
template <class K>
Family<K> build_bubble(int n, int m, const std::vector<Rational>& deltas, const K& one) {
  return build_coloured_tl<K>(n, m, deltas, one, true);
}

/// The corner algebra of a bubble family at one strand colouring, compared
/// against TL_{k_0}(delta_0) (x) ... (x) TL_{k_{m-1}}(delta_{m-1}) through the
/// split-by-colour relabelling bijection: dimensions and every structure
/// constant must agree.
template <class K>
CheckOutcome check_bubble_local_tensor(const Family<K>& fam, const IdempotentDecomposition<K>& dec,
                                       const LocalizedAlgebra<K>& loc) {
  CheckOutcome out;
  const std::string& word = dec.colour_names[loc.colour];
  std::vector<int> word_colours;
  for (char ch : word) word_colours.push_back(colour_from_name(std::string(1, ch)));
  std::vector<std::vector<int>> positions(fam.m);
  for (int j = 0; j < fam.n; ++j) positions[word_colours[j]].push_back(j);
  std::vector<std::map<int, int>> relabel(fam.m);
  for (int c = 0; c < fam.m; ++c)
    for (size_t p = 0; p < positions[c].size(); ++p) relabel[c][positions[c][p]] = static_cast<int>(p);

  std::vector<Family<K>> factors;
  for (int c = 0; c < fam.m; ++c)
    factors.push_back(build_tl<K>(static_cast<int>(positions[c].size()), fam.deltas[c], fam.datum->one()));

  long tensor_dim = 1;
  for (const auto& f : factors) tensor_dim *= f.datum->dim();
  if (tensor_dim != loc.datum->dim()) {
    out.fail("local dim " + std::to_string(loc.datum->dim()) + " != tensor dim " + std::to_string(tensor_dim));
    return out;
  }

  // local basis element -> tuple of TL factor indices
  auto split = [&](int local_idx) {
    const ColouredDiagram& diag = fam.basis_diagrams[loc.basis_embed[local_idx]];
    std::vector<int> tuple(fam.m);
    for (int c = 0; c < fam.m; ++c) {
      const int k = static_cast<int>(positions[c].size());
      std::vector<std::vector<int>> blocks;
      for (const auto& blk : diag.partition().blocks()) {
        if (diag.colours()[blk.front()] != c) continue;
        std::vector<int> lb;
        for (int node : blk)
          lb.push_back(node < fam.n ? relabel[c].at(node) : k + relabel[c].at(node - fam.n));
        blocks.push_back(std::move(lb));
      }
      ColouredDiagram local(1, SetPartition(k, k, std::move(blocks)), std::vector<int>(2 * k, 0));
      int found = -1;
      for (size_t x = 0; x < factors[c].basis_diagrams.size(); ++x)
        if (factors[c].basis_diagrams[x] == local) { found = static_cast<int>(x); break; }
      if (found < 0) throw std::logic_error("check_bubble_local_tensor: factor diagram not found");
      tuple[c] = found;
    }
    return tuple;
  };
  std::vector<std::vector<int>> tuples;
  for (int x = 0; x < loc.datum->dim(); ++x) tuples.push_back(split(x));

  // structure constants: local product vs componentwise factor products
  for (int a = 0; a < loc.datum->dim(); ++a)
    for (int b = 0; b < loc.datum->dim(); ++b) {
      const AlgebraElement<K>& p = loc.datum->basis_product(a, b);
      K coeff = fam.datum->one();
      std::vector<int> result(fam.m);
      bool zero = false;
      for (int c = 0; c < fam.m && !zero; ++c) {
        const AlgebraElement<K>& q = factors[c].datum->basis_product(tuples[a][c], tuples[b][c]);
        if (q.is_zero_element()) {
          zero = true;
        } else {
          coeff *= q.terms()[0].second;
          result[c] = q.terms()[0].first;
        }
      }
      bool match;
      if (zero || p.is_zero_element()) {
        match = zero && p.is_zero_element();
      } else {
        match = p.terms().size() == 1 && p.terms()[0].second == coeff && tuples[p.terms()[0].first] == result;
      }
      if (!match) {
        out.fail("structure constants disagree at local pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
        return out;
      }
    }
  return out;
}

// --- multi-colour partition algebra ------------------------------------------

template <class K>
struct PartitionFamily {
  std::shared_ptr<AssocAlgebra<K>> algebra;
  std::vector<ColouredDiagram> basis;
  std::vector<int> idempotent_indices;       // basis indices of the 1_(A)
  std::vector<std::string> idempotent_names;  // colour words over the top row
  int n = 0, m = 1;
  std::vector<Rational> deltas;
};

/// P_{n,m}(deltas): basis = all coloured set-partition diagrams on n+n nodes,
/// product by coloured composition; an associative algebra with identity
/// summing the m^n identity-shaped colourings. Not built as a cellular datum.
template <class K>
PartitionFamily<K> build_multicolour_partition(int n, int m, const std::vector<Rational>& deltas,
                                               const K& one) {
  if (n < 0 || m < 1) throw std::invalid_argument("build_multicolour_partition: bad parameters");
  if (static_cast<int>(deltas.size()) != m)
    throw std::invalid_argument("build_multicolour_partition: need one delta per colour");
  std::vector<K> delta_k;
  for (const auto& q : deltas) delta_k.push_back(scalar_from_rational(one, q));

  PartitionFamily<K> fam;
  fam.n = n;
  fam.m = m;
  fam.deltas = deltas;
  std::map<std::string, int> index;
  std::vector<std::string> labels;
  for (const auto& blocks : enumerate_set_partitions(2 * n)) {
    // colour each block independently
    const int nb = static_cast<int>(blocks.size());
    std::vector<int> choice(nb, 0);
    while (true) {
      std::vector<int> colours(2 * n, 0);
      for (int bidx = 0; bidx < nb; ++bidx)
        for (int node : blocks[bidx]) colours[node] = choice[bidx];
      ColouredDiagram d(m, SetPartition(n, n, blocks), std::move(colours));
      index[d.key()] = static_cast<int>(fam.basis.size());
      labels.push_back(d.render());
      fam.basis.push_back(std::move(d));
      int b = nb - 1;
      while (b >= 0 && ++choice[b] == m) {
        choice[b] = 0;
        --b;
      }
      if (b < 0) break;
    }
  }

  auto alg = std::make_shared<AssocAlgebra<K>>(one, std::move(labels));
  const int dim = alg->dim();
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      ColouredComposeResult comp = compose_coloured(fam.basis[a], fam.basis[b]);
      if (comp.zero) continue;
      K coeff = one;
      for (int c = 0; c < m; ++c)
        for (int rep = 0; rep < comp.removed[c]; ++rep) coeff *= delta_k[c];
      alg->set_product(a, b, AlgebraElement<K>::single(index.at(comp.diagram[0].key()), coeff));
    }

  // identity: sum over Xi^{n,m} of the identity-shaped colourings
  std::vector<typename AlgebraElement<K>::Term> unit_terms;
  std::vector<int> word(n, 0);
  while (true) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> colours(2 * n, 0);
    for (int j = 0; j < n; ++j) {
      blocks.push_back({j, n + j});
      colours[j] = colours[n + j] = word[j];
    }
    ColouredDiagram e(m, SetPartition(n, n, std::move(blocks)), std::move(colours));
    int idx = index.at(e.key());
    unit_terms.emplace_back(idx, one);
    fam.idempotent_indices.push_back(idx);
    std::string nm;
    for (int c : word) nm += colour_name(c);
    fam.idempotent_names.push_back(nm);
    int j = n - 1;
    while (j >= 0 && ++word[j] == m) {
      word[j] = 0;
      --j;
    }
    if (j < 0) break;
    if (n == 0) break;
  }
  alg->set_unit(AlgebraElement<K>::from_terms(std::move(unit_terms)));
  fam.algebra = std::move(alg);
  return fam;
}

/// Corner algebra 1_(A) P 1_(A) compared with the tensor product of plain
/// partition algebras P_{|A_i|}(delta_i) through the componentwise relabelling
/// bijection; dimension and all structure constants are checked.
template <class K>
CheckOutcome check_localization_iso(const PartitionFamily<K>& fam, int idem) {
  CheckOutcome out;
  const AssocAlgebra<K>& P = *fam.algebra;
  const std::string& word = fam.idempotent_names[idem];
  std::vector<int> word_colours;
  for (char ch : word) word_colours.push_back(colour_from_name(std::string(1, ch)));

  // supports A_i and relabelling maps
  std::vector<std::vector<int>> a_sets(fam.m);
  for (int j = 0; j < fam.n; ++j) a_sets[word_colours[j]].push_back(j);
  std::vector<std::map<int, int>> relabel(fam.m);  // top node -> local position
  for (int c = 0; c < fam.m; ++c)
    for (size_t p = 0; p < a_sets[c].size(); ++p) relabel[c][a_sets[c][p]] = static_cast<int>(p);

  // corner basis: diagrams with both boundary colourings equal to the word
  std::vector<int> corner;
  for (int i = 0; i < P.dim(); ++i)
    if (fam.basis[i].top_colours() == word_colours && fam.basis[i].bot_colours() == word_colours)
      corner.push_back(i);

  // factor algebras and their basis lookup
  std::vector<PartitionFamily<K>> comps;
  std::vector<const AssocAlgebra<K>*> comp_ptrs;
  for (int c = 0; c < fam.m; ++c) {
    comps.push_back(build_multicolour_partition<K>(static_cast<int>(a_sets[c].size()), 1,
                                                   {fam.deltas[c]}, P.one()));
    comp_ptrs.push_back(comps.back().algebra.get());
  }
  long tensor_dim = 1;
  for (auto* p : comp_ptrs) tensor_dim *= p->dim();
  if (tensor_dim != static_cast<long>(corner.size())) {
    out.fail("corner dimension " + std::to_string(corner.size()) + " != tensor dimension " +
             std::to_string(tensor_dim));
    return out;
  }

  // bijection: corner diagram -> tuple of relabelled per-colour diagrams
  auto component_index = [&](int basis_idx, int c) {
    const ColouredDiagram& d = fam.basis[basis_idx];
    std::vector<std::vector<int>> blocks;
    const int local_n = static_cast<int>(a_sets[c].size());
    for (const auto& blk : d.partition().blocks()) {
      if (d.colours()[blk.front()] != c) continue;
      std::vector<int> lb;
      for (int node : blk) {
        if (node < fam.n)
          lb.push_back(relabel[c].at(node));
        else
          lb.push_back(local_n + relabel[c].at(node - fam.n));
      }
      blocks.push_back(std::move(lb));
    }
    ColouredDiagram local(1, SetPartition(local_n, local_n, std::move(blocks)),
                          std::vector<int>(2 * local_n, 0));
    const auto& cb = comps[c].basis;
    for (size_t k = 0; k < cb.size(); ++k)
      if (cb[k] == local) return static_cast<int>(k);
    throw std::logic_error("check_localization_iso: component diagram not found");
  };
  auto tensor_index = [&](int basis_idx) {
    long v = 0;
    for (int c = 0; c < fam.m; ++c) v = v * comp_ptrs[c]->dim() + component_index(basis_idx, c);
    return static_cast<int>(v);
  };

  AssocAlgebra<K> tensor = tensor_product(comp_ptrs, P.one());
  std::map<int, int> to_tensor;
  for (int x : corner) to_tensor[x] = tensor_index(x);
  std::map<int, int> corner_pos;
  for (size_t k = 0; k < corner.size(); ++k) corner_pos[corner[k]] = static_cast<int>(k);

  for (int x : corner)
    for (int y : corner) {
      const AlgebraElement<K>& p = P.basis_product(x, y);
      const AlgebraElement<K>& q = tensor.basis_product(to_tensor[x], to_tensor[y]);
      // map p into tensor coordinates and compare
      std::vector<typename AlgebraElement<K>::Term> mapped;
      for (const auto& [k, c] : p.terms()) {
        if (!corner_pos.count(k)) {
          out.fail("corner product escapes the corner at " + P.basis_labels()[x] + " * " + P.basis_labels()[y]);
          return out;
        }
        mapped.emplace_back(to_tensor[k], c);
      }
      if (AlgebraElement<K>::from_terms(std::move(mapped)) != q) {
        out.fail("structure constants disagree at " + P.basis_labels()[x] + " * " + P.basis_labels()[y]);
        return out;
      }
    }
  return out;
}

struct PartitionOracleVerdict {
  bool semisimple = false;
  int radical_dim = 0;
  bool condition_satisfied = false;  // no delta_i an integer in [0, 2n-1]
  bool consistent = true;            // condition satisfied => semisimple
};

/// Trace-form radical verdict for P_{n,m}, cross-referenced against the
/// sufficient condition (each delta_i not an integer in [0, 2n-1]). Only
/// the sufficiency direction is asserted.
template <class K>
PartitionOracleVerdict oracle_semisimple_partition(const PartitionFamily<K>& fam, int dim_cap = 200) {
  const AssocAlgebra<K>& P = *fam.algebra;
  if (P.dim() > dim_cap)
    throw resource_error("oracle_semisimple_partition: dimension " + std::to_string(P.dim()) +
                         " exceeds cap " + std::to_string(dim_cap));
  PartitionOracleVerdict v;
  Subspace<K> rad = trace_form_radical(P);
  v.radical_dim = rad.dim();
  v.semisimple = rad.dim() == 0;
  v.condition_satisfied = true;
  for (const auto& q : fam.deltas) {
    if (q.is_integer() && q >= Rational(0) && q <= Rational(2L * fam.n - 1)) v.condition_satisfied = false;
  }
  if (v.condition_satisfied && !v.semisimple) v.consistent = false;
  return v;
}

}  // namespace cellab
