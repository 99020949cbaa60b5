#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cellab/cell_datum.hpp"
#include "cellab/matrix.hpp"
#include "cellab/modules.hpp"
#include "cellab/representation.hpp"

namespace cellab {

/// An orthogonal decomposition of the unit into star-fixed idempotents,
/// together with the colour classification of the cellular index sets:
/// T(lambda) is the disjoint union over i of T(lambda, i).
template <class K>
struct IdempotentDecomposition {
  std::shared_ptr<const CellDatum<K>> parent;
  std::vector<std::string> colour_names;
  std::vector<AlgebraElement<K>> idempotents;
  std::vector<std::vector<int>> colour_of;    // [lambda][t] -> colour index
  std::vector<std::vector<int>> lambda_sets;  // [i] -> Lambda_i (cell indices, declared order)
  std::vector<std::vector<int>> i_sets;       // [lambda] -> I_lambda
  std::vector<std::vector<std::vector<int>>> t_split;  // [lambda][i] -> T(lambda, i) positions

  int n_colours() const { return static_cast<int>(idempotents.size()); }

  /// Classifies every (lambda, t) by testing e_i c_{t,first} = c_{t,first};
  /// uniqueness failures are assumption violations and throw.
  static IdempotentDecomposition analyze(std::shared_ptr<const CellDatum<K>> parent,
                                         std::vector<std::string> names,
                                         std::vector<AlgebraElement<K>> es) {
    IdempotentDecomposition dec;
    dec.parent = std::move(parent);
    dec.colour_names = std::move(names);
    dec.idempotents = std::move(es);
    const CellDatum<K>& d = *dec.parent;
    const int ni = dec.n_colours();
    dec.colour_of.resize(d.n_cells());
    dec.t_split.assign(d.n_cells(), std::vector<std::vector<int>>(ni));
    dec.lambda_sets.assign(ni, {});
    dec.i_sets.resize(d.n_cells());
    for (int l = 0; l < d.n_cells(); ++l) {
      dec.colour_of[l].assign(d.t_size(l), -1);
      for (int t = 0; t < d.t_size(l); ++t) {
        AlgebraElement<K> c = d.basis_element(d.triple_index(l, t, 0));
        int found = -1;
        for (int i = 0; i < ni; ++i) {
          if (d.multiply(dec.idempotents[i], c) == c) {
            if (found >= 0)
              throw std::invalid_argument("idempotent decomposition: (" + d.poset().label(l) + "," +
                                          d.t_set(l)[t] + ") fixed by two idempotents");
            found = i;
          }
        }
        if (found < 0)
          throw std::invalid_argument("idempotent decomposition: no idempotent fixes (" +
                                      d.poset().label(l) + "," + d.t_set(l)[t] + ")");
        dec.colour_of[l][t] = found;
        dec.t_split[l][found].push_back(t);
      }
      for (int i = 0; i < ni; ++i)
        if (!dec.t_split[l][i].empty()) {
          dec.i_sets[l].push_back(i);
          dec.lambda_sets[i].push_back(l);
        }
    }
    return dec;
  }
};

/// Validation of (A1)-(A4) and of the uniqueness lemma; violations are
/// report entries, never exceptions.
template <class K>
ValidationReport check_assumptions(const CellDatum<K>& d, const std::vector<AlgebraElement<K>>& es) {
  ValidationReport rep;
  const int ni = static_cast<int>(es.size());
  if (ni == 0) {
    rep.add("A1", "empty idempotent family");
    return rep;
  }
  AlgebraElement<K> sum;
  for (const auto& e : es) sum += e;
  if (sum != d.unit()) rep.add("A2", "idempotents do not sum to the unit");
  for (int i = 0; i < ni; ++i) {
    if (es[i].is_zero_element()) rep.add("A2", "idempotent " + std::to_string(i) + " is zero");
    if (d.multiply(es[i], es[i]) != es[i]) rep.add("A2", "e_" + std::to_string(i) + " is not idempotent");
    for (int j = 0; j < ni; ++j)
      if (i != j && !d.multiply(es[i], es[j]).is_zero_element())
        rep.add("A2", "e_" + std::to_string(i) + " e_" + std::to_string(j) + " != 0");
    if (d.star(es[i]) != es[i]) rep.add("A4", "e_" + std::to_string(i) + " is not star-fixed");
  }
  // A3 + uniqueness, verified for every column s; and the induced right
  // absorption c_{st} e_i = c_{st} for t of colour i
  for (int l = 0; l < d.n_cells(); ++l) {
    const int n = d.t_size(l);
    for (int t = 0; t < n; ++t) {
      int count = 0, colour = -1;
      for (int i = 0; i < ni; ++i) {
        bool fixes_all = true;
        for (int s = 0; s < n; ++s) {
          AlgebraElement<K> c = d.basis_element(d.triple_index(l, t, s));
          if (d.multiply(es[i], c) != c) { fixes_all = false; break; }
        }
        if (fixes_all) { ++count; colour = i; }
      }
      if (count == 0)
        rep.add("A3", "no idempotent fixes row (" + d.poset().label(l) + "," + d.t_set(l)[t] + ")");
      if (count > 1)
        rep.add("A3-uniqueness", "row (" + d.poset().label(l) + "," + d.t_set(l)[t] + ") fixed twice");
      if (count == 1) {
        for (int s = 0; s < n; ++s) {
          AlgebraElement<K> c = d.basis_element(d.triple_index(l, s, t));
          if (d.multiply(c, es[colour]) != c) {
            rep.add("right-absorption", "c_{st} e_i != c_{st} at (" + d.poset().label(l) + "," + d.t_set(l)[t] + ")");
            break;
          }
        }
      }
    }
  }
  return rep;
}

/// The corner algebra e_i A e_i as a cellular datum over the poset
/// Lambda_i with index sets T(lambda, i), plus the basis embedding into
/// the parent.
template <class K>
struct LocalizedAlgebra {
  int colour = -1;
  std::string colour_name;
  std::shared_ptr<CellDatum<K>> datum;
  std::vector<int> lambda_embed;            // local cell -> parent cell
  std::vector<std::vector<int>> t_embed;    // [local cell][local t] -> parent t position
  std::vector<int> basis_embed;             // local basis idx -> parent basis idx
};

template <class K>
LocalizedAlgebra<K> localize(const IdempotentDecomposition<K>& dec, int i) {
  const CellDatum<K>& d = *dec.parent;
  if (i < 0 || i >= dec.n_colours()) throw std::invalid_argument("localize: unknown colour");
  LocalizedAlgebra<K> loc;
  loc.colour = i;
  loc.colour_name = dec.colour_names[i];
  loc.lambda_embed = dec.lambda_sets[i];
  if (loc.lambda_embed.empty()) throw std::logic_error("localize: Lambda_i empty (A2 violated)");

  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> t_sets;
  for (int l : loc.lambda_embed) {
    labels.push_back(d.poset().label(l));
    std::vector<std::string> ts;
    for (int t : dec.t_split[l][i]) ts.push_back(d.t_set(l)[t]);
    t_sets.push_back(std::move(ts));
    loc.t_embed.push_back(dec.t_split[l][i]);
  }
  std::vector<std::pair<int, int>> pairs;
  for (size_t a = 0; a < loc.lambda_embed.size(); ++a)
    for (size_t b = 0; b < loc.lambda_embed.size(); ++b)
      if (d.poset().less(loc.lambda_embed[a], loc.lambda_embed[b]))
        pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  auto datum = std::make_shared<CellDatum<K>>(d.one(), CellPoset(std::move(labels), std::move(pairs)),
                                              std::move(t_sets));

  // basis embedding and the parent-index -> local-index map
  std::vector<int> parent_to_local(d.dim(), -1);
  for (int lc = 0; lc < datum->n_cells(); ++lc) {
    int pl = loc.lambda_embed[lc];
    const auto& rows = loc.t_embed[lc];
    for (size_t s = 0; s < rows.size(); ++s)
      for (size_t t = 0; t < rows.size(); ++t) {
        int local_idx = datum->triple_index(lc, static_cast<int>(s), static_cast<int>(t));
        int parent_idx = d.triple_index(pl, rows[s], rows[t]);
        loc.basis_embed.push_back(parent_idx);
        parent_to_local[parent_idx] = local_idx;
      }
  }

  auto to_local = [&](const AlgebraElement<K>& x) {
    std::vector<typename AlgebraElement<K>::Term> terms;
    for (const auto& [p, c] : x.terms()) {
      if (parent_to_local[p] < 0)
        throw std::logic_error("localize: product leaves the corner algebra span");
      terms.emplace_back(parent_to_local[p], c);
    }
    return AlgebraElement<K>::from_terms(std::move(terms));
  };
  for (int a = 0; a < datum->dim(); ++a)
    for (int b = 0; b < datum->dim(); ++b)
      datum->set_product(a, b, to_local(d.basis_product(loc.basis_embed[a], loc.basis_embed[b])));
  datum->set_unit(to_local(dec.idempotents[i]));
  loc.datum = std::move(datum);
  return loc;
}

/// V(lambda, i) = e_i Delta(lambda) as a module over localize(dec, i);
/// the zero module when lambda is outside Lambda_i.
template <class K>
ModuleRep<K> v_module(const IdempotentDecomposition<K>& dec, const LocalizedAlgebra<K>& loc, int lambda) {
  for (size_t lc = 0; lc < loc.lambda_embed.size(); ++lc)
    if (loc.lambda_embed[lc] == lambda) return cell_module(*loc.datum, static_cast<int>(lc));
  ModuleRep<K> zero;
  zero.name = "V(" + dec.parent->poset().label(lambda) + "," + loc.colour_name + ")=0";
  zero.lambda = lambda;
  zero.action.assign(loc.datum->dim(), Matrix<K>(0, 0));
  return zero;
}

/// Gram matrix M(lambda, i) of V(lambda, i); domain error outside Lambda_i.
template <class K>
Matrix<K> gram_block(const IdempotentDecomposition<K>& dec, const LocalizedAlgebra<K>& loc, int lambda) {
  for (size_t lc = 0; lc < loc.lambda_embed.size(); ++lc)
    if (loc.lambda_embed[lc] == lambda)
      return gram_matrix(*loc.datum, static_cast<int>(lc)).matrix;
  throw std::domain_error("gram_block: " + dec.parent->poset().label(lambda) + " not in Lambda_" +
                          loc.colour_name);
}

struct CheckOutcome {
  bool ok = true;
  std::vector<std::string> details;
  void fail(std::string msg) {
    ok = false;
    details.push_back(std::move(msg));
  }
};

/// G(lambda) is exactly block-diagonal after sorting T(lambda) by colour,
/// with blocks M(lambda, i); all cross-colour entries vanish.
template <class K>
struct GramSplitCheck {
  bool ok = true;
  std::vector<int> permutation;  // colour-sorted positions of T(lambda)
  std::vector<std::string> details;
};

template <class K>
GramSplitCheck<K> check_gram_direct_sum(const IdempotentDecomposition<K>& dec,
                                        const std::vector<LocalizedAlgebra<K>>& locs, int lambda) {
  const CellDatum<K>& d = *dec.parent;
  GramSplitCheck<K> out;
  Matrix<K> g = gram_matrix(d, lambda).matrix;
  for (int i = 0; i < dec.n_colours(); ++i)
    for (int t : dec.t_split[lambda][i]) out.permutation.push_back(t);
  // cross-colour entries of the unsorted Gram matrix vanish
  for (int s = 0; s < d.t_size(lambda); ++s)
    for (int t = 0; t < d.t_size(lambda); ++t)
      if (dec.colour_of[lambda][s] != dec.colour_of[lambda][t] && !is_zero(g(s, t))) {
        out.ok = false;
        out.details.push_back("cross-colour Gram entry (" + d.t_set(lambda)[s] + "," + d.t_set(lambda)[t] + ") != 0");
      }
  // diagonal blocks equal the localized Gram matrices
  int offset = 0;
  for (int i = 0; i < dec.n_colours(); ++i) {
    const auto& rows = dec.t_split[lambda][i];
    if (rows.empty()) continue;
    Matrix<K> m = gram_block(dec, locs[i], lambda);
    for (size_t s = 0; s < rows.size(); ++s)
      for (size_t t = 0; t < rows.size(); ++t)
        if (!(m(static_cast<int>(s), static_cast<int>(t)) == g(rows[s], rows[t]))) {
          out.ok = false;
          out.details.push_back("block M(" + d.poset().label(lambda) + "," + dec.colour_names[i] +
                                ") disagrees with the parent Gram entries");
        }
    offset += static_cast<int>(rows.size());
  }
  (void)offset;
  return out;
}

/// Parent semisimple iff every localized algebra is.
template <class K>
CheckOutcome check_semisimple_equivalence(const IdempotentDecomposition<K>& dec,
                                          const std::vector<LocalizedAlgebra<K>>& locs) {
  CheckOutcome out;
  bool parent = is_semisimple(*dec.parent).semisimple;
  bool all_local = true;
  for (const auto& loc : locs)
    if (!is_semisimple(*loc.datum).semisimple) all_local = false;
  if (parent != all_local)
    out.fail(std::string("parent ") + (parent ? "semisimple" : "not semisimple") +
             " but localized algebras " + (all_local ? "all semisimple" : "not all semisimple"));
  return out;
}

/// dim Rad Delta(lambda) = sum_i dim Rad V(lambda,i), and each embedded
/// local radical lies inside the parent radical.
template <class K>
CheckOutcome check_radical_decomposition(const IdempotentDecomposition<K>& dec,
                                         const std::vector<LocalizedAlgebra<K>>& locs, int lambda) {
  const CellDatum<K>& d = *dec.parent;
  CheckOutcome out;
  GramData<K> parent = gram_matrix(d, lambda);
  int parent_rad = parent.radical.dim();
  int sum = 0;
  for (int i : dec.i_sets[lambda]) {
    const LocalizedAlgebra<K>& loc = locs[i];
    Matrix<K> m = gram_block(dec, loc, lambda);
    Subspace<K> local_rad = nullspace(m, d.one());
    sum += local_rad.dim();
    // embed local radical vectors into parent coordinates
    const auto& rows = dec.t_split[lambda][i];
    for (int v = 0; v < local_rad.dim(); ++v) {
      std::vector<K> emb(d.t_size(lambda), K());
      for (size_t s = 0; s < rows.size(); ++s) emb[rows[s]] = local_rad.basis()(v, static_cast<int>(s));
      if (!parent.radical.contains(emb))
        out.fail("embedded Rad V(" + d.poset().label(lambda) + "," + dec.colour_names[i] +
                 ") escapes Rad Delta(" + d.poset().label(lambda) + ")");
    }
  }
  if (parent_rad != sum)
    out.fail("dim Rad Delta(" + d.poset().label(lambda) + ") = " + std::to_string(parent_rad) +
             " != sum of local radical dims " + std::to_string(sum));
  return out;
}

/// rank G(lambda) = sum_i rank M(lambda,i), and dim(e_i L(lambda)) equals
/// rank M(lambda,i) for each colour. Domain error off Lambda^0.
template <class K>
CheckOutcome check_simple_dim_sum(const IdempotentDecomposition<K>& dec,
                                  const std::vector<LocalizedAlgebra<K>>& locs, int lambda) {
  const CellDatum<K>& d = *dec.parent;
  GramData<K> parent = gram_matrix(d, lambda);
  if (parent.matrix.is_zero_matrix())
    throw std::domain_error("check_simple_dim_sum: " + d.poset().label(lambda) + " not in Lambda^0");
  CheckOutcome out;
  int sum = 0;
  for (int i : dec.i_sets[lambda]) sum += rank(gram_block(dec, locs[i], lambda));
  if (parent.rank != sum)
    out.fail("rank G = " + std::to_string(parent.rank) + " != sum of block ranks " + std::to_string(sum));
  ModuleRep<K> simple = simple_module(d, lambda);
  for (int i : dec.i_sets[lambda]) {
    Matrix<K> ei = simple.act(dec.idempotents[i]);
    int r = rank(ei);
    int expect = rank(gram_block(dec, locs[i], lambda));
    if (r != expect)
      out.fail("dim(e_" + dec.colour_names[i] + " L(" + d.poset().label(lambda) + ")) = " + std::to_string(r) +
               " != rank M = " + std::to_string(expect));
  }
  return out;
}

/// Slice of a global intertwiner Delta(lambda) -> Delta(mu) to the colour-i
/// coordinates. Verifies that theta respects colours and that the slice
/// intertwines the localized actions.
template <class K>
Matrix<K> restrict_hom(const IdempotentDecomposition<K>& dec, const LocalizedAlgebra<K>& loc,
                       int lambda, int mu, const Matrix<K>& theta) {
  const CellDatum<K>& d = *dec.parent;
  const int i = loc.colour;
  const auto& rows = dec.t_split[mu][i];
  const auto& cols = dec.t_split[lambda][i];
  for (int u = 0; u < d.t_size(mu); ++u)
    for (int s = 0; s < d.t_size(lambda); ++s)
      if (dec.colour_of[mu][u] != dec.colour_of[lambda][s] && !is_zero(theta(u, s)))
        throw std::logic_error("restrict_hom: intertwiner has a cross-colour entry");
  Matrix<K> tau(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c) tau(static_cast<int>(r), static_cast<int>(c)) = theta(rows[r], cols[c]);
  // verify tau intertwines the local cell-module actions
  ModuleRep<K> vl = v_module(dec, loc, lambda);
  ModuleRep<K> vm = v_module(dec, loc, mu);
  for (int a = 0; a < loc.datum->dim(); ++a)
    if (!(vm.action[a] * tau == tau * vl.action[a]))
      throw std::logic_error("restrict_hom: restriction fails to intertwine local actions");
  return tau;
}

template <class K>
struct ExtendedHom {
  Matrix<K> theta;
  bool intertwines = true;
  std::vector<std::string> failures;  // theorem-violation report entries
};

/// Extension of a local intertwiner by zero on the other colours, checked
/// against the full algebra action.
template <class K>
ExtendedHom<K> extend_hom(const IdempotentDecomposition<K>& dec, const LocalizedAlgebra<K>& loc,
                          int lambda, int mu, const Matrix<K>& tau) {
  const CellDatum<K>& d = *dec.parent;
  const int i = loc.colour;
  const auto& rows = dec.t_split[mu][i];
  const auto& cols = dec.t_split[lambda][i];
  if (tau.rows() != static_cast<int>(rows.size()) || tau.cols() != static_cast<int>(cols.size()))
    throw std::invalid_argument("extend_hom: tau has the wrong shape");
  ExtendedHom<K> out;
  out.theta = Matrix<K>(d.t_size(mu), d.t_size(lambda));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c) out.theta(rows[r], cols[c]) = tau(static_cast<int>(r), static_cast<int>(c));
  ModuleRep<K> dl = cell_module(d, lambda);
  ModuleRep<K> dm = cell_module(d, mu);
  for (int a = 0; a < d.dim(); ++a)
    if (!(dm.action[a] * out.theta == out.theta * dl.action[a])) {
      out.intertwines = false;
      out.failures.push_back("extension fails to intertwine at basis element " + d.triple_name(a));
    }
  return out;
}

template <class K>
struct LocalizedBlocks {
  BlocksResult result;
  bool lambda_equals_lambda0 = true;
  std::vector<std::string> warnings;
};

/// Blocks of the parent from the cell-blocks of every localized algebra,
/// merged along the embeddings and chain-closed. When Lambda != Lambda^0 the
/// theorem's hypothesis fails and the result is marked advisory.
template <class K>
LocalizedBlocks<K> blocks_via_localization(const IdempotentDecomposition<K>& dec,
                                           const std::vector<LocalizedAlgebra<K>>& locs) {
  const CellDatum<K>& d = *dec.parent;
  if (field_characteristic(d.one()) != 0)
    throw unsupported_error("blocks_via_localization requires characteristic 0");
  LocalizedBlocks<K> out;
  std::vector<int> l0 = lambda_zero(d);
  out.lambda_equals_lambda0 = static_cast<int>(l0.size()) == d.n_cells();
  if (!out.lambda_equals_lambda0)
    out.warnings.push_back("Lambda != Lambda^0: localized block result is advisory");
  UnionFind uf(d.n_cells());
  for (const auto& loc : locs) {
    BlocksResult local = blocks(*loc.datum);
    for (const auto& cls : local.cell_blocks)
      for (size_t k = 1; k < cls.size(); ++k)
        uf.merge(loc.lambda_embed[cls[0]], loc.lambda_embed[cls[k]]);
  }
  out.result.cell_blocks = uf.classes();
  std::set<int> in0(l0.begin(), l0.end());
  for (const auto& c : out.result.cell_blocks) {
    std::vector<int> r;
    for (int x : c)
      if (in0.count(x)) r.push_back(x);
    if (!r.empty()) out.result.blocks_on_lambda0.push_back(std::move(r));
  }
  return out;
}

}  // namespace cellab
