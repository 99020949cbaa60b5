#pragma once

#include <string>
#include <vector>

#include "cellab/cell_datum.hpp"

namespace cellab {

/// Plain associative unital algebra given by a basis and its full
/// structure-constant table; used for algebras carried without cellular
/// structure (the multi-colour partition algebra, tensor products).
template <class K>
class AssocAlgebra {
 public:
  AssocAlgebra(K one, std::vector<std::string> basis_labels)
      : one_(std::move(one)), labels_(std::move(basis_labels)) {
    table_.assign(static_cast<size_t>(dim()) * dim(), AlgebraElement<K>());
  }

  int dim() const { return static_cast<int>(labels_.size()); }
  const K& one() const { return one_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }

  void set_product(int a, int b, AlgebraElement<K> p) { table_[static_cast<size_t>(a) * dim() + b] = std::move(p); }
  const AlgebraElement<K>& basis_product(int a, int b) const { return table_[static_cast<size_t>(a) * dim() + b]; }

  void set_unit(AlgebraElement<K> u) { unit_ = std::move(u); }
  const AlgebraElement<K>& unit() const { return unit_; }

  AlgebraElement<K> multiply(const AlgebraElement<K>& a, const AlgebraElement<K>& b) const {
    std::vector<typename AlgebraElement<K>::Term> acc;
    for (const auto& [i, ci] : a.terms())
      for (const auto& [j, cj] : b.terms()) {
        K c = ci * cj;
        if (is_zero(c)) continue;
        for (const auto& [k, ck] : basis_product(i, j).terms()) acc.emplace_back(k, c * ck);
      }
    return AlgebraElement<K>::from_terms(std::move(acc));
  }

  AlgebraElement<K> basis_element(int idx) const { return AlgebraElement<K>::single(idx, one_); }

 private:
  K one_;
  std::vector<std::string> labels_;
  std::vector<AlgebraElement<K>> table_;
  AlgebraElement<K> unit_;
};

/// Tensor product of algebras: basis = tuples, componentwise products.
template <class K>
AssocAlgebra<K> tensor_product(const std::vector<const AssocAlgebra<K>*>& factors, const K& one) {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> tuples;
  std::vector<int> idx(factors.size(), 0);
  while (true) {
    std::string lbl;
    for (size_t f = 0; f < factors.size(); ++f) {
      if (f) lbl += " (x) ";
      lbl += factors[f]->basis_labels()[idx[f]];
    }
    labels.push_back(lbl);
    tuples.push_back(idx);
    int f = static_cast<int>(factors.size()) - 1;
    while (f >= 0 && ++idx[f] == factors[f]->dim()) {
      idx[f] = 0;
      --f;
    }
    if (f < 0) break;
    if (factors.empty()) break;
  }
  if (factors.empty()) {
    AssocAlgebra<K> triv(one, {"1"});
    triv.set_product(0, 0, AlgebraElement<K>::single(0, one));
    triv.set_unit(AlgebraElement<K>::single(0, one));
    return triv;
  }
  // index arithmetic: mixed radix over factor dims
  auto flat = [&](const std::vector<int>& tup) {
    int v = 0;
    for (size_t f = 0; f < factors.size(); ++f) v = v * factors[f]->dim() + tup[f];
    return v;
  };
  AssocAlgebra<K> out(one, std::move(labels));
  const int n = out.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // componentwise product; each factor product must be a scalar multiple
      // of a single basis element (true for diagram algebras)
      K coeff = one;
      std::vector<int> result(factors.size());
      bool zero = false;
      for (size_t f = 0; f < factors.size() && !zero; ++f) {
        const AlgebraElement<K>& p = factors[f]->basis_product(tuples[a][f], tuples[b][f]);
        if (p.is_zero_element()) {
          zero = true;
        } else if (p.terms().size() == 1) {
          coeff *= p.terms()[0].second;
          result[f] = p.terms()[0].first;
        } else {
          throw std::logic_error("tensor_product: factor product is not monomial");
        }
      }
      if (!zero) out.set_product(a, b, AlgebraElement<K>::single(flat(result), coeff));
    }
  std::vector<typename AlgebraElement<K>::Term> unit_terms;
  // unit = tensor of the factor units (expand the product of sums)
  std::vector<const std::vector<typename AlgebraElement<K>::Term>*> unit_parts;
  for (auto* f : factors) unit_parts.push_back(&f->unit().terms());
  std::vector<size_t> pos(factors.size(), 0);
  while (true) {
    K c = one;
    std::vector<int> tup(factors.size());
    for (size_t f = 0; f < factors.size(); ++f) {
      tup[f] = (*unit_parts[f])[pos[f]].first;
      c *= (*unit_parts[f])[pos[f]].second;
    }
    unit_terms.emplace_back(flat(tup), c);
    int f = static_cast<int>(factors.size()) - 1;
    while (f >= 0 && ++pos[f] == unit_parts[f]->size()) {
      pos[f] = 0;
      --f;
    }
    if (f < 0) break;
  }
  out.set_unit(AlgebraElement<K>::from_terms(std::move(unit_terms)));
  return out;
}

}  // namespace cellab
