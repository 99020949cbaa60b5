#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cellab/scalars.hpp"

namespace cellab {

/// Finite strict partial order on cell labels. Input pairs (a, b) mean
/// a < b; the transitive closure is taken once at construction, and a
/// closure that produces a cycle or a reflexive pair is rejected.
class CellPoset {
 public:
  CellPoset() = default;
  CellPoset(std::vector<std::string> labels, std::vector<std::pair<int, int>> strict_pairs)
      : labels_(std::move(labels)), declared_(std::move(strict_pairs)) {
    const int n = static_cast<int>(labels_.size());
    less_.assign(n, std::vector<bool>(n, false));
    for (auto& [a, b] : declared_) {
      if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("CellPoset: pair out of range");
      less_[a][b] = true;
    }
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (less_[i][k])
          for (int j = 0; j < n; ++j)
            if (less_[k][j]) less_[i][j] = true;
    for (int i = 0; i < n; ++i) {
      if (less_[i][i]) throw std::invalid_argument("CellPoset: cycle through " + labels_[i]);
      for (int j = 0; j < n; ++j)
        if (i != j && less_[i][j] && less_[j][i])
          throw std::invalid_argument("CellPoset: antisymmetry violated between " + labels_[i] + " and " + labels_[j]);
    }
    for (int i = 0; i < n; ++i) index_[labels_[i]] = i;
    if (index_.size() != labels_.size()) throw std::invalid_argument("CellPoset: duplicate label");
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw std::invalid_argument("CellPoset: unknown label " + label);
    return it->second;
  }
  bool less(int a, int b) const { return less_[a][b]; }
  const std::vector<std::pair<int, int>>& declared_pairs() const { return declared_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> declared_;
  std::vector<std::vector<bool>> less_;
  std::map<std::string, int> index_;
};

/// Sparse element of the algebra: terms (basis index, coefficient),
/// sorted by index, no explicit zeros. Equality is structural.
template <class K>
class AlgebraElement {
 public:
  using Term = std::pair<int, K>;

  AlgebraElement() = default;
  static AlgebraElement single(int idx, K coeff) {
    AlgebraElement e;
    if (!is_zero(coeff)) e.terms_.emplace_back(idx, std::move(coeff));
    return e;
  }
  static AlgebraElement from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    AlgebraElement e;
    for (auto& [i, c] : terms) {
      if (!e.terms_.empty() && e.terms_.back().first == i)
        e.terms_.back().second += c;
      else
        e.terms_.emplace_back(i, c);
    }
    e.prune();
    return e;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero_element() const { return terms_.empty(); }
  int support_size() const { return static_cast<int>(terms_.size()); }

  /// Coefficient at a basis index; K() is the (context-free) zero.
  K coeff(int idx) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                               [](const Term& t, int i) { return t.first < i; });
    if (it != terms_.end() && it->first == idx) return it->second;
    return K();
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        merged.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        merged.push_back(o.terms_[j++]);
      } else {
        K c = terms_[i].second + o.terms_[j].second;
        if (!is_zero(c)) merged.emplace_back(terms_[i].first, std::move(c));
        ++i; ++j;
      }
    }
    terms_ = std::move(merged);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) { return *this += -o; }
  AlgebraElement operator-() const {
    AlgebraElement e = *this;
    for (auto& [i, c] : e.terms_) c = -c;
    return e;
  }
  AlgebraElement& operator*=(const K& s) {
    if (is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [i, c] : terms_) c *= s;
    prune();
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const K& s, AlgebraElement a) { return a *= s; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

 private:
  void prune() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const Term& t) { return is_zero(t.second); }),
                 terms_.end());
  }
  std::vector<Term> terms_;
};

/// Explicit cellular structure: poset, index sets T(lambda), the basis of
/// triples c^lambda_{st} in a fixed total order (by cell, then s, then t),
/// the full structure-constant table, the involution table and the unit.
///
/// Immutable once built; builders fill the product table through
/// set_product before first use.
template <class K>
class CellDatum {
 public:
  struct Triple {
    int lambda, s, t;
  };

  CellDatum(K one, CellPoset poset, std::vector<std::vector<std::string>> t_sets)
      : one_(std::move(one)), poset_(std::move(poset)), t_sets_(std::move(t_sets)) {
    if (static_cast<int>(t_sets_.size()) != poset_.size())
      throw std::invalid_argument("CellDatum: T-set count does not match poset size");
    offsets_.resize(t_sets_.size());
    int off = 0;
    for (size_t l = 0; l < t_sets_.size(); ++l) {
      if (t_sets_[l].empty()) throw std::invalid_argument("CellDatum: empty T(" + poset_.label(static_cast<int>(l)) + ")");
      offsets_[l] = off;
      off += static_cast<int>(t_sets_[l].size()) * static_cast<int>(t_sets_[l].size());
    }
    dim_ = off;
    table_.assign(static_cast<size_t>(dim_) * dim_, AlgebraElement<K>());
    star_.resize(dim_);
    for (int idx = 0; idx < dim_; ++idx) {
      Triple tr = triple(idx);
      star_[idx] = triple_index(tr.lambda, tr.t, tr.s);
    }
  }

  int dim() const { return dim_; }
  int n_cells() const { return poset_.size(); }
  const CellPoset& poset() const { return poset_; }
  const K& one() const { return one_; }
  const std::vector<std::string>& t_set(int lambda) const { return t_sets_[lambda]; }
  int t_size(int lambda) const { return static_cast<int>(t_sets_[lambda].size()); }

  int triple_index(int lambda, int s, int t) const {
    return offsets_[lambda] + s * t_size(lambda) + t;
  }
  Triple triple(int idx) const {
    int lambda = static_cast<int>(std::upper_bound(offsets_.begin(), offsets_.end(), idx) - offsets_.begin()) - 1;
    int rel = idx - offsets_[lambda];
    int n = t_size(lambda);
    return {lambda, rel / n, rel % n};
  }
  std::string triple_name(int idx) const {
    Triple tr = triple(idx);
    return "c[" + poset_.label(tr.lambda) + ";" + t_sets_[tr.lambda][tr.s] + "," + t_sets_[tr.lambda][tr.t] + "]";
  }

  void set_product(int a, int b, AlgebraElement<K> p) { table_[static_cast<size_t>(a) * dim_ + b] = std::move(p); }
  const AlgebraElement<K>& basis_product(int a, int b) const { return table_[static_cast<size_t>(a) * dim_ + b]; }

  void set_unit(AlgebraElement<K> u) { unit_ = std::move(u); }
  const AlgebraElement<K>& unit() const { return unit_; }

  void set_star_table(std::vector<int> star) {
    if (static_cast<int>(star.size()) != dim_) throw std::invalid_argument("CellDatum: bad star table size");
    star_ = std::move(star);
  }
  const std::vector<int>& star_table() const { return star_; }
  int star_of_basis(int idx) const { return star_[idx]; }

  AlgebraElement<K> basis_element(int idx) const { return AlgebraElement<K>::single(idx, one_); }

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

  AlgebraElement<K> star(const AlgebraElement<K>& a) const {
    std::vector<typename AlgebraElement<K>::Term> out;
    out.reserve(a.terms().size());
    for (const auto& [i, c] : a.terms()) out.emplace_back(star_[i], c);
    return AlgebraElement<K>::from_terms(std::move(out));
  }

  /// Drops every term whose cell is strictly greater than lambda
  /// (reduction mod A^{>lambda}).
  AlgebraElement<K> reduce_mod_higher(const AlgebraElement<K>& a, int lambda) const {
    std::vector<typename AlgebraElement<K>::Term> out;
    for (const auto& [i, c] : a.terms()) {
      int mu = triple(i).lambda;
      if (!(mu != lambda && poset_.less(lambda, mu))) out.emplace_back(i, c);
    }
    return AlgebraElement<K>::from_terms(std::move(out));
  }

 private:
  K one_;
  CellPoset poset_;
  std::vector<std::vector<std::string>> t_sets_;
  std::vector<int> offsets_;
  int dim_ = 0;
  std::vector<AlgebraElement<K>> table_;
  std::vector<int> star_;
  AlgebraElement<K> unit_;
};

// --- validation -----------------------------------------------------------

struct ValidationIssue {
  std::string check;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  std::vector<std::string> notes;
  bool ok() const { return issues.empty(); }
  void add(std::string check, std::string detail) {
    issues.push_back({std::move(check), std::move(detail)});
  }
};

struct ValidationOptions {
  // products of all triples are checked exhaustively when dim^3 stays
  // below this bound; above it a seeded sample is used
  long assoc_exhaustive_cap = 300000;
  int assoc_samples = 4000;
  unsigned long seed = 0x5eed;
};

/// Checks the cellular axioms: poset sanity, basis count, unit, involution
/// anti-automorphism, Eq.-style triangularity with column independence,
/// and (sampled) associativity. Violations become report entries.
template <class K>
ValidationReport validate_cell_datum(const CellDatum<K>& d, const ValidationOptions& opt = {}) {
  ValidationReport rep;
  const int dim = d.dim();
  const CellPoset& P = d.poset();

  // poset axioms (construction enforces these; re-verified for loaded data)
  for (int i = 0; i < P.size(); ++i) {
    if (P.less(i, i)) rep.add("poset", "reflexive at " + P.label(i));
    for (int j = 0; j < P.size(); ++j) {
      if (i != j && P.less(i, j) && P.less(j, i))
        rep.add("poset", "antisymmetry fails for " + P.label(i) + ", " + P.label(j));
      for (int k = 0; k < P.size(); ++k)
        if (P.less(i, j) && P.less(j, k) && !P.less(i, k))
          rep.add("poset", "transitivity fails through " + P.label(j));
    }
  }

  {
    long expect = 0;
    for (int l = 0; l < P.size(); ++l) expect += static_cast<long>(d.t_size(l)) * d.t_size(l);
    if (expect != dim) rep.add("basis-count", "dim != sum |T(lambda)|^2");
  }

  // unit
  if (d.unit().is_zero_element()) {
    rep.add("unit", "unit element not set");
  } else {
    for (int c = 0; c < dim; ++c) {
      if (d.multiply(d.unit(), d.basis_element(c)) != d.basis_element(c))
        rep.add("unit", "1*" + d.triple_name(c) + " != " + d.triple_name(c));
      if (d.multiply(d.basis_element(c), d.unit()) != d.basis_element(c))
        rep.add("unit", d.triple_name(c) + "*1 != " + d.triple_name(c));
    }
  }

  // involution: star(c_st) = c_ts, star^2 = id, star(ab) = star(b)star(a)
  for (int idx = 0; idx < dim; ++idx) {
    auto tr = d.triple(idx);
    if (d.star_of_basis(idx) != d.triple_index(tr.lambda, tr.t, tr.s)) {
      rep.add("involution", "star(" + d.triple_name(idx) + ") is not the transposed triple");
    }
    if (d.star_of_basis(d.star_of_basis(idx)) != idx)
      rep.add("involution", "star^2 != id at " + d.triple_name(idx));
  }
  for (int a = 0; a < dim && rep.issues.size() < 200; ++a)
    for (int b = 0; b < dim; ++b) {
      auto lhs = d.star(d.basis_product(a, b));
      auto rhs = d.multiply(d.basis_element(d.star_of_basis(b)), d.basis_element(d.star_of_basis(a)));
      if (lhs != rhs) {
        rep.add("involution", "star is not an anti-automorphism at " + d.triple_name(a) + "*" + d.triple_name(b));
        break;
      }
    }

  // cellular multiplication axiom: for each a and each cell, the lambda-layer
  // of a*c_{st} sits in column t with coefficients independent of t, and all
  // other terms live strictly above lambda
  for (int a = 0; a < dim; ++a) {
    for (int l = 0; l < P.size(); ++l) {
      int n = d.t_size(l);
      std::vector<K> r_ref;  // r^{(u,s)} for t = 0, flattened u-major per s
      for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
          const AlgebraElement<K>& p = d.basis_product(a, d.triple_index(l, s, t));
          std::vector<K> r_here(n, K());
          bool bad = false;
          for (const auto& [k, c] : p.terms()) {
            auto tr = d.triple(k);
            if (tr.lambda == l) {
              if (tr.t != t) {
                rep.add("axiom-1.1", "column mixing in " + d.triple_name(a) + "*" + d.triple_name(d.triple_index(l, s, t)));
                bad = true;
                break;
              }
              r_here[tr.s] = c;
            } else if (!P.less(l, tr.lambda)) {
              rep.add("axiom-1.1", "term at non-higher cell " + P.label(tr.lambda) + " in " +
                                       d.triple_name(a) + "*" + d.triple_name(d.triple_index(l, s, t)));
              bad = true;
              break;
            }
          }
          if (bad) continue;
          if (t == 0) {
            r_ref.insert(r_ref.end(), r_here.begin(), r_here.end());
          } else {
            for (int u = 0; u < n; ++u)
              if (!(r_here[u] == r_ref[static_cast<size_t>(s) * n + u])) {
                rep.add("axiom-1.1", "coefficient depends on t at " + d.triple_name(a) + "*" +
                                         d.triple_name(d.triple_index(l, s, t)));
                break;
              }
          }
        }
      }
      if (rep.issues.size() > 400) return rep;  // noisy data; stop early
    }
  }

  // associativity
  long cube = static_cast<long>(dim) * dim * dim;
  auto check_triple = [&](int a, int b, int c) {
    auto ab_c = d.multiply(d.basis_product(a, b), d.basis_element(c));
    auto a_bc = d.multiply(d.basis_element(a), d.basis_product(b, c));
    if (ab_c != a_bc)
      rep.add("associativity", "(" + d.triple_name(a) + "*" + d.triple_name(b) + ")*" + d.triple_name(c));
  };
  if (cube <= opt.assoc_exhaustive_cap) {
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b)
        for (int c = 0; c < dim; ++c) check_triple(a, b, c);
    rep.notes.push_back("associativity checked exhaustively");
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> pick(0, dim - 1);
    for (int k = 0; k < opt.assoc_samples; ++k) check_triple(pick(rng), pick(rng), pick(rng));
    rep.notes.push_back("associativity sampled on " + std::to_string(opt.assoc_samples) + " triples");
  }

  return rep;
}

}  // namespace cellab
