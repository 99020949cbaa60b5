#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cellab/families.hpp"

namespace cellab {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kCodeVersion = "cellab-1.0";

/// Build request: family, sizes, parameters and the ground field.
struct AlgebraSpec {
  std::string family;  // matrix | quiver | tl | bubble | pnm | custom-json
  int n = 0;
  int m = 1;
  std::vector<Rational> delta;
  bool rational_field = true;
  std::uint64_t p = 0;
  unsigned long seed = 0x5eed;
};

inline json spec_to_json(const AlgebraSpec& s) {
  json j;
  j["family"] = s.family;
  j["n"] = s.n;
  j["m"] = s.m;
  json ds = json::array();
  for (const auto& d : s.delta) ds.push_back(d.str());
  j["delta"] = ds;
  j["field"] = s.rational_field ? json{{"type", "rational"}}
                                : json{{"type", "gf"}, {"p", std::to_string(s.p)}};
  return j;
}

inline AlgebraSpec spec_from_json(const json& j) {
  AlgebraSpec s;
  s.family = j.at("family").get<std::string>();
  s.n = j.at("n").get<int>();
  s.m = j.at("m").get<int>();
  for (const auto& d : j.at("delta")) s.delta.push_back(Rational::parse(d.get<std::string>()));
  const json& f = j.at("field");
  if (f.at("type") == "rational") {
    s.rational_field = true;
  } else if (f.at("type") == "gf") {
    s.rational_field = false;
    s.p = std::stoull(f.at("p").get<std::string>());
  } else {
    throw std::invalid_argument("unknown field type");
  }
  return s;
}

inline std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Content hash of a document, excluding the hash field itself and the
/// timestamp; keys are emitted sorted, so the hash is deterministic.
inline std::string content_hash(json doc) {
  doc.erase("content_hash");
  doc.erase("generated_at");
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(doc.dump())));
  return std::string("fnv1a64:") + buf;
}

template <class K>
json element_to_json(const AlgebraElement<K>& e) {
  json out = json::array();
  for (const auto& [i, c] : e.terms()) out.push_back(json::array({i, scalar_str(c)}));
  return out;
}

template <class K>
AlgebraElement<K> element_from_json(const json& j, const K& one) {
  std::vector<typename AlgebraElement<K>::Term> terms;
  for (const auto& t : j) terms.emplace_back(t.at(0).get<int>(), scalar_parse(one, t.at(1).get<std::string>()));
  return AlgebraElement<K>::from_terms(std::move(terms));
}

/// Cellular datum (plus family metadata) as a versioned document.
template <class K>
json family_to_json(const Family<K>& fam, const AlgebraSpec& spec) {
  const CellDatum<K>& d = *fam.datum;
  json j;
  j["format_version"] = kFormatVersion;
  j["code_version"] = kCodeVersion;
  j["kind"] = "cell_datum";
  j["spec"] = spec_to_json(spec);
  j["labels"] = d.poset().labels();
  json pairs = json::array();
  for (auto [a, b] : d.poset().declared_pairs())
    pairs.push_back(json::array({d.poset().label(a), d.poset().label(b)}));
  j["order_pairs"] = pairs;
  json tsets = json::array();
  for (int l = 0; l < d.n_cells(); ++l) tsets.push_back(d.t_set(l));
  j["t_sets"] = tsets;
  j["star"] = d.star_table();
  j["unit"] = element_to_json(d.unit());
  json sc = json::array();
  for (int a = 0; a < d.dim(); ++a)
    for (int b = 0; b < d.dim(); ++b) {
      const auto& p = d.basis_product(a, b);
      if (!p.is_zero_element()) sc.push_back(json::array({a, b, element_to_json(p)}));
    }
  j["structure_constants"] = sc;
  json idem;
  idem["names"] = fam.idempotent_names;
  json elems = json::array();
  for (const auto& e : fam.idempotents) elems.push_back(element_to_json(e));
  idem["elements"] = elems;
  j["idempotents"] = idem;
  if (!fam.basis_diagrams.empty()) {
    json diag = json::array();
    for (const auto& dgm : fam.basis_diagrams) diag.push_back(dgm.render());
    j["basis_diagrams"] = diag;
    j["diagram_sizes"] = json::array({fam.n, fam.m});
  }
  j["content_hash"] = content_hash(j);
  return j;
}

template <class K>
Family<K> family_from_json(const json& j, const K& one) {
  if (j.at("kind") != "cell_datum") throw std::invalid_argument("document is not a cell_datum");
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  std::map<std::string, int> label_idx;
  for (size_t i = 0; i < labels.size(); ++i) label_idx[labels[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& pr : j.at("order_pairs"))
    pairs.emplace_back(label_idx.at(pr.at(0).get<std::string>()), label_idx.at(pr.at(1).get<std::string>()));
  std::vector<std::vector<std::string>> t_sets;
  for (const auto& ts : j.at("t_sets")) t_sets.push_back(ts.get<std::vector<std::string>>());
  auto datum = std::make_shared<CellDatum<K>>(one, CellPoset(labels, pairs), t_sets);
  if (j.contains("star")) datum->set_star_table(j.at("star").get<std::vector<int>>());
  datum->set_unit(element_from_json(j.at("unit"), one));
  for (const auto& rec : j.at("structure_constants"))
    datum->set_product(rec.at(0).get<int>(), rec.at(1).get<int>(), element_from_json(rec.at(2), one));
  Family<K> fam;
  fam.datum = datum;
  if (j.contains("idempotents")) {
    fam.idempotent_names = j.at("idempotents").at("names").get<std::vector<std::string>>();
    for (const auto& e : j.at("idempotents").at("elements"))
      fam.idempotents.push_back(element_from_json(e, one));
  }
  if (j.contains("spec")) {
    AlgebraSpec spec = spec_from_json(j.at("spec"));
    fam.n = spec.n;
    fam.m = spec.m;
    fam.deltas = spec.delta;
  }
  if (j.contains("basis_diagrams")) {
    int n = j.at("diagram_sizes").at(0).get<int>();
    int m = j.at("diagram_sizes").at(1).get<int>();
    fam.n = n;
    fam.m = m;
    for (const auto& s : j.at("basis_diagrams"))
      fam.basis_diagrams.push_back(ColouredDiagram::parse(s.get<std::string>(), n, n, m));
  }
  return fam;
}

template <class K>
json partition_family_to_json(const PartitionFamily<K>& fam, const AlgebraSpec& spec) {
  const AssocAlgebra<K>& alg = *fam.algebra;
  json j;
  j["format_version"] = kFormatVersion;
  j["code_version"] = kCodeVersion;
  j["kind"] = "assoc_algebra";
  j["spec"] = spec_to_json(spec);
  j["basis_labels"] = alg.basis_labels();
  j["unit"] = element_to_json(alg.unit());
  json sc = json::array();
  for (int a = 0; a < alg.dim(); ++a)
    for (int b = 0; b < alg.dim(); ++b) {
      const auto& p = alg.basis_product(a, b);
      if (!p.is_zero_element()) sc.push_back(json::array({a, b, element_to_json(p)}));
    }
  j["structure_constants"] = sc;
  j["idempotent_indices"] = fam.idempotent_indices;
  j["idempotent_names"] = fam.idempotent_names;
  j["diagram_sizes"] = json::array({fam.n, fam.m});
  json diag = json::array();
  for (const auto& d : fam.basis) diag.push_back(d.render());
  j["basis_diagrams"] = diag;
  j["content_hash"] = content_hash(j);
  return j;
}

template <class K>
PartitionFamily<K> partition_family_from_json(const json& j, const K& one) {
  if (j.at("kind") != "assoc_algebra") throw std::invalid_argument("document is not an assoc_algebra");
  PartitionFamily<K> fam;
  fam.n = j.at("diagram_sizes").at(0).get<int>();
  fam.m = j.at("diagram_sizes").at(1).get<int>();
  auto alg = std::make_shared<AssocAlgebra<K>>(one, j.at("basis_labels").get<std::vector<std::string>>());
  alg->set_unit(element_from_json(j.at("unit"), one));
  for (const auto& rec : j.at("structure_constants"))
    alg->set_product(rec.at(0).get<int>(), rec.at(1).get<int>(), element_from_json(rec.at(2), one));
  fam.algebra = std::move(alg);
  fam.idempotent_indices = j.at("idempotent_indices").get<std::vector<int>>();
  fam.idempotent_names = j.at("idempotent_names").get<std::vector<std::string>>();
  for (const auto& s : j.at("basis_diagrams"))
    fam.basis.push_back(ColouredDiagram::parse(s.get<std::string>(), fam.n, fam.n, fam.m));
  if (j.contains("spec")) fam.deltas = spec_from_json(j.at("spec")).delta;
  return fam;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(1) << "\n";
}

}  // namespace cellab
