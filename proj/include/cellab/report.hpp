#pragma once

#include <ctime>
#include <set>
#include <string>

#include "cellab/serialize.hpp"

namespace cellab {

struct ReportResult {
  json doc;
  bool checks_failed = false;
};

inline const std::set<std::string>& all_report_sections() {
  static const std::set<std::string> s = {"gram",  "simples",            "blocks",
                                          "loewy", "verify-assumptions", "verify-theorems",
                                          "oracle"};
  return s;
}

namespace detail {

template <class K>
json matrix_to_json(const Matrix<K>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_str(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline json int_matrix_to_json(const std::vector<std::vector<long>>& m) {
  json rows = json::array();
  for (const auto& r : m) rows.push_back(r);
  return rows;
}

template <class K>
json blocks_to_json(const CellDatum<K>& d, const BlocksResult& b) {
  auto classes = [&](const std::vector<std::vector<int>>& cs) {
    json out = json::array();
    for (const auto& c : cs) {
      json cls = json::array();
      for (int x : c) cls.push_back(d.poset().label(x));
      out.push_back(cls);
    }
    return out;
  };
  return json{{"cell_blocks", classes(b.cell_blocks)}, {"blocks_on_lambda0", classes(b.blocks_on_lambda0)}};
}

inline json validation_to_json(const ValidationReport& rep) {
  json issues = json::array();
  for (const auto& i : rep.issues) issues.push_back(json{{"check", i.check}, {"detail", i.detail}});
  return json{{"status", rep.ok() ? "pass" : "fail"}, {"issues", issues}, {"notes", rep.notes}};
}

inline json outcome_to_json(const CheckOutcome& c) {
  return json{{"status", c.ok ? "pass" : "fail"}, {"details", c.details}};
}

}  // namespace detail

/// Assembles the machine-readable report for a cellular family. Sections
/// not requested are omitted; sections whose theory is unavailable in the
/// active characteristic are marked unsupported rather than failing.
template <class K>
ReportResult build_cell_report(const Family<K>& fam, const AlgebraSpec& spec,
                               std::set<std::string> sections, unsigned long seed = 0x5eed) {
  if (sections.empty()) sections = all_report_sections();
  const CellDatum<K>& d = *fam.datum;
  const bool char_zero = field_characteristic(d.one()) == 0;
  ReportResult out;
  json& j = out.doc;
  j["format_version"] = kFormatVersion;
  j["code_version"] = kCodeVersion;
  j["kind"] = "report";
  j["spec"] = spec_to_json(spec);
  j["dim"] = d.dim();
  j["labels"] = d.poset().labels();
  j["warnings"] = json::array();

  std::vector<int> l0 = lambda_zero(d);
  auto label_list = [&](const std::vector<int>& xs) {
    json a = json::array();
    for (int x : xs) a.push_back(d.poset().label(x));
    return a;
  };

  if (sections.count("gram")) {
    json cells = json::array();
    for (int l = 0; l < d.n_cells(); ++l) {
      GramData<K> g = gram_matrix(d, l);
      cells.push_back(json{{"lambda", d.poset().label(l)},
                           {"matrix", detail::matrix_to_json(g.matrix)},
                           {"rank", g.rank},
                           {"radical_dim", g.radical.dim()},
                           {"det", scalar_str(g.determinant)}});
    }
    j["gram"] = json{{"cells", cells}, {"lambda0", label_list(l0)}};
  }

  if (sections.count("simples")) {
    json dims = json::object();
    for (int l : l0) dims[d.poset().label(l)] = simple_dim(d, l);
    auto verdict = is_semisimple(d);
    json dets = json::array();
    for (const auto& dt : verdict.determinants) dets.push_back(scalar_str(dt));
    json semi{{"gram", verdict.semisimple}, {"determinants", dets}};
    if (char_zero) {
      bool oracle_ss = jacobson_radical(d).dim() == 0;
      semi["oracle"] = oracle_ss;
      if (oracle_ss != verdict.semisimple) {
        semi["agreement"] = false;
        out.checks_failed = true;
      } else {
        semi["agreement"] = true;
      }
    } else {
      semi["oracle"] = "unsupported in characteristic p";
    }
    j["simples"] = json{{"dims", dims}, {"semisimple", semi}};
  }

  if (sections.count("verify-assumptions")) {
    ValidationOptions opt;
    opt.seed = seed;
    json sec;
    ValidationReport axioms = validate_cell_datum(d, opt);
    sec["cellular_axioms"] = detail::validation_to_json(axioms);
    if (!axioms.ok()) out.checks_failed = true;
    if (!fam.idempotents.empty()) {
      ValidationReport ass = check_assumptions(d, fam.idempotents);
      sec["idempotent_assumptions"] = detail::validation_to_json(ass);
      if (!ass.ok()) out.checks_failed = true;
    } else {
      sec["idempotent_assumptions"] = "no idempotent family attached";
    }
    j["verify_assumptions"] = sec;
  }

  const bool has_dec = !fam.idempotents.empty();
  std::unique_ptr<IdempotentDecomposition<K>> dec;
  std::vector<LocalizedAlgebra<K>> locs;
  if (has_dec && (sections.count("verify-theorems") || sections.count("blocks"))) {
    dec = std::make_unique<IdempotentDecomposition<K>>(fam.decomposition());
    for (int i = 0; i < dec->n_colours(); ++i) locs.push_back(localize(*dec, i));
  }

  if (sections.count("verify-theorems")) {
    json sec;
    if (has_dec) {
      json per_cell = json::array();
      bool all_ok = true;
      for (int l = 0; l < d.n_cells(); ++l) {
        auto split = check_gram_direct_sum(*dec, locs, l);
        auto radd = check_radical_decomposition(*dec, locs, l);
        json cell{{"lambda", d.poset().label(l)},
                  {"gram_direct_sum", split.ok},
                  {"radical_decomposition", detail::outcome_to_json(radd)}};
        all_ok = all_ok && split.ok && radd.ok;
        if (in_lambda_zero(d, l)) {
          auto sds = check_simple_dim_sum(*dec, locs, l);
          cell["simple_dim_sum"] = detail::outcome_to_json(sds);
          all_ok = all_ok && sds.ok;
        }
        per_cell.push_back(cell);
      }
      auto equiv = check_semisimple_equivalence(*dec, locs);
      sec["per_cell"] = per_cell;
      sec["semisimple_equivalence"] = detail::outcome_to_json(equiv);
      all_ok = all_ok && equiv.ok;
      json locals = json::array();
      for (const auto& loc : locs) {
        bool valid = validate_cell_datum(*loc.datum).ok();
        locals.push_back(json{{"colour", loc.colour_name},
                              {"dim", loc.datum->dim()},
                              {"cellular", valid}});
        all_ok = all_ok && valid;
      }
      sec["localized_cellularity"] = locals;
      if (char_zero) {
        auto lb = blocks_via_localization(*dec, locs);
        auto direct = blocks(d);
        bool agree = lb.result.cell_blocks == direct.cell_blocks &&
                     lb.result.blocks_on_lambda0 == direct.blocks_on_lambda0;
        json blk{{"lambda_equals_lambda0", lb.lambda_equals_lambda0}, {"agree", agree}};
        for (const auto& w : lb.warnings) j["warnings"].push_back(w);
        if (lb.lambda_equals_lambda0 && !agree) {
          all_ok = false;
          blk["status"] = "fail";
        } else {
          blk["status"] = lb.lambda_equals_lambda0 ? "pass" : "advisory";
        }
        sec["block_method_agreement"] = blk;
      } else {
        sec["block_method_agreement"] = "unsupported in characteristic p";
      }
      if (!all_ok) out.checks_failed = true;
    } else {
      sec = "no idempotent family attached";
    }
    j["verify_theorems"] = sec;
  }

  if (sections.count("blocks")) {
    if (char_zero) {
      json sec{{"direct", detail::blocks_to_json(d, blocks(d))}};
      if (has_dec) {
        auto lb = blocks_via_localization(*dec, locs);
        sec["via_localization"] = detail::blocks_to_json(d, lb.result);
        sec["advisory"] = !lb.lambda_equals_lambda0;
      }
      j["blocks"] = sec;
    } else {
      j["blocks"] = "unsupported in characteristic p";
    }
  }

  if (sections.count("loewy")) {
    if (char_zero) {
      auto dm = decomposition_matrix(d);
      json loewy = json::array();
      for (int l = 0; l < d.n_cells(); ++l) {
        json layers = json::array();
        for (const auto& layer : dm.loewy[l]) {
          json entry = json::array();
          for (const auto& [k, mult] : layer)
            entry.push_back(json::array({d.poset().label(dm.lambda0[k]), mult}));
          layers.push_back(entry);
        }
        loewy.push_back(json{{"lambda", d.poset().label(l)}, {"layers", layers}});
      }
      j["loewy"] = loewy;
      j["decomposition"] = json{{"lambda0", label_list(dm.lambda0)},
                                {"d_matrix", detail::int_matrix_to_json(dm.d_matrix)},
                                {"cartan", detail::int_matrix_to_json(dm.cartan)},
                                {"triangularity",
                                 json{{"upper_ok", dm.upper_ok},
                                      {"lower_ok", dm.lower_ok},
                                      {"notes", dm.triangularity_notes}}}};
    } else {
      j["loewy"] = "unsupported in characteristic p";
    }
  }

  if (sections.count("oracle")) {
    if (char_zero) {
      int rad = jacobson_radical(d).dim();
      bool gram_ss = is_semisimple(d).semisimple;
      json sec{{"trace_form_radical_dim", rad},
               {"semisimple", rad == 0},
               {"gram_verdict", gram_ss},
               {"agreement", (rad == 0) == gram_ss}};
      if ((rad == 0) != gram_ss) out.checks_failed = true;
      j["oracle"] = sec;
    } else {
      j["oracle"] = "unsupported in characteristic p";
    }
  }

  j["generated_at"] = static_cast<long>(std::time(nullptr));
  j["content_hash"] = content_hash(j);
  return out;
}

/// Report for the multi-colour partition algebra: idempotent checks, the
/// corner-isomorphism theorem and the semisimplicity oracle. Cellular
/// sections are marked unsupported (no cell datum is built for P_{n,m}).
template <class K>
ReportResult build_partition_report(const PartitionFamily<K>& fam, const AlgebraSpec& spec,
                                    std::set<std::string> sections) {
  if (sections.empty()) sections = all_report_sections();
  const AssocAlgebra<K>& P = *fam.algebra;
  ReportResult out;
  json& j = out.doc;
  j["format_version"] = kFormatVersion;
  j["code_version"] = kCodeVersion;
  j["kind"] = "report";
  j["spec"] = spec_to_json(spec);
  j["dim"] = P.dim();
  j["warnings"] = json::array();
  for (const std::string& s : {"gram", "simples", "blocks", "loewy"})
    if (sections.count(s)) j[s] = "not a cellular datum";

  if (sections.count("verify-assumptions")) {
    json sec;
    bool ok = true;
    AlgebraElement<K> sum;
    for (int idx : fam.idempotent_indices) sum += P.basis_element(idx);
    bool sums = sum == P.unit();
    ok = ok && sums;
    bool orth = true, idem = true;
    for (int a : fam.idempotent_indices)
      for (int b : fam.idempotent_indices) {
        auto prod = P.multiply(P.basis_element(a), P.basis_element(b));
        if (a == b && prod != P.basis_element(a)) idem = false;
        if (a != b && !prod.is_zero_element()) orth = false;
      }
    ok = ok && orth && idem;
    // the flip involution fixes each 1_(A): its diagram is top-bottom symmetric
    bool star_fixed = true;
    for (int idx : fam.idempotent_indices) {
      const ColouredDiagram& e = fam.basis[idx];
      for (const auto& blk : e.partition().blocks())
        if (blk.size() != 2 || blk[1] != blk[0] + fam.n) star_fixed = false;
    }
    ok = ok && star_fixed;
    sec["sum_is_unit"] = sums;
    sec["orthogonal"] = orth;
    sec["idempotent"] = idem;
    sec["star_fixed"] = star_fixed;
    sec["count"] = fam.idempotent_indices.size();
    sec["status"] = ok ? "pass" : "fail";
    if (!ok) out.checks_failed = true;
    j["verify_assumptions"] = sec;
  }

  if (sections.count("verify-theorems")) {
    json iso = json::array();
    bool all_ok = true;
    for (size_t i = 0; i < fam.idempotent_indices.size(); ++i) {
      auto outcome = check_localization_iso(fam, static_cast<int>(i));
      iso.push_back(json{{"split", fam.idempotent_names[i]},
                         {"status", outcome.ok ? "pass" : "fail"},
                         {"details", outcome.details}});
      all_ok = all_ok && outcome.ok;
    }
    if (!all_ok) out.checks_failed = true;
    j["verify_theorems"] = json{{"localization_iso", iso}};
  }

  if (sections.count("oracle")) {
    if (field_characteristic(P.one()) == 0) {
      try {
        auto v = oracle_semisimple_partition(fam);
        json sec{{"semisimple", v.semisimple},
                 {"trace_form_radical_dim", v.radical_dim},
                 {"sufficient_condition_satisfied", v.condition_satisfied},
                 {"consistent", v.consistent},
                 {"note", "only the sufficiency direction of the semisimplicity "
                          "criterion is asserted"}};
        if (!v.consistent) out.checks_failed = true;
        j["oracle"] = sec;
      } catch (const resource_error& e) {
        j["oracle"] = std::string("skipped: ") + e.what();
      }
    } else {
      j["oracle"] = "unsupported in characteristic p";
    }
  }

  j["generated_at"] = static_cast<long>(std::time(nullptr));
  j["content_hash"] = content_hash(j);
  return out;
}

}  // namespace cellab
