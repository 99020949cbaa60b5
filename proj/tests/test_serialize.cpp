#include <doctest.h>

#include "cellab/report.hpp"
#include "cellab/serialize.hpp"
#include "oracles.hpp"

using namespace cellab;
using Q = Rational;

namespace {

AlgebraSpec quiver_spec() {
  AlgebraSpec s;
  s.family = "quiver";
  return s;
}

}  // namespace

TEST_CASE("cell datum documents round trip losslessly") {
  auto fam = build_bubble<Q>(2, 2, {Rational(3), Rational(1, 2)}, Q(1));
  AlgebraSpec spec;
  spec.family = "bubble";
  spec.n = 2;
  spec.m = 2;
  spec.delta = {Rational(3), Rational(1, 2)};
  json doc = family_to_json(fam, spec);
  auto back = family_from_json<Q>(doc, Q(1));
  CHECK(back.datum->dim() == fam.datum->dim());
  CHECK(back.datum->poset().labels() == fam.datum->poset().labels());
  for (int a = 0; a < fam.datum->dim(); ++a)
    for (int b = 0; b < fam.datum->dim(); ++b)
      CHECK(back.datum->basis_product(a, b) == fam.datum->basis_product(a, b));
  CHECK(back.datum->unit() == fam.datum->unit());
  CHECK(back.datum->star_table() == fam.datum->star_table());
  CHECK(back.idempotents == fam.idempotents);
  REQUIRE(back.basis_diagrams.size() == fam.basis_diagrams.size());
  for (size_t i = 0; i < fam.basis_diagrams.size(); ++i)
    CHECK(back.basis_diagrams[i] == fam.basis_diagrams[i]);
  // re-serialization is byte-identical (determinism)
  CHECK(family_to_json(back, spec).dump() == doc.dump());
  CHECK(validate_cell_datum(*back.datum).ok());
}

TEST_CASE("GF(p) documents carry the modulus once and round trip") {
  Fp one = make_prime_field_one(101);
  auto fam = build_quiver_example<Fp>(one);
  AlgebraSpec spec = quiver_spec();
  spec.rational_field = false;
  spec.p = 101;
  json doc = family_to_json(fam, spec);
  CHECK(doc.at("spec").at("field").at("p") == "101");
  auto back = family_from_json<Fp>(doc, one);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(back.datum->basis_product(a, b) == fam.datum->basis_product(a, b));
}

TEST_CASE("partition algebra documents round trip") {
  auto fam = build_multicolour_partition<Q>(1, 2, {Rational(2), Rational(5)}, Q(1));
  AlgebraSpec spec;
  spec.family = "pnm";
  spec.n = 1;
  spec.m = 2;
  spec.delta = {Rational(2), Rational(5)};
  json doc = partition_family_to_json(fam, spec);
  auto back = partition_family_from_json<Q>(doc, Q(1));
  CHECK(back.algebra->dim() == fam.algebra->dim());
  for (int a = 0; a < fam.algebra->dim(); ++a)
    for (int b = 0; b < fam.algebra->dim(); ++b)
      CHECK(back.algebra->basis_product(a, b) == fam.algebra->basis_product(a, b));
  CHECK(back.idempotent_indices == fam.idempotent_indices);
  CHECK(partition_family_to_json(back, spec).dump() == doc.dump());
}

TEST_CASE("content hash is stable and ignores the timestamp") {
  auto fam = build_quiver_example<Q>(Q(1));
  json doc = family_to_json(fam, quiver_spec());
  std::string h = doc.at("content_hash");
  CHECK(h == content_hash(doc));
  json doc2 = doc;
  doc2["generated_at"] = 123456;
  CHECK(content_hash(doc2) == h);
  json doc3 = doc;
  doc3["labels"][0] = "zz";
  CHECK(content_hash(doc3) != h);
}

TEST_CASE("scalar strings follow the exact formats") {
  CHECK(scalar_str(Rational(-7, 2)) == "-7/2");
  CHECK(scalar_str(Rational(4)) == "4");
  CHECK(scalar_str(Fp(9, 11)) == "9");
  CHECK(scalar_parse(Q(1), "-7/2") == Rational(-7, 2));
  CHECK(scalar_parse(Fp(1, 11), "20") == Fp(9, 11));
}

TEST_CASE("quiver report carries the paper data and passes all checks") {
  auto fam = build_quiver_example<Q>(Q(1));
  auto res = build_cell_report(fam, quiver_spec(), {});
  CHECK(!res.checks_failed);
  const json& j = res.doc;
  CHECK(j.at("gram").at("lambda0") == json::array({"l1", "l2"}));
  CHECK(j.at("decomposition").at("d_matrix") == json::array({json::array({1, 0}), json::array({1, 1}), json::array({0, 1})}));
  CHECK(j.at("blocks").at("direct").at("blocks_on_lambda0") == json::array({json::array({"l1", "l2"})}));
  CHECK(j.at("simples").at("semisimple").at("gram") == false);
  CHECK(j.at("simples").at("semisimple").at("agreement") == true);
  // advisory warning: Lambda != Lambda^0 on the quiver
  CHECK(!j.at("warnings").empty());
  // determinism modulo timestamp
  auto res2 = build_cell_report(fam, quiver_spec(), {});
  CHECK(content_hash(res.doc) == content_hash(res2.doc));
  CHECK(res.doc.at("content_hash") == content_hash(res.doc));
}

TEST_CASE("char-p report marks radical sections unsupported but passes") {
  Fp one = make_prime_field_one(7);
  auto fam = build_quiver_example<Fp>(one);
  AlgebraSpec spec = quiver_spec();
  spec.rational_field = false;
  spec.p = 7;
  auto res = build_cell_report(fam, spec, {"gram", "simples", "loewy", "blocks", "verify-assumptions"});
  CHECK(!res.checks_failed);
  CHECK(res.doc.at("loewy") == "unsupported in characteristic p");
  CHECK(res.doc.at("blocks") == "unsupported in characteristic p");
  CHECK(res.doc.at("gram").at("lambda0") == json::array({"l1", "l2"}));
}

TEST_CASE("partition report: idempotents, localization isos, oracle") {
  auto fam = build_multicolour_partition<Q>(2, 2, {Rational(5), Rational(7)}, Q(1));
  AlgebraSpec spec;
  spec.family = "pnm";
  spec.n = 2;
  spec.m = 2;
  spec.delta = {Rational(5), Rational(7)};
  auto res = build_partition_report(fam, spec, {});
  CHECK(!res.checks_failed);
  CHECK(res.doc.at("verify_assumptions").at("status") == "pass");
  CHECK(res.doc.at("verify_assumptions").at("count") == 4);
  CHECK(res.doc.at("oracle").at("semisimple") == true);
  CHECK(res.doc.at("gram") == "not a cellular datum");
  for (const auto& iso : res.doc.at("verify_theorems").at("localization_iso"))
    CHECK(iso.at("status") == "pass");
}
