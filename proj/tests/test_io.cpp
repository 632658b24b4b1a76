#include "doctest.h"
#include "qgring/builtin_groups.hpp"
#include "qgring/corpus.hpp"

#include <cstdio>
#include <fstream>

using namespace qgring;

TEST_CASE("algebra element JSON round trip") {
  auto s3 = builtin::symmetric3();
  Elt r = *s3->element_by_label("r");
  auto x = AlgebraElement::basis(s3, r).scale(rat(-7, 3)) +
           AlgebraElement::one(s3).scale(rat(22, 7));
  auto j = algebra_element_to_json(x);
  CHECK(algebra_element_from_json(s3, j) == x);
  // schema shape: decimal strings
  CHECK(j["coeffs"]["0"][0] == "22");
  CHECK(j["coeffs"]["0"][1] == "7");
}

TEST_CASE("cyclotomic JSON round trip") {
  auto x = Cyclotomic::zeta_power(12, 5) * rat(3, 4) + Cyclotomic::one(12);
  auto j = cyclotomic_to_json(x);
  CHECK(j["conductor"] == 12);
  CHECK(cyclotomic_from_json(j) == x);
}

TEST_CASE("group files: cycle notation and Cayley JSON") {
  {
    std::ofstream f("/tmp/qgring_test.group");
    f << "# comment line\n";
    f << "r = (1 2 3)\n";
    f << "s = (1 2)\n";
  }
  auto g = group_from_file("/tmp/qgring_test.group", 100);
  CHECK(g->order() == 6);
  CHECK(g->element_by_label("r").has_value());

  {
    std::ofstream f("/tmp/qgring_test.json");
    f << R"({"order": 3, "labels": {"a": 1}, "mul": [[0,1,2],[1,2,0],[2,0,1]]})";
  }
  auto c3 = group_from_file("/tmp/qgring_test.json", 100);
  CHECK(c3->order() == 3);
  CHECK(c3->evaluate_word("a^2") == 2);
  std::remove("/tmp/qgring_test.group");
  std::remove("/tmp/qgring_test.json");
}

TEST_CASE("verify accepts pipeline output and rejects tampering") {
  auto a3 = analyze(builtin::symmetric3());
  auto idem = idempotents_json(a3);
  CHECK_NOTHROW(verify_bundle(a3.group, idem));
  auto mat = matrix_units_json(a3);
  CHECK_NOTHROW(verify_bundle(a3.group, mat));
  auto rep = unit_report(a3);
  auto uni = units_json(a3, rep);
  CHECK_NOTHROW(verify_bundle(a3.group, uni));

  // flip one coefficient in an idempotent member: orthogonality/idempotency
  // must fail with nonzero-diagnosis
  Json tampered = idem;
  auto& member = tampered["components"][0]["members"][0]["value"]["coeffs"];
  for (auto& [key, val] : member.items()) {
    val[0] = "999";
    break;
  }
  CHECK_THROWS_AS(verify_bundle(a3.group, tampered), Error);

  // unrecognizable bundles are rejected

  CHECK_THROWS_AS(verify_bundle(a3.group, Json{{"nothing", 1}}), Error);
}

TEST_CASE("declared pairs parse from JSON") {
  auto d8 = builtin::dihedral(8);
  Json doc = Json::parse(R"({"pairs": [
    {"H": ["a"], "K": {"commutator_of_H_plus": []}},
    {"H": ["a", "b"], "K": ["a"]}
  ]})");
  auto pairs = pairs_from_json(d8, doc);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].first.first.order() == 4);
  CHECK(pairs[0].first.second.order() == 1);  // <a> is abelian
  CHECK(pairs[1].first.first.order() == 8);
}

TEST_CASE("corpus run is deterministic") {
  RunConfig cfg;
  auto a = corpus_run_json(false, cfg).dump();
  auto b = corpus_run_json(false, cfg).dump();
  CHECK(a == b);
  CHECK(a.find("S3") != std::string::npos);
}
