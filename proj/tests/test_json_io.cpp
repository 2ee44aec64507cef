#include "zuslab/json_io.hpp"
#include "zuslab/star_algebra.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>

using namespace zuslab;

namespace {

Matrix awkward_matrix() {
  Matrix m(2, 2);
  // values chosen to stress the double round trip: tiny, huge, negative zero
  m << Cplx(1.0 / 3.0, -2.2250738585072014e-308), Cplx(0.0, 1e300),
      Cplx(-0.0, 0.1 + 0.2), Cplx(5e-324, -1.0);
  return m;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) {
    path = (std::filesystem::temp_directory_path() / name).string();
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("matrices round trip bit-exactly through JSON") {
  const Matrix m = awkward_matrix();
  const Matrix back = matrix_from_json(matrix_to_json(m));
  REQUIRE(back.rows() == 2);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) {
      CHECK(back(i, j).real() == m(i, j).real());
      CHECK(back(i, j).imag() == m(i, j).imag());
    }
}

TEST_CASE("matrix_from_json rejects malformed input") {
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1.0]]")), SchemaError);      // not [re,im]
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[[1,0],[0,1]],[[1,0]]]")),
                  SchemaError);  // ragged rows
  CHECK_THROWS_AS(matrix_from_json(json::parse("42")), SchemaError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[]")), SchemaError);
}

TEST_CASE("states and PVMs round trip with their structure") {
  const BipartiteState bell = catalog::bell();
  const BipartiteState back = state_from_json(state_to_json(bell));
  CHECK(back.d_a == 2);
  CHECK(back.d_b == 2);
  CHECK(oracle::max_abs_diff(back.rho, bell.rho) == 0.0);

  const Pvm q = catalog::qutrit_q();
  const Pvm qback = pvm_from_json(pvm_to_json(q));
  CHECK(qback.name == q.name);
  CHECK(qback.labels == q.labels);
  for (size_t a = 0; a < q.size(); ++a)
    CHECK(oracle::max_abs_diff(qback.projections[a], q.projections[a]) == 0.0);
}

TEST_CASE("deserialization validates with the file's tolerances") {
  json bad = state_to_json(catalog::bell());
  bad["rho"][0][0] = json::array({2.0, 0.0});  // trace blows up
  CHECK_THROWS_AS(state_from_json(bad), ValidationError);
}

TEST_CASE("problem files carry families in order, plus optional blocks") {
  ProblemFile pf;
  pf.state = catalog::bell();
  pf.families.emplace_back("S1", catalog::s1());
  pf.families.emplace_back("S2", catalog::s2());
  pf.algebra_generators = full_algebra(2).basis;
  pf.seed = 424242;
  pf.metadata = json{{"kind", "bell"}, {"note", "round trip me"}};
  pf.tolerances.eq_tol = 3e-9;

  const ProblemFile back = problem_from_json(problem_to_json(pf));
  REQUIRE(back.families.size() == 2);
  CHECK(back.families[0].first == "S1");
  CHECK(back.families[1].first == "S2");
  CHECK(back.find_family("S1") != nullptr);
  CHECK(back.find_family("nope") == nullptr);
  CHECK(back.merged_family().size() == 3);  // Z, X, Z
  CHECK(back.algebra_generators.size() == 4);
  REQUIRE(back.seed.has_value());
  CHECK(*back.seed == 424242);
  CHECK(back.metadata["note"] == "round trip me");
  CHECK(back.tolerances.eq_tol == 3e-9);

  // optional blocks really are optional
  ProblemFile lean;
  lean.state = catalog::mix();
  lean.families.emplace_back("S2", catalog::s2());
  const ProblemFile lean_back = problem_from_json(problem_to_json(lean));
  CHECK(lean_back.algebra_generators.empty());
  CHECK_FALSE(lean_back.seed.has_value());
}

TEST_CASE("schema guards: version, missing keys, shape errors") {
  json j = problem_to_json([] {
    ProblemFile pf;
    pf.state = catalog::bell();
    pf.families.emplace_back("S1", catalog::s1());
    return pf;
  }());

  json wrong_version = j;
  wrong_version["version"] = "zuslab/7";
  CHECK_THROWS_AS(problem_from_json(wrong_version), SchemaError);

  json no_state = j;
  no_state.erase("state");
  CHECK_THROWS_AS(problem_from_json(no_state), SchemaError);

  json not_object = j;
  not_object["pvm_families"] = json::array();  // must be an object keyed by name
  CHECK_THROWS_AS(problem_from_json(not_object), SchemaError);

  json empty_family = j;
  empty_family["pvm_families"]["S1"] = json{{"pvms", json::array()}};
  CHECK_THROWS_AS(problem_from_json(empty_family), SchemaError);

  json wrong_dim = j;
  wrong_dim["pvm_families"]["S3"] =
      json{{"pvms", json::array({pvm_to_json(catalog::qutrit_p())})}};  // dim 3 vs state dim 2
  CHECK_THROWS_AS(problem_from_json(wrong_dim), SchemaError);

  CHECK_THROWS_AS(problem_from_json(json::parse("[1,2,3]")), SchemaError);
}

TEST_CASE("save/load through an actual file") {
  TempFile tmp("zuslab_io_test.json");
  ProblemFile pf;
  pf.state = catalog::qutrit_phi3();
  pf.families.emplace_back("PQ", catalog::qutrit_family());
  pf.metadata = json{{"kind", "qutrit"}};
  save_problem(pf, tmp.path);

  const ProblemFile back = load_problem(tmp.path);
  CHECK(back.state.d_a == 3);
  CHECK(oracle::max_abs_diff(back.state.rho, pf.state.rho) == 0.0);
  REQUIRE(back.families.size() == 1);
  CHECK(back.families[0].second.pvms[0].name == "P");

  CHECK_THROWS_AS(load_problem("/nonexistent/dir/zuslab.json"), SchemaError);
}
