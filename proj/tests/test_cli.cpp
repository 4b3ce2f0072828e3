#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "unival/cli.hpp"

using namespace unival;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("expression parser, valuation context") {
  CHECK(parse_valuation("chi", 2) == Valuation::unit(2));
  CHECK(parse_valuation("mu[2,1]", 2) == Valuation::basis(2, 2, 1));
  CHECK(parse_valuation("2 * mu[1,0] - mu[1,0]", 2) == Valuation::basis(2, 1, 0));
  CHECK(parse_valuation("t", 2) == from_poly(2, GradedPoly::gen_t(Coords::ST)));
  CHECK(parse_valuation("t_hat", 2) == fourier(from_poly(2, GradedPoly::gen_t(Coords::ST))));
  CHECK(parse_valuation("p[2]", 2) == from_poly(2, fu_p(2)));
  CHECK(parse_valuation("1/2 * pi^-1 * mu[2,0]", 2) ==
        Valuation::basis(2, 2, 0) * PiScalar::pi_power(-1, Rational(1, 2)));
  CHECK(parse_valuation("(mu[1,0] + mu[2,0]) - mu[2,0]", 2) == Valuation::basis(2, 1, 0));
  CHECK_THROWS_AS(parse_valuation("mu[5,1]", 2), ExprError);
  CHECK_THROWS_AS(parse_valuation("t * t", 2), std::exception);
  CHECK_THROWS_AS(parse_valuation("B[1,0]", 2), ExprError);
  CHECK_THROWS_AS(parse_valuation("mu[1,0] +", 2), ExprError);
  // position is reported
  try {
    parse_valuation("mu[1,0] + nope", 2);
    CHECK(false);
  } catch (const ExprError& e) {
    CHECK(e.position == 10);
  }
}

TEST_CASE("expression parser, measure and poly contexts") {
  CHECK(parse_measure("B[3,1]", 2) == AreaMeasure::basis(2, AreaKind::B, 3, 1));
  CHECK(parse_measure("Delta[2,1]", 2) == delta_n_measure(2, {DeltaKind::Delta, 2, 1}));
  CHECK(parse_measure("Gamma[1,0] - B[1,0]", 2) ==
        AreaMeasure::basis(2, AreaKind::Gamma, 1, 0) - AreaMeasure::basis(2, AreaKind::B, 1, 0));
  CHECK_THROWS_AS(parse_measure("B[2,1]", 2), ExprError);
  CHECK(parse_poly("t^2 - s", Coords::ST) ==
        GradedPoly::monomial(Coords::ST, 0, 2) - GradedPoly::gen_s());
  CHECK(parse_poly("p[2]", Coords::ST) == fu_p(2));
  CHECK(parse_poly("t*u", Coords::TU) == GradedPoly::monomial(Coords::TU, 1, 1));
  CHECK_THROWS_AS(parse_poly("u", Coords::ST), ExprError);
}

TEST_CASE("cli worked examples") {
  CliRun act = run_cli({"act", "--n", "2", "t_hat", "Gamma[2,1]"});
  CHECK(act.code == 0);
  CHECK(act.out == "4/3 * pi^-1 * Gamma[1,0]\n");

  CliRun gl = run_cli({"glob", "--n", "2", "B[3,1]"});
  CHECK(gl.code == 0);
  CHECK(gl.out == "mu[3,1]\n");

  CliRun pk = run_cli({"poly", "pk", "--k", "2"});
  CHECK(pk.code == 0);
  CHECK(pk.out == "t^2 - s\n");

  CliRun ball = run_cli({"evalball", "--n", "2", "mu[4,2]"});
  CHECK(ball.code == 0);
  // vol(B) = omega_4 = pi^2/2
  CHECK(ball.out == "1/2 * pi^2\n");
}

TEST_CASE("cli determinism") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"export", "t-table", "--n", "2", "--format", "json"},
           {"export", "dims", "--n", "3", "--format", "csv"},
           {"topoly", "--n", "2", "mu[2,0]"},
           {"present", "--n", "1"}}) {
    CliRun a = run_cli(args), b = run_cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli usage errors") {
  CHECK(run_cli({"verify", "--n", "0"}).code == 2);
  CHECK(run_cli({"nonsense"}).code == 2);
  CHECK(run_cli({"poly", "zk", "--k", "2"}).code == 2);
  CHECK(run_cli({"act", "--n", "2", "t_hat"}).code == 2);
  CHECK(run_cli({"verify", "--n", "2", "--filter", "no-such-check"}).code == 2);
  CHECK(run_cli({"export", "t-table", "--n", "2", "--out", "/nonexistent/dir/x.json"}).code == 2);
  CHECK(run_cli({"mul", "--n", "2", "mu[9,9]", "chi"}).code == 2);
}

TEST_CASE("cli verify filter") {
  CliRun r = run_cli({"verify", "--n", "2", "--filter", "kernel-lemma"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS] kernel-lemma (n=1)") != std::string::npos);
  CHECK(r.out.find("[PASS] kernel-lemma (n=2)") != std::string::npos);
  CHECK(r.out.find("fu-quotient") == std::string::npos);
}

TEST_CASE("export round trips through json") {
  for (int n = 1; n <= 3; ++n)
    for (char gen : {'t', 's'}) {
      StructureTable table = module_structure_table(n, gen);
      json j = table_to_json(table);
      // through a serialized string, as a file consumer would see it
      StructureTable back = table_from_json(json::parse(j.dump()));
      CHECK(back == table);
    }
}

TEST_CASE("structure table cache") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "unival_cache_test";
  std::filesystem::remove_all(dir);
  setenv("UNIVAL_CACHE_DIR", dir.c_str(), 1);
  StructureTable first = module_table_cached(2, 't');
  CHECK(std::filesystem::exists(dir / "t_hat_n2.json"));
  StructureTable second = module_table_cached(2, 't'); // served from disk
  CHECK(first == second);
  CHECK(first == module_structure_table(2, 't'));
  unsetenv("UNIVAL_CACHE_DIR");
  std::filesystem::remove_all(dir);
}

TEST_CASE("oracle diff command") {
  CliRun r = run_cli({"oracle", "t-table", "--n", "2", "--diff-against", "module"});
  CHECK(r.code == 0);
  CHECK(r.out.find("identical") != std::string::npos);
}

TEST_CASE("t-table export contains the expected entry") {
  CliRun r = run_cli({"export", "t-table", "--n", "2", "--format", "json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("n") == 2);
  CHECK(j.at("generator") == "t_hat");
  // six source rows at n=2, one of them Gamma[2,1] -> Gamma[1,0] with 4/(3 pi)
  bool found = false;
  for (const auto& e : j.at("entries")) {
    if (e.at("from") == json{{"kind", "Gamma"}, {"k", 2}, {"q", 1}} &&
        e.at("to") == json{{"kind", "Gamma"}, {"k", 1}, {"q", 0}}) {
      found = true;
      CHECK(e.at("coeff") == json::array({{{"pi_power", -1}, {"num", "4"}, {"den", "3"}}}));
    }
  }
  CHECK(found);
  CliRun basis = run_cli({"export", "basis", "--n", "1", "--format", "csv"});
  CHECK(basis.out == "kind,k,q\nB,1,0\nGamma,0,0\n");
}
