#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "projrep/catalog.hpp"
#include "projrep/error.hpp"
#include "projrep/report.hpp"

using namespace projrep;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "projrep");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("projrep_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("export and load round trip keeps the Cayley table") {
  const fs::path dir = scratch_dir("roundtrip");
  for (const auto& e : catalog()) {
    if (e.order > 60) continue;
    CAPTURE(e.name);
    const GroupPtr g = catalog_group(e.name);
    const fs::path file = dir / "group.json";
    export_group(*g, file.string());
    const GroupPtr back = load_group(file.string());
    CHECK(back->name() == g->name());
    CHECK(back->table() == g->table());
  }
}

TEST_CASE("group files are validated") {
  const auto parse = [](const std::string& text) { return group_from_json(ojson::parse(text)); };
  CHECK(parse(R"({"name":"S3","points":3,"generators":[[2,3,1],[2,1,3]]})")->order() == 6);
  const auto code = [&](const std::string& text) {
    try {
      parse(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code(R"({"name":"bad","points":3,"generators":[[1,1,2]]})") == ErrorCode::ParseError);
  CHECK(code(R"({"name":"bad","points":3,"generators":[[1,2]]})") == ErrorCode::ParseError);
  CHECK(code(R"({"name":"bad","points":3,"generators":[[0,1,2]]})") == ErrorCode::ParseError);
  CHECK(code(R"({"points":3,"generators":[]})") == ErrorCode::ParseError);
  CHECK(code(R"({"name":"S7","points":7,"generators":[[2,3,4,5,6,7,1],[2,1,3,4,5,6,7]]})") ==
        ErrorCode::ClosureTooLarge);
  const fs::path dir = scratch_dir("badfile");
  std::ofstream(dir / "broken.json") << "{ not json";
  CHECK_THROWS_AS(load_group((dir / "broken.json").string()), Error);
  CHECK_THROWS_AS(load_group((dir / "missing.json").string()), Error);
}

TEST_CASE("A5 from a file") {
  const fs::path dir = scratch_dir("a5");
  std::ofstream(dir / "a5.json") << R"({"name":"A5file","points":5,"generators":[[2,3,1,4,5],[1,2,4,5,3]]})";
  CHECK(load_group((dir / "a5.json").string())->order() == 60);
  const Run r = cli({"multiplier", (dir / "a5.json").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("A5file (order 60)") != std::string::npos);
}

TEST_CASE("CLI subcommands") {
  Run r = cli({"degrees", "C2xC2", "--coclass", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("degrees [2]") != std::string::npos);

  r = cli({"multiplier", "C6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("trivial") != std::string::npos);

  r = cli({"multiplier", "D4"});
  CHECK(r.out.find("invariants [2]") != std::string::npos);

  r = cli({"regular-classes", "C2xC2", "--coclass", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1 of 4 classes are regular") != std::string::npos);

  r = cli({"catalog"});
  CHECK(r.code == 0);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
  CHECK(r.out.find("SL(2,5)") != std::string::npos);

  r = cli({"decompose", "S4", "--coclass", "1", "--pi", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAILED") == std::string::npos);

  r = cli({"verify", "D4", "--check", "ito_michler", "--p", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"D4\",ito_michler,2,0,0") != std::string::npos);

  r = cli({"verify", "A5", "--check", "a5_control"});
  CHECK(r.code == 0);

  r = cli({"export", "S3", "--table"});
  CHECK(r.code == 0);
  CHECK(ojson::parse(r.out)["order"] == 6);

  r = cli({"export", "C2xC2", "--reps", "--coclass", "1"});
  CHECK(r.code == 0);
  CHECK(ojson::parse(r.out)["representations"].size() == 1);
}

TEST_CASE("CLI errors exit with status 2") {
  CHECK(cli({"degrees", "C2xC2", "--coclass", "2"}).code == 2);
  CHECK(cli({"degrees", "C2xC2", "--coclass", "2"}).err.find("BadCoclassIndex") != std::string::npos);
  CHECK(cli({"degrees", "NoSuchGroup"}).code == 2);
  CHECK(cli({"verify", "D4", "--check", "nonsense"}).code == 2);
  CHECK(cli({"verify", "D4", "--p", "4"}).code == 2);
  CHECK(cli({"verify", "D4", "--p", "2", "--pi", "2,3"}).code == 2);
  CHECK(cli({"--tol", "-1", "catalog"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("identical runs write byte-identical reports") {
  const fs::path a = scratch_dir("run_a"), b = scratch_dir("run_b");
  const std::vector<std::string> common{"--seed", "7", "--jobs", "2"};
  auto args = [&](const fs::path& out) {
    std::vector<std::string> v = common;
    v.insert(v.end(), {"--out", out.string(), "verify", "S4"});
    return v;
  };
  REQUIRE(cli(args(a)).code == 0);
  REQUIRE(cli(args(b)).code == 0);
  const std::string ra = slurp(a / "results.jsonl");
  CHECK_FALSE(ra.empty());
  CHECK(ra == slurp(b / "results.jsonl"));
  CHECK(slurp(a / "summary.csv") == slurp(b / "summary.csv"));
  std::istringstream lines(ra);
  std::string line;
  while (std::getline(lines, line)) {
    const ojson j = ojson::parse(line);
    CHECK(j["seed"] == 7);
    CHECK(j.contains("tolerances"));
    CHECK(j["cocycle_hash"].get<std::string>().size() == 16);
  }
}

TEST_CASE("environment overrides flags") {
  const fs::path dir = scratch_dir("env");
  ::setenv("PROJREP_OUT", dir.string().c_str(), 1);
  const Run r = cli({"degrees", "D4"});
  ::unsetenv("PROJREP_OUT");
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "D4.degrees.jsonl"));
}
