#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* env = std::getenv("ACCINFO_CLI");
  REQUIRE_MESSAGE(env != nullptr, "ACCINFO_CLI must point at the binary");
  return env;
}

int run(const std::string& args) {
  const int rc = std::system((cli_path() + " " + args + " > /dev/null 2>&1").c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / "accinfo_cli_test";
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("scenario adhoc emits the ensemble and converges") {
  TempDir tmp;
  const fs::path ens = tmp.path / "adhoc.json";
  CHECK(run("scenario adhoc --seed 3 --out " + ens.string()) == 0);
  CHECK(fs::exists(ens));

  // the emitted file feeds back into optimize
  const fs::path res = tmp.path / "result.json";
  const fs::path trace = tmp.path / "trace.csv";
  CHECK(run("optimize " + ens.string() +
            " --functional ai --k 3 --k-strategy fixed --seed 7 --out " +
            res.string() + " --trace " + trace.string()) == 0);
  CHECK(fs::exists(res));
  const std::string trace_text = slurp(trace);
  CHECK(trace_text.rfind("round,alpha,info_nats,residual,K,accepted", 0) == 0);
}

TEST_CASE("helstrom subcommand") {
  TempDir tmp;
  const fs::path ens = tmp.path / "adhoc.json";
  REQUIRE(run("scenario adhoc --seed 3 --out " + ens.string()) == 0);
  CHECK(run("helstrom " + ens.string() + " --k 2 --seed 5") == 0);
}

TEST_CASE("deterministic artifacts for identical spec and seed") {
  TempDir tmp;
  const fs::path ens = tmp.path / "adhoc.json";
  REQUIRE(run("scenario adhoc --seed 3 --out " + ens.string()) == 0);
  const std::string base = "optimize " + ens.string() +
                           " --k 3 --k-strategy fixed --seed 21 --max-rounds 400";
  const fs::path r1 = tmp.path / "r1.json", r2 = tmp.path / "r2.json";
  const fs::path t1 = tmp.path / "t1.csv", t2 = tmp.path / "t2.csv";
  run(base + " --out " + r1.string() + " --trace " + t1.string());
  run(base + " --out " + r2.string() + " --trace " + t2.string());
  CHECK(slurp(r1) == slurp(r2));
  CHECK(slurp(t1) == slurp(t2));
}

TEST_CASE("malformed input exits 1 without artifacts") {
  TempDir tmp;
  const fs::path bad = tmp.path / "bad.json";
  std::ofstream(bad) << "{ this is not json";
  const fs::path out = tmp.path / "should_not_exist.json";
  CHECK(run("optimize " + bad.string() + " --out " + out.string()) == 1);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("scenario error handling") {
  CHECK(run("scenario nonsense") == 1);
  CHECK(run("scenario tomographic --epsilon 1.5") == 1);
  CHECK(run("scenario tomographic") == 1);  // epsilon required
}

TEST_CASE("tomographic scenario at zero noise") {
  TempDir tmp;
  CHECK(run("scenario tomographic --epsilon 0 --out " +
            (tmp.path / "sx.json").string()) == 0);
}

TEST_CASE("sweep produces the analytic-vs-numeric table") {
  TempDir tmp;
  const fs::path csv = tmp.path / "sweep.csv";
  CHECK(run("sweep --eps-start 0.1 --eps-end 0.3 --eps-step 0.1 --seed 2 "
            "--out " + csv.string()) == 0);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "epsilon,i_ab_bits,i_ae_bits,i_numeric_bits");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 3);

  CHECK(run("sweep --eps-start 0.5 --eps-end 0.1 --eps-step 0.1") == 1);
}
