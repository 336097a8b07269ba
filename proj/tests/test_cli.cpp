#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lpfb/cli.hpp"
#include "lpfb/generators.hpp"
#include "lpfb/io.hpp"

using namespace lpfb;
namespace fs = std::filesystem;

namespace {

const char* haar_text =
    "bank haar\n"
    "h0:\n"
    "tap -1 1/2\n"
    "tap 0 1/2\n"
    "h1:\n"
    "tap -1 1\n"
    "tap 0 -1\n";

const char* haar_a_text =
    "scale 2\n"
    "step U\n"
    "tap 0 1\n"
    "step L\n"
    "tap 0 -1/2\n";

const char* haar_b_text =
    "step L\n"
    "tap 0 -1\n"
    "step U\n"
    "tap 0 1/2\n";

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("lpfb_cli_" + std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

ParseError parse_failure(const std::string& text) {
  try {
    parse_bank(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error");
  return ParseError(ErrorKind::parse_error, 0, 0, "");
}

}  // namespace

TEST_CASE("bank files") {
  const BankFile f = parse_bank(haar_text);
  CHECK(f.name == "haar");
  CHECK(f.bank == haar_bank());
  CHECK(print_bank(f.bank, "haar") == haar_text);
  CHECK(parse_bank("# comment\nh0:\ntap 0 1 # unit\nh1:\ntap -1 1\n").bank ==
        PolyphaseMatrix::identity());

  const ParseError zero = parse_failure("h0:\ntap 0 0\nh1:\n");
  CHECK(zero.kind() == ErrorKind::zero_tap);
  CHECK(zero.line() == 2);
  const ParseError dup = parse_failure("h0:\ntap 0 1\ntap 0 2\nh1:\n");
  CHECK(dup.kind() == ErrorKind::duplicate_tap);
  CHECK(dup.line() == 3);
  const ParseError junk = parse_failure("h0:\ntap 0 x\n");
  CHECK(junk.kind() == ErrorKind::parse_error);
  CHECK(junk.line() == 2);
  CHECK(junk.column() == 7);
  CHECK(parse_failure("tap 0 1\n").kind() == ErrorKind::parse_error);
}

TEST_CASE("cascade files") {
  const LiftingCascade a = parse_cascade(haar_a_text);
  CHECK(a.scale.k() == 2);
  CHECK(a.steps.size() == 2);
  CHECK(cascade_product(a) == haar_bank());
  CHECK(print_cascade(a) == haar_a_text);
  LiftingCascade based;
  based.steps = {upper(LaurentPoly{{1, 1}, {-1, -1}})};
  based.base = haar_bank();
  CHECK(parse_cascade(print_cascade(based)) == based);
}

TEST_CASE("property: print and parse round trip") {
  Rng rng(801);
  GeneratorConfig cfg;
  for (int i = 0; i < 100; ++i) {
    const LiftingCascade c = random_hs_cascade(rng, cfg);
    const std::string text = print_cascade(c);
    CHECK(parse_cascade(text) == c);
    CHECK(print_cascade(parse_cascade(text)) == text);
    const PolyphaseMatrix h = cascade_product(c);
    CHECK(parse_bank(print_bank(h)).bank == h);
  }
}

TEST_CASE("run: demos") {
  const Outcome id = run({"demo", "identity"});
  CHECK(id.code == cli::exit_ok);
  CHECK(id.out.find("verified") != std::string::npos);
  CHECK(run({"demo", "haar"}).code == cli::exit_ok);
  CHECK(run({"demo", "nothing"}).code == cli::exit_parse_error);
}

TEST_CASE("run: exit codes") {
  TempDir dir;
  const std::string haar = dir.write("haar.bank", haar_text);
  const std::string a = dir.write("haar_a.cas", haar_a_text);
  const std::string b = dir.write("haar_b.cas", haar_b_text);

  CHECK(run({"factor", haar, "--structure", "ws"}).code == cli::exit_precondition);
  const Outcome ne = run({"equiv", a, b});
  CHECK(ne.code == cli::exit_verify_failed);
  CHECK(ne.out == "NOT-EQUIVALENT\n");
  const Outcome same = run({"equiv", a, a});
  CHECK(same.code == cli::exit_ok);
  CHECK(same.out == "alpha 1\n");

  CHECK(run({"classify", dir.write("bad.bank", "h0:\ntap 0 1/0\n")}).code == cli::exit_parse_error);
  CHECK(run({"classify", (fs::path(haar).parent_path() / "missing.bank").string()}).code ==
        cli::exit_parse_error);
  CHECK(run({"frobnicate"}).code == cli::exit_parse_error);
  CHECK(run({"roundtrip", a, "--reversible"}).code == cli::exit_precondition);
  CHECK(run({"roundtrip", b, "--length", "64"}).code == cli::exit_ok);
  CHECK(run({"verify", a, "--structure", "ws"}).code == cli::exit_verify_failed);
  CHECK(run({"verify", a}).code == cli::exit_ok);
}

TEST_CASE("run: factor then product reproduces the bank") {
  TempDir dir;
  const std::string haar = dir.write("haar.bank", haar_text);
  for (const char* structure : {"hs", "euclidean"}) {
    const Outcome f = run({"factor", haar, "--structure", structure});
    REQUIRE(f.code == cli::exit_ok);
    CHECK(run({"factor", haar, "--structure", structure}).out == f.out);
    const std::string cas = dir.write(std::string(structure) + ".cas", f.out);
    const Outcome p = run({"product", cas});
    CHECK(p.code == cli::exit_ok);
    CHECK(p.out == print_bank(haar_bank()));
  }
  const std::string lg = dir.write("legall.bank", print_bank(legall53_bank(), "legall"));
  const Outcome w = run({"factor", lg, "--structure", "ws"});
  REQUIRE(w.code == cli::exit_ok);
  const std::string cas = dir.write("legall.cas", w.out);
  CHECK(run({"product", cas}).out == print_bank(legall53_bank()));
  CHECK(run({"roundtrip", cas, "--reversible", "--length", "512", "--seed", "3"}).code ==
        cli::exit_ok);
  CHECK(run({"verify", cas, "--order-increasing", "--structure", "ws", "--pr"}).code ==
        cli::exit_ok);
}
