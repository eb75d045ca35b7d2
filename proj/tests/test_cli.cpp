#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "vendor/doctest.h"

#include <array>
#include <cstdio>
#include <string>

namespace {

const std::string kCli = NELSON_CLI_PATH;
const std::string kData = NELSON_DATA_DIR "/";

struct RunResult {
  std::string out;
  int code = -1;
};

// Runs the CLI with stdout captured; `redirect` appends e.g. "2>/dev/null".
RunResult run(const std::string& args, const std::string& redirect = "2>/dev/null") {
  RunResult r;
  std::string cmd = kCli + " " + args + " " + redirect;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("check-axioms text output and exit codes") {
  RunResult good = run("check-axioms " + kData + "c2.json");
  CHECK(good.code == 0);
  CHECK(good.out ==
        "variant: main\n"
        "ok    absorption\n"
        "ok    meet-distribution\n"
        "ok    involution\n"
        "ok    de-morgan\n"
        "ok    kleene\n"
        "ok    implication-reflexive\n"
        "ok    implication-currying\n"
        "ok    implication-weak-equivalence\n"
        "all axioms hold\n");

  RunResult bad = run("check-axioms " + kData + "corrupt_b.json");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL  de-morgan:") != std::string::npos);
  CHECK(bad.out.find("axiom(s) fail") != std::string::npos);

  RunResult brig = run("check-axioms " + kData + "c5.json --variant brignole");
  CHECK(brig.code == 0);
  CHECK(brig.out.find("variant: brignole\n") == 0);

  RunResult unknown = run("check-axioms " + kData + "c5.json --variant nope");
  CHECK(unknown.code == 2);
}

TEST_CASE("check-axioms json is stable") {
  RunResult r = run("check-axioms " + kData + "c2.json --json");
  CHECK(r.code == 0);
  CHECK(r.out.find("{\n  \"variant\": \"main\",\n  \"axioms\": [\n") == 0);
  CHECK(r.out.find("\"all_hold\": true\n}\n") != std::string::npos);
}

TEST_CASE("check-identity reports witnesses with variable names") {
  RunResult holds = run("check-identity " + kData +
                        "c5.json --eq \"((x -> z) -> y) -> (((y -> x) -> y) -> y) = 1\"");
  CHECK(holds.code == 0);
  CHECK(holds.out ==
        "identity: ((x -> z) -> y) -> ((y -> x) -> y) -> y = 1\n"
        "holds\n");

  RunResult fails = run("check-identity " + kData +
                        "c6.json --eq \"((x -> z) -> y) -> (((y -> x) -> y) -> y) = 1\"");
  CHECK(fails.code == 1);
  CHECK(fails.out ==
        "identity: ((x -> z) -> y) -> ((y -> x) -> y) -> y = 1\n"
        "witness: x=3 y=4 z=0\n"
        "lhs=4 rhs=5\n");

  // Unicode operator aliases work.
  RunResult uni = run("check-identity " + kData +
                      "c5.json --eq \"∼(x ∧ y) = ∼x ∨ ∼y\"");
  CHECK(uni.code == 0);

  // Parse errors exit 2 with a line:column message on stderr.
  RunResult err = run("check-identity " + kData + "c5.json --eq \"x -> (y\"",
                      "2>&1 1>/dev/null");
  CHECK(err.code == 2);
  CHECK(err.out == "error: 1:8: expected ')', got end of input\n");
}

TEST_CASE("classify text output") {
  RunResult c5 = run("classify " + kData + "c5.json");
  CHECK(c5.code == 0);
  CHECK(c5.out ==
        "size: 5\nnelson-algebra: yes\nfive-valued: yes\nlinear: yes\n"
        "chain: C5\n");

  RunResult tw = run("classify " + kData + "twist11.json");
  CHECK(tw.code == 0);
  CHECK(tw.out ==
        "size: 11\nnelson-algebra: yes\nfive-valued: no\nlinear: no\n"
        "chain: none\n");

  RunResult bad = run("classify " + kData + "corrupt_a.json");
  CHECK(bad.code == 0);
  CHECK(bad.out.find("nelson-algebra: no\n") != std::string::npos);
}

TEST_CASE("spectrum text output") {
  RunResult r = run("spectrum " + kData + "c3.json");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "points: 2\n"
        "P0 = {2}\n"
        "P1 = {1,2}\n"
        "phi: 1 0\n"
        "order: P0<P1\n");

  // Not an algebra: witness on stdout, exit 1.
  RunResult bad = run("spectrum " + kData + "corrupt_b.json");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("not a Nelson algebra: de-morgan fails at") == 0);
}

TEST_CASE("quotient by a deductive system") {
  RunResult r = run("quotient " + kData + "c5.json --ds 3,4");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "ds: {3,4}\n"
        "classes: {0,1} {2} {3,4}\n"
        "quotient-size: 3\n"
        "natural-epi: 0 0 1 2 2\n");

  RunResult not_ds = run("quotient " + kData + "c5.json --ds 2,4",
                         "2>&1 1>/dev/null");
  CHECK(not_ds.code == 2);
  CHECK(not_ds.out == "error: the set {2,4} is not a deductive system\n");

  RunResult out_of_range = run("quotient " + kData + "c5.json --ds 9",
                               "2>&1 1>/dev/null");
  CHECK(out_of_range.code == 2);
}

TEST_CASE("dual of a space file") {
  RunResult r = run("dual " + kData + "space_c3.json");
  CHECK(r.code == 0);
  CHECK(r.out == "points: 2\nup-sets: 3\ntop: 2\n");

  RunResult bad = run("dual " + kData + "bad_space.json");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("not a Nelson space: anti-isomorphism") == 0);
}

TEST_CASE("roundtrip subcommand") {
  RunResult r = run("roundtrip " + kData + "c5xc3.json");
  CHECK(r.code == 0);
  CHECK(r.out == "elements: 15\npoints: 6\nroundtrip: ok\n");
}

TEST_CASE("free summary and budget") {
  RunResult r = run("free --n 1");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "n: 1\n"
        "points: 8\n"
        "components: 3\n"
        "component 0: kind=Boolean points=3 size=4\n"
        "component 2: kind=Halved(1) points=2 size=3\n"
        "component 4: kind=Boolean points=3 size=4\n"
        "total: 48\n");

  RunResult over = run("free --n 3 --materialize", "2>&1 1>/dev/null");
  CHECK(over.code == 2);
  CHECK(over.out.find("exceeds the 100000-element budget") != std::string::npos);
}

TEST_CASE("free materialization embeds the 48-element algebra") {
  RunResult r = run("free --n 1 --materialize --json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"total_count\": \"48\"") != std::string::npos);
  CHECK(r.out.find("\"algebra\": {\n    \"size\": 48,") != std::string::npos);
}

TEST_CASE("count prints plain decimal integers") {
  CHECK(run("count --n 1").out == "48\n");
  CHECK(run("count --n 2").out == "122880000\n");
  CHECK(run("count --n 4").out ==
        "604218807011013030690319968767838713053259638674908481618259921117306"
        "199908950931952922608480613168888596544772573119965113592624664659897"
        "2074987600991686938666527415185892927392972800000000\n");
}

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run("", "2>/dev/null").code == 2);
  CHECK(run("bogus", "2>/dev/null").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("count --n 0", "2>/dev/null").code == 2);
  CHECK(run("check-axioms /nonexistent.json", "2>/dev/null").code == 2);
}

TEST_CASE("output is byte-identical across runs") {
  for (const std::string& args : std::vector<std::string>{
           "check-axioms " + kData + "c5xc2xc2.json --json",
           "spectrum " + kData + "c5xc3.json --json",
           std::string("free --n 2 --json"),
           "classify " + kData + "twist11.json --json",
           "quotient " + kData + "c8.json --ds 7 --json",
           "dual " + kData + "space_c2xc2.json --json",
           "roundtrip " + kData + "c4.json --json"}) {
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}
