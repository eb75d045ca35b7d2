#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "vendor/doctest.h"

#include "nelson/axioms.hpp"
#include "nelson/duality.hpp"
#include "nelson/json_io.hpp"
#include "nelson/space.hpp"

#include <sstream>
#include <string>

using namespace nelson;

namespace {

const std::string kData = NELSON_DATA_DIR "/";

std::string error_reading_algebra(const std::string& text) {
  std::istringstream in(text);
  try {
    read_algebra_json(in, "input");
  } catch (const format_error& e) {
    return e.what();
  }
  return "";
}

std::string error_reading_space(const std::string& text) {
  std::istringstream in(text);
  try {
    read_space_json(in, "input");
  } catch (const format_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("algebra serialization round-trips through JSON") {
  FiniteNelsonAlgebra a = product({make_chain(5), make_chain(3)});
  std::istringstream in(algebra_to_json(a));
  FiniteNelsonAlgebra back = read_algebra_json(in, "roundtrip");
  CHECK(back.size() == a.size());
  CHECK(back.top() == a.top());
  CHECK(back.neg_table() == a.neg_table());
  CHECK(back.meet_table() == a.meet_table());
  CHECK(back.join_table() == a.join_table());
  CHECK(back.imp_table() == a.imp_table());
}

TEST_CASE("space serialization round-trips through JSON") {
  NelsonSpace s = spectrum(make_chain(5)).space;
  std::istringstream in(space_to_json(s));
  NelsonSpace back = read_space_json(in, "roundtrip");
  CHECK(back.size == s.size);
  CHECK(back.leq_table == s.leq_table);
  CHECK(back.phi == s.phi);
}

TEST_CASE("fixture files load and satisfy the axioms") {
  for (const std::string nm :
       {"c2", "c5", "c8", "c2xc2", "c5xc3", "c5xc2xc2", "twist11"}) {
    FiniteNelsonAlgebra a = read_algebra_file(kData + nm + ".json");
    CHECK(is_nelson_algebra(a));
  }
  NelsonSpace s = read_space_file(kData + "space_c3.json");
  CHECK(!validate_space(s).has_value());
}

TEST_CASE("missing file") {
  CHECK_THROWS_WITH_AS(read_algebra_file("/nonexistent/a.json"),
                       "cannot open /nonexistent/a.json", format_error);
}

TEST_CASE("unknown and missing fields are rejected") {
  CHECK(error_reading_algebra(
            R"({"size":2,"top":1,"neg":[1,0],"meet":[[0,0],[0,1]],)"
            R"("join":[[0,1],[1,1]],"imp":[[1,1],[0,1]],"extra":3})") ==
        "input: unknown field \"extra\"");
  CHECK(error_reading_algebra(R"({"size":2,"top":1})") ==
        "input: missing field \"neg\"");
  CHECK(error_reading_space(R"({"size":1,"leq":[[true]]})") ==
        "input: missing field \"phi\"");
}

TEST_CASE("entry errors carry the exact field path") {
  // neg entry out of range.
  CHECK(error_reading_algebra(
            R"({"size":2,"top":1,"neg":[1,2],"meet":[[0,0],[0,1]],)"
            R"("join":[[0,1],[1,1]],"imp":[[1,1],[0,1]]})") ==
        "input: \"neg\"[1] is 2, outside 0..1");
  // Matrix entry out of range, with row and column.
  CHECK(error_reading_algebra(
            R"({"size":2,"top":1,"neg":[1,0],"meet":[[0,0],[0,9]],)"
            R"("join":[[0,1],[1,1]],"imp":[[1,1],[0,1]]})") ==
        "input: \"meet\"[1][1] is 9, outside 0..1");
  // Ragged matrix.
  CHECK(error_reading_algebra(
            R"({"size":2,"top":1,"neg":[1,0],"meet":[[0,0],[0]],)"
            R"("join":[[0,1],[1,1]],"imp":[[1,1],[0,1]]})") ==
        "input: \"meet\"[1] must be an array of 2 entries");
  // Non-integer entry.
  CHECK(error_reading_algebra(
            R"({"size":2,"top":"x","neg":[1,0],"meet":[[0,0],[0,1]],)"
            R"("join":[[0,1],[1,1]],"imp":[[1,1],[0,1]]})") ==
        "input: \"top\" must be an integer");
}

TEST_CASE("size validation") {
  CHECK(error_reading_algebra(R"({"size":0,"top":0,"neg":[],"meet":[],)"
                              R"("join":[],"imp":[]})")
            .find("\"size\"") != std::string::npos);
  CHECK(!error_reading_algebra(R"({"size":-3})").empty());
}

TEST_CASE("space entry validation") {
  CHECK(error_reading_space(
            R"({"size":2,"leq":[[true,true],[false,1]],"phi":[1,0]})") ==
        "input: \"leq\"[1][1] must be true or false");
  CHECK(error_reading_space(
            R"({"size":2,"leq":[[true,true],[false,true]],"phi":[1,2]})") ==
        "input: \"phi\"[1] is 2, outside 0..1");
  CHECK(error_reading_space(
            R"({"size":2,"leq":[[true,true]],"phi":[1,0]})") ==
        "input: \"leq\" must be an array of 2 rows");
}

TEST_CASE("malformed JSON points at the origin") {
  std::string err = error_reading_algebra("{not json");
  CHECK(err.find("input: ") == 0);
}

TEST_CASE("writers emit two-space indented stable field order") {
  FiniteNelsonAlgebra c2 = make_chain(2);
  std::string text = algebra_to_json(c2);
  CHECK(text.find("\"size\"") < text.find("\"top\""));
  CHECK(text.find("\"top\"") < text.find("\"neg\""));
  CHECK(text.find("\"neg\"") < text.find("\"meet\""));
  CHECK(text.find("\"meet\"") < text.find("\"join\""));
  CHECK(text.find("\"join\"") < text.find("\"imp\""));
  CHECK(text.find("{\n  \"size\": 2,") == 0);

  NelsonSpace s = spectrum(c2).space;
  std::string stext = space_to_json(s);
  CHECK(stext.find("\"size\"") < stext.find("\"leq\""));
  CHECK(stext.find("\"leq\"") < stext.find("\"phi\""));
}

TEST_CASE("reading a space does not validate the axioms") {
  // The reader checks shape only; validate_space decides the axioms.
  NelsonSpace s = read_space_file(kData + "bad_space.json");
  CHECK(validate_space(s).has_value());
}
