#include <doctest.h>

#include "tsilab/distortion.hpp"
#include "tsilab/errors.hpp"
#include "tsilab/io.hpp"
#include "tsilab/norms.hpp"
#include "tsilab/shapes.hpp"
#include "tsilab/stability.hpp"

using namespace tsilab;

TEST_CASE("vector JSON wire format") {
  const auto x = vector_from_json(R"({"coords":{"3":"1/2","4":"1"}})");
  CHECK(x.coeff(3) == Rational(1, 2));
  CHECK(x.coeff(4) == Rational(1));
  CHECK(vector_to_json(x) == R"({"coords":{"3":"1/2","4":"1"}})");
  CHECK(vector_from_json(R"({"coords":{}})").zero());

  CHECK_THROWS_AS(vector_from_json("{}"), Error);
  CHECK_THROWS_AS(vector_from_json(R"({"coords":{"x":"1"}})"), Error);
  CHECK_THROWS_AS(vector_from_json(R"({"coords":{"3":1}})"), Error);
  CHECK_THROWS_AS(vector_from_json("not json"), Error);
}

TEST_CASE("norming set JSON round trip") {
  const auto set = norming_set(L1Norm{}, 2);
  const auto text = norming_set_to_json(set);
  CHECK(text == R"({"dim":2,"functionals":[{"1":"1","2":"-1"},{"1":"1","2":"1"}]})");
  const auto back = norming_set_from_json(text);
  CHECK(back.dim() == set.dim());
  CHECK(back.functionals() == set.functionals());
  CHECK_THROWS_AS(norming_set_from_json(R"({"dim":2})"), Error);
}

TEST_CASE("norm spec text round trips") {
  for (const std::string text :
       {"sup", "l1", "lp:3/2", "tsirelson:4", "tsirelson:T"}) {
    CHECK(to_string(parse_norm_spec(text)) == text);
  }
  CHECK_THROWS_AS(parse_norm_spec("tsirelson:-1"), Error);
  CHECK_THROWS_AS(parse_norm_spec("lp:1"), Error);
  CHECK_THROWS_AS(parse_norm_spec(""), Error);
}

TEST_CASE("growth CSV carries exact rational strings") {
  const auto rows = distortion_growth(L1Norm{}, SupNorm{}, {1, 2, 3});
  const auto csv = growth_to_csv(L1Norm{}, SupNorm{}, rows);
  CHECK(csv ==
        "dim,D_num,D_den,D_value\n"
        "1,l1,sup,1\n"
        "2,l1,sup,2\n"
        "3,l1,sup,3\n");
}

TEST_CASE("growth JSON reports the table sup and a rising-tail flag") {
  const auto rising = growth_to_json(
      L1Norm{}, SupNorm{}, distortion_growth(L1Norm{}, SupNorm{}, {1, 2, 3}));
  CHECK(rising.find("\"sup\":\"3\"") != std::string::npos);
  CHECK(rising.find("\"rising_at_end\":true") != std::string::npos);

  const auto flat = growth_to_json(
      SupNorm{}, SupNorm{}, distortion_growth(SupNorm{}, SupNorm{}, {1, 2, 3}));
  CHECK(flat.find("\"sup\":\"1\"") != std::string::npos);
  CHECK(flat.find("\"rising_at_end\":false") != std::string::npos);
}

TEST_CASE("lp exponents at or below one are rejected everywhere") {
  CHECK_THROWS_AS(base_norm(SparseVector::unit(1), LpNorm{Rational(1)}), Error);
  CHECK_THROWS_AS(eval_norm(SparseVector::unit(1), LpNorm{Rational(1, 2)}), Error);
}

TEST_CASE("matrix CSV has labeled headers and rows") {
  const auto seq = NormSequence::parse("tsirelson:0..1");
  const auto csv = phi_matrix_to_csv(phi_matrix(seq, seq, 4));
  CHECK(csv.rfind("phi,tsirelson:0,tsirelson:1\n", 0) == 0);
  CHECK(csv.find("tsirelson:0,1.0,1.0") != std::string::npos);
}

TEST_CASE("stability report JSON has the documented keys") {
  const auto seq = NormSequence::parse("tsirelson:0..2");
  const auto json = stability_report_to_json(gap_report(phi_matrix(seq, seq, 5), 0.01));
  for (const std::string key : {"sup_upper", "inf_lower", "gap", "verdict",
                                "tolerance", "dim", "lengths"}) {
    CHECK(json.find("\"" + key + "\"") != std::string::npos);
  }
}

TEST_CASE("scalar formatting") {
  CHECK(Scalar(Rational(3, 2)).str() == "3/2");
  CHECK(Scalar(Rational(-7)).str() == "-7");
  CHECK(!Scalar(0.5).exact());
}
