#include <doctest.h>

#include <stdexcept>

#include "spingraph/verify.hpp"

using namespace spingraph;

TEST_CASE("the full registry passes at small genus") {
  VerificationReport report = run_verification(3, 4, {"all"}, 7);
  CHECK(report.all_passed());
  CHECK(!report.results.empty());
  for (const auto& r : report.results) {
    INFO(r.id, " ", to_string(r.kind), " g=", r.genus);
    CHECK(r.passed);
  }
}

TEST_CASE("check filtering runs only the requested ids") {
  VerificationReport report = run_verification(3, 5, {"lemma2"}, 0);
  CHECK(report.all_passed());
  CHECK(report.results.size() == 3);  // one per genus, standard only
  for (const auto& r : report.results) CHECK(r.id == "lemma2");
  CHECK_THROWS_AS(run_verification(3, 4, {"lemma99"}, 0), std::invalid_argument);
  CHECK_THROWS_AS(run_verification(5, 3, {"all"}, 0), std::invalid_argument);
}

TEST_CASE("reports serialize deterministically without timings") {
  VerificationReport a = run_verification(3, 4, {"lemma1", "lemma2", "graph"}, 3);
  VerificationReport b = run_verification(3, 4, {"lemma1", "lemma2", "graph"}, 3);
  CHECK(report_to_json(a).dump(2) == report_to_json(b).dump(2));
  std::string dumped = report_to_json(a).dump();
  CHECK(dumped.find("elapsed") == std::string::npos);
  // the human table does carry timings
  CHECK(report_table(a).find(" ms") != std::string::npos);
}

TEST_CASE("a twisted rotation rule fails the parity suite with a counterexample") {
  SpinGraph g = build_graph(3, GraphKind::Standard);
  auto twisted = [](const SpinGraph& gg, const Face& f, const OrientedEdge& e) {
    Permutation p = rotate(gg, f, e);
    auto images = p.images();
    std::swap(images[0], images[1]);  // flip one rule
    return Permutation(images);
  };
  CheckOutcome bad = detail::parity_suite(g, twisted, 0);
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.counterexample.is_null());
  CHECK(bad.counterexample.contains("edge"));

  auto honest = [](const SpinGraph& gg, const Face& f, const OrientedEdge& e) {
    return rotate(gg, f, e);
  };
  CHECK(detail::parity_suite(g, honest, 0).passed);
}
