#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "macpoly/json_io.hpp"
#include "macpoly/modified.hpp"

using namespace macpoly;
using namespace macpoly::cli;

namespace {

Request make(Family f, Composition shape, std::optional<int> n = {}) {
  Request r;
  r.family = f;
  r.shape = std::move(shape);
  r.n = n;
  return r;
}

std::size_t bounded_instances(const std::vector<VerifyEntry>& report) {
  std::size_t k = 0;
  for (const auto& e : report)
    if (e.identity.rfind("fixtures", 0) != 0) k += e.instances;
  return k;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("shape parsing") {
  CHECK(parse_shape("2,1,1") == Composition{2, 1, 1});
  CHECK(parse_shape("0,2,0") == Composition{0, 2, 0});
  CHECK(parse_shape("").empty());
  CHECK_THROWS_AS(parse_shape("2,x"), UsageError);
  CHECK_THROWS_AS(parse_shape("2,-1"), UsageError);
  CHECK_THROWS_AS(parse_shape("2,,1"), UsageError);
  CHECK_THROWS_AS(parse_shape("2,1,"), UsageError);
  CHECK(parse_value("-3/6") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_value("1/0"), UsageError);
  CHECK_THROWS_AS(parse_value("half"), UsageError);
}

TEST_CASE("family dispatch") {
  CHECK(run(make(Family::schur, {1}, 2)) == "x1 + x2");
  Request j = make(Family::j, {1, 1, 1}, 3);
  j.formula = Formula::compact;
  CHECK(run(j) == "-x1*x2*x3*t^6 + x1*x2*x3*t^5 + x1*x2*x3*t^4 - x1*x2*x3*t^2 - x1*x2*x3*t + x1*x2*x3");
  j.formula = Formula::hhl;
  CHECK(run(j) == "-x1*x2*x3*t^6 + x1*x2*x3*t^5 + x1*x2*x3*t^4 - x1*x2*x3*t^2 - x1*x2*x3*t + x1*x2*x3");

  // Row lengths (2,1,1) are columns (3,1).
  Request rows_req = make(Family::htilde, {2, 1, 1}, 3);
  rows_req.rows = true;
  rows_req.formula = Formula::compact;
  CHECK(run(rows_req) == htilde_hhl({3, 1}, 3).to_string());

  CHECK(run(make(Family::e, {0, 1})) == "x2");
  CHECK(run(make(Family::f, {1, 0}, 2)) == "x1");
  Request ie = make(Family::e, {1, 1});
  ie.integral = true;
  ie.verify = true;
  CHECK(run(ie) == "x1*x2*t^3 - x1*x2*t^2 - x1*x2*t + x1*x2");
  CHECK(run(make(Family::p, {1}, 2)) == "x1 + x2");
  CHECK(run(make(Family::g, {1}, 2)) == "x1 + x2");
  CHECK(run(make(Family::qschur, {1, 2}, 3)) == "x1*x2^2 + x1*x2*x3 + x1*x3^2 + x2*x3^2");

  Request spec0 = make(Family::e, {0, 2});
  spec0.q = Rational(0);
  CHECK(run(spec0) == "-x1*x2*t + x1*x2 + x2^2");
}

TEST_CASE("decomposition output") {
  Request r = make(Family::qschur, {1, 2}, 3);
  r.decompose = true;
  CHECK(run(r) == "x1*x2^2 + x1*x2*x3 + x1*x3^2 + x2*x3^2\nM[1,1,1]: 1\nM[1,2]: 1");
  r.output = Output::json;
  CHECK(run(r).find("\"decomposition\"") != std::string::npos);
}

TEST_CASE("request validation") {
  CHECK_THROWS_AS(run(make(Family::htilde, {1, 2}, 2)), UsageError);
  CHECK_THROWS_AS(run(make(Family::schur, {2, 0}, 2)), UsageError);
  CHECK_THROWS_AS(run(make(Family::p, {1, 1, 1}, 2)), UsageError);
  CHECK_THROWS_AS(run(make(Family::g, {1, 0}, 2)), UsageError);
  CHECK_THROWS_AS(run(make(Family::htilde, {2})), UsageError);
  CHECK_THROWS_AS(run(make(Family::e, {0, 1}, 3)), UsageError);
  Request f = make(Family::e, {1});
  f.formula = Formula::compact;
  CHECK_THROWS_AS(run(f), UsageError);
  Request v = make(Family::e, {1});
  v.verify = true;
  CHECK_THROWS_AS(run(v), UsageError);
  Request rows = make(Family::j, {1}, 1);
  rows.rows = true;
  CHECK_THROWS_AS(run(rows), UsageError);
  Request dec = make(Family::schur, {1}, 1);
  dec.decompose = true;
  CHECK_THROWS_AS(run(dec), UsageError);
}

TEST_CASE("json output round-trips") {
  Request r = make(Family::htilde, {2, 1}, 3);
  r.output = Output::json;
  const std::string out = run(r);
  CHECK(to_json(mpoly_from_json(out), 2) == out);
  Request e = make(Family::p, {2, 1}, 3);
  e.output = Output::json;
  const std::string eout = run(e);
  CHECK(to_json(eresult_from_json(eout), 2) == eout);
  Request s = make(Family::j, {2}, 2);
  s.output = Output::json;
  s.t = Rational(1, 2);
  const std::string sout = run(s);
  CHECK(to_json(rpoly_from_json(sout), 2) == sout);
}

TEST_CASE("output is identical across thread counts") {
  Request a = make(Family::p, {2, 1, 1}, 4);
  Request b = a;
  b.threads = 4;
  CHECK(run(a) == run(b));
  Request g = make(Family::g, {1, 2, 1}, 4);
  Request g4 = g;
  g4.threads = 3;
  CHECK(run(g) == run(g4));
}

TEST_CASE("verify") {
  VerifyOptions fx;
  fx.suite = "fixtures";
  fx.fixture_dir = MACPOLY_FIXTURE_DIR;
  auto report = verify(fx);
  REQUIRE(report.size() == 3);
  for (const auto& e : report) CHECK(e.failures == 0);

  VerifyOptions small;
  small.suite = "htilde";
  small.max_size = 4;
  small.max_n = 3;
  for (const auto& e : verify(small)) {
    CHECK(e.failures == 0);
    CHECK(e.instances > 0);
  }

  VerifyOptions empty;
  empty.suite = "all";
  empty.max_size = 0;
  empty.fixture_dir = MACPOLY_FIXTURE_DIR;
  report = verify(empty);
  CHECK(bounded_instances(report) == 0);
  for (const auto& e : report) CHECK(e.failures == 0);

  std::ostringstream out;
  print_report(report, out);
  CHECK(out.str().find("all identities hold") != std::string::npos);

  VerifyOptions missing;
  missing.suite = "fixtures";
  missing.fixture_dir = "/nonexistent";
  report = verify(missing);
  CHECK(report.at(0).failures == 1);

  VerifyOptions bad;
  bad.suite = "everything";
  CHECK_THROWS_AS(verify(bad), UsageError);
}

}  // TEST_SUITE
