#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

#ifndef MACPOLY_FIXTURE_DIR
#define MACPOLY_FIXTURE_DIR "fixtures"
#endif

using namespace macpoly;
using namespace macpoly::cli;

namespace {

struct Raw {
  std::string shape;
  std::optional<int> n;
  std::string formula = "default";
  std::optional<std::string> q, t;
  bool json = false;
  bool rows = false;
  bool integral = false;
  bool verify = false;
  bool decompose = false;
  unsigned threads = 1;
};

CLI::App* add_family(CLI::App& app, Family fam, const std::string& help, Raw& raw, Request& req) {
  CLI::App* sub = app.add_subcommand(family_name(fam), help);
  sub->add_option("--shape", raw.shape, "Comma-separated parts, e.g. 2,1,1")->required();
  sub->add_option("--n", raw.n, "Number of x variables");
  sub->add_option("--q", raw.q, "Substitute q (integer or p/q)");
  sub->add_option("--t", raw.t, "Substitute t (integer or p/q)");
  sub->add_flag("--json", raw.json, "JSON output");
  sub->add_option("--threads", raw.threads, "Worker threads")->check(CLI::PositiveNumber);
  if (fam == Family::htilde || fam == Family::j)
    sub->add_option("--formula", raw.formula, "hhl | compact")->check(CLI::IsMember({"default", "hhl", "compact"}));
  if (fam == Family::htilde) sub->add_flag("--rows", raw.rows, "Read --shape as row lengths");
  if (fam == Family::e || fam == Family::f) {
    sub->add_flag("--integral", raw.integral, "Integral form");
    sub->add_flag("--verify", raw.verify, "With --integral: cross-check both routes");
  }
  if (fam == Family::g || fam == Family::qschur)
    sub->add_flag("--decompose", raw.decompose, "Expand in monomial quasisymmetric functions");
  sub->callback([fam, &req] { req.family = fam; });
  return sub;
}

Request build(const Raw& raw, Request req) {
  req.shape = parse_shape(raw.shape);
  req.n = raw.n;
  req.formula = raw.formula == "hhl" ? Formula::hhl : raw.formula == "compact" ? Formula::compact : Formula::automatic;
  if (raw.q) req.q = parse_value(*raw.q);
  if (raw.t) req.t = parse_value(*raw.t);
  req.output = raw.json ? Output::json : Output::human;
  req.rows = raw.rows;
  req.integral = raw.integral;
  req.verify = raw.verify;
  req.decompose = raw.decompose;
  req.threads = raw.threads;
  return req;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Macdonald polynomial engine"};
  app.require_subcommand(1);
  Raw raw;
  Request req;
  add_family(app, Family::htilde, "Modified Macdonald polynomial H~", raw, req);
  add_family(app, Family::j, "Integral form J", raw, req);
  add_family(app, Family::e, "Permuted-basement E for a weak composition", raw, req);
  add_family(app, Family::f, "F_alpha (same as e)", raw, req);
  add_family(app, Family::p, "Monic symmetric P", raw, req);
  add_family(app, Family::g, "Quasisymmetric Macdonald G", raw, req)->alias("gpoly");
  add_family(app, Family::qschur, "Quasisymmetric Schur QS = G at q = t = 0", raw, req);
  add_family(app, Family::schur, "Schur polynomial from semistandard tableaux", raw, req);

  VerifyOptions vopts;
  vopts.fixture_dir = MACPOLY_FIXTURE_DIR;
  bool verify_called = false;
  CLI::App* ver = app.add_subcommand("verify", "Run the identity battery");
  ver->add_option("suite", vopts.suite, "all | htilde | j | qsym | fixtures")
      ->check(CLI::IsMember({"all", "htilde", "j", "qsym", "fixtures"}));
  ver->add_option("--max-size", vopts.max_size, "Largest shape size");
  ver->add_option("--max-n", vopts.max_n, "Largest variable count");
  ver->add_option("--fixtures-dir", vopts.fixture_dir, "Directory of fixture JSON files");
  ver->add_option("--threads", vopts.threads, "Worker threads")->check(CLI::PositiveNumber);
  ver->callback([&] { verify_called = true; });

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify_called) {
      const auto report = verify(vopts);
      print_report(report, std::cout);
      for (const auto& e : report)
        if (e.failures) return 1;
      return 0;
    }
    std::cout << run(build(raw, req)) << "\n";
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency error: " << e.what() << "\n";
    return 3;
  } catch (const NotIntegralError& e) {
    std::cerr << "consistency error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
