#pragma once

// Request parsing and dispatch for the macpoly command-line tool.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "macpoly/polyring.hpp"
#include "macpoly/shapes.hpp"

namespace macpoly::cli {

enum class Family { htilde, j, e, f, p, g, qschur, schur };
enum class Formula { automatic, hhl, compact };
enum class Output { human, json };

struct Request {
  Family family = Family::htilde;
  Composition shape;
  std::optional<int> n;
  Formula formula = Formula::automatic;
  std::optional<Rational> q;
  std::optional<Rational> t;
  Output output = Output::human;
  bool rows = false;       // htilde: shape given as row lengths
  bool integral = false;   // e/f: integral form
  bool verify = false;     // e/f integral: cross-check both routes
  bool decompose = false;  // g/qschur: monomial quasisymmetric expansion
  unsigned threads = 1;
};

// Raised for malformed or inconsistent requests; the tool exits with status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

Composition parse_shape(const std::string& text);
Rational parse_value(const std::string& text);
std::string family_name(Family f);

// Checks arity and formula/family compatibility; throws UsageError.
void validate(const Request& r);
// Deterministic serialization of the requested polynomial.
std::string run(const Request& r);

struct VerifyOptions {
  std::string suite = "all";  // all | htilde | j | qsym | fixtures
  std::optional<int> max_size;
  std::optional<int> max_n;
  std::string fixture_dir;
  unsigned threads = 1;
};

struct VerifyEntry {
  std::string identity;
  std::size_t instances = 0;
  std::size_t failures = 0;
  double seconds = 0;
  std::vector<std::string> details;  // first few failing instances
};

std::vector<VerifyEntry> verify(const VerifyOptions& opts);
void print_report(const std::vector<VerifyEntry>& report, std::ostream& out);

}  // namespace macpoly::cli
