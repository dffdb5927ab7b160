#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>

#include "cli.hpp"
#include "macpoly/combinatorics.hpp"
#include "macpoly/fixtures.hpp"
#include "macpoly/integral.hpp"
#include "macpoly/modified.hpp"
#include "macpoly/parallel.hpp"
#include "macpoly/quasisym.hpp"

namespace macpoly::cli {

namespace {

using Check = std::function<std::optional<std::string>()>;

struct Instance {
  std::string label;
  Check check;
};

std::string label(const std::vector<int>& parts, std::optional<int> n = {}) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  s += ")";
  if (n) s += " n=" + std::to_string(*n);
  return s;
}

std::optional<std::string> fail_unless(bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return what;
}

VerifyEntry run_identity(const std::string& name, std::vector<Instance> instances, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = parallel_map<std::optional<std::string>>(instances.size(), threads, [&](std::size_t i) {
    try {
      return instances[i].check();
    } catch (const std::exception& e) {
      return std::optional<std::string>(std::string("exception: ") + e.what());
    }
  });
  VerifyEntry entry{name, instances.size(), 0, 0, {}};
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i]) continue;
    ++entry.failures;
    if (entry.details.size() < 5) entry.details.push_back(instances[i].label + ": " + *results[i]);
  }
  entry.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return entry;
}

struct Bounds {
  std::optional<int> size;
  std::optional<int> n;
  std::optional<int> env_size;

  int size_cap(int fallback) const { return size ? *size : env_size ? std::max(*env_size, fallback) : fallback; }
  int n_cap(int fallback) const { return n ? *n : fallback; }
};

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int k = 1; k <= max_size; ++k)
    for (auto& p : partitions_of(k)) out.push_back(std::move(p));
  return out;
}

std::vector<Composition> strong_compositions_up_to(int max_size) {
  std::vector<Composition> out;
  for (int k = 1; k <= max_size; ++k)
    for (auto& c : strong_compositions_of(k)) out.push_back(std::move(c));
  return out;
}

// Drops x_n from the terms of e where its exponent is zero.
EResult set_last_variable_to_zero(const EResult& e) {
  EResult out(e.nvars() - 1);
  for (const auto& [m, w] : e.coeffs()) {
    if (m.x.back() != 0) continue;
    out.add(Monomial(std::vector<std::uint32_t>(m.x.begin(), m.x.end() - 1), 0, 0), w);
  }
  return out;
}

template <class Poly>
bool symmetric(const Poly& p, std::size_t n) {
  for (std::size_t i = 1; i < n; ++i)
    if (!(p.swap_x(i, i + 1) == p)) return false;
  return true;
}

bool nonnegative_integer_coeffs(const MPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& kv) { return kv.second >= 0; });
}

std::vector<VerifyEntry> htilde_suite(const Bounds& b, unsigned threads) {
  std::vector<VerifyEntry> out;
  std::vector<Instance> eq, sym;
  for (const Partition& lam : partitions_up_to(b.size_cap(6)))
    for (int n = 1; n <= b.n_cap(4); ++n)
      eq.push_back({label(lam, n), [=] {
                      return fail_unless(htilde_compact(lam, n) == htilde_hhl(lam, n), "compact != hhl");
                    }});
  for (const Partition& lam : partitions_up_to(b.size_cap(5)))
    for (int n = 1; n <= b.n_cap(4); ++n)
      sym.push_back({label(lam, n), [=] {
                       return fail_unless(symmetric(htilde_hhl(lam, n), static_cast<std::size_t>(n)), "not symmetric");
                     }});
  out.push_back(run_identity("htilde: compact sorted-tableau sum = HHL sum", std::move(eq), threads));
  out.push_back(run_identity("htilde: symmetric under adjacent transpositions", std::move(sym), threads));
  return out;
}

std::vector<VerifyEntry> j_suite(const Bounds& b, unsigned threads) {
  std::vector<VerifyEntry> out;
  std::vector<Instance> eq, closed, pr, jp, integ, psym;
  for (const Partition& mu : partitions_up_to(b.size_cap(5)))
    for (int n = 1; n <= b.n_cap(4); ++n)
      eq.push_back({label(mu, n), [=] { return fail_unless(j_compact(mu, n).value == j_hhl(mu, n), "compact != hhl"); }});
  for (int n = 1; n <= std::min(b.size_cap(5), b.n_cap(5)); ++n)
    closed.push_back({"n=" + std::to_string(n), [=] {
                        const Partition ones(static_cast<std::size_t>(n), 1);
                        const JResult r = j_compact(ones, n);
                        MPoly expected = MPoly::one(static_cast<std::size_t>(n));
                        for (int i = 1; i <= n; ++i) expected *= MPoly::x(static_cast<std::size_t>(n), static_cast<std::size_t>(i));
                        expected = expected * pochhammer_tt(static_cast<unsigned>(n)).lifted(static_cast<std::size_t>(n));
                        return fail_unless(r.value == expected && r.filling_count == 1, "closed form or filling count");
                      }});
  for (const Partition& mu : partitions_up_to(b.size_cap(8)))
    pr.push_back({label(mu), [=] { return fail_unless(pr1(mu) == pr2(composition_stats(mu).inc), "pr1 != pr2(inc)"); }});
  for (const Partition& lam : partitions_up_to(b.size_cap(4)))
    for (int n = static_cast<int>(lam.size()); n <= b.n_cap(4); ++n)
      jp.push_back({label(lam, n), [=] {
                      return fail_unless(p_poly(lam, n).scaled(pr1(lam)).to_polynomial() == j_compact(lam, n).value,
                                         "P*PR1 != J");
                    }});
  for (const Partition& mu : partitions_up_to(b.size_cap(5)))
    for (int n = 1; n <= b.n_cap(4); ++n) {
      integ.push_back({"J " + label(mu, n), [=] {
                         const JResult r = j_compact(mu, n);
                         const auto q = r.value.divide_exact(multiplicity_prefactor(mu).lifted(static_cast<std::size_t>(n)));
                         return fail_unless(q && *q == r.quotient, "not divisible by prod (t;t)_m");
                       }});
      if (static_cast<int>(mu.size()) > n) continue;
      for (const Composition& alpha : distinct_rearrangements(mu, n))
        integ.push_back({"E " + label(alpha), [=] {
                           const MPoly ie = integral_e(alpha, Verify::yes);
                           const auto q = ie.divide_exact(multiplicity_prefactor(alpha).lifted(alpha.size()));
                           return fail_unless(q.has_value(), "not divisible by prod (t;t)_m");
                         }});
    }
  for (const Partition& lam : partitions_up_to(b.size_cap(5)))
    for (int n = std::max(1, static_cast<int>(lam.size())); n <= b.n_cap(4); ++n)
      psym.push_back({label(lam, n), [=] {
                        return fail_unless(symmetric(p_poly(lam, n), static_cast<std::size_t>(n)), "not symmetric");
                      }});
  out.push_back(run_identity("j: compact ordered-filling sum = HHL sum", std::move(eq), threads));
  out.push_back(run_identity("j: J_(1^n) = x1..xn (t;t)_n from one filling", std::move(closed), threads));
  out.push_back(run_identity("j: pr1(mu) = pr2(inc(mu))", std::move(pr), threads));
  out.push_back(run_identity("j: J = P * PR1", std::move(jp), threads));
  out.push_back(run_identity("j: J and integral E divisible by prod (t;t)_m", std::move(integ), threads));
  out.push_back(run_identity("j: P symmetric under adjacent transpositions", std::move(psym), threads));
  return out;
}

std::vector<VerifyEntry> qsym_suite(const Bounds& b, unsigned threads) {
  std::vector<VerifyEntry> out;
  std::vector<Instance> qs, refine, chain, stable, atoms;
  for (const Composition& g : strong_compositions_up_to(b.size_cap(5)))
    for (int n = static_cast<int>(g.size()); n <= b.n_cap(5); ++n) {
      qs.push_back({label(g, n), [=] { return fail_unless(qsym_decompose(g_poly(g, n)).is_quasisymmetric, "not quasisymmetric"); }});
      if (n > static_cast<int>(g.size()))
        stable.push_back({label(g, n), [=] {
                            return fail_unless(set_last_variable_to_zero(g_poly(g, n)) == g_poly(g, n - 1), "unstable");
                          }});
    }
  for (const Partition& lam : partitions_up_to(b.size_cap(5)))
    for (int n = static_cast<int>(lam.size()); n <= b.n_cap(5); ++n) {
      refine.push_back({label(lam, n), [=] {
                          EResult sum(static_cast<std::size_t>(n));
                          for (const Composition& g : distinct_rearrangements(lam, static_cast<int>(lam.size())))
                            sum += g_poly(g, n);
                          return fail_unless(sum == p_poly(lam, n), "sum of G != P");
                        }});
      chain.push_back({label(lam, n), [=] {
                         MPoly sum(static_cast<std::size_t>(n));
                         for (const Composition& g : distinct_rearrangements(lam, static_cast<int>(lam.size()))) {
                           const MPoly part = qs_schur(g, n);
                           if (!nonnegative_integer_coeffs(part)) return std::optional<std::string>("negative coefficient in QS" + label(g));
                           sum += part;
                         }
                         return fail_unless(sum == schur_ssyt(lam, n), "sum of QS != s_lambda");
                       }});
    }
  for (int k = 1; k <= b.size_cap(4); ++k)
    for (const Partition& lam : partitions_of(k))
      for (int n = std::max(1, static_cast<int>(lam.size())); n <= b.n_cap(4); ++n)
        for (const Composition& alpha : distinct_rearrangements(lam, n))
          atoms.push_back({label(alpha), [=] { return fail_unless(t_atom_check(alpha), "t-atom check failed"); }});
  out.push_back(run_identity("qsym: G quasisymmetric", std::move(qs), threads));
  out.push_back(run_identity("qsym: sum of G over rearrangements = P", std::move(refine), threads));
  out.push_back(run_identity("qsym: sum of QS = s_lambda, QS >= 0", std::move(chain), threads));
  out.push_back(run_identity("qsym: G stable under x_n = 0", std::move(stable), threads));
  out.push_back(run_identity("qsym: t-atom check", std::move(atoms), threads));
  return out;
}

std::vector<VerifyEntry> fixture_suite(const std::string& dir, unsigned threads) {
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(dir))
    for (const auto& ent : std::filesystem::directory_iterator(dir))
      if (ent.path().extension() == ".json") files.push_back(ent.path());
  std::sort(files.begin(), files.end());
  std::vector<VerifyEntry> out;
  if (files.empty()) {
    out.push_back({"fixtures: no fixture files in '" + dir + "'", 0, 1, 0, {}});
    return out;
  }
  for (const auto& file : files) {
    std::vector<Instance> inst;
    std::vector<FillingFixture> fixtures;
    try {
      fixtures = load_fixtures(file);
    } catch (const std::exception& e) {
      out.push_back({"fixtures: " + file.filename().string(), 1, 1, 0, {e.what()}});
      continue;
    }
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
      const FillingFixture fx = fixtures[i];
      inst.push_back({fx.name.empty() ? "case " + std::to_string(i + 1) : fx.name, [fx] {
                        std::string bad;
                        for (const FixtureCheck& c : check_fixture(fx))
                          if (!c.ok) bad += c.key + " expected " + c.expected + " got " + c.actual + "; ";
                        return fail_unless(bad.empty(), bad);
                      }});
    }
    out.push_back(run_identity("fixtures: " + file.filename().string(), std::move(inst), threads));
  }
  return out;
}

}  // namespace

std::vector<VerifyEntry> verify(const VerifyOptions& opts) {
  Bounds b{opts.max_size, opts.max_n, std::nullopt};
  if (const char* env = std::getenv("MACPOLY_VERIFY_MAX_SIZE"))
    b.env_size = std::atoi(env);
  const std::string& s = opts.suite;
  if (s != "all" && s != "htilde" && s != "j" && s != "qsym" && s != "fixtures")
    throw UsageError("unknown verify suite '" + s + "'");
  std::vector<VerifyEntry> report;
  auto append = [&](std::vector<VerifyEntry> part) {
    for (auto& e : part) report.push_back(std::move(e));
  };
  if (s == "all" || s == "fixtures") append(fixture_suite(opts.fixture_dir, opts.threads));
  if (s == "all" || s == "htilde") append(htilde_suite(b, opts.threads));
  if (s == "all" || s == "j") append(j_suite(b, opts.threads));
  if (s == "all" || s == "qsym") append(qsym_suite(b, opts.threads));
  return report;
}

void print_report(const std::vector<VerifyEntry>& report, std::ostream& out) {
  std::size_t failed = 0;
  for (const VerifyEntry& e : report) {
    out << (e.failures == 0 ? "PASS " : "FAIL ") << e.identity << "  [" << e.instances << " instances, "
        << std::fixed << std::setprecision(3) << e.seconds << " s]\n";
    for (const std::string& d : e.details) out << "    " << d << "\n";
    if (e.failures) ++failed;
  }
  out << (failed == 0 ? "all identities hold" : std::to_string(failed) + " identities failed") << "\n";
}

}  // namespace macpoly::cli
