#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qbundle/error.hpp"
#include "qbundle/examples.hpp"
#include "qbundle/suites.hpp"

using namespace qbundle;

namespace {

struct Config {
  std::string presentation, expr, suite, example = "flag", space = "A", format = "json", report;
  int degree = 0, nmax = 2, slice = 8, samples = 200, m = 0, n = 0, variant = 2;
  std::uint64_t seed = 7;
  unsigned jobs = 1;
  bool timings = false;
};

void emit(const Config& c, const std::string& text) {
  if (c.report.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.report);
  if (!out) throw Error(ErrorKind::Usage, "cannot write " + c.report);
  out << text;
}

int reduce(const Config& c) {
  Algebra a(resolve_presentation(c.presentation));
  std::cout << a.str(a.parse(c.expr)) << "\n";
  return 0;
}

int basis(const Config& c) {
  Algebra a(resolve_presentation(c.presentation));
  int d = c.degree > 0 ? c.degree : a.presentation().degree_bound;
  for (const auto& w : a.rewrite().monomial_basis(a.alphabet().size(), d)) std::cout << a.str(Element(w)) << "\n";
  return 0;
}

const Bundle& bundle(const Config& c) {
  if (c.example == "flag") return flag_example(c.slice).bundle;
  if (c.example == "twistor") return twistor_example().bundle;
  throw Error(ErrorKind::Usage, "unknown example '" + c.example + "'");
}

int coinv(const Config& c) {
  const Bundle& b = bundle(c);
  int d = c.degree > 0 ? c.degree : 2;
  CoinvariantBasis cb;
  const Algebra* a = &b.P();
  if (c.space == "A") {
    cb = b.A(d);
  } else if (c.space == "B") {
    cb = b.B(d);
  } else if (c.space == "A_bar") {
    cb = b.A_bar(d);
  } else if (c.space == "X") {
    cb = b.X(d);
    a = &b.C().base();
  } else {
    throw Error(ErrorKind::Usage, "unknown space '" + c.space + "'");
  }
  for (const auto& x : cb.basis) std::cout << a->str(x) << "\n";
  return 0;
}

int check(const Config& c) {
  SuiteOptions o;
  o.degree = c.degree;
  o.nmax = c.nmax;
  o.slice = c.slice;
  o.jobs = c.jobs;
  o.samples = c.samples;
  o.seed = c.seed;
  Report r = run_suite(c.suite, o);
  emit(c, c.format == "json" ? r.to_json(c.timings) + "\n" : r.to_text());
  return r.ok() ? 0 : 1;
}

int grouplike(const Config& c) {
  const FlagExample& f = flag_example(c.slice);
  Element d = d_element(f.u2, c.m, c.n, c.variant);
  bool ok = f.quotient.is_grouplike(d);
  std::cout << "d_{" << c.m << "," << c.n << "} = " << f.u2.str(d) << "\n"
            << (ok ? "group-like" : "not group-like") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qbundle: exact computations for principal coalgebra extensions over Q(q, s)"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--jobs", c.jobs, "checks run in parallel")->check(CLI::Range(1u, 256u));
  app.add_flag("--timings", c.timings, "include wall times in JSON reports");
  app.add_option("--format", c.format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--report", c.report, "write the report to this file instead of stdout");

  auto* red = app.add_subcommand("reduce", "normal form of an expression");
  red->add_option("--presentation", c.presentation, "builtin:NAME or a presentation file")->required();
  red->add_option("--expr", c.expr)->required();

  auto* bas = app.add_subcommand("basis", "normal words up to a degree");
  bas->add_option("--presentation", c.presentation, "builtin:NAME or a presentation file")->required();
  bas->add_option("--degree", c.degree, "default: the presentation's degree bound")->check(CLI::PositiveNumber);

  auto* co = app.add_subcommand("coinv", "coinvariant basis of A, B, A_bar (in P) or X (in C)");
  co->add_option("--example", c.example)->check(CLI::IsMember({"flag", "twistor"}));
  co->add_option("--space", c.space)->check(CLI::IsMember({"A", "B", "A_bar", "X"}));
  co->add_option("--degree", c.degree, "default 2")->check(CLI::PositiveNumber);
  co->add_option("--slice", c.slice, "degree slice of the flag quotient")->check(CLI::PositiveNumber);

  auto* chk = app.add_subcommand("check", "run a verification suite");
  chk->add_option("--suite", c.suite)->required()->check(CLI::IsMember(suite_names()));
  chk->add_option("--degree", c.degree, "default: per suite, or QBUNDLE_DEGREE")->check(CLI::PositiveNumber);
  chk->add_option("--nmax", c.nmax)->check(CLI::NonNegativeNumber);
  chk->add_option("--slice", c.slice)->check(CLI::PositiveNumber);
  chk->add_option("--samples", c.samples)->check(CLI::PositiveNumber);
  chk->add_option("--seed", c.seed);

  auto* gl = app.add_subcommand("grouplike", "test whether the class of d_{m,n} is group-like");
  gl->add_option("--m", c.m)->required();
  gl->add_option("--n", c.n)->required();
  gl->add_option("--variant", c.variant, "1, 2 (printed forms) or 3")->check(CLI::Range(1, 3));
  gl->add_option("--slice", c.slice)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*red) return reduce(c);
    if (*bas) return basis(c);
    if (*co) return coinv(c);
    if (*chk) return check(c);
    if (*gl) return grouplike(c);
  } catch (const Error& e) {
    std::cerr << "qbundle: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
