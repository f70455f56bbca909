#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbundle/examples.hpp"
#include "qbundle/report.hpp"

namespace qbundle {

struct SuiteOptions {
  /// 0 selects the suite default (see default_degree).
  int degree = 0;
  int nmax = 2;
  /// Degree slice of the flag quotient D.
  int slice = 8;
  unsigned jobs = 1;
  /// Randomized elements per algebra for the Church-Rosser checks.
  int samples = 200;
  std::uint64_t seed = 7;
};

enum class Example { Flag, Twistor };

/// Names accepted by run_suite: rewrite, flag, twistor, theorem-flag,
/// theorem-twistor.
const std::vector<std::string>& suite_names();

/// Flag 3, twistor 2, theorem suites 2, rewrite 4; QBUNDLE_DEGREE overrides.
int default_degree(const std::string& suite);

Report run_suite(const std::string& name, const SuiteOptions& options);

/// Completion certificates and reduction-path independence for the builtins.
Report run_rewrite_suite(const SuiteOptions& options);
Report run_flag_suite(const SuiteOptions& options);
Report run_twistor_suite(const SuiteOptions& options);
Report run_theorem_checks(Example example, const SuiteOptions& options);

/// One check per source relation: the image under m reduces to zero.
std::vector<CheckSpec> morphism_checks(const Morphism& m, const std::string& prefix, const std::string& anchor);

/// Entwining axioms, psi^-1, entwined-module law, r and copointedness on all
/// generator pairs.
std::vector<CheckSpec> entwining_checks(const Bundle& b);

}  // namespace qbundle
