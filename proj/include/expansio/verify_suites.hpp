#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "expansio/betti.hpp"
#include "expansio/io.hpp"

namespace expansio {

struct SuiteOptions {
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
  int count = 50;
  Exponent degree_bound_override = -1;  // <0: per-check defaults
  int expansion_gen_cap = 10;           // |G(I^*)| cap for oracle-backed suites
  Exponent total_rank_cap = 400;        // prescreened T(C) size cap
  std::string reproducer_dir;           // where failing instances are dumped; empty = no dump
};

struct SuiteResult {
  std::string name;
  int instances = 0;
  int checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

// Lemma-style identity suite over random ideal pairs: membership transfer,
// sum/product/intersection/colon/radical compatibility, primary transfer.
SuiteResult suite_expansion_identities(const SuiteOptions& opt);

// Primary decomposition, associated primes, height, powers, symbolic powers
// and windowed stable-Ass transfer under expansion.
SuiteResult suite_decomposition(const SuiteOptions& opt);

// Functor laws and degree-wise acyclicity of expanded complexes.
SuiteResult suite_functor(const SuiteOptions& opt);

// Resolution machinery: prime-power resolutions, lifting laws, the double
// complex, total-complex minimality, Betti/regularity/projdim agreement,
// linear-quotients transfer, extremal shifts.
SuiteResult suite_resolution(const SuiteOptions& opt);

// Per-instance checks used by `verify` on explicit problem files.
SuiteResult verify_instance(const ProblemInstance& p, const SuiteOptions& opt);

std::vector<SuiteResult> run_suites(const std::string& which, const SuiteOptions& opt);

// The Betti table of I^* along the three available routes.
struct ExpansionBetti {
  BettiTable via_formula;
  BettiTable via_oracle;
  BettiTable via_total_complex;
  bool agree() const {
    return via_formula.total_equal(via_oracle) && via_oracle.total_equal(via_total_complex);
  }
};
ExpansionBetti expansion_betti_three_ways(const MonomialIdeal& I, const ExpansionTuple& tuple);

}  // namespace expansio
