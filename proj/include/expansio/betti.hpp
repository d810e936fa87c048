#pragma once

#include <map>
#include <string>

#include "expansio/free_complex.hpp"

namespace expansio {

// Betti numbers of a module, keyed multigraded (i, a) when available and
// always aggregated by total degree (i, k).
struct BettiTable {
  std::map<std::pair<int, std::vector<Exponent>>, Exponent> fine;
  std::map<std::pair<int, Exponent>, Exponent> total;
  bool has_fine = false;

  void add_fine(int i, const std::vector<Exponent>& a, Exponent count);
  void add_total(int i, Exponent k, Exponent count);

  bool empty() const { return total.empty(); }
  bool total_equal(const BettiTable& other) const { return total == other.total; }
};

// reg = max(k - i) over the support; projdim = max i; both need a nonempty table.
Exponent regularity(const BettiTable& B);
int projdim(const BettiTable& B);
// Coefficients beta_0..beta_p of the Betti polynomial.
std::vector<Exponent> betti_polynomial(const BettiTable& B);

// beta_{i,k} = 0 unless k = d + i.
bool is_linear_table(const BettiTable& B, Exponent d);

// Shift counts of a minimal complex are its Betti table.
BettiTable betti_of_minimal_complex(const ChainComplex& C);

// Text grid in the usual Betti-diagram shape: columns = homological degree,
// rows = strata k - i, "." for zero.
std::string render_betti_grid(const BettiTable& B);

// One machine-readable record per nonzero total entry.
std::string betti_to_json(const BettiTable& B);

// Human-readable diff of two tables' total views (for mismatch reports).
std::string diff_betti(const BettiTable& got, const BettiTable& expected,
                       const std::string& got_name, const std::string& expected_name);

}  // namespace expansio
