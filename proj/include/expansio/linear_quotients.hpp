#pragma once

#include <optional>

#include "expansio/expansion.hpp"
#include "expansio/ideal.hpp"

namespace expansio {

// Result of testing an ordering u_1,...,u_m of G(I) for linear quotients:
// every colon (u_1,...,u_{j-1}) : u_j must be generated by variables.
// sets[j] lists those variables (0-based); sets[0] is empty.
struct LinearQuotientsCertificate {
  bool holds = false;
  std::vector<std::vector<int>> sets;
  int failed_index = -1;  // first j violating the condition, when !holds
};

// `order` must be a permutation of G(I).
LinearQuotientsCertificate is_linear_quotients(const MonomialIdeal& I,
                                               const std::vector<Monomial>& order);

// Backtracking search for a linear-quotients order, preferring
// degree-nondecreasing arrangements. Refuses ideals with more than
// `gen_cap` generators (resource_limit_error).
std::optional<std::vector<Monomial>> find_linear_quotients_order(const MonomialIdeal& I,
                                                                 int gen_cap = 8);

// Given a linear-quotients order of G(I), the induced order of G(I^*):
// block by block, each generator's expansion listed ascending-lex in the
// flat priority order. The result is again a linear-quotients order.
std::vector<Monomial> expansion_order(const ExpandedRing& er, const MonomialIdeal& I,
                                      const std::vector<Monomial>& lq_order);

// The decomposition function of an ordered ideal: g(u) is the first
// generator in the order dividing u, c(u) = u / g(u).
class DecompositionFunction {
public:
  DecompositionFunction(MonomialIdeal ideal, std::vector<Monomial> order);

  const std::vector<Monomial>& order() const { return order_; }
  Monomial g(const Monomial& u) const;  // throws if u is not in the ideal
  Monomial c(const Monomial& u) const { return quotient_exact(u, g(u)); }

private:
  MonomialIdeal ideal_;
  std::vector<Monomial> order_;
};

// Regularity of the decomposition function: set(g(x_s u)) subseteq set(u)
// for every u in G(I) and s in set(u). Requires a linear-quotients order.
bool is_regular_decomposition(const MonomialIdeal& I, const std::vector<Monomial>& order);

}  // namespace expansio
