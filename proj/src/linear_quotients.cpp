#include "expansio/linear_quotients.hpp"

#include <algorithm>

#include "expansio/errors.hpp"

namespace expansio {

namespace {

void require_permutation_of_gens(const MonomialIdeal& I, const std::vector<Monomial>& order) {
  std::vector<Monomial> sorted = order;
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  if (sorted != I.gens())
    throw std::invalid_argument("order is not a permutation of the minimal generators");
}

// Minimal generators of (u_1,...,u_{j-1}) : u_j; the order only matters up
// to the prefix set.
MonomialIdeal prefix_colon(const RingDescriptor& ring, const std::vector<Monomial>& order,
                           size_t j) {
  std::vector<Monomial> quotients;
  quotients.reserve(j);
  for (size_t t = 0; t < j; ++t)
    quotients.push_back(quotient_exact(order[t], gcd(order[t], order[j])));
  return MonomialIdeal(ring, std::move(quotients));
}

}  // namespace

LinearQuotientsCertificate is_linear_quotients(const MonomialIdeal& I,
                                               const std::vector<Monomial>& order) {
  require_permutation_of_gens(I, order);
  LinearQuotientsCertificate cert;
  cert.sets.resize(order.size());
  for (size_t j = 1; j < order.size(); ++j) {
    MonomialIdeal q = prefix_colon(I.ring(), order, j);
    std::vector<int> vars;
    for (const auto& g : q.gens()) {
      if (total_degree(g) != 1) {
        cert.holds = false;
        cert.failed_index = static_cast<int>(j);
        return cert;
      }
      vars.push_back(support(g)[0]);
    }
    std::sort(vars.begin(), vars.end());
    cert.sets[j] = std::move(vars);
  }
  cert.holds = true;
  return cert;
}

namespace {

bool lq_search(const MonomialIdeal& I, std::vector<Monomial>& chosen,
               std::vector<char>& used, const std::vector<Monomial>& pool) {
  if (chosen.size() == pool.size()) return true;
  size_t j = chosen.size();
  for (size_t c = 0; c < pool.size(); ++c) {
    if (used[c]) continue;
    chosen.push_back(pool[c]);
    bool ok = true;
    if (j >= 1) {
      MonomialIdeal q = prefix_colon(I.ring(), chosen, j);
      for (const auto& g : q.gens())
        if (total_degree(g) != 1) {
          ok = false;
          break;
        }
    }
    if (ok) {
      used[c] = 1;
      if (lq_search(I, chosen, used, pool)) return true;
      used[c] = 0;
    }
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Monomial>> find_linear_quotients_order(const MonomialIdeal& I,
                                                                 int gen_cap) {
  if (I.is_zero()) return std::nullopt;
  if (I.ngens() > gen_cap)
    throw resource_limit_error("linear-quotients search refused: " +
                               std::to_string(I.ngens()) + " generators exceed cap " +
                               std::to_string(gen_cap));
  // Pool in canonical order: candidates are tried degree-nondecreasing first.
  std::vector<Monomial> chosen;
  std::vector<char> used(I.gens().size(), 0);
  if (lq_search(I, chosen, used, I.gens())) return chosen;
  return std::nullopt;
}

std::vector<Monomial> expansion_order(const ExpandedRing& er, const MonomialIdeal& I,
                                      const std::vector<Monomial>& lq_order) {
  auto cert = is_linear_quotients(I, lq_order);
  if (!cert.holds)
    throw std::invalid_argument("the given order does not have linear quotients");
  std::vector<Monomial> out;
  for (const auto& u : lq_order) {
    auto block = expand_principal(er, u).gens();
    std::sort(block.begin(), block.end(),
              [](const Monomial& a, const Monomial& b) { return lex_compare(a, b) == Cmp::LT; });
    out.insert(out.end(), block.begin(), block.end());
  }
  // postcondition: the block-by-block order is again a linear-quotients order
  if (!is_linear_quotients(expand_ideal(er, I), out).holds)
    throw std::logic_error("expansion order failed its linear-quotients postcondition");
  return out;
}

DecompositionFunction::DecompositionFunction(MonomialIdeal ideal, std::vector<Monomial> order)
    : ideal_(std::move(ideal)), order_(std::move(order)) {
  require_permutation_of_gens(ideal_, order_);
}

Monomial DecompositionFunction::g(const Monomial& u) const {
  for (const auto& gen : order_)
    if (divides(gen, u)) return gen;
  throw std::invalid_argument("monomial is not in the ideal");
}

bool is_regular_decomposition(const MonomialIdeal& I, const std::vector<Monomial>& order) {
  auto cert = is_linear_quotients(I, order);
  if (!cert.holds)
    throw std::invalid_argument("regularity is defined for linear-quotients orders only");
  DecompositionFunction dec(I, order);

  std::vector<std::vector<int>> set_of(order.size());
  for (size_t j = 0; j < order.size(); ++j) set_of[j] = cert.sets[j];
  auto set_of_gen = [&](const Monomial& gen) -> const std::vector<int>& {
    for (size_t j = 0; j < order.size(); ++j)
      if (order[j] == gen) return set_of[j];
    throw std::logic_error("generator not found");
  };

  for (size_t j = 0; j < order.size(); ++j) {
    for (int s : set_of[j]) {
      Monomial v = multiply(order[j], Monomial::variable(order[j].nvars(), s));
      const auto& target_set = set_of_gen(dec.g(v));
      if (!std::includes(set_of[j].begin(), set_of[j].end(), target_set.begin(),
                         target_set.end()))
        return false;
    }
  }
  return true;
}

}  // namespace expansio
