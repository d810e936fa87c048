#pragma once

#include <random>

#include "expansio/expansion.hpp"
#include "expansio/ideal.hpp"

namespace expansio {

// Seeded instance generator for the verification suites: n in {2,3,4},
// 1..5 generators, per-variable exponents <= 3, tuple entries <= 3.
class InstanceGenerator {
public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int uniform(int lo, int hi) {  // inclusive
    return static_cast<int>(lo + rng_() % (hi - lo + 1));
  }

  Monomial random_monomial(int nvars, Exponent max_total_degree, Exponent max_exponent = 3);
  MonomialIdeal random_ideal(const RingDescriptor& ring, int max_gens = 5,
                             Exponent max_degree = 3);
  MonomialIdeal random_ideal(int min_n = 2, int max_n = 4, int max_gens = 5,
                             Exponent max_degree = 3);
  ExpansionTuple random_tuple(int n, int max_entry = 3);

  // Resamples until |G(I)| >= 1 and the expansion stays below gen_cap (and,
  // when rank_cap > 0, the closed-form total rank of T(C) stays below it).
  struct BoundedInstance {
    MonomialIdeal ideal;
    ExpansionTuple tuple;
  };
  BoundedInstance bounded_instance(int expansion_gen_cap, Exponent total_rank_cap,
                                   int max_gens = 5, Exponent max_degree = 3);

  // Random ideal with linear quotients (search-verified), at most max_gens
  // generators; resamples until one is found.
  MonomialIdeal random_linear_quotients_ideal(int max_gens = 4, Exponent max_degree = 3,
                                              bool equigenerated = false);

private:
  std::mt19937_64 rng_;
};

}  // namespace expansio
