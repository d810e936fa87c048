#include "expansio/random_instances.hpp"

#include "expansio/expansion_resolution.hpp"
#include "expansio/linear_quotients.hpp"

namespace expansio {

Monomial InstanceGenerator::random_monomial(int nvars, Exponent max_total_degree,
                                            Exponent max_exponent) {
  while (true) {
    std::vector<Exponent> e(nvars, 0);
    for (int i = 0; i < nvars; ++i) e[i] = uniform(0, static_cast<int>(max_exponent));
    Monomial m(std::move(e));
    if (total_degree(m) >= 1 && total_degree(m) <= max_total_degree) return m;
  }
}

MonomialIdeal InstanceGenerator::random_ideal(const RingDescriptor& ring, int max_gens,
                                              Exponent max_degree) {
  int count = uniform(1, max_gens);
  std::vector<Monomial> gens;
  for (int i = 0; i < count; ++i)
    gens.push_back(random_monomial(ring.nvars(), max_degree));
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal InstanceGenerator::random_ideal(int min_n, int max_n, int max_gens,
                                              Exponent max_degree) {
  int n = uniform(min_n, max_n);
  return random_ideal(RingDescriptor::standard(n), max_gens, max_degree);
}

ExpansionTuple InstanceGenerator::random_tuple(int n, int max_entry) {
  std::vector<int> entries(n);
  for (int& e : entries) e = uniform(1, max_entry);
  return ExpansionTuple(std::move(entries));
}

InstanceGenerator::BoundedInstance InstanceGenerator::bounded_instance(int expansion_gen_cap,
                                                                       Exponent total_rank_cap,
                                                                       int max_gens,
                                                                       Exponent max_degree) {
  while (true) {
    MonomialIdeal I = random_ideal(2, 4, max_gens, max_degree);
    ExpansionTuple tuple = random_tuple(I.ring().nvars());
    ExpandedRing er(I.ring(), tuple);
    MonomialIdeal star = expand_ideal(er, I);
    if (star.ngens() > expansion_gen_cap) continue;
    if (total_rank_cap > 0) {
      // closed-form prescreen of the total-complex size
      ChainComplex Fmin = minimize(taylor_complex(I));
      Exponent rank = 0;
      bool ok = true;
      for (const auto& mod : Fmin.modules) {
        for (const auto& shift : mod.shifts) {
          for (Exponent c : principal_betti_polynomial(tuple, shift)) rank += c;
          if (rank > total_rank_cap) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) continue;
    }
    return BoundedInstance{std::move(I), std::move(tuple)};
  }
}

MonomialIdeal InstanceGenerator::random_linear_quotients_ideal(int max_gens,
                                                               Exponent max_degree,
                                                               bool equigenerated) {
  while (true) {
    MonomialIdeal I = random_ideal(2, 4, max_gens, max_degree);
    if (equigenerated) {
      Exponent d = total_degree(I.gens().front());
      bool equi = true;
      for (const auto& g : I.gens())
        if (total_degree(g) != d) equi = false;
      if (!equi) continue;
    }
    if (find_linear_quotients_order(I, 8)) return I;
  }
}

}  // namespace expansio
