#pragma once

#include <cstdint>
#include <map>

#include "expansio/free_complex.hpp"

namespace expansio {

// An ordered set of variables y_1 > ... > y_r of the ambient ring,
// generating a monomial prime P = (y_1,...,y_r).
struct VariableBlock {
  std::vector<int> vars;  // ambient indices, priority order
  int size() const { return static_cast<int>(vars.size()); }
};

// Basis symbol of the linear-quotients resolution of P^a: a generator u of
// P^a together with sigma, a subset of {0,...,m(u)-2} in block-local
// indices (stored as a bitmask).
struct PowerSymbol {
  int gen;              // index into the generator list
  std::uint32_t sigma;  // bitmask of block-local variable indices
};

// The minimal multigraded free resolution of P^a, built from the linear
// quotients of the descending-lex generator order. Carries the symbol
// bookkeeping needed to assemble lifting maps.
class PrimePowerResolution {
public:
  PrimePowerResolution(RingDescriptor ring, VariableBlock block, Exponent a);

  const RingDescriptor& ring() const { return ring_; }
  const VariableBlock& block() const { return block_; }
  Exponent exponent() const { return a_; }
  const ChainComplex& complex() const { return complex_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  const std::vector<std::vector<PowerSymbol>>& basis() const { return basis_; }

  // Index of f(sigma; gen) in homological degree s, -1 if absent.
  int symbol_index(int s, int gen, std::uint32_t sigma) const;
  // Index of the generator with the given block-local exponents, -1 if absent.
  int generator_index(const std::vector<Exponent>& local) const;

  // Largest block-local index with positive exponent, -1 for the unit.
  int m_local(int gen) const { return m_local_[gen]; }

  std::vector<Exponent> local_exponents(const Monomial& u) const;
  Monomial from_local(const std::vector<Exponent>& local) const;

private:
  RingDescriptor ring_;
  VariableBlock block_;
  Exponent a_;
  std::vector<Monomial> gens_;
  std::vector<int> m_local_;
  std::vector<std::vector<PowerSymbol>> basis_;
  std::vector<std::map<std::pair<int, std::uint32_t>, int>> index_;
  std::map<std::vector<Exponent>, int> gen_index_;
  ChainComplex complex_;
};

// The decomposition function of P^b in closed form: the b smallest block
// variables of u counted with multiplicity (b = 0 gives the unit monomial).
// Requires the block part of u to have degree >= b.
Monomial block_decomposition_g(const RingDescriptor& ring, const VariableBlock& block,
                               Exponent b, const Monomial& u);

// The lifting of the inclusion P^a -> P^b (a >= b, same block):
// f(sigma; u) -> c_b(u) f(sigma; g_b(u)), zero when sigma exceeds the
// target symbol's set.
ChainMap prime_power_lifting(const PrimePowerResolution& A, const PrimePowerResolution& B);

}  // namespace expansio
