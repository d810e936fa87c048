#pragma once

#include "expansio/betti.hpp"
#include "expansio/expansion.hpp"
#include "expansio/prime_power_resolution.hpp"

namespace expansio {

// The minimal free resolution of (x^a)^*: the tensor product, block by
// block, of the prime-power resolutions G(P_j^{a(j)}).
struct PrincipalResolution {
  Monomial source_shift;                       // a, in the source ring
  std::vector<PrimePowerResolution> factors;   // one per block
  std::vector<ChainComplex> partials;          // partials[j] = factors[0] (x) ... (x) factors[j]
  const ChainComplex& complex() const { return partials.back(); }
};

PrincipalResolution principal_resolution(const ExpandedRing& er, const Monomial& a);

// Lifting of the inclusion (x^a)^* -> (x^b)^* (x^b | x^a): the tensor of the
// per-block liftings.
ChainMap principal_lifting(const ExpandedRing& er, const PrincipalResolution& A,
                           const PrincipalResolution& B);

// The grid over a minimal free resolution F of M: column i resolves F_i^*,
// horizontal maps lift the expanded differentials.
struct DoubleComplex {
  ExpandedRing ring;
  ChainComplex source;                // F, over the source ring
  std::vector<ChainComplex> columns;  // G_i, over the flat ring
  std::vector<ChainMap> horizontal;   // horizontal[i]: columns[i+1] -> columns[i]
};

// Requires F minimal (and a valid complex). Exact commuting-square and
// row-composition checks run at construction.
DoubleComplex double_complex(const ExpandedRing& er, const ChainComplex& Fmin);

// Re-runs the structural checks (columns are complexes, horizontals are
// chain maps, consecutive horizontals compose to zero).
void validate_double_complex(const DoubleComplex& dc);

// T(C)_m = (+)_{i+j=m} G_{ij}, differential d + (-1)^i ∂ on block (i,j).
ChainComplex total_complex(const DoubleComplex& dc);

// DOT rendering of the grid, ranks as node labels.
std::string double_complex_dot(const DoubleComplex& dc);

// Closed-form Betti polynomial of (x^a)^* and its projective dimension.
std::vector<Exponent> principal_betti_polynomial(const ExpansionTuple& tuple, const Monomial& a);
int principal_projdim(const ExpansionTuple& tuple, const Monomial& a);

Exponent binomial_coeff(Exponent n, Exponent k);

// Total-degree Betti table of M^* from a minimal resolution of M, summing
// the shifted linear strands of each F_i^*.
BettiTable betti_via_formula(const ExpandedRing& er, const ChainComplex& Fmin);

struct ProjdimReg {
  int projdim;
  Exponent reg;
};
ProjdimReg projdim_and_reg(const ExpandedRing& er, const ChainComplex& Fmin);

// Shifts with no multiple in any higher homological degree.
std::vector<std::pair<int, Monomial>> extremal_shifts(const ChainComplex& Fmin);
int projdim_from_extremal_shifts(const ExpandedRing& er, const ChainComplex& Fmin);

}  // namespace expansio
