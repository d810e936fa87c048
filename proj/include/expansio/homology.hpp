#pragma once

#include <cstdint>
#include <string>

#include "expansio/betti.hpp"
#include "expansio/expansion.hpp"
#include "expansio/free_complex.hpp"

namespace expansio {

// Exact rank over Q of a sparse column-major matrix. Destroys its input.
Exponent sparse_rank(std::vector<std::map<int, Rational>> cols);

// The degree-a strand of a complex of multigraded free modules: basis
// elements whose shift divides x^a, with the scalar entries between them.
struct ComplexStrand {
  std::vector<int> dims;
  std::vector<std::vector<std::map<int, Rational>>> mats;  // mats[i]: module i+1 -> module i
};
ComplexStrand complex_strand(const ChainComplex& C, const Monomial& a);
// H_0..H_p dimensions of a strand.
std::vector<Exponent> strand_homology_dims(const ComplexStrand& s);

// All lcms of subsets of `atoms` with total degree <= degree_cap (the unit
// monomial included). Every divisibility pattern realized by any multidegree
// below the cap is realized by exactly one lattice element.
std::vector<Monomial> lcm_lattice(const std::vector<Monomial>& atoms, Exponent degree_cap,
                                  size_t size_cap = 200000);

struct TorOptions {
  int taylor_gen_cap = 14;  // use Taylor strands up to this many generators
  int koszul_var_cap = 8;   // otherwise Koszul strands up to this many variables
};

// Multigraded Betti numbers of the ideal I over Q, by brute-force strand
// homology. Independent of the resolution constructions.
BettiTable tor_betti(const MonomialIdeal& I, const TorOptions& opt = {});
// The two strategies, exposed for cross-validation.
BettiTable tor_betti_taylor(const MonomialIdeal& I, int gen_cap = 20);
BettiTable tor_betti_koszul(const MonomialIdeal& I, int var_cap = 10);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> issues;
  void fail(std::string what) {
    ok = false;
    issues.push_back(std::move(what));
  }
  std::string summary() const;
};

// Checks that C is a multigraded free resolution of the ideal I:
//   - differentials square to zero (exact arithmetic);
//   - columns of the first differential sum to zero (augmentation e_j -> shift_j);
//   - the shifts of F_0 generate exactly I;
//   - in every multidegree of total degree <= degree_bound, H_i = 0 for
//     i > 0 and dim coker(phi_1) = dim I_a. The per-degree checks run once
//     per divisibility pattern (lcm-lattice element), which covers every
//     multidegree below the bound.
VerifyReport verify_resolution(const ChainComplex& C, const MonomialIdeal& I,
                               Exponent degree_bound);

// Same checks for an expanded complex F^* against I^* (degree-wise
// acyclicity): pattern checks run on the folded source degrees, plus direct
// evaluation of sampled flat degrees through the expanded-module semantics.
VerifyReport verify_expanded_resolution(const ExpandedRing& er, const ExpandedComplex& C,
                                        const MonomialIdeal& I, Exponent degree_bound,
                                        int lifts_per_pattern = 2,
                                        std::uint64_t seed = 0x5eed);

ExpandedComplex expand_complex(const ExpandedRing& er, const ChainComplex& C);

}  // namespace expansio
