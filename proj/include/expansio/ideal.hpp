#pragma once

#include <optional>
#include <set>
#include <vector>

#include "expansio/monomial.hpp"
#include "expansio/ring.hpp"

namespace expansio {

// A monomial ideal kept in canonical form: the unique minimal generating
// set G(I), sorted by (total degree asc, lex desc). Equality of ideals is
// equality of these lists.
class MonomialIdeal {
public:
  // Minimalizes and sorts; an empty list gives the zero ideal.
  MonomialIdeal(RingDescriptor ring, std::vector<Monomial> generators);

  static MonomialIdeal zero(RingDescriptor ring) { return MonomialIdeal(std::move(ring), {}); }
  static MonomialIdeal unit_ideal(RingDescriptor ring) {
    int n = ring.nvars();
    return MonomialIdeal(std::move(ring), {Monomial::unit(n)});
  }

  const RingDescriptor& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  int ngens() const { return static_cast<int>(gens_.size()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
  bool is_proper() const { return !is_unit(); }

  // u in I  <=>  some generator divides u.
  bool contains(const Monomial& u) const;
  bool contains_ideal(const MonomialIdeal& other) const;  // other subseteq this

  bool operator==(const MonomialIdeal& other) const = default;
  bool operator<(const MonomialIdeal& other) const;  // canonical total order

private:
  RingDescriptor ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimal_generators(RingDescriptor ring, std::vector<Monomial> monomials);

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersection(const MonomialIdeal& I, const MonomialIdeal& J);
// I : J, via I:J = cap_{u in G(J)} I:(u); J must be nonzero.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& u);
MonomialIdeal radical(const MonomialIdeal& I);
MonomialIdeal power(const MonomialIdeal& I, int k);

// A primary monomial ideal together with its radical prime (a set of
// variable indices). Monomial primary = every generator is supported in
// radical_prime and each of those variables occurs as a pure power.
struct PrimaryComponent {
  MonomialIdeal component;
  std::vector<int> radical_prime;  // sorted 0-based variable indices
};

// True iff I is primary; fills radical_prime when requested.
bool is_primary(const MonomialIdeal& I, std::vector<int>* radical_prime = nullptr);

// Irredundant primary decomposition with pairwise distinct radicals.
// Splits mixed generators recursively, merges equal-radical components by
// intersection, then drops redundant components. Deterministic.
// Requires I nonzero and proper.
std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& I);

// Radicals of the components above, as sorted variable-index sets.
std::set<std::vector<int>> associated_primes(const MonomialIdeal& I);
std::set<std::vector<int>> minimal_primes(const MonomialIdeal& I);
int height(const MonomialIdeal& I);

// Unmixed <=> all associated primes are minimal of the same height; only
// then is dim S/I = n - height reported by callers.
bool is_unmixed(const MonomialIdeal& I);

// k-th symbolic power: intersection of the minimal-prime components of I^k.
MonomialIdeal symbolic_power(const MonomialIdeal& I, int k);

// Windowed stabilization of Ass(S/I^s). Finds the smallest s such that the
// set is constant on s..s+window-1 with s+window-1 <= cap; `determined` is
// false when no such window exists below the cap.
struct StableAssResult {
  bool determined = false;
  std::set<std::vector<int>> primes;
  int stable_from = -1;  // the s above, when determined
  int cap = 0;
};
StableAssResult ass_infinity(const MonomialIdeal& I, int window = 2, int cap = 12);

// All monomials of total degree <= bound (test oracle helper; also used by
// the verify suites for membership-based identity checks).
std::vector<Monomial> monomials_up_to_degree(int nvars, Exponent bound);

}  // namespace expansio
