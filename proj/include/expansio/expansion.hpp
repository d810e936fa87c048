#pragma once

#include <map>

#include "expansio/ideal.hpp"
#include "expansio/rational.hpp"

namespace expansio {

// The n-tuple (i_1,...,i_n) of positive integers fixing an expansion.
class ExpansionTuple {
public:
  explicit ExpansionTuple(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("empty expansion tuple");
    for (int v : entries_)
      if (v < 1) throw std::invalid_argument("expansion tuple entries must be >= 1");
  }

  static ExpansionTuple ones(int n) { return ExpansionTuple(std::vector<int>(n, 1)); }

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int j) const { return entries_.at(j); }
  const std::vector<int>& entries() const { return entries_; }
  bool all_ones() const {
    for (int v : entries_)
      if (v != 1) return false;
    return true;
  }

  bool operator==(const ExpansionTuple&) const = default;

private:
  std::vector<int> entries_;
};

// Source ring, tuple, and the flattened target ring whose variables come in
// blocks: block j holds the i_j copies of the j-th source variable, named
// `<source name>_<k>`, in the fixed priority order
// x_{1,1} > ... > x_{1,i_1} > ... > x_{n,1} > ... > x_{n,i_n}.
class ExpandedRing {
public:
  ExpandedRing(RingDescriptor source, ExpansionTuple tuple);

  const RingDescriptor& source() const { return source_; }
  const ExpansionTuple& tuple() const { return tuple_; }
  const RingDescriptor& flat() const { return flat_; }

  // 0-based source block j, 0-based copy k -> flat variable index.
  int var_index(int j, int k) const { return offsets_[j] + k; }
  int block_of(int flat_index) const;            // 0-based source block
  std::pair<int, int> block_coord(int flat_index) const;  // (block, copy)
  int block_size(int j) const { return tuple_[j]; }
  int block_offset(int j) const { return offsets_[j]; }

  // The monomial prime P_j generated by block j's variables.
  MonomialIdeal block_prime(int j) const;

private:
  RingDescriptor source_;
  ExpansionTuple tuple_;
  RingDescriptor flat_;
  std::vector<int> offsets_;
};

// pi: folds each block's exponents onto the source variable.
Monomial contract(const ExpandedRing& er, const Monomial& flat_monomial);
std::vector<Exponent> fold_multidegree(const ExpandedRing& er,
                                       const std::vector<Exponent>& flat_degree);

// (x^a)^* = prod_j P_j^{a(j)}: all products of one degree-a(j) monomial per
// block. The empty product (a = 1) is the unit ideal.
MonomialIdeal expand_principal(const ExpandedRing& er, const Monomial& a);

// I^* = sum over G(I) of the principal expansions.
MonomialIdeal expand_ideal(const ExpandedRing& er, const MonomialIdeal& I);

// F^* = direct sum of (x^{a_i})^*, recorded by the source shifts.
struct ExpandedFreeModule {
  std::vector<Monomial> shifts;  // source-ring monomials
  std::vector<MonomialIdeal> components(const ExpandedRing& er) const;
};

// A map between expanded free modules: just the scalar matrix; the (j,i)
// entry acts as multiplication by lambda_{ji} on (x^{a_i})^* inside
// (x^{b_j})^*, and must vanish unless x^{b_j} | x^{a_i}.
struct ExpandedMap {
  ExpandedFreeModule source, target;
  std::vector<std::map<int, Rational>> cols;  // cols[i][j] = lambda_{ji}

  Rational entry(int row, int col) const {
    auto it = cols[col].find(row);
    return it == cols[col].end() ? Rational(0) : it->second;
  }
};

ExpandedMap expanded_map(std::vector<Monomial> source_shifts, std::vector<Monomial> target_shifts,
                         std::vector<std::map<int, Rational>> cols);
ExpandedMap compose(const ExpandedMap& later, const ExpandedMap& first);
ExpandedMap identity_expanded_map(std::vector<Monomial> shifts);

// A finite complex of expanded free modules (e.g. F^* for a free complex F).
struct ExpandedComplex {
  std::vector<ExpandedFreeModule> modules;       // F_0^*, ..., F_p^*
  std::vector<ExpandedMap> maps;                 // maps[i]: F_{i+1}^* -> F_i^*
};

// The degree-d^* strand: every component (x^{a_i})^*_{d^*} is 0- or
// 1-dimensional, and the maps restrict to the recorded scalars.
struct DegreeStrand {
  std::vector<std::vector<char>> present;  // present[i][c]: component c of module i nonzero
  std::vector<int> dims;                   // dim of module i in this degree
  // mats[i]: matrix of maps[i] restricted to present components (dense, row-major)
  std::vector<std::vector<std::vector<Rational>>> mats;
};

DegreeStrand evaluate_expanded_complex_in_degree(const ExpandedRing& er,
                                                 const ExpandedComplex& C,
                                                 const Monomial& flat_degree);

// Homology dimensions H_0..H_p of a strand (exact ranks over Q).
std::vector<Exponent> strand_homology(const DegreeStrand& strand);

}  // namespace expansio
