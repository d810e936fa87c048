#pragma once

#include <map>

#include "expansio/ideal.hpp"
#include "expansio/rational.hpp"

namespace expansio {

// F = (+) S(-a_i), recorded by the shift monomials x^{a_i}.
struct FreeModule {
  std::vector<Monomial> shifts;
  int rank() const { return static_cast<int>(shifts.size()); }
  bool operator==(const FreeModule& other) const = default;
};

// A multigraded map between free modules. Only the scalar matrix is stored;
// the (j,i) entry acts as lambda_{ji} x^{a_i - b_j}, so nonzero entries
// require x^{b_j} | x^{a_i}.
class GradedMap {
public:
  GradedMap() = default;
  GradedMap(FreeModule source, FreeModule target, std::vector<std::map<int, Rational>> cols);

  static GradedMap zero(FreeModule source, FreeModule target);
  static GradedMap identity(FreeModule m);

  const FreeModule& source() const { return source_; }
  const FreeModule& target() const { return target_; }
  const std::vector<std::map<int, Rational>>& cols() const { return cols_; }

  Rational entry(int row, int col) const {
    auto it = cols_[col].find(row);
    return it == cols_[col].end() ? Rational(0) : it->second;
  }
  bool is_zero_map() const {
    for (const auto& c : cols_)
      if (!c.empty()) return false;
    return true;
  }
  size_t nnz() const {
    size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
  }

  bool operator==(const GradedMap& other) const = default;

private:
  FreeModule source_, target_;
  std::vector<std::map<int, Rational>> cols_;
};

GradedMap compose(const GradedMap& later, const GradedMap& first);
GradedMap scale(const GradedMap& f, const Rational& c);
GradedMap add(const GradedMap& f, const GradedMap& g);

// F: 0 -> F_p -> ... -> F_0 -> 0 with differentials diffs[i]: F_{i+1} -> F_i.
struct ChainComplex {
  RingDescriptor ring;
  std::vector<FreeModule> modules;
  std::vector<GradedMap> diffs;

  int length() const { return static_cast<int>(modules.size()) - 1; }
  Exponent total_rank() const {
    Exponent r = 0;
    for (const auto& m : modules) r += m.rank();
    return r;
  }
  // Shape, gradedness, and d*d = 0, all exact; throws std::logic_error.
  void validate() const;
};

ChainComplex rank_one_complex(const RingDescriptor& ring, Monomial shift);

// The Taylor resolution of the ideal I (not of S/I): homological degree i
// has one basis element per (i+1)-subset of G(I), shifted by the subset lcm.
ChainComplex taylor_complex(const MonomialIdeal& I, int gen_cap = 16);

// Direct sums, with the per-degree offsets of each summand reported.
ChainComplex direct_sum(const std::vector<ChainComplex>& parts,
                        std::vector<std::vector<int>>* offsets = nullptr);

// Tensor product with the Koszul sign: on C_i (x) D_j the differential is
// dC (x) id + (-1)^i id (x) dD. Basis blocks ordered by ascending C-degree,
// pairs enumerated C-major.
ChainComplex tensor(const ChainComplex& C, const ChainComplex& D);

// A degree-0 map of complexes f_s: C_s -> D_s. parts.size() == C length + 1;
// degrees beyond the target length map to rank-0 modules.
struct ChainMap {
  std::vector<GradedMap> parts;
};

ChainMap identity_chain_map(const ChainComplex& C);
ChainMap compose(const ChainMap& later, const ChainMap& first);
bool is_chain_map(const ChainComplex& C, const ChainComplex& D, const ChainMap& f,
                  std::string* why = nullptr);

// Tensor of degree-0 chain maps, laid out compatibly with tensor().
ChainMap tensor_map(const ChainComplex& Csrc, const ChainComplex& Dsrc, const ChainComplex& Ctgt,
                    const ChainComplex& Dtgt, const ChainMap& f, const ChainMap& g);

// No differential entry is a nonzero scalar between equal shifts.
bool is_minimal(const ChainComplex& C);

// Unit-entry cancellation: repeatedly Gaussian-cancel the smallest
// (row, column) unit-monomial entry until none remains. Preserves homology;
// on an acyclic complex the result is the minimal resolution.
ChainComplex minimize(ChainComplex C);

}  // namespace expansio
