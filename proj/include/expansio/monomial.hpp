#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "expansio/ring.hpp"

namespace expansio {

using Exponent = std::int64_t;

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

// A monomial x^a: just the exponent vector, tied to a ring by its length.
// Values are immutable after construction.
class Monomial {
public:
  Monomial() = default;

  explicit Monomial(std::vector<Exponent> exponents) : e_(std::move(exponents)) {
    for (Exponent v : e_)
      if (v < 0) throw std::invalid_argument("negative exponent");
  }

  static Monomial unit(int nvars) { return Monomial(std::vector<Exponent>(nvars, 0)); }

  static Monomial variable(int nvars, int index, Exponent power = 1) {
    std::vector<Exponent> e(nvars, 0);
    e.at(index) = power;
    return Monomial(std::move(e));
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  Exponent operator[](int i) const { return e_[i]; }
  const std::vector<Exponent>& exponents() const { return e_; }

  bool is_unit() const {
    for (Exponent v : e_)
      if (v != 0) return false;
    return true;
  }

  bool operator==(const Monomial& other) const = default;

private:
  std::vector<Exponent> e_;
};

// Componentwise arithmetic. All binary operations require equal variable
// counts and throw std::invalid_argument otherwise (ring mismatch).
bool divides(const Monomial& u, const Monomial& v);          // u | v
Monomial lcm(const Monomial& u, const Monomial& v);          // componentwise max
Monomial gcd(const Monomial& u, const Monomial& v);          // componentwise min
Monomial multiply(const Monomial& u, const Monomial& v);     // componentwise sum
Monomial quotient_exact(const Monomial& u, const Monomial& v);  // u / v, v | u required

inline Monomial operator*(const Monomial& u, const Monomial& v) { return multiply(u, v); }

Exponent total_degree(const Monomial& u);
std::vector<int> support(const Monomial& u);  // 0-based variable indices

// Lexicographic comparison with priority x_{order[0]} > x_{order[1]} > ...;
// the default order is the natural one x_0 > x_1 > ... > x_{n-1}.
Cmp lex_compare(const Monomial& u, const Monomial& v);
Cmp lex_compare(const Monomial& u, const Monomial& v, std::span<const int> var_order);

// The canonical generator order used everywhere for stable output:
// ascending total degree, ties broken lex-descending (x_0 > x_1 > ...).
bool canonical_less(const Monomial& u, const Monomial& v);

// Text form `x1^2*x3`; `1` for the unit monomial.
std::string to_string(const Monomial& u, const RingDescriptor& ring);

// Parses the grammar  term := factor ('*' factor)* ;  factor := var ('^' posint)? ;
// `1` denotes the unit monomial. line/col_offset seed the reported position.
Monomial parse_monomial(const std::string& text, const RingDescriptor& ring,
                        int line = 1, int col_offset = 0);

}  // namespace expansio
