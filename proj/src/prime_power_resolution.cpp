#include "expansio/prime_power_resolution.hpp"

#include <algorithm>
#include <bit>

namespace expansio {

namespace {

// Exponent vectors of total degree a on r variables, descending lex.
void descending_lex_compositions(int r, Exponent a, std::vector<Exponent>& cur, int pos,
                                 std::vector<std::vector<Exponent>>& out) {
  if (pos == r - 1) {
    cur[pos] = a;
    out.push_back(cur);
    cur[pos] = 0;
    return;
  }
  for (Exponent e = a; e >= 0; --e) {
    cur[pos] = e;
    descending_lex_compositions(r, a - e, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

// g_b on block-local exponents: keep the b smallest-index variables.
std::vector<Exponent> local_g(const std::vector<Exponent>& local, Exponent b) {
  std::vector<Exponent> g(local.size(), 0);
  Exponent left = b;
  for (size_t i = 0; i < local.size() && left > 0; ++i) {
    Exponent take = std::min(local[i], left);
    g[i] = take;
    left -= take;
  }
  if (left > 0) throw std::invalid_argument("block degree too small for decomposition function");
  return g;
}

}  // namespace

std::vector<Exponent> PrimePowerResolution::local_exponents(const Monomial& u) const {
  std::vector<Exponent> e(block_.size());
  for (int i = 0; i < block_.size(); ++i) e[i] = u[block_.vars[i]];
  return e;
}

Monomial PrimePowerResolution::from_local(const std::vector<Exponent>& local) const {
  std::vector<Exponent> e(ring_.nvars(), 0);
  for (int i = 0; i < block_.size(); ++i) e[block_.vars[i]] = local[i];
  return Monomial(std::move(e));
}

int PrimePowerResolution::symbol_index(int s, int gen, std::uint32_t sigma) const {
  if (s < 0 || s >= static_cast<int>(index_.size())) return -1;
  auto it = index_[s].find({gen, sigma});
  return it == index_[s].end() ? -1 : it->second;
}

int PrimePowerResolution::generator_index(const std::vector<Exponent>& local) const {
  auto it = gen_index_.find(local);
  return it == gen_index_.end() ? -1 : it->second;
}

PrimePowerResolution::PrimePowerResolution(RingDescriptor ring, VariableBlock block, Exponent a)
    : ring_(std::move(ring)), block_(std::move(block)), a_(a) {
  if (a < 0) throw std::invalid_argument("negative power");
  if (block_.size() == 0) throw std::invalid_argument("empty variable block");
  int r = block_.size();

  std::vector<std::vector<Exponent>> locals;
  if (a == 0) {
    locals.push_back(std::vector<Exponent>(r, 0));
  } else {
    std::vector<Exponent> cur(r, 0);
    descending_lex_compositions(r, a, cur, 0, locals);
  }
  for (const auto& local : locals) {
    gen_index_[local] = static_cast<int>(gens_.size());
    gens_.push_back(from_local(local));
    int m = -1;
    for (int i = 0; i < r; ++i)
      if (local[i] > 0) m = i;
    m_local_.push_back(m);
  }

  int length = 0;
  for (int m : m_local_) length = std::max(length, m);  // max |set(u)| = m(u)

  basis_.resize(length + 1);
  index_.resize(length + 1);
  for (int g = 0; g < static_cast<int>(gens_.size()); ++g) {
    int setsize = std::max(0, m_local_[g]);  // set(u) = {0,...,m(u)-1}
    for (std::uint32_t sigma = 0; sigma < (1u << setsize); ++sigma) {
      int s = std::popcount(sigma);
      index_[s][{g, sigma}] = static_cast<int>(basis_[s].size());
      basis_[s].push_back(PowerSymbol{g, sigma});
    }
  }

  complex_.ring = ring_;
  for (int s = 0; s <= length; ++s) {
    FreeModule mod;
    mod.shifts.reserve(basis_[s].size());
    for (const auto& sym : basis_[s]) {
      Monomial shift = gens_[sym.gen];
      for (int t = 0; t < r; ++t)
        if (sym.sigma & (1u << t))
          shift = multiply(shift, Monomial::variable(ring_.nvars(), block_.vars[t]));
      mod.shifts.push_back(std::move(shift));
    }
    complex_.modules.push_back(std::move(mod));
  }

  for (int s = 1; s <= length; ++s) {
    std::vector<std::map<int, Rational>> cols(basis_[s].size());
    for (size_t c = 0; c < basis_[s].size(); ++c) {
      const auto& sym = basis_[s][c];
      const auto local_u = local_exponents(gens_[sym.gen]);
      int alpha = 0;  // |{s' in sigma : s' < t}| grows as t runs upward
      for (int t = 0; t < r; ++t) {
        if (!(sym.sigma & (1u << t))) continue;
        std::uint32_t rest = sym.sigma & ~(1u << t);
        Rational sign = (alpha % 2 == 0) ? 1 : -1;
        // -x_t f(sigma\t; u)
        {
          int row = index_[s - 1].at({sym.gen, rest});
          auto [it, ins] = cols[c].emplace(row, Rational(0));
          it->second -= sign;
          if (is_zero(it->second)) cols[c].erase(it);
        }
        // + c(x_t u) f(sigma\t; g(x_t u))
        {
          std::vector<Exponent> bumped = local_u;
          bumped[t] += 1;
          std::vector<Exponent> g = local_g(bumped, a_);
          int target_gen = gen_index_.at(g);
          // valid only if sigma\t is inside set(g)
          int mg = m_local_[target_gen];
          bool valid = true;
          for (int t2 = 0; t2 < r; ++t2)
            if ((rest & (1u << t2)) && t2 >= mg) valid = false;
          if (valid) {
            int row = index_[s - 1].at({target_gen, rest});
            auto [it, ins] = cols[c].emplace(row, Rational(0));
            it->second += sign;
            if (is_zero(it->second)) cols[c].erase(it);
          }
        }
        ++alpha;
      }
    }
    complex_.diffs.push_back(
        GradedMap(complex_.modules[s], complex_.modules[s - 1], std::move(cols)));
  }
  complex_.validate();
}

Monomial block_decomposition_g(const RingDescriptor& ring, const VariableBlock& block,
                               Exponent b, const Monomial& u) {
  std::vector<Exponent> local(block.size());
  for (int i = 0; i < block.size(); ++i) local[i] = u[block.vars[i]];
  std::vector<Exponent> g = local_g(local, b);
  std::vector<Exponent> e(ring.nvars(), 0);
  for (int i = 0; i < block.size(); ++i) e[block.vars[i]] = g[i];
  return Monomial(std::move(e));
}

ChainMap prime_power_lifting(const PrimePowerResolution& A, const PrimePowerResolution& B) {
  if (!(A.ring() == B.ring()) || A.block().vars != B.block().vars)
    throw std::invalid_argument("lifting requires the same prime");
  if (A.exponent() < B.exponent())
    throw std::invalid_argument("lifting requires a >= b");
  Exponent b = B.exponent();
  int r = A.block().size();

  ChainMap f;
  for (int s = 0; s <= A.complex().length(); ++s) {
    FreeModule target =
        s <= B.complex().length() ? B.complex().modules[s] : FreeModule{};
    std::vector<std::map<int, Rational>> cols(A.basis()[s].size());
    for (size_t c = 0; c < A.basis()[s].size(); ++c) {
      const auto& sym = A.basis()[s][c];
      std::vector<Exponent> local_u = A.local_exponents(A.generators()[sym.gen]);
      std::vector<Exponent> g = local_g(local_u, b);
      int target_gen = B.generator_index(g);
      if (target_gen < 0) continue;
      int mg = B.m_local(target_gen);
      bool valid = true;
      for (int t = 0; t < r; ++t)
        if ((sym.sigma & (1u << t)) && t >= mg) valid = false;
      if (!valid) continue;
      int row = B.symbol_index(s, target_gen, sym.sigma);
      if (row >= 0) cols[c][row] = 1;
    }
    f.parts.push_back(GradedMap(A.complex().modules[s], target, std::move(cols)));
  }
  return f;
}

}  // namespace expansio
