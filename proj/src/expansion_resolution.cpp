#include "expansio/expansion_resolution.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace expansio {

PrincipalResolution principal_resolution(const ExpandedRing& er, const Monomial& a) {
  if (a.nvars() != er.source().nvars())
    throw std::invalid_argument("shift does not live in the source ring");
  PrincipalResolution out;
  out.source_shift = a;
  for (int j = 0; j < er.source().nvars(); ++j) {
    VariableBlock block;
    for (int k = 0; k < er.block_size(j); ++k) block.vars.push_back(er.var_index(j, k));
    out.factors.emplace_back(er.flat(), block, a[j]);
  }
  out.partials.push_back(out.factors[0].complex());
  for (size_t j = 1; j < out.factors.size(); ++j)
    out.partials.push_back(tensor(out.partials.back(), out.factors[j].complex()));
  return out;
}

ChainMap principal_lifting(const ExpandedRing& er, const PrincipalResolution& A,
                           const PrincipalResolution& B) {
  if (!divides(B.source_shift, A.source_shift))
    throw std::invalid_argument("lifting requires the target shift to divide the source shift");
  ChainMap f = prime_power_lifting(A.factors[0], B.factors[0]);
  for (int j = 1; j < er.source().nvars(); ++j) {
    ChainMap g = prime_power_lifting(A.factors[j], B.factors[j]);
    f = tensor_map(A.partials[j - 1], A.factors[j].complex(), B.partials[j - 1],
                   B.factors[j].complex(), f, g);
  }
  return f;
}

DoubleComplex double_complex(const ExpandedRing& er, const ChainComplex& Fmin) {
  Fmin.validate();
  if (!is_minimal(Fmin))
    throw std::invalid_argument("double complex requires a minimal resolution");
  if (!(Fmin.ring == er.source()))
    throw std::invalid_argument("resolution does not live in the source ring");

  // principal resolutions, cached per shift
  std::map<std::vector<Exponent>, PrincipalResolution> cache;
  auto principal = [&](const Monomial& a) -> const PrincipalResolution& {
    auto it = cache.find(a.exponents());
    if (it == cache.end())
      it = cache.emplace(a.exponents(), principal_resolution(er, a)).first;
    return it->second;
  };

  DoubleComplex dc{er, Fmin, {}, {}};
  int p = Fmin.length();
  std::vector<std::vector<std::vector<int>>> offsets(p + 1);  // [column][summand][degree]
  for (int i = 0; i <= p; ++i) {
    std::vector<ChainComplex> parts;
    for (const auto& shift : Fmin.modules[i].shifts) parts.push_back(principal(shift).complex());
    dc.columns.push_back(direct_sum(parts, &offsets[i]));
  }

  // lifting cache, keyed by (source shift, target shift)
  std::map<std::pair<std::vector<Exponent>, std::vector<Exponent>>, ChainMap> lift_cache;
  auto lifting = [&](const Monomial& a, const Monomial& b) -> const ChainMap& {
    auto key = std::pair(a.exponents(), b.exponents());
    auto it = lift_cache.find(key);
    if (it == lift_cache.end())
      it = lift_cache.emplace(key, principal_lifting(er, principal(a), principal(b))).first;
    return it->second;
  };

  // horizontal chain maps: lambda_{lk} * lifting(a_{ik} -> a_{(i-1)l})
  for (int i = 1; i <= p; ++i) {
    const GradedMap& phi = Fmin.diffs[i - 1];
    const ChainComplex& src_col = dc.columns[i];
    const ChainComplex& tgt_col = dc.columns[i - 1];

    ChainMap d;
    for (int s = 0; s <= src_col.length(); ++s) {
      FreeModule target = s <= tgt_col.length() ? tgt_col.modules[s] : FreeModule{};
      std::vector<std::map<int, Rational>> cols(src_col.modules[s].rank());
      for (int k = 0; k < phi.source().rank(); ++k) {
        for (const auto& [l, lam] : phi.cols()[k]) {
          const ChainMap& lift =
              lifting(Fmin.modules[i].shifts[k], Fmin.modules[i - 1].shifts[l]);
          if (s >= static_cast<int>(lift.parts.size())) continue;
          const GradedMap& part = lift.parts[s];
          for (int c = 0; c < part.source().rank(); ++c)
            for (const auto& [r, v] : part.cols()[c])
              cols[offsets[i][k][s] + c][offsets[i - 1][l][s] + r] += lam * v;
        }
      }
      for (auto& col : cols)
        std::erase_if(col, [](const auto& kv) { return is_zero(kv.second); });
      d.parts.push_back(GradedMap(src_col.modules[s], target, std::move(cols)));
    }
    dc.horizontal.push_back(std::move(d));
  }

  validate_double_complex(dc);
  return dc;
}

void validate_double_complex(const DoubleComplex& dc) {
  for (const auto& col : dc.columns) col.validate();
  for (size_t i = 0; i < dc.horizontal.size(); ++i) {
    std::string why;
    if (!is_chain_map(dc.columns[i + 1], dc.columns[i], dc.horizontal[i], &why))
      throw std::logic_error("horizontal map " + std::to_string(i + 1) +
                             " does not commute with the column differentials: " + why);
  }
  for (size_t i = 0; i + 1 < dc.horizontal.size(); ++i) {
    ChainMap dd = compose(dc.horizontal[i], dc.horizontal[i + 1]);
    for (const auto& part : dd.parts)
      if (!part.is_zero_map())
        throw std::logic_error("consecutive horizontal maps do not compose to zero at column " +
                               std::to_string(i + 2));
  }
}

ChainComplex total_complex(const DoubleComplex& dc) {
  int p = static_cast<int>(dc.columns.size()) - 1;
  int maxm = 0;
  for (int i = 0; i <= p; ++i) maxm = std::max(maxm, i + dc.columns[i].length());

  // block (i, s=m-i) offsets within T_m, blocks ordered by ascending i
  auto blocks_of = [&](int m) {
    std::vector<std::pair<int, int>> blocks;  // (column i, offset)
    int off = 0;
    for (int i = 0; i <= std::min(m, p); ++i) {
      int s = m - i;
      if (s < 0 || s > dc.columns[i].length()) continue;
      blocks.push_back({i, off});
      off += dc.columns[i].modules[s].rank();
    }
    return blocks;
  };

  ChainComplex total;
  total.ring = dc.columns[0].ring;
  for (int m = 0; m <= maxm; ++m) {
    FreeModule mod;
    for (const auto& [i, off] : blocks_of(m)) {
      const auto& shifts = dc.columns[i].modules[m - i].shifts;
      mod.shifts.insert(mod.shifts.end(), shifts.begin(), shifts.end());
    }
    total.modules.push_back(std::move(mod));
  }

  for (int m = 1; m <= maxm; ++m) {
    auto src_blocks = blocks_of(m);
    auto tgt_blocks = blocks_of(m - 1);
    auto tgt_offset = [&](int i) -> int {
      for (const auto& [bi, off] : tgt_blocks)
        if (bi == i) return off;
      return -1;
    };
    std::vector<std::map<int, Rational>> cols(total.modules[m].rank());
    for (const auto& [i, off] : src_blocks) {
      int s = m - i;
      // horizontal part: d_i at vertical degree s, into block (i-1, s)
      if (i >= 1 && s <= dc.columns[i - 1].length()) {
        int toff = tgt_offset(i - 1);
        const GradedMap& part = dc.horizontal[i - 1].parts[s];
        for (int c = 0; c < part.source().rank(); ++c)
          for (const auto& [r, v] : part.cols()[c]) cols[off + c][toff + r] += v;
      }
      // vertical part: (-1)^i ∂, into block (i, s-1)
      if (s >= 1) {
        int toff = tgt_offset(i);
        Rational sign = (i % 2 == 0) ? 1 : -1;
        const GradedMap& del = dc.columns[i].diffs[s - 1];
        for (int c = 0; c < del.source().rank(); ++c)
          for (const auto& [r, v] : del.cols()[c]) cols[off + c][toff + r] += sign * v;
      }
    }
    for (auto& col : cols)
      std::erase_if(col, [](const auto& kv) { return is_zero(kv.second); });
    total.diffs.push_back(GradedMap(total.modules[m], total.modules[m - 1], std::move(cols)));
  }
  total.validate();
  return total;
}

std::string double_complex_dot(const DoubleComplex& dc) {
  std::ostringstream out;
  out << "digraph double_complex {\n  rankdir=RL;\n  node [shape=box];\n";
  for (size_t i = 0; i < dc.columns.size(); ++i) {
    for (int s = 0; s <= dc.columns[i].length(); ++s) {
      out << "  g_" << i << "_" << s << " [label=\"G(" << i << "," << s
          << ") rank " << dc.columns[i].modules[s].rank() << "\"];\n";
      if (s >= 1)
        out << "  g_" << i << "_" << s << " -> g_" << i << "_" << (s - 1)
            << " [label=\"del\"];\n";
      if (i >= 1 && s <= dc.columns[i - 1].length())
        out << "  g_" << i << "_" << s << " -> g_" << (i - 1) << "_" << s
            << " [label=\"d\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

Exponent binomial_coeff(Exponent n, Exponent k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Exponent r = 1;
  for (Exponent i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

std::vector<Exponent> poly_multiply(const std::vector<Exponent>& f,
                                    const std::vector<Exponent>& g) {
  std::vector<Exponent> out(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  return out;
}

}  // namespace

std::vector<Exponent> principal_betti_polynomial(const ExpansionTuple& tuple,
                                                 const Monomial& a) {
  if (tuple.size() != a.nvars())
    throw std::invalid_argument("tuple length does not match the ring");
  std::vector<Exponent> poly{1};
  for (int j : support(a)) {
    Exponent ij = tuple[j], aj = a[j];
    std::vector<Exponent> factor(ij, 0);
    for (Exponent i = 0; i < ij; ++i)
      factor[i] = binomial_coeff(ij + aj - 1, ij - i - 1) * binomial_coeff(aj + i - 1, i);
    poly = poly_multiply(poly, factor);
  }
  return poly;
}

int principal_projdim(const ExpansionTuple& tuple, const Monomial& a) {
  int pd = 0;
  for (int j : support(a)) pd += tuple[j] - 1;
  return pd;
}

BettiTable betti_via_formula(const ExpandedRing& er, const ChainComplex& Fmin) {
  if (!is_minimal(Fmin))
    throw std::invalid_argument("Betti formula requires a minimal resolution");
  BettiTable b;
  for (int i = 0; i <= Fmin.length(); ++i) {
    for (const auto& shift : Fmin.modules[i].shifts) {
      auto poly = principal_betti_polynomial(er.tuple(), shift);
      Exponent d = total_degree(shift);  // the expansion is d-linear
      for (size_t s = 0; s < poly.size(); ++s)
        b.add_total(i + static_cast<int>(s), d + static_cast<Exponent>(s), poly[s]);
    }
  }
  return b;
}

ProjdimReg projdim_and_reg(const ExpandedRing& er, const ChainComplex& Fmin) {
  if (!is_minimal(Fmin))
    throw std::invalid_argument("projdim/reg formula requires a minimal resolution");
  int pd = 0;
  Exponent reg = std::numeric_limits<Exponent>::min();
  for (int i = 0; i <= Fmin.length(); ++i) {
    for (const auto& shift : Fmin.modules[i].shifts) {
      pd = std::max(pd, i + principal_projdim(er.tuple(), shift));
      reg = std::max(reg, total_degree(shift) - i);
    }
  }
  return ProjdimReg{pd, reg};
}

std::vector<std::pair<int, Monomial>> extremal_shifts(const ChainComplex& Fmin) {
  std::vector<std::pair<int, Monomial>> out;
  for (int i = 0; i <= Fmin.length(); ++i) {
    for (const auto& shift : Fmin.modules[i].shifts) {
      bool extremal = true;
      for (int k = i + 1; k <= Fmin.length() && extremal; ++k)
        for (const auto& higher : Fmin.modules[k].shifts)
          if (divides(shift, higher)) {
            extremal = false;
            break;
          }
      if (extremal) out.push_back({i, shift});
    }
  }
  return out;
}

int projdim_from_extremal_shifts(const ExpandedRing& er, const ChainComplex& Fmin) {
  int pd = 0;
  for (const auto& [i, shift] : extremal_shifts(Fmin))
    pd = std::max(pd, i + principal_projdim(er.tuple(), shift));
  return pd;
}

}  // namespace expansio
