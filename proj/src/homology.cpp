#include "expansio/homology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "expansio/errors.hpp"

namespace expansio {

Exponent sparse_rank(std::vector<std::map<int, Rational>> cols) {
  // Left-looking elimination; pivots recorded per row. Columns are processed
  // sparsest-first to limit fill.
  std::vector<int> order(cols.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return cols[a].size() < cols[b].size(); });

  std::unordered_map<int, int> pivot_col_of_row;
  Exponent rank = 0;
  for (int ci : order) {
    auto& col = cols[ci];
    // reduce against existing pivots until no entry sits in a pivot row
    while (true) {
      int hit_row = -1;
      for (const auto& [r, v] : col) {
        if (pivot_col_of_row.count(r)) {
          hit_row = r;
          break;
        }
      }
      if (hit_row < 0) break;
      const auto& pcol = cols[pivot_col_of_row[hit_row]];
      Rational f = col.at(hit_row) / pcol.at(hit_row);
      for (const auto& [r, v] : pcol) {
        auto [it, ins] = col.emplace(r, Rational(0));
        it->second -= f * v;
        if (is_zero(it->second)) col.erase(it);
      }
    }
    if (col.empty()) continue;
    // pivot on the entry in the sparsest position: smallest row for determinism
    pivot_col_of_row[col.begin()->first] = ci;
    ++rank;
  }
  return rank;
}

ComplexStrand complex_strand(const ChainComplex& C, const Monomial& a) {
  ComplexStrand s;
  size_t n = C.modules.size();
  std::vector<std::vector<int>> index_of(n);
  s.dims.resize(n, 0);
  for (size_t i = 0; i < n; ++i) {
    index_of[i].assign(C.modules[i].rank(), -1);
    for (int b = 0; b < C.modules[i].rank(); ++b) {
      if (divides(C.modules[i].shifts[b], a)) index_of[i][b] = s.dims[i]++;
    }
  }
  s.mats.resize(C.diffs.size());
  for (size_t d = 0; d < C.diffs.size(); ++d) {
    s.mats[d].resize(s.dims[d + 1]);
    const auto& diff = C.diffs[d];
    for (int i = 0; i < diff.source().rank(); ++i) {
      int col = index_of[d + 1][i];
      if (col < 0) continue;
      for (const auto& [j, v] : diff.cols()[i]) {
        int row = index_of[d][j];
        if (row >= 0) s.mats[d][col][row] = v;
      }
    }
  }
  return s;
}

std::vector<Exponent> strand_homology_dims(const ComplexStrand& s) {
  size_t n = s.dims.size();
  std::vector<Exponent> rank(n + 1, 0);
  for (size_t d = 0; d < s.mats.size(); ++d) rank[d + 1] = sparse_rank(s.mats[d]);
  std::vector<Exponent> h(n);
  for (size_t i = 0; i < n; ++i)
    h[i] = s.dims[i] - rank[i] - (i + 1 < rank.size() ? rank[i + 1] : 0);
  return h;
}

std::vector<Monomial> lcm_lattice(const std::vector<Monomial>& atoms, Exponent degree_cap,
                                  size_t size_cap) {
  std::set<std::vector<Exponent>> seen;
  std::vector<Monomial> frontier;
  std::vector<Monomial> out;
  int nvars = atoms.empty() ? 0 : atoms.front().nvars();
  Monomial unit = Monomial::unit(nvars);
  seen.insert(unit.exponents());
  out.push_back(unit);
  frontier.push_back(unit);
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& f : frontier) {
      for (const auto& a : atoms) {
        Monomial l = lcm(f, a);
        if (total_degree(l) > degree_cap) continue;
        if (!seen.insert(l.exponents()).second) continue;
        if (seen.size() > size_cap)
          throw resource_limit_error("lcm lattice exceeds cap of " + std::to_string(size_cap));
        out.push_back(l);
        next.push_back(l);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

BettiTable tor_betti_taylor(const MonomialIdeal& I, int gen_cap) {
  if (I.is_zero()) throw std::invalid_argument("Betti numbers of the zero ideal");
  int m = I.ngens();
  if (m > gen_cap)
    throw resource_limit_error("Taylor-strand oracle refused: " + std::to_string(m) +
                               " generators exceed cap " + std::to_string(gen_cap));
  const auto& gens = I.gens();
  std::uint64_t full = (1ull << m) - 1;
  std::vector<Monomial> mask_lcm(full + 1);
  mask_lcm[0] = Monomial::unit(I.ring().nvars());
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    int low = std::countr_zero(mask);
    std::uint64_t rest = mask & (mask - 1);
    mask_lcm[mask] = rest == 0 ? gens[low] : lcm(mask_lcm[rest], gens[low]);
  }
  // group subsets by lcm
  std::map<std::vector<Exponent>, std::vector<std::uint64_t>> by_degree;
  for (std::uint64_t mask = 1; mask <= full; ++mask)
    by_degree[mask_lcm[mask].exponents()].push_back(mask);

  BettiTable b;
  for (const auto& [deg, masks] : by_degree) {
    // strand: basis per homological degree i = masks of popcount i+1 with this lcm
    std::vector<std::unordered_map<std::uint64_t, int>> index(m);
    std::vector<int> dims(m, 0);
    for (auto mask : masks) {
      int i = std::popcount(mask) - 1;
      index[i][mask] = dims[i]++;
    }
    std::vector<Exponent> rank(m + 1, 0);
    for (int i = 1; i < m; ++i) {
      if (dims[i] == 0 || dims[i - 1] == 0) continue;
      std::vector<std::map<int, Rational>> cols(dims[i]);
      for (const auto& [mask, col] : index[i]) {
        int pos = 0;
        for (int bit = 0; bit < m; ++bit) {
          if (!(mask & (1ull << bit))) continue;
          std::uint64_t sub = mask & ~(1ull << bit);
          auto it = index[i - 1].find(sub);  // present iff lcm(sub) == deg
          if (it != index[i - 1].end()) cols[col][it->second] = (pos % 2 == 0) ? 1 : -1;
          ++pos;
        }
      }
      rank[i] = sparse_rank(std::move(cols));
    }
    for (int i = 0; i < m; ++i) {
      Exponent h = dims[i] - rank[i] - rank[i + 1];
      if (h != 0) b.add_fine(i, deg, h);
    }
  }
  return b;
}

BettiTable tor_betti_koszul(const MonomialIdeal& I, int var_cap) {
  if (I.is_zero()) throw std::invalid_argument("Betti numbers of the zero ideal");
  int n = I.ring().nvars();
  if (n > var_cap)
    throw resource_limit_error("Koszul-strand oracle refused: " + std::to_string(n) +
                               " variables exceed cap " + std::to_string(var_cap));
  // Betti degrees are lcms of generator subsets; enumerate those and run the
  // Koszul strand at each.
  Exponent dcap = 0;
  Monomial top = Monomial::unit(n);
  for (const auto& g : I.gens()) top = lcm(top, g);
  dcap = total_degree(top);
  std::vector<Monomial> degrees = lcm_lattice(I.gens(), dcap);

  BettiTable b;
  std::uint32_t sigma_full = (1u << n) - 1;
  for (const auto& a : degrees) {
    if (a.is_unit()) continue;
    // basis in homological degree i: squarefree sigma <= a, |sigma| = i,
    // with x^{a - sigma} in I
    std::vector<std::vector<std::uint32_t>> basis(n + 1);
    std::vector<std::unordered_map<std::uint32_t, int>> index(n + 1);
    for (std::uint32_t sigma = 0; sigma <= sigma_full; ++sigma) {
      std::vector<Exponent> e = a.exponents();
      bool ok = true;
      for (int v = 0; v < n; ++v) {
        if (sigma & (1u << v)) {
          if (e[v] == 0) {
            ok = false;
            break;
          }
          e[v] -= 1;
        }
      }
      if (!ok) continue;
      if (!I.contains(Monomial(e))) continue;
      int i = std::popcount(sigma);
      index[i][sigma] = static_cast<int>(basis[i].size());
      basis[i].push_back(sigma);
    }
    std::vector<Exponent> rank(n + 2, 0);
    for (int i = 1; i <= n; ++i) {
      if (basis[i].empty() || basis[i - 1].empty()) continue;
      std::vector<std::map<int, Rational>> cols(basis[i].size());
      for (size_t c = 0; c < basis[i].size(); ++c) {
        std::uint32_t sigma = basis[i][c];
        int pos = 0;
        for (int v = 0; v < n; ++v) {
          if (!(sigma & (1u << v))) continue;
          std::uint32_t sub = sigma & ~(1u << v);
          auto it = index[i - 1].find(sub);
          if (it != index[i - 1].end()) cols[c][it->second] = (pos % 2 == 0) ? 1 : -1;
          ++pos;
        }
      }
      rank[i] = sparse_rank(std::move(cols));
    }
    for (int i = 0; i <= n; ++i) {
      Exponent h = static_cast<Exponent>(basis[i].size()) - rank[i] - rank[i + 1];
      if (h != 0) b.add_fine(i, a.exponents(), h);
    }
  }
  return b;
}

BettiTable tor_betti(const MonomialIdeal& I, const TorOptions& opt) {
  if (I.ngens() <= opt.taylor_gen_cap) return tor_betti_taylor(I, opt.taylor_gen_cap);
  if (I.ring().nvars() <= opt.koszul_var_cap) return tor_betti_koszul(I, opt.koszul_var_cap);
  throw resource_limit_error(
      "Betti oracle refused: " + std::to_string(I.ngens()) + " generators in " +
      std::to_string(I.ring().nvars()) + " variables exceed both strategy caps");
}

std::string VerifyReport::summary() const {
  if (ok) return "ok";
  std::ostringstream out;
  out << issues.size() << " issue(s):\n";
  for (const auto& i : issues) out << "  - " << i << "\n";
  return out.str();
}

namespace {

std::string degree_string(const Monomial& a) {
  std::string s = "(";
  for (int i = 0; i < a.nvars(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

}  // namespace

VerifyReport verify_resolution(const ChainComplex& C, const MonomialIdeal& I,
                               Exponent degree_bound) {
  VerifyReport rep;
  if (C.modules.empty()) {
    rep.fail("empty complex");
    return rep;
  }
  // d*d = 0 and shape
  try {
    C.validate();
  } catch (const std::logic_error& e) {
    rep.fail(e.what());
    return rep;
  }
  // augmentation compatibility: each column of phi_1 sums to zero
  if (!C.diffs.empty()) {
    for (int i = 0; i < C.diffs[0].source().rank(); ++i) {
      Rational sum = 0;
      for (const auto& [j, v] : C.diffs[0].cols()[i]) sum += v;
      if (!is_zero(sum)) {
        rep.fail("augmentation: column " + std::to_string(i) +
                 " of the first differential has nonzero sum");
        break;
      }
    }
  }
  // F_0 generates I
  if (!(minimal_generators(C.ring, C.modules[0].shifts) == I))
    rep.fail("shifts of F_0 do not generate the ideal");

  // per-pattern strand checks
  std::vector<Monomial> atoms;
  for (const auto& m : C.modules)
    for (const auto& s : m.shifts) atoms.push_back(s);
  for (const auto& g : I.gens()) atoms.push_back(g);
  std::sort(atoms.begin(), atoms.end(), canonical_less);
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());

  for (const auto& a : lcm_lattice(atoms, degree_bound)) {
    ComplexStrand s = complex_strand(C, a);
    auto h = strand_homology_dims(s);
    for (size_t i = 1; i < h.size(); ++i) {
      if (h[i] != 0)
        rep.fail("H_" + std::to_string(i) + " nonzero in multidegree " + degree_string(a));
    }
    Exponent ideal_dim = I.contains(a) ? 1 : 0;
    if (h[0] != ideal_dim)
      rep.fail("H_0 has dimension " + std::to_string(h[0]) + " but the ideal has dimension " +
               std::to_string(ideal_dim) + " in multidegree " + degree_string(a));
  }
  return rep;
}

ExpandedComplex expand_complex(const ExpandedRing& er, const ChainComplex& C) {
  ExpandedComplex out;
  for (const auto& m : C.modules) out.modules.push_back(ExpandedFreeModule{m.shifts});
  for (const auto& d : C.diffs)
    out.maps.push_back(expanded_map(d.source().shifts, d.target().shifts, d.cols()));
  (void)er;
  return out;
}

VerifyReport verify_expanded_resolution(const ExpandedRing& er, const ExpandedComplex& C,
                                        const MonomialIdeal& I, Exponent degree_bound,
                                        int lifts_per_pattern, std::uint64_t seed) {
  VerifyReport rep;
  MonomialIdeal Istar = expand_ideal(er, I);

  // Reconstruct the source-ring scalar complex; its strand at d equals the
  // expanded strand at every flat degree folding to d.
  ChainComplex source;
  source.ring = er.source();
  for (const auto& m : C.modules) source.modules.push_back(FreeModule{m.shifts});
  for (size_t i = 0; i < C.maps.size(); ++i)
    source.diffs.push_back(
        GradedMap(source.modules[i + 1], source.modules[i], C.maps[i].cols));
  try {
    source.validate();
  } catch (const std::logic_error& e) {
    rep.fail(e.what());
    return rep;
  }
  if (!source.diffs.empty()) {
    for (int i = 0; i < source.diffs[0].source().rank(); ++i) {
      Rational colsum = 0;
      for (const auto& [j, v] : source.diffs[0].cols()[i]) colsum += v;
      if (!is_zero(colsum)) {
        rep.fail("augmentation: column " + std::to_string(i) +
                 " of the first differential has nonzero sum");
        break;
      }
    }
  }
  if (!(minimal_generators(er.source(), source.modules[0].shifts) == I))
    rep.fail("shifts of F_0 do not generate the ideal");

  std::vector<Monomial> atoms;
  for (const auto& m : source.modules)
    for (const auto& s : m.shifts) atoms.push_back(s);
  for (const auto& g : I.gens()) atoms.push_back(g);
  std::sort(atoms.begin(), atoms.end(), canonical_less);
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());

  std::mt19937_64 rng(seed);
  for (const auto& a : lcm_lattice(atoms, degree_bound)) {
    ComplexStrand s = complex_strand(source, a);
    auto h = strand_homology_dims(s);
    for (size_t i = 1; i < h.size(); ++i)
      if (h[i] != 0)
        rep.fail("H_" + std::to_string(i) + " of F* nonzero over folded degree " +
                 degree_string(a));
    Exponent expected = I.contains(a) ? 1 : 0;
    if (h[0] != expected)
      rep.fail("H_0 of F* does not match I* over folded degree " + degree_string(a));

    // Direct checks at random flat degrees folding to a: evaluates the
    // expanded modules by their own membership semantics.
    for (int rep_i = 0; rep_i < lifts_per_pattern; ++rep_i) {
      std::vector<Exponent> flat(er.flat().nvars(), 0);
      for (int j = 0; j < er.source().nvars(); ++j) {
        for (Exponent left = a[j]; left > 0; --left) {
          int k = static_cast<int>(rng() % er.block_size(j));
          flat[er.var_index(j, k)] += 1;
        }
      }
      Monomial dstar(flat);
      DegreeStrand ds = evaluate_expanded_complex_in_degree(er, C, dstar);
      auto hs = strand_homology(ds);
      for (size_t i = 1; i < hs.size(); ++i)
        if (hs[i] != 0)
          rep.fail("H_" + std::to_string(i) + " of F* nonzero in flat degree " +
                   degree_string(dstar));
      Exponent star_dim = Istar.contains(dstar) ? 1 : 0;
      if (hs.empty() || hs[0] != star_dim)
        rep.fail("H_0 of F* does not match I* in flat degree " + degree_string(dstar));
      if (ds.dims[0] != s.dims[0])
        rep.fail("expanded strand dimension mismatch in flat degree " + degree_string(dstar));
    }
  }
  return rep;
}

}  // namespace expansio
