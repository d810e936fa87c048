#include "expansio/free_complex.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "expansio/errors.hpp"

namespace expansio {

GradedMap::GradedMap(FreeModule source, FreeModule target,
                     std::vector<std::map<int, Rational>> cols)
    : source_(std::move(source)), target_(std::move(target)), cols_(std::move(cols)) {
  if (cols_.size() != static_cast<size_t>(source_.rank()))
    throw std::invalid_argument("column count does not match source rank");
  for (size_t i = 0; i < cols_.size(); ++i) {
    for (auto it = cols_[i].begin(); it != cols_[i].end();) {
      if (is_zero(it->second)) {
        it = cols_[i].erase(it);
        continue;
      }
      int j = it->first;
      if (j < 0 || j >= target_.rank()) throw std::invalid_argument("row index out of range");
      if (!divides(target_.shifts[j], source_.shifts[i]))
        throw std::invalid_argument("entry violates multigrading (shift does not divide)");
      ++it;
    }
  }
}

GradedMap GradedMap::zero(FreeModule source, FreeModule target) {
  std::vector<std::map<int, Rational>> cols(source.rank());
  return GradedMap(std::move(source), std::move(target), std::move(cols));
}

GradedMap GradedMap::identity(FreeModule m) {
  std::vector<std::map<int, Rational>> cols(m.rank());
  for (int i = 0; i < m.rank(); ++i) cols[i][i] = 1;
  return GradedMap(m, m, std::move(cols));
}

GradedMap compose(const GradedMap& later, const GradedMap& first) {
  if (later.source().shifts != first.target().shifts)
    throw std::invalid_argument("composition shape mismatch");
  std::vector<std::map<int, Rational>> cols(first.cols().size());
  for (size_t i = 0; i < first.cols().size(); ++i) {
    for (const auto& [j, lam] : first.cols()[i]) {
      for (const auto& [k, mu] : later.cols()[j]) {
        Rational v = mu * lam;
        auto [it, inserted] = cols[i].emplace(k, v);
        if (!inserted) it->second += v;
      }
    }
    std::erase_if(cols[i], [](const auto& kv) { return is_zero(kv.second); });
  }
  return GradedMap(first.source(), later.target(), std::move(cols));
}

GradedMap scale(const GradedMap& f, const Rational& c) {
  std::vector<std::map<int, Rational>> cols = f.cols();
  for (auto& col : cols) {
    if (is_zero(c)) {
      col.clear();
      continue;
    }
    for (auto& [j, v] : col) v *= c;
  }
  return GradedMap(f.source(), f.target(), std::move(cols));
}

GradedMap add(const GradedMap& f, const GradedMap& g) {
  if (f.source().shifts != g.source().shifts || f.target().shifts != g.target().shifts)
    throw std::invalid_argument("sum shape mismatch");
  std::vector<std::map<int, Rational>> cols = f.cols();
  for (size_t i = 0; i < cols.size(); ++i) {
    for (const auto& [j, v] : g.cols()[i]) {
      auto [it, inserted] = cols[i].emplace(j, v);
      if (!inserted) it->second += v;
    }
    std::erase_if(cols[i], [](const auto& kv) { return is_zero(kv.second); });
  }
  return GradedMap(f.source(), f.target(), std::move(cols));
}

void ChainComplex::validate() const {
  if (modules.empty()) throw std::logic_error("empty complex");
  if (diffs.size() + 1 != modules.size())
    throw std::logic_error("differential count does not match module count");
  for (size_t i = 0; i < diffs.size(); ++i) {
    if (diffs[i].source().shifts != modules[i + 1].shifts ||
        diffs[i].target().shifts != modules[i].shifts)
      throw std::logic_error("differential endpoints disagree with modules");
  }
  for (size_t i = 0; i + 1 < diffs.size(); ++i) {
    if (!compose(diffs[i], diffs[i + 1]).is_zero_map())
      throw std::logic_error("differential does not square to zero at degree " +
                             std::to_string(i + 2));
  }
}

ChainComplex rank_one_complex(const RingDescriptor& ring, Monomial shift) {
  ChainComplex c;
  c.ring = ring;
  c.modules.push_back(FreeModule{{std::move(shift)}});
  return c;
}

ChainComplex taylor_complex(const MonomialIdeal& I, int gen_cap) {
  if (I.is_zero()) throw std::invalid_argument("Taylor complex of the zero ideal");
  int m = I.ngens();
  if (m > gen_cap)
    throw resource_limit_error("Taylor complex refused: " + std::to_string(m) +
                               " generators exceed cap " + std::to_string(gen_cap));

  const auto& gens = I.gens();
  std::uint64_t full = (m == 64) ? ~0ull : ((1ull << m) - 1);

  // lcm per subset, filled in mask order (lower masks first)
  std::vector<Monomial> mask_lcm(full + 1);
  mask_lcm[0] = Monomial::unit(I.ring().nvars());
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    int low = std::countr_zero(mask);
    std::uint64_t rest = mask & (mask - 1);
    mask_lcm[mask] = rest == 0 ? gens[low] : lcm(mask_lcm[rest], gens[low]);
  }

  std::vector<std::vector<std::uint64_t>> masks_by_degree(m);
  std::vector<std::unordered_map<std::uint64_t, int>> index_of(m);
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    int i = std::popcount(mask) - 1;
    index_of[i][mask] = static_cast<int>(masks_by_degree[i].size());
    masks_by_degree[i].push_back(mask);
  }

  ChainComplex c;
  c.ring = I.ring();
  for (int i = 0; i < m; ++i) {
    FreeModule mod;
    mod.shifts.reserve(masks_by_degree[i].size());
    for (auto mask : masks_by_degree[i]) mod.shifts.push_back(mask_lcm[mask]);
    c.modules.push_back(std::move(mod));
  }
  for (int i = 1; i < m; ++i) {
    std::vector<std::map<int, Rational>> cols(masks_by_degree[i].size());
    for (size_t ci = 0; ci < masks_by_degree[i].size(); ++ci) {
      std::uint64_t mask = masks_by_degree[i][ci];
      int pos = 0;
      for (int b = 0; b < m; ++b) {
        if (!(mask & (1ull << b))) continue;
        std::uint64_t sub = mask & ~(1ull << b);
        int row = index_of[i - 1].at(sub);
        cols[ci][row] = (pos % 2 == 0) ? 1 : -1;
        ++pos;
      }
    }
    c.diffs.push_back(GradedMap(c.modules[i], c.modules[i - 1], std::move(cols)));
  }
  c.validate();
  return c;
}

ChainComplex direct_sum(const std::vector<ChainComplex>& parts,
                        std::vector<std::vector<int>>* offsets) {
  if (parts.empty()) throw std::invalid_argument("direct sum of nothing");
  int len = 0;
  for (const auto& p : parts) len = std::max(len, p.length());

  ChainComplex out;
  out.ring = parts.front().ring;
  if (offsets) offsets->assign(parts.size(), std::vector<int>(len + 1, 0));

  for (int s = 0; s <= len; ++s) {
    FreeModule mod;
    for (size_t k = 0; k < parts.size(); ++k) {
      if (offsets) (*offsets)[k][s] = mod.rank();
      if (s <= parts[k].length()) {
        const auto& sh = parts[k].modules[s].shifts;
        mod.shifts.insert(mod.shifts.end(), sh.begin(), sh.end());
      }
    }
    out.modules.push_back(std::move(mod));
  }
  for (int s = 1; s <= len; ++s) {
    std::vector<std::map<int, Rational>> cols(out.modules[s].rank());
    int col_off = 0, row_off = 0;
    for (const auto& p : parts) {
      if (s <= p.length()) {
        const auto& d = p.diffs[s - 1];
        for (int i = 0; i < d.source().rank(); ++i)
          for (const auto& [j, v] : d.cols()[i]) cols[col_off + i][row_off + j] = v;
        col_off += p.modules[s].rank();
      }
      if (s - 1 <= p.length()) row_off += p.modules[s - 1].rank();
    }
    out.diffs.push_back(GradedMap(out.modules[s], out.modules[s - 1], std::move(cols)));
  }
  return out;
}

namespace {

// Index bookkeeping for (C (x) D)_m: blocks by ascending C-degree i, pairs
// (s in C_i, t in D_{m-i}) enumerated C-major.
struct TensorLayout {
  std::vector<int> arank, brank;

  static TensorLayout of(const ChainComplex& A, const ChainComplex& B) {
    TensorLayout l;
    for (const auto& m : A.modules) l.arank.push_back(m.rank());
    for (const auto& m : B.modules) l.brank.push_back(m.rank());
    return l;
  }

  int p() const { return static_cast<int>(arank.size()) - 1; }
  int q() const { return static_cast<int>(brank.size()) - 1; }

  int block_offset(int m, int i) const {
    int off = 0;
    for (int ii = std::max(0, m - q()); ii < i; ++ii)
      if (m - ii >= 0 && m - ii <= q()) off += arank[ii] * brank[m - ii];
    return off;
  }
  int index(int m, int i, int s, int t) const {
    return block_offset(m, i) + s * brank[m - i] + t;
  }
  int rank(int m) const {
    int r = 0;
    for (int i = std::max(0, m - q()); i <= std::min(m, p()); ++i) r += arank[i] * brank[m - i];
    return r;
  }
};

}  // namespace

ChainComplex tensor(const ChainComplex& C, const ChainComplex& D) {
  if (!(C.ring == D.ring)) throw std::invalid_argument("tensor over different rings");
  TensorLayout l = TensorLayout::of(C, D);
  int p = l.p(), q = l.q();

  ChainComplex out;
  out.ring = C.ring;
  for (int m = 0; m <= p + q; ++m) {
    FreeModule mod;
    mod.shifts.reserve(l.rank(m));
    for (int i = std::max(0, m - q); i <= std::min(m, p); ++i) {
      int j = m - i;
      for (const auto& cs : C.modules[i].shifts)
        for (const auto& dt : D.modules[j].shifts) mod.shifts.push_back(multiply(cs, dt));
    }
    out.modules.push_back(std::move(mod));
  }

  for (int m = 1; m <= p + q; ++m) {
    std::vector<std::map<int, Rational>> cols(out.modules[m].rank());
    for (int i = std::max(0, m - q); i <= std::min(m, p); ++i) {
      int j = m - i;
      for (int s = 0; s < l.arank[i]; ++s) {
        for (int t = 0; t < l.brank[j]; ++t) {
          int col = l.index(m, i, s, t);
          if (i >= 1) {
            for (const auto& [s2, lam] : C.diffs[i - 1].cols()[s]) {
              int row = l.index(m - 1, i - 1, s2, t);
              auto [it, ins] = cols[col].emplace(row, lam);
              if (!ins) it->second += lam;
            }
          }
          if (j >= 1) {
            Rational sign = (i % 2 == 0) ? 1 : -1;
            for (const auto& [t2, mu] : D.diffs[j - 1].cols()[t]) {
              int row = l.index(m - 1, i, s, t2);
              Rational v = sign * mu;
              auto [it, ins] = cols[col].emplace(row, v);
              if (!ins) it->second += v;
            }
          }
        }
      }
    }
    for (auto& col : cols) std::erase_if(col, [](const auto& kv) { return is_zero(kv.second); });
    out.diffs.push_back(GradedMap(out.modules[m], out.modules[m - 1], std::move(cols)));
  }
  out.validate();
  return out;
}

ChainMap identity_chain_map(const ChainComplex& C) {
  ChainMap f;
  for (const auto& m : C.modules) f.parts.push_back(GradedMap::identity(m));
  return f;
}

ChainMap compose(const ChainMap& later, const ChainMap& first) {
  ChainMap out;
  for (size_t s = 0; s < first.parts.size(); ++s) {
    if (s < later.parts.size())
      out.parts.push_back(compose(later.parts[s], first.parts[s]));
    else
      out.parts.push_back(GradedMap::zero(first.parts[s].source(), FreeModule{}));
  }
  return out;
}

bool is_chain_map(const ChainComplex& C, const ChainComplex& D, const ChainMap& f,
                  std::string* why) {
  if (f.parts.size() != C.modules.size()) {
    if (why) *why = "part count does not match source complex";
    return false;
  }
  for (size_t s = 0; s < f.parts.size(); ++s) {
    if (f.parts[s].source().shifts != C.modules[s].shifts) {
      if (why) *why = "part " + std::to_string(s) + " has wrong source";
      return false;
    }
    const FreeModule expected_target =
        s < D.modules.size() ? D.modules[s] : FreeModule{};
    if (f.parts[s].target().shifts != expected_target.shifts) {
      if (why) *why = "part " + std::to_string(s) + " has wrong target";
      return false;
    }
  }
  for (size_t s = 1; s < f.parts.size(); ++s) {
    GradedMap rhs = compose(f.parts[s - 1], C.diffs[s - 1]);
    if (s >= D.modules.size()) {
      // target vanishes in degree s: condition reduces to f_{s-1} d = 0
      if (!rhs.is_zero_map()) {
        if (why) *why = "square at degree " + std::to_string(s) + " does not commute";
        return false;
      }
      continue;
    }
    GradedMap lhs = compose(D.diffs[s - 1], f.parts[s]);
    if (!(lhs == rhs)) {
      if (why) *why = "square at degree " + std::to_string(s) + " does not commute";
      return false;
    }
  }
  return true;
}

ChainMap tensor_map(const ChainComplex& Csrc, const ChainComplex& Dsrc, const ChainComplex& Ctgt,
                    const ChainComplex& Dtgt, const ChainMap& f, const ChainMap& g) {
  TensorLayout lsrc = TensorLayout::of(Csrc, Dsrc);
  TensorLayout ltgt = TensorLayout::of(Ctgt, Dtgt);
  int p = lsrc.p(), q = lsrc.q();
  int ptgt = ltgt.p(), qtgt = ltgt.q();

  ChainComplex src = tensor(Csrc, Dsrc);  // for module shapes
  ChainComplex tgt = tensor(Ctgt, Dtgt);

  ChainMap out;
  for (int m = 0; m <= p + q; ++m) {
    FreeModule target_mod = m <= ptgt + qtgt ? tgt.modules[m] : FreeModule{};
    std::vector<std::map<int, Rational>> cols(src.modules[m].rank());
    for (int i = std::max(0, m - q); i <= std::min(m, p); ++i) {
      int j = m - i;
      if (i >= static_cast<int>(f.parts.size()) || j >= static_cast<int>(g.parts.size()))
        continue;
      if (i > ptgt || j > qtgt) continue;
      for (int s = 0; s < lsrc.arank[i]; ++s) {
        for (const auto& [s2, a] : f.parts[i].cols()[s]) {
          for (int t = 0; t < lsrc.brank[j]; ++t) {
            int col = lsrc.index(m, i, s, t);
            for (const auto& [t2, b] : g.parts[j].cols()[t]) {
              int row = ltgt.index(m, i, s2, t2);
              Rational v = a * b;
              auto [it, ins] = cols[col].emplace(row, v);
              if (!ins) it->second += v;
            }
          }
        }
      }
    }
    for (auto& col : cols) std::erase_if(col, [](const auto& kv) { return is_zero(kv.second); });
    out.parts.push_back(GradedMap(src.modules[m], target_mod, std::move(cols)));
  }
  return out;
}

bool is_minimal(const ChainComplex& C) {
  for (const auto& d : C.diffs) {
    for (int i = 0; i < d.source().rank(); ++i)
      for (const auto& [j, v] : d.cols()[i])
        if (d.source().shifts[i] == d.target().shifts[j]) return false;
  }
  return true;
}

namespace {

struct PivotLoc {
  int degree;  // differential index: modules[degree+1] -> modules[degree]
  int row, col;
};

bool find_unit_entry(const ChainComplex& C, PivotLoc& loc) {
  for (size_t d = 0; d < C.diffs.size(); ++d) {
    bool found = false;
    int best_row = 0, best_col = 0;
    const auto& diff = C.diffs[d];
    for (int i = 0; i < diff.source().rank(); ++i) {
      for (const auto& [j, v] : diff.cols()[i]) {
        if (diff.source().shifts[i] != diff.target().shifts[j]) continue;
        if (!found || std::pair(j, i) < std::pair(best_row, best_col)) {
          found = true;
          best_row = j;
          best_col = i;
        }
      }
    }
    if (found) {
      loc = PivotLoc{static_cast<int>(d), best_row, best_col};
      return true;
    }
  }
  return false;
}

std::vector<std::map<int, Rational>> drop_row(std::vector<std::map<int, Rational>> cols,
                                              int row) {
  for (auto& col : cols) {
    std::map<int, Rational> next;
    for (auto& [j, v] : col) {
      if (j == row) continue;
      next.emplace(j > row ? j - 1 : j, std::move(v));
    }
    col = std::move(next);
  }
  return cols;
}

}  // namespace

ChainComplex minimize(ChainComplex C) {
  C.validate();  // rejects non-complexes up front

  PivotLoc loc;
  while (find_unit_entry(C, loc)) {
    int d = loc.degree;
    auto cols = C.diffs[d].cols();
    const Rational p = cols[loc.col].at(loc.row);

    // Schur update: phi[j][c] -= phi[j][i0] * phi[j0][c] / p for c != i0.
    std::map<int, Rational> pivot_col = cols[loc.col];
    for (size_t c = 0; c < cols.size(); ++c) {
      if (static_cast<int>(c) == loc.col) continue;
      auto it = cols[c].find(loc.row);
      if (it == cols[c].end()) continue;
      Rational f = it->second / p;
      for (const auto& [j, w] : pivot_col) {
        if (j == loc.row) continue;
        auto [jt, ins] = cols[c].emplace(j, Rational(0));
        jt->second -= f * w;
        if (is_zero(jt->second)) cols[c].erase(jt);
      }
      cols[c].erase(loc.row);
    }
    cols.erase(cols.begin() + loc.col);
    cols = drop_row(std::move(cols), loc.row);

    // shrink the modules
    FreeModule src = C.diffs[d].source();
    FreeModule tgt = C.diffs[d].target();
    src.shifts.erase(src.shifts.begin() + loc.col);
    tgt.shifts.erase(tgt.shifts.begin() + loc.row);
    C.modules[d + 1] = src;
    C.modules[d] = tgt;
    C.diffs[d] = GradedMap(src, tgt, std::move(cols));

    // incoming map: in the adjusted basis its old row loc.col is zero
    if (d + 1 < static_cast<int>(C.diffs.size())) {
      auto in_cols = drop_row(C.diffs[d + 1].cols(), loc.col);
      C.diffs[d + 1] = GradedMap(C.diffs[d + 1].source(), src, std::move(in_cols));
    }
    // outgoing map: drop the cancelled target column
    if (d >= 1) {
      auto out_cols = C.diffs[d - 1].cols();
      out_cols.erase(out_cols.begin() + loc.row);
      C.diffs[d - 1] = GradedMap(tgt, C.diffs[d - 1].target(), std::move(out_cols));
    }
  }

  while (C.modules.size() > 1 && C.modules.back().rank() == 0) {
    C.modules.pop_back();
    C.diffs.pop_back();
  }
  C.validate();
  return C;
}

}  // namespace expansio
