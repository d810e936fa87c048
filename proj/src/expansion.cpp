#include "expansio/expansion.hpp"

#include <algorithm>
#include <stdexcept>

namespace expansio {

ExpandedRing::ExpandedRing(RingDescriptor source, ExpansionTuple tuple)
    : source_(std::move(source)), tuple_(std::move(tuple)) {
  if (tuple_.size() != source_.nvars())
    throw std::invalid_argument("expansion tuple length does not match ring");
  std::vector<std::string> names;
  offsets_.resize(source_.nvars());
  int off = 0;
  for (int j = 0; j < source_.nvars(); ++j) {
    offsets_[j] = off;
    for (int k = 1; k <= tuple_[j]; ++k)
      names.push_back(source_.name(j) + "_" + std::to_string(k));
    off += tuple_[j];
  }
  flat_ = RingDescriptor(std::move(names));  // validates distinctness
}

int ExpandedRing::block_of(int flat_index) const {
  for (int j = source_.nvars() - 1; j >= 0; --j)
    if (flat_index >= offsets_[j]) return j;
  throw std::out_of_range("flat index out of range");
}

std::pair<int, int> ExpandedRing::block_coord(int flat_index) const {
  int j = block_of(flat_index);
  return {j, flat_index - offsets_[j]};
}

MonomialIdeal ExpandedRing::block_prime(int j) const {
  std::vector<Monomial> gens;
  for (int k = 0; k < tuple_[j]; ++k)
    gens.push_back(Monomial::variable(flat_.nvars(), var_index(j, k)));
  return MonomialIdeal(flat_, std::move(gens));
}

Monomial contract(const ExpandedRing& er, const Monomial& u) {
  if (u.nvars() != er.flat().nvars())
    throw std::invalid_argument("monomial does not live in the expanded ring");
  std::vector<Exponent> e(er.source().nvars(), 0);
  for (int j = 0; j < er.source().nvars(); ++j)
    for (int k = 0; k < er.block_size(j); ++k) e[j] += u[er.var_index(j, k)];
  return Monomial(std::move(e));
}

std::vector<Exponent> fold_multidegree(const ExpandedRing& er,
                                       const std::vector<Exponent>& d) {
  return contract(er, Monomial(d)).exponents();
}

MonomialIdeal expand_principal(const ExpandedRing& er, const Monomial& a) {
  if (a.nvars() != er.source().nvars())
    throw std::invalid_argument("monomial does not live in the source ring");
  std::vector<Monomial> gens;
  std::vector<Exponent> cur(er.flat().nvars(), 0);
  // enumerate, block by block, every way to spread a(j) over block j
  auto rec = [&](auto&& self, int j) -> void {
    if (j == er.source().nvars()) {
      gens.push_back(Monomial(cur));
      return;
    }
    auto spread = [&](auto&& inner, int k, Exponent left) -> void {
      if (k == er.block_size(j) - 1) {
        cur[er.var_index(j, k)] = left;
        self(self, j + 1);
        cur[er.var_index(j, k)] = 0;
        return;
      }
      for (Exponent e = 0; e <= left; ++e) {
        cur[er.var_index(j, k)] = e;
        inner(inner, k + 1, left - e);
      }
      cur[er.var_index(j, k)] = 0;
    };
    spread(spread, 0, a[j]);
  };
  rec(rec, 0);
  return MonomialIdeal(er.flat(), std::move(gens));
}

MonomialIdeal expand_ideal(const ExpandedRing& er, const MonomialIdeal& I) {
  if (!(I.ring() == er.source()))
    throw std::invalid_argument("ideal does not live in the source ring");
  std::vector<Monomial> gens;
  for (const auto& g : I.gens()) {
    auto part = expand_principal(er, g);
    gens.insert(gens.end(), part.gens().begin(), part.gens().end());
  }
  return MonomialIdeal(er.flat(), std::move(gens));
}

std::vector<MonomialIdeal> ExpandedFreeModule::components(const ExpandedRing& er) const {
  std::vector<MonomialIdeal> out;
  out.reserve(shifts.size());
  for (const auto& a : shifts) out.push_back(expand_principal(er, a));
  return out;
}

ExpandedMap expanded_map(std::vector<Monomial> source_shifts, std::vector<Monomial> target_shifts,
                         std::vector<std::map<int, Rational>> cols) {
  if (cols.size() != source_shifts.size())
    throw std::invalid_argument("column count does not match source rank");
  for (size_t i = 0; i < cols.size(); ++i) {
    for (auto& [j, lam] : cols[i]) {
      if (j < 0 || j >= static_cast<int>(target_shifts.size()))
        throw std::invalid_argument("row index out of range");
      if (!is_zero(lam) && !divides(target_shifts[j], source_shifts[i]))
        throw std::invalid_argument(
            "nonzero entry where target shift does not divide source shift");
    }
  }
  ExpandedMap m;
  m.source.shifts = std::move(source_shifts);
  m.target.shifts = std::move(target_shifts);
  m.cols = std::move(cols);
  return m;
}

ExpandedMap identity_expanded_map(std::vector<Monomial> shifts) {
  std::vector<std::map<int, Rational>> cols(shifts.size());
  for (size_t i = 0; i < shifts.size(); ++i) cols[i][static_cast<int>(i)] = 1;
  return expanded_map(shifts, shifts, std::move(cols));
}

ExpandedMap compose(const ExpandedMap& later, const ExpandedMap& first) {
  if (later.source.shifts != first.target.shifts)
    throw std::invalid_argument("composition shape mismatch");
  std::vector<std::map<int, Rational>> cols(first.cols.size());
  for (size_t i = 0; i < first.cols.size(); ++i) {
    for (const auto& [j, lam] : first.cols[i]) {
      for (const auto& [k, mu] : later.cols[j]) {
        Rational v = mu * lam;
        if (is_zero(v)) continue;
        auto [it, inserted] = cols[i].emplace(k, v);
        if (!inserted) {
          it->second += v;
          if (is_zero(it->second)) cols[i].erase(it);
        }
      }
    }
  }
  return expanded_map(first.source.shifts, later.target.shifts, std::move(cols));
}

DegreeStrand evaluate_expanded_complex_in_degree(const ExpandedRing& er,
                                                 const ExpandedComplex& C,
                                                 const Monomial& flat_degree) {
  DegreeStrand s;
  s.present.resize(C.modules.size());
  s.dims.resize(C.modules.size(), 0);
  // Membership of x^{d*} in (x^a)^* decides presence; the component is then
  // one-dimensional, spanned by that monomial.
  for (size_t i = 0; i < C.modules.size(); ++i) {
    const auto& shifts = C.modules[i].shifts;
    s.present[i].resize(shifts.size(), 0);
    for (size_t c = 0; c < shifts.size(); ++c) {
      if (expand_principal(er, shifts[c]).contains(flat_degree)) {
        s.present[i][c] = 1;
        ++s.dims[i];
      }
    }
  }
  s.mats.resize(C.maps.size());
  for (size_t m = 0; m < C.maps.size(); ++m) {
    // maps[m]: module m+1 -> module m
    std::vector<int> row_of(s.present[m].size(), -1);
    int r = 0;
    for (size_t j = 0; j < s.present[m].size(); ++j)
      if (s.present[m][j]) row_of[j] = r++;
    s.mats[m].assign(s.dims[m], std::vector<Rational>(s.dims[m + 1], Rational(0)));
    int c = 0;
    for (size_t i = 0; i < s.present[m + 1].size(); ++i) {
      if (!s.present[m + 1][i]) continue;
      for (const auto& [j, lam] : C.maps[m].cols[i]) {
        if (row_of[j] >= 0) s.mats[m][row_of[j]][c] = lam;
      }
      ++c;
    }
  }
  return s;
}

namespace {

Exponent dense_rank(std::vector<std::vector<Rational>> a) {
  if (a.empty() || a[0].empty()) return 0;
  size_t rows = a.size(), cols = a[0].size();
  Exponent rank = 0;
  size_t pr = 0;
  for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
    size_t piv = pr;
    while (piv < rows && is_zero(a[piv][pc])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[pr]);
    for (size_t r = pr + 1; r < rows; ++r) {
      if (is_zero(a[r][pc])) continue;
      Rational f = a[r][pc] / a[pr][pc];
      for (size_t c = pc; c < cols; ++c) a[r][c] -= f * a[pr][c];
    }
    ++pr;
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<Exponent> strand_homology(const DegreeStrand& strand) {
  size_t p = strand.dims.size();
  std::vector<Exponent> ranks(p + 1, 0);  // ranks[i] = rank of map module i -> module i-1
  for (size_t m = 0; m < strand.mats.size(); ++m) ranks[m + 1] = dense_rank(strand.mats[m]);
  std::vector<Exponent> h(p);
  for (size_t i = 0; i < p; ++i) {
    Exponent incoming = (i + 1 <= strand.mats.size()) ? ranks[i + 1] : 0;
    h[i] = strand.dims[i] - ranks[i] - incoming;
  }
  return h;
}

}  // namespace expansio
