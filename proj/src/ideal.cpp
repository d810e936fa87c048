#include "expansio/ideal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace expansio {

namespace {

void require_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (!(I.ring() == J.ring()))
    throw std::invalid_argument("ideals from different rings");
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& kept : out) {
      if (divides(kept, g)) {  // kept has degree <= g, so this direction suffices
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingDescriptor ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)) {
  for (const auto& g : generators)
    if (g.nvars() != ring_.nvars())
      throw std::invalid_argument("generator does not live in the given ring");
  gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const Monomial& u) const {
  for (const auto& g : gens_)
    if (divides(g, u)) return true;
  return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
  for (const auto& g : other.gens())
    if (!contains(g)) return false;
  return true;
}

bool MonomialIdeal::operator<(const MonomialIdeal& other) const {
  size_t n = std::min(gens_.size(), other.gens_.size());
  for (size_t i = 0; i < n; ++i) {
    if (gens_[i] == other.gens_[i]) continue;
    return canonical_less(gens_[i], other.gens_[i]);
  }
  return gens_.size() < other.gens_.size();
}

MonomialIdeal minimal_generators(RingDescriptor ring, std::vector<Monomial> monomials) {
  return MonomialIdeal(std::move(ring), std::move(monomials));
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  std::vector<Monomial> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.ring());
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size() * J.gens().size());
  for (const auto& u : I.gens())
    for (const auto& v : J.gens()) gens.push_back(multiply(u, v));
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal intersection(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.ring());
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size() * J.gens().size());
  for (const auto& u : I.gens())
    for (const auto& v : J.gens()) gens.push_back(lcm(u, v));
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& u) {
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) gens.push_back(quotient_exact(g, gcd(g, u)));
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  if (J.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  bool first = true;
  MonomialIdeal out = MonomialIdeal::zero(I.ring());
  for (const auto& u : J.gens()) {
    MonomialIdeal part = colon(I, u);
    out = first ? part : intersection(out, part);
    first = false;
  }
  return out;
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) {
    std::vector<Exponent> e(g.nvars(), 0);
    for (int i = 0; i < g.nvars(); ++i) e[i] = g[i] > 0 ? 1 : 0;
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, int k) {
  if (k < 1) throw std::invalid_argument("power requires k >= 1");
  MonomialIdeal out = I;
  for (int i = 1; i < k; ++i) out = product(out, I);
  return out;
}

bool is_primary(const MonomialIdeal& I, std::vector<int>* radical_prime) {
  if (I.is_zero() || I.is_unit()) return false;
  std::vector<int> pure;  // variables occurring as a pure power
  std::set<int> supp_union;
  for (const auto& g : I.gens()) {
    auto s = support(g);
    supp_union.insert(s.begin(), s.end());
    if (s.size() == 1) pure.push_back(s[0]);
  }
  std::sort(pure.begin(), pure.end());
  pure.erase(std::unique(pure.begin(), pure.end()), pure.end());
  std::vector<int> all(supp_union.begin(), supp_union.end());
  if (pure != all) return false;
  if (radical_prime) *radical_prime = all;
  return true;
}

namespace {

// Irreducible components via generator splitting. An ideal whose minimal
// generators are all pure powers is irreducible (at most one power per
// variable after minimalization). Memoized on canonical form: the split
// branches share a lot of subproblems.
void split_to_irreducible(const MonomialIdeal& I, std::map<MonomialIdeal, char>& seen,
                          std::set<MonomialIdeal>& out) {
  if (seen.count(I)) return;
  seen[I] = 1;
  const Monomial* mixed = nullptr;
  for (const auto& g : I.gens()) {
    if (support(g).size() >= 2) {
      mixed = &g;
      break;
    }
  }
  if (!mixed) {
    out.insert(I);
    return;
  }
  // u = v * w with v the pure-power part in the first support variable
  int j = support(*mixed)[0];
  Monomial v = Monomial::variable(mixed->nvars(), j, (*mixed)[j]);
  Monomial w = quotient_exact(*mixed, v);
  std::vector<Monomial> with_v = I.gens();
  with_v.push_back(v);
  std::vector<Monomial> with_w = I.gens();
  with_w.push_back(w);
  split_to_irreducible(MonomialIdeal(I.ring(), std::move(with_v)), seen, out);
  split_to_irreducible(MonomialIdeal(I.ring(), std::move(with_w)), seen, out);
}

std::vector<int> radical_support(const MonomialIdeal& I) {
  std::set<int> s;
  for (const auto& g : I.gens()) {
    auto sup = support(g);
    s.insert(sup.begin(), sup.end());
  }
  return std::vector<int>(s.begin(), s.end());
}

MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& ideals, size_t skip) {
  MonomialIdeal out = MonomialIdeal::zero(ideals.front().ring());
  bool first = true;
  for (size_t i = 0; i < ideals.size(); ++i) {
    if (i == skip) continue;
    out = first ? ideals[i] : intersection(out, ideals[i]);
    first = false;
  }
  return out;
}

}  // namespace

std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("primary decomposition needs a nonzero proper ideal");

  std::map<MonomialIdeal, char> seen;
  std::set<MonomialIdeal> irreducible;
  split_to_irreducible(I, seen, irreducible);

  // Merge components with equal radical by intersection.
  std::map<std::vector<int>, MonomialIdeal> by_radical;
  for (const auto& Q : irreducible) {
    auto rad = radical_support(Q);
    auto it = by_radical.find(rad);
    if (it == by_radical.end())
      by_radical.emplace(rad, Q);
    else
      it->second = intersection(it->second, Q);
  }

  std::vector<MonomialIdeal> comps;
  std::vector<std::vector<int>> rads;
  for (auto& [rad, Q] : by_radical) {
    comps.push_back(Q);
    rads.push_back(rad);
  }

  // Drop components containing the intersection of the others, smallest
  // radical first, until irredundant.
  bool changed = true;
  while (changed && comps.size() > 1) {
    changed = false;
    for (size_t i = 0; i < comps.size(); ++i) {
      MonomialIdeal rest = intersect_all(comps, i);
      if (comps[i].contains_ideal(rest)) {
        comps.erase(comps.begin() + i);
        rads.erase(rads.begin() + i);
        changed = true;
        break;
      }
    }
  }

  std::vector<PrimaryComponent> out;
  for (size_t i = 0; i < comps.size(); ++i)
    out.push_back(PrimaryComponent{comps[i], rads[i]});
  return out;
}

std::set<std::vector<int>> associated_primes(const MonomialIdeal& I) {
  std::set<std::vector<int>> out;
  for (const auto& pc : primary_decomposition(I)) out.insert(pc.radical_prime);
  return out;
}

std::set<std::vector<int>> minimal_primes(const MonomialIdeal& I) {
  auto ass = associated_primes(I);
  std::set<std::vector<int>> out;
  for (const auto& p : ass) {
    bool minimal = true;
    for (const auto& q : ass) {
      if (q == p) continue;
      if (std::includes(p.begin(), p.end(), q.begin(), q.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(p);
  }
  return out;
}

int height(const MonomialIdeal& I) {
  int h = I.ring().nvars() + 1;
  for (const auto& p : minimal_primes(I)) h = std::min(h, static_cast<int>(p.size()));
  return h;
}

bool is_unmixed(const MonomialIdeal& I) {
  auto ass = associated_primes(I);
  size_t h = ass.begin()->size();
  for (const auto& p : ass)
    if (p.size() != h) return false;
  return true;
}

MonomialIdeal symbolic_power(const MonomialIdeal& I, int k) {
  if (k < 1) throw std::invalid_argument("symbolic power requires k >= 1");
  auto mins = minimal_primes(I);
  MonomialIdeal Ik = power(I, k);
  auto comps = primary_decomposition(Ik);
  MonomialIdeal out = MonomialIdeal::zero(I.ring());
  bool first = true;
  for (const auto& pc : comps) {
    if (!mins.count(pc.radical_prime)) continue;
    out = first ? pc.component : intersection(out, pc.component);
    first = false;
  }
  if (first) throw std::logic_error("no minimal-prime component found");
  return out;
}

StableAssResult ass_infinity(const MonomialIdeal& I, int window, int cap) {
  if (window < 2) throw std::invalid_argument("window must be >= 2");
  StableAssResult result;
  result.cap = cap;
  std::vector<std::set<std::vector<int>>> ass;
  MonomialIdeal Is = I;
  for (int s = 1; s <= cap; ++s) {
    if (s > 1) Is = product(Is, I);
    ass.push_back(associated_primes(Is));
    int run = 1;
    while (run < static_cast<int>(ass.size()) && ass[ass.size() - 1 - run] == ass.back()) ++run;
    if (run >= window) {
      result.determined = true;
      result.primes = ass.back();
      result.stable_from = s - run + 1;
      return result;
    }
  }
  return result;  // undetermined within the cap
}

std::vector<Monomial> monomials_up_to_degree(int nvars, Exponent bound) {
  std::vector<Monomial> out;
  std::vector<Exponent> cur(nvars, 0);
  // depth-first over exponent vectors with running degree budget
  auto rec = [&](auto&& self, int var, Exponent left) -> void {
    if (var == nvars) {
      out.push_back(Monomial(cur));
      return;
    }
    for (Exponent e = 0; e <= left; ++e) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

}  // namespace expansio
