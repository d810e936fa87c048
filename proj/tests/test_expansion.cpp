#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "expansio/expansion.hpp"
#include "expansio/free_complex.hpp"
#include "expansio/homology.hpp"

using namespace expansio;

namespace {

RingDescriptor R3 = RingDescriptor::standard(3);
ExpandedRing ER132() { return ExpandedRing(R3, ExpansionTuple({1, 3, 2})); }

Monomial mono(const std::string& s, const RingDescriptor& r) { return parse_monomial(s, r); }

Exponent binom(Exponent n, Exponent k) {
  if (k < 0 || k > n) return 0;
  Exponent r = 1;
  for (Exponent i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("expanded ring layout") {
  ExpandedRing er = ER132();
  CHECK(er.flat().nvars() == 6);
  CHECK(er.flat().names() ==
        std::vector<std::string>{"x1_1", "x2_1", "x2_2", "x2_3", "x3_1", "x3_2"});
  CHECK(er.var_index(1, 2) == 3);
  CHECK(er.block_of(3) == 1);
  CHECK(er.block_coord(5) == std::pair<int, int>{2, 1});
  CHECK(er.block_prime(2) ==
        MonomialIdeal(er.flat(), {mono("x3_1", er.flat()), mono("x3_2", er.flat())}));
  CHECK_THROWS_AS(ExpandedRing(R3, ExpansionTuple({1, 3})), std::invalid_argument);
}

TEST_CASE("principal expansion") {
  ExpandedRing er = ER132();
  // the worked example: (x3^2)* = (x3_1^2, x3_1*x3_2, x3_2^2)
  auto P32 = expand_principal(er, mono("x3^2", R3));
  std::vector<std::string> got;
  for (const auto& g : P32.gens()) got.push_back(to_string(g, er.flat()));
  CHECK(got == std::vector<std::string>{"x3_1^2", "x3_1*x3_2", "x3_2^2"});

  auto P12 = expand_principal(er, mono("x1*x2", R3));
  got.clear();
  for (const auto& g : P12.gens()) got.push_back(to_string(g, er.flat()));
  CHECK(got == std::vector<std::string>{"x1_1*x2_1", "x1_1*x2_2", "x1_1*x2_3"});

  CHECK(expand_principal(er, Monomial::unit(3)).is_unit());
}

TEST_CASE("principal expansion generator count") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    int n = 1 + rng() % 3;
    RingDescriptor r = RingDescriptor::standard(n);
    std::vector<int> entries(n);
    for (auto& e : entries) e = 1 + rng() % 3;
    ExpandedRing er(r, ExpansionTuple(entries));
    std::vector<Exponent> a(n);
    for (auto& e : a) e = rng() % 4;
    Monomial m{a};
    Exponent expected = 1;
    for (int j = 0; j < n; ++j) expected *= binom(entries[j] + a[j] - 1, a[j]);
    CHECK(static_cast<Exponent>(expand_principal(er, m).ngens()) == expected);
  }
}

TEST_CASE("ideal expansion reproduces the worked example") {
  ExpandedRing er = ER132();
  auto I = MonomialIdeal(R3, {mono("x1*x2", R3), mono("x3^2", R3)});
  auto star = expand_ideal(er, I);
  std::vector<std::string> got;
  for (const auto& g : star.gens()) got.push_back(to_string(g, er.flat()));
  CHECK(got == std::vector<std::string>{"x1_1*x2_1", "x1_1*x2_2", "x1_1*x2_3", "x3_1^2",
                                        "x3_1*x3_2", "x3_2^2"});
}

TEST_CASE("all-ones tuple expands to a renaming") {
  auto I = MonomialIdeal(R3, {mono("x1*x2", R3), mono("x3^2", R3)});
  ExpandedRing er(R3, ExpansionTuple::ones(3));
  auto star = expand_ideal(er, I);
  REQUIRE(star.ngens() == I.ngens());
  for (int i = 0; i < star.ngens(); ++i)
    CHECK(star.gens()[i].exponents() == I.gens()[i].exponents());
}

TEST_CASE("expansion of a pure power, derived by enumeration") {
  RingDescriptor R1 = RingDescriptor::standard(1);
  ExpandedRing er(R1, ExpansionTuple({2}));
  auto star = expand_principal(er, mono("x1^2", R1));
  // every degree-2 monomial in the two block variables
  std::vector<Monomial> expected;
  for (const auto& u : monomials_up_to_degree(2, 2))
    if (total_degree(u) == 2) expected.push_back(u);
  std::sort(expected.begin(), expected.end(), canonical_less);
  CHECK(star.gens() == expected);
}

TEST_CASE("contraction") {
  ExpandedRing er = ER132();
  CHECK(contract(er, mono("x1_1*x2_3", er.flat())) == mono("x1*x2", R3));
  CHECK(contract(er, Monomial::unit(6)) == Monomial::unit(3));
  CHECK(fold_multidegree(er, {0, 1, 1, 0, 2, 1}) == std::vector<Exponent>{0, 2, 3});

  // membership transfer on the worked example
  auto I = MonomialIdeal(R3, {mono("x1*x2", R3), mono("x3^2", R3)});
  auto star = expand_ideal(er, I);
  for (const auto& u : monomials_up_to_degree(6, 4))
    CHECK(star.contains(u) == I.contains(contract(er, u)));
}

TEST_CASE("expanded maps") {
  ExpandedRing er = ER132();
  auto koszul = taylor_complex(MonomialIdeal(R3, {mono("x1", R3), mono("x2", R3)}));

  // (id)* = id
  ExpandedMap id = identity_expanded_map(koszul.modules[0].shifts);
  CHECK(compose(id, id).cols == id.cols);

  // Koszul pair: the augmentation [x1 x2] composed with [x2, -x1] is zero,
  // before and after expansion
  ExpandedMap d1 = expanded_map(koszul.diffs[0].source().shifts,
                                koszul.diffs[0].target().shifts, koszul.diffs[0].cols());
  std::vector<std::map<int, Rational>> aug_cols(2);
  aug_cols[0][0] = 1;
  aug_cols[1][0] = 1;
  ExpandedMap aug =
      expanded_map(koszul.modules[0].shifts, {Monomial::unit(3)}, aug_cols);
  ExpandedMap zero = compose(aug, d1);
  for (const auto& col : zero.cols) CHECK(col.empty());

  // divisibility violations are rejected
  std::vector<std::map<int, Rational>> bad(1);
  bad[0][0] = 1;
  CHECK_THROWS_AS(expanded_map({mono("x1", R3)}, {mono("x2", R3)}, bad),
                  std::invalid_argument);
  CHECK_NOTHROW(expanded_map({mono("x1*x2", R3)}, {mono("x2", R3)}, bad));
}

TEST_CASE("degree-wise evaluation of an expanded complex") {
  ExpandedRing er = ER132();
  auto I = MonomialIdeal(R3, {mono("x1*x2", R3), mono("x3^2", R3)});
  auto koszul = taylor_complex(I);
  ExpandedComplex star = expand_complex(er, koszul);

  // the module components are the principal expansions of the shifts
  auto comps = star.modules[0].components(er);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == expand_principal(er, star.modules[0].shifts[0]));
  CHECK(comps[1] == expand_principal(er, star.modules[0].shifts[1]));

  // a degree outside every component gives the zero strand
  DegreeStrand z = evaluate_expanded_complex_in_degree(er, star, mono("x2_1", er.flat()));
  CHECK(z.dims == std::vector<int>{0, 0});

  // the degree of x1_1*x2_1 hits exactly the first component of F_0
  DegreeStrand s = evaluate_expanded_complex_in_degree(er, star, mono("x1_1*x2_1", er.flat()));
  CHECK(s.dims[0] == 1);
  CHECK(s.dims[1] == 0);

  // exactness at the middle spot in every flat degree up to total degree 4
  MonomialIdeal Istar = expand_ideal(er, I);
  for (const auto& d : monomials_up_to_degree(6, 4)) {
    DegreeStrand strand = evaluate_expanded_complex_in_degree(er, star, d);
    auto h = strand_homology(strand);
    for (size_t i = 1; i < h.size(); ++i) CHECK(h[i] == 0);
    CHECK(h[0] == (Istar.contains(d) ? 1 : 0));
  }
}

TEST_CASE("flat naming stays collision-checked") {
  RingDescriptor odd(std::vector<std::string>{"a", "a_1"});
  // expansion of "a" with 2 copies yields a_1, a_2 -- clashing with source a_1's block
  CHECK_NOTHROW(ExpandedRing(odd, ExpansionTuple({2, 1})));  // a_1, a_2, a_1_1: fine
}
