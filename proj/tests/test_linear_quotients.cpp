#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "expansio/errors.hpp"
#include "expansio/linear_quotients.hpp"

using namespace expansio;

namespace {

Monomial mono(const std::string& s, const RingDescriptor& r) { return parse_monomial(s, r); }

// degree-a monomials in r variables, descending lex
std::vector<Monomial> power_gens_desc_lex(int r, Exponent a) {
  std::vector<Monomial> out;
  std::vector<Exponent> cur(r, 0);
  auto rec = [&](auto&& self, int pos, Exponent left) -> void {
    if (pos == r - 1) {
      cur[pos] = left;
      out.push_back(Monomial(cur));
      cur[pos] = 0;
      return;
    }
    for (Exponent e = left; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, a);
  return out;
}

}  // namespace

TEST_CASE("variables have linear quotients in any order") {
  RingDescriptor r = RingDescriptor::standard(2);
  MonomialIdeal I(r, {mono("x1", r), mono("x2", r)});
  auto cert = is_linear_quotients(I, {mono("x1", r), mono("x2", r)});
  CHECK(cert.holds);
  CHECK(cert.sets[1] == std::vector<int>{0});
  auto cert2 = is_linear_quotients(I, {mono("x2", r), mono("x1", r)});
  CHECK(cert2.holds);
  CHECK(cert2.sets[1] == std::vector<int>{1});
}

TEST_CASE("prime powers under descending lex") {
  RingDescriptor r = RingDescriptor::standard(3, "y");
  for (Exponent a = 1; a <= 3; ++a) {
    auto order = power_gens_desc_lex(3, a);
    MonomialIdeal Pa(r, order);
    auto cert = is_linear_quotients(Pa, order);
    REQUIRE(cert.holds);
    for (size_t j = 1; j < order.size(); ++j) {
      // set(u) = everything below the top variable of u
      int m = support(order[j]).back();
      std::vector<int> expected;
      for (int v = 0; v < m; ++v) expected.push_back(v);
      CHECK(cert.sets[j] == expected);
    }
  }
}

TEST_CASE("no linear quotients for two coprime quadrics") {
  RingDescriptor r = RingDescriptor::standard(4);
  MonomialIdeal I(r, {mono("x1*x2", r), mono("x3*x4", r)});
  CHECK_FALSE(is_linear_quotients(I, {mono("x1*x2", r), mono("x3*x4", r)}).holds);
  CHECK_FALSE(is_linear_quotients(I, {mono("x3*x4", r), mono("x1*x2", r)}).holds);
  CHECK_FALSE(find_linear_quotients_order(I).has_value());
}

TEST_CASE("search finds witnesses") {
  RingDescriptor r = RingDescriptor::standard(3);
  MonomialIdeal vars(r, {mono("x1", r), mono("x2", r), mono("x3", r)});
  CHECK(find_linear_quotients_order(vars).has_value());

  MonomialIdeal cycle(r, {mono("x1*x2", r), mono("x1*x3", r), mono("x2*x3", r)});
  auto order = find_linear_quotients_order(cycle);
  REQUIRE(order.has_value());
  CHECK(is_linear_quotients(cycle, *order).holds);
  // the listed order itself is a witness
  CHECK(is_linear_quotients(cycle, {mono("x1*x2", r), mono("x1*x3", r), mono("x2*x3", r)})
            .holds);

  RingDescriptor r4 = RingDescriptor::standard(4);
  MonomialIdeal big(r4, {mono("x1", r4), mono("x2", r4), mono("x3", r4), mono("x4", r4)});
  CHECK_THROWS_AS(find_linear_quotients_order(big, 3), resource_limit_error);
}

TEST_CASE("expansion order") {
  RingDescriptor r1 = RingDescriptor::standard(1);
  ExpandedRing er(r1, ExpansionTuple({2}));
  MonomialIdeal I(r1, {mono("x1", r1)});
  auto order = expansion_order(er, I, {mono("x1", r1)});
  REQUIRE(order.size() == 2);
  CHECK(to_string(order[0], er.flat()) == "x1_2");
  CHECK(to_string(order[1], er.flat()) == "x1_1");

  MonomialIdeal I2(r1, {mono("x1^2", r1)});
  auto order2 = expansion_order(er, I2, {mono("x1^2", r1)});
  REQUIRE(order2.size() == 3);
  CHECK(to_string(order2[0], er.flat()) == "x1_2^2");
  CHECK(to_string(order2[1], er.flat()) == "x1_1*x1_2");
  CHECK(to_string(order2[2], er.flat()) == "x1_1^2");

  // all-ones tuple keeps the original order
  RingDescriptor r3 = RingDescriptor::standard(3);
  ExpandedRing ones(r3, ExpansionTuple::ones(3));
  MonomialIdeal cycle(r3, {mono("x1*x2", r3), mono("x1*x3", r3), mono("x2*x3", r3)});
  std::vector<Monomial> lq{mono("x1*x2", r3), mono("x1*x3", r3), mono("x2*x3", r3)};
  auto ord = expansion_order(ones, cycle, lq);
  REQUIRE(ord.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(ord[i].exponents() == lq[i].exponents());

  // rejects a non-witness order
  RingDescriptor r4 = RingDescriptor::standard(4);
  MonomialIdeal bad(r4, {mono("x1*x2", r4), mono("x3*x4", r4)});
  CHECK_THROWS_AS(expansion_order(ExpandedRing(r4, ExpansionTuple::ones(4)), bad,
                                  {mono("x1*x2", r4), mono("x3*x4", r4)}),
                  std::invalid_argument);
}

TEST_CASE("decomposition function") {
  RingDescriptor r = RingDescriptor::standard(3, "y");
  auto order = power_gens_desc_lex(3, 2);
  MonomialIdeal P2(r, order);
  DecompositionFunction dec(P2, order);

  Monomial u = mono("y1*y2*y3", r);
  CHECK(dec.g(u) == mono("y1*y2", r));
  CHECK(dec.c(u) == mono("y3", r));
  // on a generator, g is the identity
  CHECK(dec.g(mono("y2*y3", r)) == mono("y2*y3", r));
  CHECK(dec.c(mono("y2*y3", r)).is_unit());
  CHECK_THROWS_AS(dec.g(mono("y3", r)), std::invalid_argument);
}

TEST_CASE("regular and non-regular decompositions") {
  RingDescriptor r = RingDescriptor::standard(3, "y");
  for (Exponent a = 1; a <= 3; ++a) {
    auto order = power_gens_desc_lex(3, a);
    CHECK(is_regular_decomposition(MonomialIdeal(r, order), order));
  }
  RingDescriptor r1 = RingDescriptor::standard(2);
  MonomialIdeal single(r1, {mono("x1*x2", r1)});
  CHECK(is_regular_decomposition(single, {mono("x1*x2", r1)}));

  // the path ideal (x1x2, x2x3, x3x4): linear quotients in this order, but
  // set(g(x2 * x3x4)) = set(x2x3) = {0} is not inside set(x3x4) = {1}
  RingDescriptor r4 = RingDescriptor::standard(4);
  std::vector<Monomial> path{mono("x1*x2", r4), mono("x2*x3", r4), mono("x3*x4", r4)};
  MonomialIdeal P(r4, path);
  REQUIRE(is_linear_quotients(P, path).holds);
  CHECK_FALSE(is_regular_decomposition(P, path));
}

TEST_CASE("expansion order keeps linear quotients on random witnesses") {
  std::mt19937_64 rng(5);
  int found = 0;
  while (found < 15) {
    int n = 2 + rng() % 3;
    RingDescriptor r = RingDescriptor::standard(n);
    std::vector<Monomial> gens;
    int count = 2 + rng() % 3;
    for (int i = 0; i < count; ++i) {
      std::vector<Exponent> e(n, 0);
      Exponent deg = 0;
      for (auto& x : e) {
        x = rng() % 3;
        deg += x;
      }
      if (deg == 0 || deg > 3) continue;
      gens.push_back(Monomial(e));
    }
    if (gens.empty()) continue;
    MonomialIdeal I(r, gens);
    auto order = find_linear_quotients_order(I, 6);
    if (!order) continue;
    ++found;
    std::vector<int> entries(n);
    for (auto& e : entries) e = 1 + rng() % 3;
    ExpandedRing er(r, ExpansionTuple(entries));
    auto star_order = expansion_order(er, I, *order);
    auto cert = is_linear_quotients(expand_ideal(er, I), star_order);
    CHECK(cert.holds);
    // each set(u_j) has as many elements as the colon ideal has generators
    for (size_t j = 1; j < star_order.size(); ++j) {
      std::vector<Monomial> quotients;
      for (size_t t = 0; t < j; ++t)
        quotients.push_back(
            quotient_exact(star_order[t], gcd(star_order[t], star_order[j])));
      MonomialIdeal q(er.flat(), quotients);
      CHECK(static_cast<int>(cert.sets[j].size()) == q.ngens());
    }
  }
}
