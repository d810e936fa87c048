#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "expansio/errors.hpp"
#include "expansio/monomial.hpp"

using namespace expansio;

namespace {

RingDescriptor R3 = RingDescriptor::standard(3);

Monomial mono(const std::string& s, const RingDescriptor& r = R3) {
  return parse_monomial(s, r);
}

}  // namespace

TEST_CASE("divisibility") {
  CHECK(divides(mono("x1*x2"), mono("x1^2*x2*x3")));
  CHECK_FALSE(divides(mono("x3^2"), mono("x1*x2")));
  CHECK(divides(mono("1"), mono("x1*x2")));
  CHECK(divides(mono("1"), mono("1")));
  CHECK_THROWS_AS(divides(mono("x1"), Monomial::unit(2)), std::invalid_argument);
}

TEST_CASE("lcm gcd multiply quotient") {
  CHECK(lcm(mono("x1*x2"), mono("x3^2")) == mono("x1*x2*x3^2"));
  CHECK(gcd(mono("x1^2*x2"), mono("x1*x3")) == mono("x1"));
  CHECK(quotient_exact(mono("x1^2*x2"), mono("x1")) == mono("x1*x2"));
  CHECK(multiply(mono("x1"), mono("x2")) == mono("x1*x2"));
  CHECK_THROWS_AS(quotient_exact(mono("x1"), mono("x2")), std::invalid_argument);
}

TEST_CASE("lex comparison") {
  RingDescriptor R2 = RingDescriptor::standard(2);
  CHECK(lex_compare(mono("x1*x2", R2), mono("x2^2", R2)) == Cmp::GT);
  CHECK(lex_compare(mono("x1*x2", R2), mono("x1*x2", R2)) == Cmp::EQ);
  CHECK(lex_compare(mono("x1*x3"), mono("x1*x2")) == Cmp::LT);
  // permuted priority x3 > x2 > x1 reverses the last comparison
  std::vector<int> order{2, 1, 0};
  CHECK(lex_compare(mono("x1*x3"), mono("x1*x2"), order) == Cmp::GT);
}

TEST_CASE("degree and support") {
  RingDescriptor R6 = RingDescriptor::standard(6);
  Monomial u = mono("x1*x4*x6", R6);
  CHECK(total_degree(u) == 3);
  CHECK(support(u) == std::vector<int>{0, 3, 5});
  CHECK(total_degree(Monomial::unit(6)) == 0);
  CHECK(support(Monomial::unit(6)).empty());
  CHECK(total_degree(mono("x3^2")) == 2);
  CHECK(support(mono("x3^2")) == std::vector<int>{2});
}

TEST_CASE("formatting") {
  CHECK(to_string(mono("x1^2*x3"), R3) == "x1^2*x3");
  CHECK(to_string(Monomial::unit(3), R3) == "1");
  CHECK(to_string(mono("x2"), R3) == "x2");
  // factors come out in ascending variable order regardless of input order
  CHECK(to_string(mono("x3*x1"), R3) == "x1*x3");
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(mono("x9"), parse_error);
  CHECK_THROWS_AS(mono("x1^"), parse_error);
  CHECK_THROWS_AS(mono("x1**x2"), parse_error);
  CHECK_THROWS_AS(mono(""), parse_error);
  CHECK_THROWS_AS(mono("x1^0"), parse_error);
  try {
    parse_monomial("x1*zz", R3, 4, 10);
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 14);
  }
}

TEST_CASE("properties on random monomials") {
  std::mt19937_64 rng(42);
  auto random_monomial = [&](int n) {
    std::vector<Exponent> e(n);
    for (auto& x : e) x = rng() % 4;
    return Monomial(e);
  };
  for (int t = 0; t < 500; ++t) {
    int n = 1 + rng() % 5;
    Monomial u = random_monomial(n), v = random_monomial(n);
    // mutual divisibility means equality
    if (divides(u, v) && divides(v, u)) CHECK(u == v);
    // max + min = sum, componentwise
    CHECK(multiply(lcm(u, v), gcd(u, v)) == multiply(u, v));
    // lex is a total order
    Cmp c = lex_compare(u, v);
    CHECK(((c == Cmp::EQ) == (u == v)));
    if (c == Cmp::LT) CHECK(lex_compare(v, u) == Cmp::GT);
    // round trip through the text form
    RingDescriptor r = RingDescriptor::standard(n);
    CHECK(parse_monomial(to_string(u, r), r) == u);
  }
}
