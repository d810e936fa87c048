#include "expansio/monomial.hpp"

#include <cctype>

#include "expansio/errors.hpp"

namespace expansio {

namespace {

void require_same_ring(const Monomial& u, const Monomial& v) {
  if (u.nvars() != v.nvars())
    throw std::invalid_argument("monomials from different rings");
}

}  // namespace

bool divides(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  for (int i = 0; i < u.nvars(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  std::vector<Exponent> e(u.nvars());
  for (int i = 0; i < u.nvars(); ++i) e[i] = std::max(u[i], v[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  std::vector<Exponent> e(u.nvars());
  for (int i = 0; i < u.nvars(); ++i) e[i] = std::min(u[i], v[i]);
  return Monomial(std::move(e));
}

Monomial multiply(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  std::vector<Exponent> e(u.nvars());
  for (int i = 0; i < u.nvars(); ++i) e[i] = u[i] + v[i];
  return Monomial(std::move(e));
}

Monomial quotient_exact(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  std::vector<Exponent> e(u.nvars());
  for (int i = 0; i < u.nvars(); ++i) {
    if (v[i] > u[i]) throw std::invalid_argument("quotient_exact: divisor does not divide");
    e[i] = u[i] - v[i];
  }
  return Monomial(std::move(e));
}

Exponent total_degree(const Monomial& u) {
  Exponent d = 0;
  for (int i = 0; i < u.nvars(); ++i) d += u[i];
  return d;
}

std::vector<int> support(const Monomial& u) {
  std::vector<int> s;
  for (int i = 0; i < u.nvars(); ++i)
    if (u[i] > 0) s.push_back(i);
  return s;
}

Cmp lex_compare(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  for (int i = 0; i < u.nvars(); ++i) {
    if (u[i] != v[i]) return u[i] < v[i] ? Cmp::LT : Cmp::GT;
  }
  return Cmp::EQ;
}

Cmp lex_compare(const Monomial& u, const Monomial& v, std::span<const int> var_order) {
  require_same_ring(u, v);
  if (static_cast<int>(var_order.size()) != u.nvars())
    throw std::invalid_argument("variable order has wrong length");
  for (int k = 0; k < u.nvars(); ++k) {
    int i = var_order[k];
    if (u[i] != v[i]) return u[i] < v[i] ? Cmp::LT : Cmp::GT;
  }
  return Cmp::EQ;
}

bool canonical_less(const Monomial& u, const Monomial& v) {
  Exponent du = total_degree(u), dv = total_degree(v);
  if (du != dv) return du < dv;
  return lex_compare(u, v) == Cmp::GT;  // lex-greater first within a degree
}

std::string to_string(const Monomial& u, const RingDescriptor& ring) {
  if (u.nvars() != ring.nvars())
    throw std::invalid_argument("monomial does not live in the given ring");
  if (u.is_unit()) return "1";
  std::string out;
  for (int i = 0; i < u.nvars(); ++i) {
    if (u[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (u[i] > 1) {
      out += '^';
      out += std::to_string(u[i]);
    }
  }
  return out;
}

Monomial parse_monomial(const std::string& text, const RingDescriptor& ring,
                        int line, int col_offset) {
  std::vector<Exponent> e(ring.nvars(), 0);
  size_t pos = 0;
  auto col = [&]() { return col_offset + static_cast<int>(pos) + 1; };
  auto skip_ws = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_ws();
  if (pos >= text.size()) throw parse_error("empty monomial", line, col());

  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) {
      if (first) throw parse_error("empty monomial", line, col());
      throw parse_error("trailing '*' in monomial", line, col());
    }
    if (text[pos] == '1' &&
        (pos + 1 >= text.size() ||
         !(std::isalnum(static_cast<unsigned char>(text[pos + 1])) || text[pos + 1] == '_'))) {
      // unit factor
      ++pos;
    } else {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      if (pos == start)
        throw parse_error(std::string("unexpected character '") + text[pos] + "' in monomial",
                          line, col());
      std::string name = text.substr(start, pos - start);
      int var = ring.find(name);
      if (var < 0)
        throw parse_error("unknown variable '" + name + "'", line,
                          col_offset + static_cast<int>(start) + 1);
      Exponent power = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        size_t dstart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == dstart) throw parse_error("expected exponent after '^'", line, col());
        power = std::stoll(text.substr(dstart, pos - dstart));
        if (power < 1) throw parse_error("exponent must be positive", line, col());
      }
      e[var] += power;
    }
    first = false;
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '*')
      throw parse_error(std::string("unexpected character '") + text[pos] + "' in monomial",
                        line, col());
    ++pos;
  }
  return Monomial(std::move(e));
}

}  // namespace expansio
