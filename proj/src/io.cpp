#include "expansio/io.hpp"

#include <fstream>
#include <sstream>

#include "expansio/errors.hpp"
#include "json.hpp"

namespace expansio {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

ProblemInstance parse_problem(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<RingDescriptor> ring;
  std::optional<std::vector<Monomial>> gens;
  std::optional<ExpansionTuple> tuple;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    auto colon = body.find(':');
    if (colon == std::string::npos)
      throw parse_error("expected 'key: value'", lineno, 1);
    std::string key = body.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    std::string value = body.substr(colon + 1);
    int value_col = static_cast<int>(colon) + 1;

    if (key == "ring") {
      if (ring) throw parse_error("duplicate ring line", lineno, 1);
      auto names = split_ws(value);
      if (names.empty()) throw parse_error("ring needs at least one variable", lineno, value_col);
      try {
        ring = RingDescriptor(names);
      } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), lineno, value_col);
      }
    } else if (key == "ideal") {
      if (!ring) throw parse_error("ideal line before ring line", lineno, 1);
      if (gens) throw parse_error("duplicate ideal line", lineno, 1);
      gens.emplace();
      if (!blank(value)) {
        size_t start = 0;
        while (start <= value.size()) {
          size_t comma = value.find(',', start);
          std::string piece =
              value.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
          if (!blank(piece))
            gens->push_back(parse_monomial(piece, *ring, lineno,
                                           value_col + static_cast<int>(start)));
          else if (comma != std::string::npos)
            throw parse_error("empty generator between commas", lineno,
                              value_col + static_cast<int>(start));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      }
    } else if (key == "tuple") {
      if (!ring) throw parse_error("tuple line before ring line", lineno, 1);
      if (tuple) throw parse_error("duplicate tuple line", lineno, 1);
      auto toks = split_ws(value);
      std::vector<int> entries;
      for (const auto& t : toks) {
        try {
          entries.push_back(std::stoi(t));
        } catch (const std::exception&) {
          throw parse_error("bad tuple entry '" + t + "'", lineno, value_col);
        }
      }
      try {
        tuple = ExpansionTuple(entries);
      } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), lineno, value_col);
      }
      if (tuple->size() != ring->nvars())
        throw parse_error("tuple length does not match ring", lineno, value_col);
    } else {
      throw parse_error("unknown key '" + key + "'", lineno, 1);
    }
  }
  if (!ring) throw parse_error("missing ring line", lineno + 1, 1);
  if (!gens) throw parse_error("missing ideal line", lineno + 1, 1);
  ProblemInstance p{*ring, MonomialIdeal(*ring, std::move(*gens)), std::move(tuple)};
  return p;
}

ProblemInstance load_problem(const std::string& path) {
  try {
    return parse_problem(read_file(path));
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what(), e.line(), e.column());
  }
}

std::string format_ideal(const MonomialIdeal& I) {
  std::ostringstream out;
  out << "ring:";
  for (const auto& n : I.ring().names()) out << " " << n;
  out << "\nideal:";
  for (size_t i = 0; i < I.gens().size(); ++i)
    out << (i ? ", " : " ") << to_string(I.gens()[i], I.ring());
  out << "\n";
  return out.str();
}

std::string format_problem(const ProblemInstance& p) {
  std::ostringstream out;
  out << format_ideal(p.ideal);
  if (p.tuple) {
    out << "tuple:";
    for (int v : p.tuple->entries()) out << " " << v;
    out << "\n";
  }
  return out.str();
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Graph g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    if (body.find("vertices:") != std::string::npos) {
      auto toks = split_ws(body.substr(body.find(':') + 1));
      if (toks.size() != 1) throw parse_error("bad vertices line", lineno, 1);
      g.nvertices = std::stoi(toks[0]);
      if (g.nvertices < 1) throw parse_error("vertex count must be positive", lineno, 1);
      continue;
    }
    auto toks = split_ws(body);
    if (toks.size() != 2) throw parse_error("expected an edge 'u v'", lineno, 1);
    int u, v;
    try {
      u = std::stoi(toks[0]);
      v = std::stoi(toks[1]);
    } catch (const std::exception&) {
      throw parse_error("bad vertex label", lineno, 1);
    }
    if (u < 1 || v < 1) throw parse_error("vertex labels are 1-based", lineno, 1);
    if (u == v) throw parse_error("self-loop rejected", lineno, 1);
    if (u > v) std::swap(u, v);
    g.edges.push_back({u - 1, v - 1});
    g.nvertices = std::max({g.nvertices, u, v});
  }
  if (g.nvertices == 0) g.nvertices = 1;  // empty graph: a single isolated vertex
  return g;
}

MonomialIdeal edge_ideal(const Graph& g) {
  RingDescriptor ring = RingDescriptor::standard(g.nvertices);
  std::vector<Monomial> gens;
  for (const auto& [u, v] : g.edges)
    gens.push_back(multiply(Monomial::variable(g.nvertices, u),
                            Monomial::variable(g.nvertices, v)));
  return MonomialIdeal(std::move(ring), std::move(gens));
}

MonomialIdeal duplicated_edge_ideal(const Graph& g, const ExpandedRing& er) {
  MonomialIdeal out = MonomialIdeal::zero(er.flat());
  for (const auto& [u, v] : g.edges)
    out = sum(out, product(er.block_prime(u), er.block_prime(v)));
  return out;
}

std::string complex_to_json(const ChainComplex& C) {
  nlohmann::json j;
  j["ring"] = C.ring.names();
  j["modules"] = nlohmann::json::array();
  for (const auto& m : C.modules) {
    nlohmann::json shifts = nlohmann::json::array();
    for (const auto& s : m.shifts) shifts.push_back(s.exponents());
    j["modules"].push_back({{"rank", m.rank()}, {"shifts", shifts}});
  }
  j["differentials"] = nlohmann::json::array();
  for (const auto& d : C.diffs) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < d.source().rank(); ++i) {
      for (const auto& [row, lam] : d.cols()[i]) {
        std::vector<Exponent> delta(d.source().shifts[i].nvars());
        for (int v = 0; v < d.source().shifts[i].nvars(); ++v)
          delta[v] = d.source().shifts[i][v] - d.target().shifts[row][v];
        entries.push_back({{"row", row},
                           {"col", i},
                           {"lambda", to_string(lam)},
                           {"monomial", delta}});
      }
    }
    j["differentials"].push_back(entries);
  }
  return j.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace expansio
