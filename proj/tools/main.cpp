#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "expansio/errors.hpp"
#include "expansio/expansion_resolution.hpp"
#include "expansio/homology.hpp"
#include "expansio/linear_quotients.hpp"
#include "expansio/verify_suites.hpp"
#include "json.hpp"

using namespace expansio;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;
constexpr int kExitResource = 4;

struct GlobalOptions {
  bool json = false;
  int field_char = 0;
};

nlohmann::json ideal_json(const MonomialIdeal& I) {
  nlohmann::json j;
  j["ring"] = I.ring().names();
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : I.gens()) gens.push_back(to_string(g, I.ring()));
  j["gens"] = gens;
  return j;
}

void print_ideal(const GlobalOptions& g, const MonomialIdeal& I) {
  if (g.json)
    std::cout << ideal_json(I).dump(2) << "\n";
  else
    std::cout << format_ideal(I);
}

ExpansionTuple tuple_for(const ProblemInstance& p, const std::vector<int>& override_entries) {
  if (!override_entries.empty()) {
    ExpansionTuple t(override_entries);
    if (t.size() != p.ring.nvars())
      throw std::invalid_argument("tuple length does not match the ring");
    return t;
  }
  if (p.tuple) return *p.tuple;
  throw std::invalid_argument("no tuple: add a 'tuple:' line or pass --tuple");
}

Exponent env_degree_override() {
  const char* v = std::getenv("EXPANSIO_MAX_DEGREE");
  if (!v) return -1;
  return std::strtoll(v, nullptr, 10);
}

std::string prime_string(const RingDescriptor& ring, const std::vector<int>& vars) {
  std::string s = "(";
  for (size_t i = 0; i < vars.size(); ++i) {
    if (i) s += ", ";
    s += ring.name(vars[i]);
  }
  return s + ")";
}

int cmd_expand(const GlobalOptions& g, const std::string& file,
               const std::vector<int>& tuple_override) {
  ProblemInstance p = load_problem(file);
  ExpandedRing er(p.ring, tuple_for(p, tuple_override));
  print_ideal(g, expand_ideal(er, p.ideal));
  return kExitOk;
}

int cmd_betti(const GlobalOptions& g, const std::string& file, std::string via,
              const std::string& of, const std::vector<int>& tuple_override) {
  ProblemInstance p = load_problem(file);
  if (p.ideal.is_zero()) throw std::invalid_argument("Betti numbers of the zero ideal");
  if (via.empty()) via = of == "ideal" ? "oracle" : "formula";

  BettiTable table;
  std::string header;
  if (of == "ideal") {
    if (via == "formula")
      throw std::invalid_argument(
          "--of ideal has no closed form; use --via oracle or --via total-complex");
    if (via == "total-complex")
      table = betti_of_minimal_complex(minimize(taylor_complex(p.ideal)));
    else
      table = tor_betti(p.ideal);
    header = "Betti numbers of the ideal (module I, not S/I)";
  } else {
    ExpansionTuple tuple = tuple_for(p, tuple_override);
    ExpansionBetti three = expansion_betti_three_ways(p.ideal, tuple);
    if (!three.agree()) {
      std::cerr << "betti: the three computation routes disagree\n";
      std::cerr << diff_betti(three.via_formula, three.via_oracle, "formula", "oracle");
      std::cerr << diff_betti(three.via_total_complex, three.via_oracle, "total-complex",
                              "oracle");
      return kExitVerify;
    }
    if (via == "oracle")
      table = three.via_oracle;
    else if (via == "total-complex")
      table = three.via_total_complex;
    else
      table = three.via_formula;
    header = "Betti numbers of the expansion (module I*, not S*/I*), via " + via;
  }
  if (g.json) {
    std::cout << betti_to_json(table) << "\n";
  } else {
    std::cout << "# " << header << "\n" << render_betti_grid(table);
    std::cout << "regularity " << regularity(table) << ", projective dimension "
              << projdim(table) << "\n";
  }
  return kExitOk;
}

int cmd_decompose(const GlobalOptions& g, const std::string& file) {
  ProblemInstance p = load_problem(file);
  auto comps = primary_decomposition(p.ideal);
  if (g.json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& pc : comps) {
      nlohmann::json c = ideal_json(pc.component);
      nlohmann::json rad = nlohmann::json::array();
      for (int v : pc.radical_prime) rad.push_back(p.ring.name(v));
      c["radical"] = rad;
      out.push_back(c);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "# " << comps.size() << " primary component(s)\n";
    for (const auto& pc : comps) {
      std::cout << "# radical " << prime_string(p.ring, pc.radical_prime) << "\n";
      std::cout << format_ideal(pc.component);
    }
  }
  return kExitOk;
}

int cmd_ass(const GlobalOptions& g, const std::string& file, bool infinity, int window,
            int cap) {
  ProblemInstance p = load_problem(file);
  std::set<std::vector<int>> primes;
  nlohmann::json extra;
  if (infinity) {
    auto r = ass_infinity(p.ideal, window, cap);
    if (!r.determined) {
      std::cerr << "ass: undetermined: Ass(S/I^s) did not stabilize for a window of "
                << window << " within s <= " << cap
                << " (a windowed heuristic; stabilization is only guaranteed asymptotically)\n";
      return kExitResource;
    }
    primes = r.primes;
    extra["stable_from"] = r.stable_from;
    if (!g.json)
      std::cout << "# stable set Ass(S/I^s) for s >= " << r.stable_from << " (window "
                << window << ", cap " << cap << ")\n";
  } else {
    primes = associated_primes(p.ideal);
  }
  bool unmixed = is_unmixed(p.ideal);
  int h = height(p.ideal);
  if (g.json) {
    nlohmann::json out;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& prime : primes) {
      nlohmann::json pj = nlohmann::json::array();
      for (int v : prime) pj.push_back(p.ring.name(v));
      arr.push_back(pj);
    }
    out["associated_primes"] = arr;
    out["height"] = h;
    if (unmixed) out["dim"] = p.ring.nvars() - h;
    if (!extra.empty()) out.update(extra);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& prime : primes) std::cout << prime_string(p.ring, prime) << "\n";
    std::cout << "# height " << h;
    if (unmixed)
      std::cout << ", dim S/I = " << p.ring.nvars() - h << " (unmixed)";
    else
      std::cout << " (mixed: dim not reported)";
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_radical(const GlobalOptions& g, const std::string& file) {
  print_ideal(g, radical(load_problem(file).ideal));
  return kExitOk;
}

int cmd_colon(const GlobalOptions& g, const std::string& file_i, const std::string& file_j) {
  ProblemInstance a = load_problem(file_i);
  ProblemInstance b = load_problem(file_j);
  print_ideal(g, colon(a.ideal, b.ideal));
  return kExitOk;
}

int cmd_intersect(const GlobalOptions& g, const std::vector<std::string>& files) {
  ProblemInstance first = load_problem(files[0]);
  MonomialIdeal acc = first.ideal;
  for (size_t i = 1; i < files.size(); ++i) acc = intersection(acc, load_problem(files[i]).ideal);
  print_ideal(g, acc);
  return kExitOk;
}

int cmd_symbolic_power(const GlobalOptions& g, int k, const std::string& file) {
  print_ideal(g, symbolic_power(load_problem(file).ideal, k));
  return kExitOk;
}

int cmd_linquot(const GlobalOptions& g, const std::string& file, bool expansion, int cap,
                const std::vector<int>& tuple_override) {
  ProblemInstance p = load_problem(file);
  auto order = find_linear_quotients_order(p.ideal, cap);
  auto print_certificate = [&](const RingDescriptor& ring, const MonomialIdeal& I,
                               const std::vector<Monomial>& ord) {
    auto cert = is_linear_quotients(I, ord);
    if (g.json) {
      nlohmann::json out;
      nlohmann::json js = nlohmann::json::array();
      for (size_t j = 0; j < ord.size(); ++j) {
        nlohmann::json e;
        e["generator"] = to_string(ord[j], ring);
        nlohmann::json s = nlohmann::json::array();
        for (int v : cert.sets[j]) s.push_back(ring.name(v));
        e["set"] = s;
        js.push_back(e);
      }
      out["order"] = js;
      std::cout << out.dump(2) << "\n";
    } else {
      for (size_t j = 0; j < ord.size(); ++j) {
        std::cout << to_string(ord[j], ring) << "  set = "
                  << prime_string(ring, cert.sets[j]) << "\n";
      }
    }
  };
  if (!order) {
    std::cout << (g.json ? "null\n" : "none\n");
    return kExitOk;
  }
  if (!expansion) {
    print_certificate(p.ring, p.ideal, *order);
    return kExitOk;
  }
  ExpandedRing er(p.ring, tuple_for(p, tuple_override));
  auto star_order = expansion_order(er, p.ideal, *order);
  print_certificate(er.flat(), expand_ideal(er, p.ideal), star_order);
  return kExitOk;
}

int cmd_resolve(const GlobalOptions& g, const std::string& file, bool expansion,
                const std::string& emit, const std::vector<int>& tuple_override) {
  ProblemInstance p = load_problem(file);
  if (p.ideal.is_zero()) throw std::invalid_argument("resolution of the zero ideal");
  auto emit_ranks = [&](const char* stem, const ChainComplex& c, const std::string& title) {
    if (g.json) {
      nlohmann::json ranks = nlohmann::json::array();
      for (const auto& m : c.modules) ranks.push_back(m.rank());
      std::cout << nlohmann::json{{"ranks", ranks}}.dump() << "\n";
    } else {
      std::cout << "# " << title << "\n";
      for (int i = 0; i <= c.length(); ++i)
        std::cout << "rank " << stem << "_" << i << " = " << c.modules[i].rank() << "\n";
    }
  };
  ChainComplex Fmin = minimize(taylor_complex(p.ideal));
  if (!expansion) {
    if (emit == "dot")
      throw std::invalid_argument("--emit dot needs --expansion (it renders the grid)");
    if (emit == "json")
      std::cout << complex_to_json(Fmin) << "\n";
    else
      emit_ranks("F", Fmin, "minimal free resolution of the ideal");
    return kExitOk;
  }
  ExpandedRing er(p.ring, tuple_for(p, tuple_override));
  DoubleComplex dc = double_complex(er, Fmin);
  if (emit == "dot") {
    std::cout << double_complex_dot(dc);
    return kExitOk;
  }
  ChainComplex total = total_complex(dc);
  if (emit == "json")
    std::cout << complex_to_json(total) << "\n";
  else
    emit_ranks("T", total, "minimal free resolution of the expansion (total complex)");
  return kExitOk;
}

int cmd_verify(const GlobalOptions& g, const std::vector<std::string>& files, bool random,
               std::uint64_t seed, int count, const std::string& suite) {
  SuiteOptions opt;
  opt.seed = seed;
  opt.count = count;
  opt.degree_bound_override = env_degree_override();
  opt.reproducer_dir = ".";

  std::vector<SuiteResult> results;
  if (!files.empty()) {
    for (const auto& f : files) results.push_back(verify_instance(load_problem(f), opt));
  } else if (random) {
    results = run_suites(suite, opt);
  } else {
    throw std::invalid_argument("verify needs problem files or --random");
  }

  bool ok = true;
  int total_checks = 0;
  for (const auto& r : results) {
    ok = ok && r.ok();
    total_checks += r.checks;
  }
  if (g.json) {
    nlohmann::json out;
    out["seed"] = seed;
    out["ok"] = ok;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) {
      nlohmann::json rj;
      rj["suite"] = r.name;
      rj["instances"] = r.instances;
      rj["checks"] = r.checks;
      rj["failures"] = r.failures;
      arr.push_back(rj);
    }
    out["results"] = arr;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "seed " << seed << "\n";
    for (const auto& r : results) std::cout << r.summary() << "\n";
    std::cout << (ok ? "VERIFY PASS" : "VERIFY FAIL") << " (" << total_checks << " checks)\n";
  }
  return ok ? kExitOk : kExitVerify;
}

int cmd_edge_ideal(const GlobalOptions& g, const std::string& file,
                   const std::vector<std::string>& duplicates) {
  Graph graph = parse_graph(read_file(file));
  std::vector<int> entries(graph.nvertices, 1);
  for (const auto& spec : duplicates) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("--duplicate expects j:k");
    int j = std::stoi(spec.substr(0, colon));
    int k = std::stoi(spec.substr(colon + 1));
    if (j < 1 || j > graph.nvertices) throw std::invalid_argument("--duplicate: no such vertex");
    if (k < 1) throw std::invalid_argument("--duplicate: count must be positive");
    entries[j - 1] = k;
  }
  MonomialIdeal I = edge_ideal(graph);
  ExpansionTuple tuple(entries);
  if (tuple.all_ones()) {
    print_ideal(g, I);
    return kExitOk;
  }
  ExpandedRing er(I.ring(), tuple);
  MonomialIdeal direct = duplicated_edge_ideal(graph, er);
  if (!(direct == expand_ideal(er, I))) {
    std::cerr << "edge-ideal: duplication does not match the expansion (internal check)\n";
    return kExitVerify;
  }
  print_ideal(g, direct);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"expansio: expansions of monomial ideals and their resolutions"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--field-char", g.field_char,
                 "coefficient field characteristic (only 0 is supported)");

  std::string file, file_j, via, of = "expansion", emit = "ranks", suite = "all";
  std::vector<std::string> files, duplicates;
  std::vector<int> tuple_override;
  bool expansion = false, random = false, infinity = false;
  int k = 1, cap = 8, window = 2, power_cap = 12, count = 50;
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;

  auto* c_expand = app.add_subcommand("expand", "expand an ideal along its tuple");
  c_expand->add_option("file", file)->required();
  c_expand->add_option("--tuple", tuple_override, "override the tuple");

  auto* c_betti = app.add_subcommand("betti", "Betti table of the ideal or its expansion");
  c_betti->add_option("file", file)->required();
  c_betti->add_option("--via", via)->check(CLI::IsMember({"formula", "oracle", "total-complex"}));
  c_betti->add_option("--of", of)->check(CLI::IsMember({"ideal", "expansion"}));
  c_betti->add_option("--tuple", tuple_override);

  auto* c_dec = app.add_subcommand("decompose", "irredundant primary decomposition");
  c_dec->add_option("file", file)->required();

  auto* c_ass = app.add_subcommand("ass", "associated primes (optionally the stable set)");
  c_ass->add_option("file", file)->required();
  c_ass->add_flag("--infinity", infinity, "windowed stable set of Ass(S/I^s)");
  c_ass->add_option("--window", window);
  c_ass->add_option("--cap", power_cap);

  auto* c_rad = app.add_subcommand("radical", "radical of the ideal");
  c_rad->add_option("file", file)->required();

  auto* c_colon = app.add_subcommand("colon", "colon ideal I : J");
  c_colon->add_option("file_i", file)->required();
  c_colon->add_option("file_j", file_j)->required();

  auto* c_int = app.add_subcommand("intersect", "intersection of ideals");
  c_int->add_option("files", files)->expected(2, -1)->required();

  auto* c_sym = app.add_subcommand("symbolic-power", "k-th symbolic power");
  c_sym->add_option("k", k)->required()->check(CLI::PositiveNumber);
  c_sym->add_option("file", file)->required();

  auto* c_lq = app.add_subcommand("linquot", "linear-quotients order and set(u) certificates");
  c_lq->add_option("file", file)->required();
  c_lq->add_flag("--expansion", expansion, "order the expansion instead");
  c_lq->add_option("--cap", cap, "generator cap for the search");
  c_lq->add_option("--tuple", tuple_override);

  auto* c_res = app.add_subcommand("resolve", "minimal free resolution artifacts");
  c_res->add_option("file", file)->required();
  c_res->add_flag("--expansion", expansion, "resolve the expansion via the double complex");
  c_res->add_option("--emit", emit)->check(CLI::IsMember({"ranks", "json", "dot"}));
  c_res->add_option("--tuple", tuple_override);

  auto* c_ver = app.add_subcommand("verify", "run the verification suites");
  c_ver->add_option("files", files, "problem files to verify");
  c_ver->add_flag("--random", random, "run the seeded random suites");
  c_ver->add_option("--seed", seed);
  c_ver->add_option("--count", count);
  c_ver->add_option("--suite", suite)
      ->check(CLI::IsMember({"lemma11", "decomp", "functor", "resolution", "all"}));

  auto* c_edge = app.add_subcommand("edge-ideal", "edge ideal of a graph, with duplication");
  c_edge->add_option("graphfile", file)->required();
  c_edge->add_option("--duplicate", duplicates, "vertex duplication counts j:k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (g.field_char != 0) {
      std::cerr << "only characteristic 0 is supported (exact rationals)\n";
      return kExitParse;
    }
    if (c_expand->parsed()) return cmd_expand(g, file, tuple_override);
    if (c_betti->parsed()) return cmd_betti(g, file, via, of, tuple_override);
    if (c_dec->parsed()) return cmd_decompose(g, file);
    if (c_ass->parsed()) return cmd_ass(g, file, infinity, window, power_cap);
    if (c_rad->parsed()) return cmd_radical(g, file);
    if (c_colon->parsed()) return cmd_colon(g, file, file_j);
    if (c_int->parsed()) return cmd_intersect(g, files);
    if (c_sym->parsed()) return cmd_symbolic_power(g, k, file);
    if (c_lq->parsed()) return cmd_linquot(g, file, expansion, cap, tuple_override);
    if (c_res->parsed()) return cmd_resolve(g, file, expansion, emit, tuple_override);
    if (c_ver->parsed()) return cmd_verify(g, files, random, seed, count, suite);
    if (c_edge->parsed()) return cmd_edge_ideal(g, file, duplicates);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const resource_limit_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
  return kExitOk;
}
