// Acceptance suite: each numbered check prints one PASS/FAIL line and the
// process exits nonzero if any fails. The CLI binary path arrives as argv[1].
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "expansio/expansion_resolution.hpp"
#include "expansio/homology.hpp"
#include "expansio/linear_quotients.hpp"
#include "expansio/random_instances.hpp"
#include "expansio/verify_suites.hpp"

using namespace expansio;

namespace {

std::string g_binary;
int g_failures = 0;

void criterion(int number, const std::string& label,
               const std::function<std::pair<bool, std::string>()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    auto [o, d] = body();
    ok = o;
    detail = d;
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!ok) ++g_failures;
  std::printf("criterion %d [%s]: %s (%.2fs)%s\n", number, label.c_str(),
              ok ? "PASS" : "FAIL", secs, detail.empty() ? "" : ("  " + detail).c_str());
  std::fflush(stdout);
}

std::pair<int, std::string> run_cli(const std::string& args) {
  std::string cmd = g_binary + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  return {WEXITSTATUS(pclose(pipe)), out};
}

constexpr std::uint64_t kSeed = 0x5eed0001u;

RingDescriptor R3 = RingDescriptor::standard(3);

MonomialIdeal worked_ideal() {
  return MonomialIdeal(R3, {parse_monomial("x1*x2", R3), parse_monomial("x3^2", R3)});
}

// 1. The worked expansion through the CLI, byte-exact, under a second.
std::pair<bool, std::string> criterion1() {
  write_file("acceptance_worked.ideal", "ring: x1 x2 x3\nideal: x1*x2, x3^2\ntuple: 1 3 2\n");
  auto [code, out] = run_cli("expand acceptance_worked.ideal");
  const std::string expected =
      "ring: x1_1 x2_1 x2_2 x2_3 x3_1 x3_2\n"
      "ideal: x1_1*x2_1, x1_1*x2_2, x1_1*x2_3, x3_1^2, x3_1*x3_2, x3_2^2\n";
  if (code != 0) return {false, "exit code " + std::to_string(code)};
  if (out != expected) return {false, "unexpected output:\n" + out};
  return {true, ""};
}

// 2. The operation-compatibility identities on 200 seeded random pairs.
std::pair<bool, std::string> criterion2() {
  SuiteOptions opt;
  opt.seed = kSeed;
  opt.count = 200;
  auto r = suite_expansion_identities(opt);
  return {r.ok(), r.ok() ? std::to_string(r.checks) + " checks"
                         : r.failures.front()};
}

// 3. Primary decomposition and Ass transfer on 100 seeded ideals.
std::pair<bool, std::string> criterion3() {
  SuiteOptions opt;
  opt.seed = kSeed;
  opt.count = 100;
  auto r = suite_decomposition(opt);
  return {r.ok(), r.ok() ? std::to_string(r.checks) + " checks"
                         : r.failures.front()};
}

// 4. Closed-form prime-power Betti numbers vs the Tor oracle and the
// resolution ranks, for all block sizes <= 4 and exponents <= 3.
std::pair<bool, std::string> criterion4() {
  int checks = 0;
  for (int r = 1; r <= 4; ++r) {
    RingDescriptor ring = RingDescriptor::standard(r, "y");
    VariableBlock block;
    for (int v = 0; v < r; ++v) block.vars.push_back(v);
    std::vector<Monomial> vars;
    for (int v = 0; v < r; ++v) vars.push_back(Monomial::variable(r, v));
    MonomialIdeal P(ring, vars);
    for (Exponent s = 1; s <= 3; ++s) {
      PrimePowerResolution G(ring, block, s);
      BettiTable oracle = tor_betti(power(P, s));
      auto poly = betti_polynomial(oracle);
      int pd = std::max<int>(G.complex().length(), static_cast<int>(poly.size()) - 1);
      for (int j = 0; j <= pd; ++j) {
        Exponent formula =
            binomial_coeff(r + s - 1, r - j - 1) * binomial_coeff(s + j - 1, j);
        Exponent oracle_beta = j < static_cast<int>(poly.size()) ? poly[j] : 0;
        Exponent rank = j <= G.complex().length() ? G.complex().modules[j].rank() : 0;
        ++checks;
        if (formula != oracle_beta || formula != rank)
          return {false, "mismatch at r=" + std::to_string(r) + " s=" + std::to_string(s) +
                             " j=" + std::to_string(j)};
      }
      if (r == 3 && s == 2) {
        if (poly != std::vector<Exponent>{6, 8, 3})
          return {false, "(r,s)=(3,2) is not (6,8,3)"};
      }
    }
  }
  return {true, std::to_string(checks) + " checks"};
}

// 5. The Betti sum formula = total-complex ranks = Tor oracle on 50 seeded
// instances, with the worked instance pinned after oracle confirmation.
std::pair<bool, std::string> criterion5() {
  // pinned instance, oracle first
  MonomialIdeal I = worked_ideal();
  ExpansionTuple tuple({1, 3, 2});
  ExpandedRing er(R3, tuple);
  BettiTable oracle = tor_betti(expand_ideal(er, I));
  if (betti_polynomial(oracle) != std::vector<Exponent>{6, 14, 16, 9, 2})
    return {false, "oracle does not confirm (6,14,16,9,2)"};
  if (regularity(oracle) != 3 || projdim(oracle) != 4)
    return {false, "oracle does not confirm reg 3 / projdim 4"};
  ExpansionBetti three = expansion_betti_three_ways(I, tuple);
  if (!three.agree() || !three.via_oracle.total_equal(oracle))
    return {false, "routes disagree on the pinned instance"};

  InstanceGenerator gen(kSeed);
  int done = 0, checks = 0;
  while (done < 50) {
    auto inst = gen.bounded_instance(10, 400);
    ++done;
    ExpandedRing ering(inst.ideal.ring(), inst.tuple);
    ChainComplex Fmin = minimize(taylor_complex(inst.ideal));
    ExpansionBetti b = expansion_betti_three_ways(inst.ideal, inst.tuple);
    ++checks;
    if (!b.agree()) return {false, "route disagreement on instance " + std::to_string(done)};
    auto pr = projdim_and_reg(ering, Fmin);
    BettiTable src = tor_betti(inst.ideal);
    ++checks;
    if (regularity(src) != regularity(b.via_oracle)) return {false, "reg(I) != reg(I*)"};
    ++checks;
    if (pr.reg != regularity(b.via_oracle)) return {false, "reg formula mismatch"};
    ++checks;
    if (pr.projdim != projdim(b.via_oracle)) return {false, "projdim formula mismatch"};
  }
  return {true, std::to_string(done) + " seeded instances + pinned, " +
                    std::to_string(checks) + " checks"};
}

// 6. Degree-wise acyclicity of F* and full verification of T(C), on the
// pinned instance and a seeded batch.
std::pair<bool, std::string> criterion6() {
  InstanceGenerator gen(kSeed + 6);
  std::vector<std::pair<MonomialIdeal, ExpansionTuple>> instances;
  instances.push_back({worked_ideal(), ExpansionTuple({1, 3, 2})});
  for (int i = 0; i < 6; ++i) {
    auto inst = gen.bounded_instance(10, 250);
    instances.push_back({inst.ideal, inst.tuple});
  }
  for (size_t i = 0; i < instances.size(); ++i) {
    const auto& [I, tuple] = instances[i];
    ExpandedRing er(I.ring(), tuple);
    ChainComplex Fmin = minimize(taylor_complex(I));
    BettiTable src = betti_of_minimal_complex(Fmin);
    Exponent bound = regularity(src) + Fmin.length() + 2;
    auto rep = verify_expanded_resolution(er, expand_complex(er, Fmin), I, bound, 2,
                                          kSeed + i);
    if (!rep.ok) return {false, "F* verification failed: " + rep.issues.front()};

    ChainComplex T = total_complex(double_complex(er, Fmin));
    if (!is_minimal(T)) return {false, "T(C) not minimal on instance " + std::to_string(i)};
    MonomialIdeal Istar = expand_ideal(er, I);
    BettiTable tb = betti_of_minimal_complex(T);
    auto rep2 = verify_resolution(T, Istar, regularity(tb) + T.length() + 2);
    if (!rep2.ok) return {false, "T(C) verification failed: " + rep2.issues.front()};
  }
  return {true, std::to_string(instances.size()) + " instances"};
}

// 7. The lifting laws, sampled per block size.
std::pair<bool, std::string> criterion7() {
  InstanceGenerator gen(kSeed + 7);
  int checks = 0;
  for (int r = 1; r <= 4; ++r) {
    RingDescriptor ring = RingDescriptor::standard(r, "y");
    VariableBlock block;
    for (int v = 0; v < r; ++v) block.vars.push_back(v);
    std::map<Exponent, PrimePowerResolution> res;
    for (Exponent a = 0; a <= 4; ++a) res.emplace(a, PrimePowerResolution(ring, block, a));
    for (int t = 0; t < 100; ++t) {
      Exponent a = gen.uniform(0, 4);
      Exponent b = gen.uniform(0, static_cast<int>(a));
      Exponent c = gen.uniform(0, static_cast<int>(b));
      const auto& A = res.at(a);
      const auto& B = res.at(b);
      const auto& C = res.at(c);
      ChainMap ab = prime_power_lifting(A, B);
      ChainMap bc = prime_power_lifting(B, C);
      ChainMap ac = prime_power_lifting(A, C);
      std::string why;
      ++checks;
      if (!is_chain_map(A.complex(), B.complex(), ab, &why))
        return {false, "lifting not a chain map: " + why};
      ChainMap composed = compose(bc, ab);
      for (size_t s = 0; s < ac.parts.size(); ++s) {
        ++checks;
        if (!(composed.parts[s] == ac.parts[s])) return {false, "composition law fails"};
      }
      if (b < a) {
        for (const auto& part : ab.parts)
          for (int i = 0; i < part.source().rank(); ++i)
            for (const auto& [j, v] : part.cols()[i]) {
              ++checks;
              if (part.source().shifts[i] == part.target().shifts[j])
                return {false, "strict lifting has a unit entry"};
            }
      }
      if (a >= 1) {
        // decomposition-function identity, sampled
        const auto& gens = A.generators();
        Monomial u = gens[gen.uniform(0, static_cast<int>(gens.size()) - 1)];
        int tv = gen.uniform(0, r - 1);
        Exponent bb = std::max<Exponent>(b, 1);
        Monomial xtu = multiply(u, Monomial::variable(r, tv));
        Monomial lhs = block_decomposition_g(ring, block, bb,
                                             block_decomposition_g(ring, block, a, xtu));
        Monomial rhs = block_decomposition_g(
            ring, block, bb,
            multiply(Monomial::variable(r, tv), block_decomposition_g(ring, block, bb, u)));
        ++checks;
        if (!(lhs == rhs)) return {false, "decomposition-function identity fails"};
      }
    }
  }
  return {true, std::to_string(checks) + " checks"};
}

// 8. Linear-quotients transfer on 50 seeded witnesses; linearity transfer on
// the equigenerated ones.
std::pair<bool, std::string> criterion8() {
  InstanceGenerator gen(kSeed + 8);
  int done = 0, linear_checked = 0;
  while (done < 50) {
    MonomialIdeal I = gen.random_linear_quotients_ideal(4, 3, done % 2 == 0);
    ExpansionTuple tuple = gen.random_tuple(I.ring().nvars());
    ExpandedRing er(I.ring(), tuple);
    MonomialIdeal Istar = expand_ideal(er, I);
    if (Istar.ngens() > 16) continue;
    auto order = find_linear_quotients_order(I);
    if (!order) return {false, "generator lost its witness"};
    auto star_order = expansion_order(er, I, *order);
    if (!is_linear_quotients(Istar, star_order).holds)
      return {false, "expansion order lost linear quotients"};
    ++done;

    Exponent d = total_degree(I.gens().front());
    bool equigen = true;
    for (const auto& g : I.gens())
      if (total_degree(g) != d) equigen = false;
    if (equigen && Istar.ngens() <= 12) {
      bool src_linear = is_linear_table(tor_betti(I), d);
      bool star_linear = is_linear_table(tor_betti(Istar), d);
      if (src_linear != star_linear) return {false, "d-linearity transfer fails"};
      if (!src_linear) return {false, "equigenerated LQ ideal is not d-linear"};
      ++linear_checked;
    }
  }
  return {true, "50 witnesses, " + std::to_string(linear_checked) + " linearity checks"};
}

// 9. The extremal-shift example and the restricted projdim formula.
std::pair<bool, std::string> criterion9() {
  RingDescriptor r6 = RingDescriptor::standard(6);
  std::vector<Monomial> gens;
  for (const char* s : {"x1*x4*x6", "x2*x4*x6", "x3*x4*x5", "x3*x4*x6"})
    gens.push_back(parse_monomial(s, r6));
  MonomialIdeal I(r6, gens);
  ChainComplex F = minimize(taylor_complex(I));
  auto ext = extremal_shifts(F);
  Monomial target = parse_monomial("x3*x4*x5*x6", r6);
  bool found = false;
  for (const auto& [i, shift] : ext)
    if (i == 1 && shift == target) found = true;
  if (!found) return {false, "shift (0,0,1,1,1,1) at degree 1 is not extremal"};

  InstanceGenerator gen(kSeed + 9);
  for (int t = 0; t < 30; ++t) {
    auto inst = gen.bounded_instance(12, 0);
    ExpandedRing er(inst.ideal.ring(), inst.tuple);
    ChainComplex Fmin = minimize(taylor_complex(inst.ideal));
    if (projdim_from_extremal_shifts(er, Fmin) != projdim_and_reg(er, Fmin).projdim)
      return {false, "restricted projdim disagrees with the full maximum"};
  }
  // the example ideal too, over a few tuples
  for (int t = 0; t < 5; ++t) {
    std::vector<int> entries(6);
    for (auto& e : entries) e = gen.uniform(1, 3);
    ExpandedRing er(r6, ExpansionTuple(entries));
    if (projdim_from_extremal_shifts(er, F) != projdim_and_reg(er, F).projdim)
      return {false, "restricted projdim disagrees on the example ideal"};
  }
  return {true, "example + 35 seeded instances"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-expansio-binary>\n");
    return 1;
  }
  g_binary = argv[1];

  criterion(1, "worked expansion via the CLI", criterion1);
  criterion(2, "operation identities, 200 seeded pairs", criterion2);
  criterion(3, "primary decomposition transfer, 100 seeded ideals", criterion3);
  criterion(4, "prime-power closed form = oracle = ranks", criterion4);
  criterion(5, "Betti sum formula = total complex = oracle, 50 instances", criterion5);
  criterion(6, "degree-wise acyclicity and T(C) verification", criterion6);
  criterion(7, "lifting laws, 100 samples per block size", criterion7);
  criterion(8, "linear-quotients transfer, 50 witnesses", criterion8);
  criterion(9, "extremal shifts", criterion9);

  if (g_failures > 0) {
    std::printf("ACCEPTANCE: %d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("ACCEPTANCE: all criteria passed\n");
  return 0;
}
