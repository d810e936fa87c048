// End-to-end tests driving the CLI binary; the binary path arrives as argv[1].
#define DOCTEST_CONFIG_IMPLEMENT
#include <array>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "expansio/io.hpp"

namespace {

std::string g_binary;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = g_binary + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "cli_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("expand reproduces the worked example, round-trippable") {
  auto file = write_temp("ex.ideal", "ring: x1 x2 x3\nideal: x1*x2, x3^2\ntuple: 1 3 2\n");
  auto r = run("expand " + file);
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "ring: x1_1 x2_1 x2_2 x2_3 x3_1 x3_2\n"
        "ideal: x1_1*x2_1, x1_1*x2_2, x1_1*x2_3, x3_1^2, x3_1*x3_2, x3_2^2\n");
  // output parses back to the same ideal
  auto p = expansio::parse_problem(r.out);
  CHECK(p.ideal.ngens() == 6);
  auto again = run("expand " + file);
  CHECK(again.out == r.out);
}

TEST_CASE("betti modes agree and print the same totals") {
  auto file = write_temp("ex2.ideal", "ring: x1 x2 x3\nideal: x1*x2, x3^2\ntuple: 1 3 2\n");
  std::string total_line;
  for (const std::string via : {"formula", "oracle", "total-complex"}) {
    auto r = run("betti " + file + " --via " + via);
    CHECK(r.exit_code == 0);
    auto pos = r.out.find("total:");
    REQUIRE(pos != std::string::npos);
    std::string line = r.out.substr(pos, r.out.find('\n', pos) - pos);
    if (total_line.empty())
      total_line = line;
    else
      CHECK(line == total_line);
  }
  CHECK(total_line.find("6 14 16  9  2") != std::string::npos);
}

TEST_CASE("betti of the source ideal") {
  auto file = write_temp("k.ideal", "ring: x1 x2\nideal: x1, x2\n");
  auto r = run("betti " + file + " --of ideal --via oracle");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("regularity 1, projective dimension 1") != std::string::npos);
  auto t = run("betti " + file + " --of ideal --via total-complex");
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("regularity 1, projective dimension 1") != std::string::npos);
  CHECK(run("betti " + file + " --of ideal --via formula").exit_code == 2);
}

TEST_CASE("degree bound override via the environment") {
  auto file = write_temp("env.ideal", "ring: x1 x2 x3\nideal: x1*x2, x3^2\ntuple: 1 3 2\n");
  auto r = run("verify " + file + " ");
  CHECK(r.exit_code == 0);
  auto env = [&](const std::string& args) {
    std::string saved = g_binary;
    g_binary = "EXPANSIO_MAX_DEGREE=4 " + g_binary;
    auto out = run(args);
    g_binary = saved;
    return out;
  };
  auto e = env("verify " + file);
  CHECK(e.exit_code == 0);
  CHECK(e.out.find("VERIFY PASS") != std::string::npos);
}

TEST_CASE("json output is machine readable") {
  auto file = write_temp("j.ideal", "ring: x1 x2 x3\nideal: x1*x2, x3^2\ntuple: 1 3 2\n");
  auto r = run("--json betti " + file);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("{\"count\":") != std::string::npos);
  auto e = run("--json expand " + file);
  CHECK(e.out.find("\"gens\"") != std::string::npos);
}

TEST_CASE("exit code 2 on parse errors and bad input") {
  auto bad = write_temp("bad.ideal", "ring: x1 x1\nideal: x1\n");
  CHECK(run("expand " + bad).exit_code == 2);
  auto notuple = write_temp("nt.ideal", "ring: x1\nideal: x1\n");
  CHECK(run("betti " + notuple).exit_code == 2);
  CHECK(run("expand missing-file.ideal").exit_code != 0);
  CHECK(run("betti " + notuple + " --via nonsense").exit_code == 2);
  auto zero = write_temp("z.ideal", "ring: x1\nideal:\n");
  CHECK(run("betti " + zero + " --of ideal").exit_code == 2);
  CHECK(run("--field-char 7 expand " + notuple).exit_code == 2);
}

TEST_CASE("exit code 4 on resource caps") {
  auto file = write_temp("cap.ideal", "ring: x1 x2 x3\nideal: x1, x2, x3\n");
  auto r = run("linquot " + file + " --cap 2");
  CHECK(r.exit_code == 4);
  CHECK(r.out.find("cap") != std::string::npos);
}

TEST_CASE("expand with a tuple override") {
  auto file = write_temp("ov.ideal", "ring: x1 x2\nideal: x1*x2\n");
  auto r = run("expand " + file + " --tuple 2 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "ring: x1_1 x1_2 x2_1\n"
        "ideal: x1_1*x2_1, x1_2*x2_1\n");
  CHECK(run("expand " + file + " --tuple 2").exit_code == 2);
}

TEST_CASE("ass --infinity reports an undetermined window as a cap") {
  auto file = write_temp("ai.ideal", "ring: x1 x2\nideal: x1*x2\n");
  auto r = run("ass " + file + " --infinity --window 3 --cap 2");
  CHECK(r.exit_code == 4);
  CHECK(r.out.find("undetermined") != std::string::npos);
}

TEST_CASE("decompose and ass") {
  auto file = write_temp("d.ideal", "ring: x1 x2\nideal: x1^2, x1*x2\n");
  auto r = run("decompose " + file);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("radical (x1)") != std::string::npos);
  CHECK(r.out.find("radical (x1, x2)") != std::string::npos);
  auto a = run("ass " + file);
  CHECK(a.out.find("(x1)") != std::string::npos);
  CHECK(a.out.find("(x1, x2)") != std::string::npos);
  CHECK(a.out.find("height 1") != std::string::npos);
}

TEST_CASE("colon, intersect, radical, symbolic-power") {
  auto I = write_temp("i.ideal", "ring: x1 x2 x3\nideal: x1*x2, x3^2\n");
  auto J = write_temp("jj.ideal", "ring: x1 x2 x3\nideal: x3\n");
  auto c = run("colon " + I + " " + J);
  CHECK(c.out.find("ideal: x3, x1*x2") != std::string::npos);
  auto a = write_temp("a.ideal", "ring: x1 x2 x3\nideal: x1*x2\n");
  auto b = write_temp("b.ideal", "ring: x1 x2 x3\nideal: x1*x3\n");
  auto i = run("intersect " + a + " " + b);
  CHECK(i.out.find("ideal: x1*x2*x3") != std::string::npos);
  auto r = run("radical " + I);
  CHECK(r.out.find("ideal: x3, x1*x2") != std::string::npos);
  auto tri = write_temp("tri.ideal", "ring: x1 x2 x3\nideal: x1*x2, x1*x3, x2*x3\n");
  auto s = run("symbolic-power 2 " + tri);
  CHECK(s.out.find("x1*x2*x3") != std::string::npos);
}

TEST_CASE("linquot output") {
  auto tri = write_temp("lq.ideal", "ring: x1 x2 x3\nideal: x1*x2, x1*x3, x2*x3\n");
  auto r = run("linquot " + tri);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("set = ") != std::string::npos);
  auto none = write_temp("none.ideal", "ring: x1 x2 x3 x4\nideal: x1*x2, x3*x4\n");
  auto n = run("linquot " + none);
  CHECK(n.exit_code == 0);
  CHECK(n.out.find("none") != std::string::npos);
  auto e = run("linquot " + tri + " --expansion --tuple 2 1 1");
  CHECK(e.exit_code == 0);
  CHECK(e.out.find("x1_1") != std::string::npos);
}

TEST_CASE("resolve emitters") {
  auto file = write_temp("r.ideal", "ring: x1 x2 x3\nideal: x1*x2, x3^2\ntuple: 1 3 2\n");
  auto ranks = run("resolve " + file);
  CHECK(ranks.out.find("rank F_0 = 2") != std::string::npos);
  auto total = run("resolve " + file + " --expansion");
  CHECK(total.out.find("rank T_4 = 2") != std::string::npos);
  auto json = run("resolve " + file + " --emit json");
  CHECK(json.out.find("\"modules\"") != std::string::npos);
  auto dot = run("resolve " + file + " --expansion --emit dot");
  CHECK(dot.out.find("digraph") != std::string::npos);
  CHECK(run("resolve " + file + " --emit dot").exit_code == 2);
}

TEST_CASE("edge-ideal") {
  auto g = write_temp("p.graph", "1 2\n2 3\n");
  auto r = run("edge-ideal " + g);
  CHECK(r.out == "ring: x1 x2 x3\nideal: x1*x2, x2*x3\n");
  auto d = run("edge-ideal " + g + " --duplicate 2:2");
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("x1_1*x2_1") != std::string::npos);
  CHECK(d.out.find("x2_2*x3_1") != std::string::npos);
  auto empty = write_temp("e.graph", "# no edges\n");
  CHECK(run("edge-ideal " + empty).out.find("ideal:") != std::string::npos);
  auto loop = write_temp("l.graph", "1 1\n");
  CHECK(run("edge-ideal " + loop).exit_code == 2);
}

TEST_CASE("verify on an instance file") {
  auto file = write_temp("v.ideal", "ring: x1 x2 x3\nideal: x1*x2, x3^2\ntuple: 1 3 2\n");
  auto r = run("verify " + file);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("VERIFY PASS") != std::string::npos);
  CHECK(r.out.find("seed") != std::string::npos);

  auto zero = write_temp("vz.ideal", "ring: x1\nideal:\n");
  auto f = run("verify " + zero);
  CHECK(f.exit_code == 3);
  CHECK(f.out.find("VERIFY FAIL") != std::string::npos);
}

TEST_CASE("verify random smoke") {
  auto r = run("verify --random --suite lemma11 --count 5 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("seed 7") != std::string::npos);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-expansio-binary>\n");
    return 1;
  }
  g_binary = argv[1];
  doctest::Context ctx;
  return ctx.run();
}
