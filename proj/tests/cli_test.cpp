#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace {

struct CliRun {
  int rc;
  std::string out;
};

CliRun gtl(const std::string& args) {
  std::string cmd = std::string(GTL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("gtl_cli_test_" + name);
  std::ofstream(path) << content;
  return path;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l))
    if (l == line) return true;
  return false;
}

}  // namespace

TEST(Cli, Version) {
  CliRun r = gtl("--version");
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(r.out, "gtl 0.1.0\n");
}

TEST(Cli, VerifyExamples) {
  CliRun s = gtl("verify S --preset D4 --bound 7");
  EXPECT_EQ(s.rc, 1);
  EXPECT_TRUE(has_line(s.out, "FAILS witness=1 3 2 4 2 1 3"));
  CliRun f = gtl("verify F --preset A4 --bound 10");
  EXPECT_EQ(f.rc, 0);
  EXPECT_TRUE(has_line(f.out, "HOLDS"));
  CliRun b = gtl("verify B --preset A3 --bound 6");
  EXPECT_EQ(b.rc, 0);
  EXPECT_TRUE(has_line(b.out, "check sharpened-bound HOLDS (informational)"));
  EXPECT_EQ(gtl("verify W --preset B3").rc, 0);
  CliRun tsv = gtl("verify S --preset D4 --bound 7 --format tsv");
  EXPECT_TRUE(has_line(tsv.out, "S\tFAILS\t1 3 2 4 2 1 3"));
}

TEST(Cli, Basis) {
  CliRun r = gtl("basis --preset A2 --bound 3");
  EXPECT_EQ(r.rc, 0);
  EXPECT_NE(r.out.find("c[1] algorithms=agree chebyshev=agree\nv^-1 * t[e]\n1 * t[1]\n"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '['), 5 + 13);
  CliRun a1 = gtl("basis --preset A1 --bound 1 --format tsv");
  EXPECT_EQ(a1.out, "element\tterm\tcoefficient\tagree\ne\te\t1\tyes\n1\te\tv^-1\tyes\n1\t1\t1\tyes\n");
  CliRun i5 = gtl("basis --preset 'I2(5)' --bound 8");
  EXPECT_EQ(i5.rc, 0);
  EXPECT_EQ(i5.out.find("DISAGREE"), std::string::npos);
  CliRun kl = gtl("basis --preset A3 --methods oracle --format tsv");
  EXPECT_TRUE(has_line(kl.out, "2\t2 1 3 2\t1 + q\t1"));
  CliRun cp = gtl("basis --preset A2 --methods oracle");
  EXPECT_NE(cp.out.find("C'[1 2 1]\nv^-3 * T[e]\n"), std::string::npos);
}

TEST(Cli, Mu) {
  CliRun all = gtl("mu --preset A3 --bound 6 --methods all");
  EXPECT_EQ(all.rc, 0);
  EXPECT_TRUE(has_line(all.out, "2\t2 1 3 2\t1\t1\t1\ttrue"));
  EXPECT_EQ(all.out.find("false"), std::string::npos);
  CliRun b3 = gtl("mu --preset B3 --bound 9 --methods m,oracle --format tsv");
  EXPECT_EQ(b3.rc, 0);
  EXPECT_EQ(b3.out.find("false"), std::string::npos);
  CliRun a2 = gtl("mu --preset A2 --bound 3 --methods trace --format tsv");
  EXPECT_TRUE(has_line(a2.out, "e\t1\t1\t-\t-\ttrue"));
  EXPECT_EQ(gtl("mu --preset ~A2 --bound 3 --methods trace").rc, 2);
}

TEST(Cli, Structure) {
  CliRun a2 = gtl("structure --preset A2");
  EXPECT_EQ(a2.rc, 0);
  EXPECT_TRUE(has_line(a2.out, "1\t1\t1\tδ\tyes"));
  EXPECT_TRUE(has_line(a2.out, "1\t2 1\t1\t1\tyes"));
  CliRun h3 = gtl("structure --preset H3 --bound 6 --format tsv");
  EXPECT_EQ(h3.rc, 0);
  EXPECT_EQ(h3.out.find("\tno\n"), std::string::npos);
  CliRun g = gtl("structure --preset A2 --methods oracle");
  EXPECT_NE(g.out.find("# oracle"), std::string::npos);
}

TEST(Cli, TraceTables) {
  const std::string table = "e : 1 + 3v^-2 + 3v^-4 + v^-6\n1 : v^-1 + 2v^-3 + v^-5\n2 : v^-1 + 2v^-3 + v^-5\n1 2 : v^-2 + v^-4\n2 1 : v^-2 + v^-4\n";
  auto good = temp_file("good.trace", table);
  CliRun ok = gtl("verify B --preset A2 --trace " + good.string());
  EXPECT_EQ(ok.rc, 0);
  EXPECT_TRUE(has_line(ok.out, "note homogeneity table already homogeneous"));
  std::string corrupted = table;
  corrupted.replace(corrupted.find("1 2 : "), 6, "1 2 : 1 + ");
  auto bad = temp_file("bad.trace", corrupted);
  CliRun fails = gtl("verify B --preset A2 --trace " + bad.string());
  EXPECT_EQ(fails.rc, 1);
  EXPECT_NE(fails.out.find("FAILS witness="), std::string::npos);
  auto dup = temp_file("dup.trace", "e : 1\ne : 2\n");
  EXPECT_EQ(gtl("verify B --preset A2 --trace " + dup.string()).rc, 2);
  auto gap = temp_file("gap.trace", "e : 1 + 3v^-2 + 3v^-4 + v^-6\n");
  EXPECT_EQ(gtl("verify B --preset A2 --trace " + gap.string()).rc, 2);
  std::string odd_parity = table;
  odd_parity.replace(0, 4, "e : v + ");
  auto odd = temp_file("odd.trace", odd_parity);
  CliRun proj = gtl("verify B --preset A2 --trace " + odd.string());
  EXPECT_EQ(proj.rc, 0);
  EXPECT_TRUE(has_line(proj.out, "note homogeneity table was projected to its homogeneous part"));
  for (auto& p : {good, bad, dup, gap, odd}) std::filesystem::remove(p);
}

TEST(Cli, GraphFileAndOutput) {
  auto graph = temp_file("b3.graph", "# B3 by hand\nrank 3\nedge 1 2 3\nedge 2 3 4\n");
  auto out = std::filesystem::temp_directory_path() / "gtl_cli_test_out.txt";
  CliRun r = gtl("verify F --graph " + graph.string() + " --bound 9 --out " + out.string());
  EXPECT_EQ(r.rc, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_TRUE(has_line(ss.str(), "HOLDS"));
  // a graph file has no default bound
  EXPECT_EQ(gtl("verify F --graph " + graph.string()).rc, 2);
  std::filesystem::remove(graph);
  std::filesystem::remove(out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(gtl("").rc, 2);
  EXPECT_EQ(gtl("basis").rc, 2);
  EXPECT_EQ(gtl("basis --preset Q7").rc, 2);
  EXPECT_EQ(gtl("verify X --preset A2").rc, 2);
  EXPECT_EQ(gtl("verify F --preset E6").rc, 2);
  EXPECT_EQ(gtl("verify F --preset ~A2").rc, 2);
  EXPECT_EQ(gtl("mu --preset A2 --methods foo").rc, 2);
  EXPECT_EQ(gtl("basis --preset A2 --format xml").rc, 2);
  EXPECT_EQ(gtl("basis --preset A2 --preset A3").rc, 2);
  EXPECT_EQ(gtl("mu --preset B3 --methods oracle --cap 5").rc, 2);
  EXPECT_EQ(gtl("verify B --preset B3").rc, 2);
  EXPECT_EQ(gtl("--help").rc, 0);
}

TEST(Cli, Deterministic) {
  for (const char* args : {"mu --preset A4 --methods all", "structure --preset B3 --bound 4", "basis --preset D4 --bound 5"}) {
    CliRun a = gtl(args), b = gtl(args);
    EXPECT_EQ(a.rc, 0);
    EXPECT_EQ(a.out, b.out);
  }
}
