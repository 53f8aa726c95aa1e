// Black-box test of the qlim binary: argv[1] is the binary, argv[2] a scratch
// directory. Exercises output formats, exit codes, and byte-for-byte
// determinism across repeated runs.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& bin, const std::string& args) {
  const std::string cmd = "'" + bin + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {127, ""};
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : 128, out};
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  f << body;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: test_cli <qlim-binary> <scratch-dir>\n";
    return 2;
  }
  const std::string bin = argv[1], dir = argv[2];

  const std::string catalan = dir + "/catalan.json";
  write_file(catalan, R"({"matrix":[[2]],"levels":[1],"signs":[1]})");

  // lattice counting
  {
    auto r = run(bin, "lattice --a 1 --b 1 --n 2");
    expect(r.code == 0 && r.out == "5\n", "lattice count below y=x+1");
    auto w = run(bin, "lattice --a 1 --b 1 --n 1 --weighted");
    expect(w.code == 0 && w.out == "t + t^3\n", "weighted lattice polynomial");
    auto wj = run(bin, "--format json lattice --a 1 --b 1 --n 1 --weighted");
    expect(wj.code == 0, "weighted lattice json runs");
    auto j = nlohmann::json::parse(wj.out);
    expect(j["weighted"] == nlohmann::json::parse(R"([[1,"1/1"],[3,"1/1"]])"),
           "weighted lattice json payload");
  }

  // classical-limit series from a spec file
  {
    auto r = run(bin, "limit " + catalan + " --max-degree 4");
    expect(r.code == 0 &&
               r.out == "# truncation bound 4\n[0] 1/1\n[1] -1/1\n[2] 2/1\n"
                        "[3] -5/1\n[4] 14/1\n",
           "limit text output");
    auto c = run(bin, "--format csv limit " + catalan + " --max-degree 4");
    expect(c.code == 0 && c.out == "index,value\n\"0\",1/1\n\"1\",-1/1\n\"2\",2/1\n"
                                   "\"3\",-5/1\n\"4\",14/1\n",
           "limit csv output");
    // both methods agree and their json parses to the same coefficients
    auto b = run(bin, "limit " + catalan + " --max-degree 4 --method both --format json");
    expect(b.code == 0, "limit with both methods exits 0");
    auto j = nlohmann::json::parse(b.out);
    expect(j["trunc"] == 4 && j["terms"].size() == 5 &&
               j["terms"][3]["value"] == "-5/1",
           "limit json payload");
    auto closed = run(bin, "limit " + catalan + " --max-degree 4 --method closed");
    auto oracle = run(bin, "limit " + catalan + " --max-degree 4 --method oracle");
    expect(closed.code == 0 && closed.out == oracle.out,
           "closed and oracle methods print identical series");
  }

  // determinism: byte-identical output across runs
  {
    const std::string args = "--format json bps --catalog 9_46 --max-order 4";
    auto r1 = run(bin, args), r2 = run(bin, args);
    expect(r1.code == 0 && r1.out == r2.out, "bps json is deterministic");
    const std::string args2 = "limit " + catalan + " --max-degree 6 --format json";
    auto s1 = run(bin, args2), s2 = run(bin, args2);
    expect(s1.code == 0 && s1.out == s2.out, "limit json is deterministic");
  }

  // bps pipeline against the catalog
  {
    auto r = run(bin, "--format csv bps --catalog 9_46 --max-order 4");
    expect(r.code == 0 && r.out == "r,a,N,integral\n1,-2/1,-2/1,true\n"
                                   "2,-10/1,-2/1,true\n3,-56/1,-6/1,true\n"
                                   "4,-330/1,-20/1,true\n",
           "bps csv for the three-vertex entry");
    auto e = run(bin, "bps --catalog 9_42 --max-order 8 --format json");
    expect(e.code == 0, "bps json for the single-vertex entry");
    auto j = nlohmann::json::parse(e.out);
    expect(j.size() == 8 && j[7]["N"] == "-1300/1" && j[7]["integral"] == true,
           "bps json payload");
  }

  // --output writes the same bytes to a file
  {
    const std::string outfile = dir + "/bps.csv";
    auto direct = run(bin, "--format csv bps --catalog 9_42 --max-order 4");
    auto filed = run(bin, "--format csv --output " + outfile +
                              " bps --catalog 9_42 --max-order 4");
    expect(filed.code == 0 && filed.out.empty(), "--output suppresses stdout");
    std::ifstream f(outfile, std::ios::binary);
    std::string body((std::istreambuf_iterator<char>(f)),
                     std::istreambuf_iterator<char>());
    expect(body == direct.out, "--output file matches stdout bytes");
  }

  // verification subcommand
  {
    auto r = run(bin, "verify --case 9_42");
    expect(r.code == 0 &&
               r.out == "[PASS] 9_42 - a_1..a_8 and N_1..N_8 reproduced exactly\n",
           "verify single case");
    auto u = run(bin, "verify --case nope");
    expect(u.code == 2, "verify unknown case exits 2");
    auto n = run(bin, "verify");
    expect(n.code == 2, "verify without a selection exits 2");
    auto b = run(bin, "verify --case 9_42 --all");
    expect(b.code == 2, "verify with both selections exits 2");
  }

  // malformed inputs exit 2
  {
    const std::string bad = dir + "/bad.json";
    write_file(bad, "not json");
    expect(run(bin, "limit " + bad + " --max-degree 3").code == 2,
           "malformed spec file exits 2");
    const std::string asym = dir + "/asym.json";
    write_file(asym, R"({"matrix":[[0,1],[2,0]],"levels":[1,1],"signs":[1,1]})");
    expect(run(bin, "limit " + asym + " --max-degree 3").code == 2,
           "asymmetric matrix exits 2");
    const std::string zero = dir + "/zero.json";
    write_file(zero, R"({"matrix":[[1]],"levels":[0],"signs":[1]})");
    expect(run(bin, "limit " + zero + " --max-degree 3").code == 2,
           "zero level without cap exits 2");
    expect(run(bin, "limit " + zero + " --max-degree 3 --vertex-cap 2").code == 0,
           "zero level with cap exits 0");
    expect(run(bin, "limit " + catalan + " --catalog 9_42 --max-degree 3").code == 2,
           "file and catalog together exit 2");
    expect(run(bin, "limit " + catalan + " --max-degree 3 --method nope").code == 2,
           "unknown method exits 2");
    expect(run(bin, "").code == 2, "missing subcommand exits 2");
    expect(run(bin, "limit " + catalan).code == 2, "missing required option exits 2");
    expect(run(bin, "--help").code == 0, "help exits 0");
  }

  if (failures == 0) {
    std::cout << "test_cli: all checks passed\n";
    return 0;
  }
  std::cerr << "test_cli: " << failures << " check(s) failed\n";
  return 1;
}
