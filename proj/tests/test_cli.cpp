#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// End-to-end tests of the gbstool binary; its path arrives in GBSTOOL_BIN.

#include <json.hpp>

#include <gbs/labeled_graph.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("GBSTOOL_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[1024];
  while (size_t got = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/gbstool_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

const char* kBs12 =
    R"({"vertices":["v"],"edges":[{"id":"e","from":"v","to":"v","label_from":1,"label_to":2}]})";
const char* kTrefoil =
    R"({"vertices":["x","y"],"edges":[{"id":"e1","from":"x","to":"y","label_from":2,"label_to":3}]})";
const char* kReducible =
    R"({"vertices":["x","y","z"],"edges":[
        {"id":"e1","from":"x","to":"y","label_from":1,"label_to":3},
        {"id":"e2","from":"y","to":"z","label_from":-1,"label_to":2},
        {"id":"e3","from":"z","to":"z","label_from":5,"label_to":7}]})";

}  // namespace

TEST_CASE("bs conj finds and prints a conjugator") {
  RunResult r = run("bs conj --n -1 \"t^2 a\" \"t^2 a^-1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("conjugate") != std::string::npos);
  CHECK(r.out.find("conjugator") != std::string::npos);

  CHECK(run("bs conj --n -1 \"t^2 a\" \"t^2 a^3\"").exit_code == 1);

  RunResult w = run("bs conj --n 2 --witness --json \"t a^5\" \"t a^9\"");
  CHECK(w.exit_code == 0);
  json j = json::parse(w.out);
  CHECK(j["conjugate"] == true);
  CHECK(j["verified"] == true);
}

TEST_CASE("gbs conjsep verdicts and exit codes") {
  std::string path = write_temp("bs12.json", kBs12);
  CHECK(run("gbs conjsep " + path + " --primes all").exit_code == 0);
  RunResult no = run("gbs conjsep " + path + " --primes {2,3} --json");
  CHECK(no.exit_code == 1);
  json j = json::parse(no.out);
  CHECK(j["answer"] == "no");
  CHECK(j["witness"]["prime"] == 5);

  std::string tre = write_temp("trefoil.json", kTrefoil);
  CHECK(run("gbs conjsep " + tre + " --primes {2,3}").exit_code == 0);
  CHECK(run("gbs residual " + tre + " --primes {2,3}").exit_code == 0);
  CHECK(run("gbs residual " + tre + " --primes {5}").exit_code == 1);
}

TEST_CASE("json answers match exit codes") {
  std::string path = write_temp("bs12b.json", kBs12);
  for (const std::string& primes : {"all", "{2,3}", "all-{5}"}) {
    for (const char* verb : {"residual", "conjsep"}) {
      RunResult r =
          run(std::string("gbs ") + verb + " " + path + " --primes " + primes +
              " --json");
      json j = json::parse(r.out);
      int expected = j["answer"] == "yes" ? 0 : j["answer"] == "no" ? 1 : 2;
      CHECK(r.exit_code == expected);
    }
  }
}

TEST_CASE("bs fusion prints the witness tuple") {
  RunResult r = run("bs fusion --n 3 --primes all-{2} --missing 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "u=4 v=80 w=40 q=2\n");
}

TEST_CASE("gbs reduce round-trips") {
  std::string path = write_temp("reducible.json", kReducible);
  RunResult first = run("gbs reduce " + path);
  CHECK(first.exit_code == 0);
  gbs::LabeledGraph g1 = gbs::graph_from_json(first.out);

  std::string again = write_temp("reduced.json", first.out);
  RunResult second = run("gbs reduce " + again);
  CHECK(second.exit_code == 0);
  CHECK(gbs::graph_to_json(g1) == gbs::graph_to_json(gbs::graph_from_json(second.out)));

  RunResult compact = run("gbs reduce " + path + " --json");
  CHECK(compact.out.find('\n') == compact.out.size() - 1);
}

TEST_CASE("gbs classify, modular, radical") {
  std::string tre = write_temp("trefoil2.json", kTrefoil);
  RunResult cls = run("gbs classify " + tre);
  CHECK(cls.exit_code == 0);
  CHECK(cls.out == "non-solvable\n");

  RunResult mod = run("gbs modular " + tre + " --json");
  json jm = json::parse(mod.out);
  CHECK(jm["classification"] == "trivial");

  RunResult rad = run("gbs radical " + tre + " --json");
  json jr = json::parse(rad.out);
  CHECK(jr["mu"] == 6);
  CHECK(jr["vertex_index"]["x"] == 2);
  CHECK(jr["vertex_index"]["y"] == 3);

  // radical of a solvable group is a precondition failure
  std::string bs = write_temp("bs12c.json", kBs12);
  CHECK(run("gbs radical " + bs).exit_code == 65);
}

TEST_CASE("bs separate outcomes") {
  RunResult found = run("bs separate --n 3 --primes all --smax 50 \"t a\" \"t a^2\" --json");
  CHECK(found.exit_code == 0);
  json j = json::parse(found.out);
  CHECK(j["separated"] == true);
  CHECK(j["quotient"]["r"] == 1);
  CHECK(j["quotient"]["s"] == 2);

  CHECK(run("bs separate --n 2 --primes all --smax 50 \"t a^5\" \"t a^9\"")
            .exit_code == 1);  // conjugate input

  RunResult fused =
      run("bs separate --n 3 --primes all-{2} --smax 100 \"t^4 a^80\" \"t^4 a^40\"");
  CHECK(fused.exit_code == 2);
}

TEST_CASE("h conj criterion and brute force") {
  CHECK(run("h conj --n 2 --r 3 --s 7 \"a\" \"a^2\"").exit_code == 0);
  CHECK(run("h conj --n 2 --r 3 --s 7 \"a\" \"a^2\" --brute").exit_code == 0);
  CHECK(run("h conj --n 2 --r 3 --s 7 \"a\" \"a^3\"").exit_code == 1);
  CHECK(run("h conj --n 2 --r 3 --s 7 \"a\" \"a^3\" --brute").exit_code == 1);
  // invalid parameters: 2^2 != 1 mod 7
  CHECK(run("h conj --n 2 --r 2 --s 7 \"a\" \"a\"").exit_code == 65);
}

TEST_CASE("num xi") {
  CHECK(run("num xi --n 2 --s 7 --primes {3,7}").exit_code == 0);
  CHECK(run("num xi --n 2 --s 7 --primes {2,7}").exit_code == 1);
  RunResult r = run("num xi --n 2 --s 7 --primes {3,7} --json");
  json j = json::parse(r.out);
  CHECK(j["member"] == true);
  CHECK(j["order"] == 3);
}

TEST_CASE("usage and parse errors") {
  CHECK(run("nonsense").exit_code == 64);
  CHECK(run("bs conj \"t\" \"t\"").exit_code == 64);  // missing --n
  CHECK(run("gbs classify /tmp/gbstool_test_missing_file.json").exit_code == 65);
  std::string bad = write_temp("bad.json", "{\"vertices\":[]}");
  CHECK(run("gbs classify " + bad).exit_code == 65);
  CHECK(run("bs conj --n 2 \"t b\" \"t\"").exit_code == 65);  // unknown generator
  CHECK(run("gbs residual " + write_temp("t3.json", kTrefoil) +
            " --primes {4}")
            .exit_code == 65);
}

TEST_CASE("GBS_SEP_BOUND override") {
  const char* bin = std::getenv("GBSTOOL_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string("GBS_SEP_BOUND=17 ") + bin +
                    " bs separate --n 3 --primes all-{2} \"t^4 a^80\" \"t^4 a^40\" --json 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[512];
  while (size_t got = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 2);
  json j = json::parse(out);
  CHECK(j["bound"] == 17);
}
