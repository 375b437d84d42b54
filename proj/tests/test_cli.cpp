#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell. stderr is merged into the output only when
// asked, so golden comparisons see stdout alone.
Result run(const std::string& args, bool with_stderr = false) {
  std::string cmd = std::string(COMBI_CLI_PATH) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("lrcoef") {
  auto r = run("lrcoef --outer 11,10,9,8,7,5,4,3,3,2,1 --inner 9,6,5,4,3,2,1 --mu 7,6,5,5,4,3,2,1");
  CHECK(r.code == 0);
  CHECK(r.out == "81672\n");
  CHECK(run("lrcoef --outer 5,4,3,2 --inner 3,3,1 --mu 4,2,1").out == "3\n");
  // sizes that cannot match give zero
  CHECK(run("lrcoef --outer 7,5,4,2 --inner 4,3,1 --mu 4,3,1").out == "0\n");
}

TEST_CASE("lr-tableaux") {
  auto r = run("lr-tableaux --outer 7,5,4,2 --inner 4,3,2,1 --mu 4,3,1");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "0,1,2,1,1,0,0,0\n"
        "1,0,2,1,1,0,0,0\n"
        "1,1,2,0,1,0,0,0\n"
        "2,1,1,0,1,0,0,0\n");
  auto bad = run("lr-tableaux --outer 7,5,4,2 --inner 4,3,1 --mu 4,3,1", true);
  CHECK(bad.code == 2);
  CHECK(bad.out.rfind("error: ", 0) == 0);
}

TEST_CASE("schur-mult") {
  const std::string expected =
      "4,2 1\n"
      "4,1,1 1\n"
      "3,3 1\n"
      "3,2,1 2\n"
      "3,1,1,1 1\n"
      "2,2,2 1\n"
      "2,2,1,1 1\n";
  CHECK(run("schur-mult 2,1 2,1").out == expected);
  CHECK(run("schur-mult 2,1 2,1 --json").out ==
        "{\"4,2\":1,\"4,1,1\":1,\"3,3\":1,\"3,2,1\":2,\"3,1,1,1\":1,\"2,2,2\":1,\"2,2,1,1\":1}\n");
  CHECK(run("schur-mult \"\" 2,1 --json").out == "{\"2,1\":1}\n");
  CHECK(run("schur-mult 2,1 1 --threads 0").code == 2);
}

TEST_CASE("schur-mult output does not depend on threads") {
  const std::string base = run("schur-mult 4,3,2,1 3,2,1 --threads 1").out;
  CHECK(!base.empty());
  for (const char* t : {"2", "3", "7"}) CHECK(run(std::string("schur-mult 4,3,2,1 3,2,1 --threads ") + t).out == base);
  CHECK(run("schur-mult 4,3,2,1 3,2,1").out == base);
}

TEST_CASE("pieri") {
  CHECK(run("pieri 2,1 2").out == "4,1 1\n3,2 1\n3,1,1 1\n2,2,1 1\n");
  CHECK(run("pieri 1 1 --col").out == "2 1\n1,1 1\n");
  CHECK(run("pieri 1 1 --col --json").out == "{\"2\":1,\"1,1\":1}\n");
  CHECK(run("pieri 3,1 0").out == "3,1 1\n");
  CHECK(run("pieri 2,1 -1").code == 2);
}

TEST_CASE("rs") {
  CHECK(run("rs 0,2,3,1,0,4,3,1,2").out ==
        "P\n0,0,1,2\n1,3,3\n2,4\n"
        "Q\n0,1,2,5\n3,6,8\n4,7\n");
  CHECK(run("rs 0,2,3,1,0,4,3,1,2 --json").out ==
        "{\"P\":[[0,0,1,2],[1,3,3],[2,4]],\"Q\":[[0,1,2,5],[3,6,8],[4,7]]}\n");
  CHECK(run("rs \"\"").out == "P\nQ\n");
  CHECK(run("rs 0,a").code == 2);
}

TEST_CASE("plactic") {
  CHECK(run("plactic-nf 1,2,0").out == "1,0,2\n");
  CHECK(run("plactic-eq 1,2,0 1,0,2").out == "true\n");
  CHECK(run("plactic-eq 0,1 1,0").out == "false\n");
}

TEST_CASE("char") {
  auto r = run("char --lambda 5,2,1 --mu 3,3,1,1");
  CHECK(r.code == 0);
  CHECK(r.out == "-2\n");
  auto bad = run("char --lambda 2 --mu 1", true);
  CHECK(bad.code == 2);
}

TEST_CASE("char-table") {
  CHECK(run("char-table 3").out ==
        "\t3\t2,1\t1,1,1\n"
        "3\t1\t1\t1\n"
        "2,1\t-1\t0\t2\n"
        "1,1,1\t1\t-1\t1\n");
  CHECK(run("char-table 2 --json").out == "{\"2\":{\"2\":1,\"1,1\":1},\"1,1\":{\"2\":-1,\"1,1\":1}}\n");
  auto big = run("char-table 13", true);
  CHECK(big.code == 3);
  CHECK(big.out.find("exceeds") != std::string::npos);
}

TEST_CASE("count-syt, yam and kostka") {
  CHECK(run("count-syt 2,1").out == "2\n");
  CHECK(run("count-syt 10,10").out == "16796\n");
  CHECK(run("count-syt 1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1").code == 3);
  CHECK(run("yam 2,1").out == "0,1,0\n1,0,0\n");
  CHECK(run("yam 1,1").out == "1,0\n");
  CHECK(run("kostka 3,2,1,1 2,2,1,1,1").out == "6\n");
  CHECK(run("kostka 2,1 1,1,1").out == "2\n");
}

TEST_CASE("partition arguments are validated") {
  auto dec = run("lrcoef --outer 1,2 --inner 1 --mu 1", true);
  CHECK(dec.code == 2);
  CHECK(dec.out == "error: --outer: not weakly decreasing\n");
  auto zero = run("lrcoef --outer 2,1 --inner 1,0 --mu 1", true);
  CHECK(zero.code == 2);
  CHECK(zero.out == "error: --inner: zero part\n");
  auto junk = run("lrcoef --outer 2,1 --inner 1 --mu x", true);
  CHECK(junk.code == 2);
  CHECK(junk.out.find("error: --mu: malformed") == 0);
  // empty text is the empty partition
  CHECK(run("lrcoef --outer 2,1 --inner \"\" --mu 2,1").out == "1\n");
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("nosuch").code == 2);
  CHECK(run("lrcoef --outer 2,1 --inner 1").code == 2);
  CHECK(run("lrcoef --outer 2,1 --inner 1 --mu 1 --bogus 3").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("bench") {
  auto r = run("bench lrcoef --outer 7,5,4,2 --inner 4,3,2,1 --mu 4,3,1 --repeat 3");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("result 4\nrepeat 3\nmin_ms ", 0) == 0);
  CHECK(r.out.find("\nmedian_ms ") != std::string::npos);
  auto once = run("bench lrcoef --outer 7,5,4,2 --inner 4,3,2,1 --mu 4,3,1 --repeat 1");
  CHECK(once.out.find("repeat 1\n") != std::string::npos);
  CHECK(run("bench lrcoef --outer 7,5,4,2 --inner 4,3,2,1 --mu 4,3,1 --repeat 0").code == 2);
}

TEST_CASE("output is stable across runs") {
  const std::string cmd = "char-table 6 --json";
  CHECK(run(cmd).out == run(cmd).out);
}
