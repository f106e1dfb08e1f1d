#include "cli.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  int status = glr::cli::run(args, out, err, in);
  return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("documented examples") {
  CHECK(run({"invariants", "corpus:unknot"}).out == "tb -1\nrot 0\n");
  auto c = run({"color", "corpus:K2.pres", "--rack", "perm:9:1:0"});
  CHECK(c.status == 0);
  CHECK(c.out == "9\n");
  CHECK(run({"color", "corpus:K1.pres", "--rack", "perm:9:1:0"}).out == "0\n");
  auto g = run({"gate", "corpus:K1.pres", "corpus:K2.pres"});
  CHECK(g.status == 0);
  CHECK(g.out.starts_with("verdict CertifiedDistinct\n"));
  CHECK(g.out.find("\nwitness k=7 a=2 b=-1 counts=0,7\n") != std::string::npos);
}

TEST_CASE("subcommands") {
  CHECK(run({"validate", "corpus:K3"}).out == "valid\n");
  CHECK(run({"present", "corpus:K1"}).out == "gens 5\nxr 0 1 1 - 3\nxr 1 0 2 - 4\nxr 2 1 1 - 0\nxr 3 0 2 - 1\nxr 4 0 2 - 2\n");
  CHECK(run({"present", "corpus:unknot", "--full"}).out == "gens 2\ncusp d 0 1\ncusp u 1 0\n");
  CHECK(run({"present", "corpus:K3", "--pretty"}).out.find("# u^2d(x1) * x4 = x2\n") != std::string::npos);
  CHECK(run({"summary", "corpus:K1.pres"}).out == "omega -5\np 2\nq 8\ngens 5\ncusps 10\n");
  CHECK(run({"summary", "corpus:K1"}).out == run({"summary", "corpus:K1.pres"}).out);
  CHECK(run({"stabilize", "corpus:unknot", "+", "--site", "0"}).out == "knot unknot\ncode cd cd cd cu\n");
  CHECK(run({"stabilize", "corpus:unknot", "-", "--site", "2"}).out == "knot unknot\ncode cd cu cu cu\n");
  CHECK(run({"move", "corpus:kinked-unknot", "--move", "1", "--dir", "bwd", "--site", "0"}).out ==
        "knot kinked-unknot\ncode cd cu\n");
  CHECK(run({"move", "corpus:unknot", "--move", "1", "--dir", "fwd", "--site", "0"}).out ==
        "knot unknot\ncode x1o+ cd cu x1u+ cd cu\n");
  CHECK(run({"oracle-color", "corpus:K2.pres", "--k", "9", "--a", "1", "--b", "0"}).out == "9\n");
  CHECK(run({"oracle-color", "corpus:K2", "--k", "7", "--a", "2", "--b", "-1"}).out == "7\n");
  CHECK(run({"gate", "corpus:K3", "corpus:K4.pres"}).out.starts_with("verdict SameInvariants\n"));
  CHECK(run({"gate", "corpus:K1", "corpus:K1", "--slice-genus", "0"}).out.starts_with("verdict SameInvariants\n"));

  auto e = run({"enumerate", "--order", "2"});
  CHECK(e.out.starts_with("classes 4\n\nsize 2\n"));
  auto p = run({"profile", "corpus:K3.pres", "--max-order", "2"});
  CHECK(p.out.starts_with("1 0 1\n2 0 2\n"));
  CHECK(run({"profile", "corpus:K4.pres", "--max-order", "3"}).out ==
        run({"profile", "corpus:K3.pres", "--max-order", "3"}).out);

  auto emit = run({"color", "corpus:trefoil", "--rack", "trivial:3", "--emit-colorings", "--cap", "2"});
  CHECK(emit.out == "3\n0 0 0\n1 1 1\n");
  CHECK(run({"iso", "perm:3:1:0", "perm:3:0:1"}).out == "not-isomorphic\n");
  CHECK(run({"iso", "perm:3:1:0", "perm:3:1:0"}).out == "isomorphic\nmap 0 1 2\n");
}

TEST_CASE("stdin and files") {
  CHECK(run({"invariants", "-"}, "knot k\ncode cu cu cd cd\n").out == "tb -2\nrot 0\n");
  const auto path = std::filesystem::temp_directory_path() / "glr_cli_rack.txt";
  {
    std::ofstream f(path);
    f << "size 2\nop 1 1 0 0\nu 0 1\nd 1 0\n";
  }
  auto r = run({"color", "corpus:unknot", "--rack", path.string()});
  CHECK(r.status == 0);
  CHECK(r.out == "0\n");
  std::filesystem::remove(path);
}

TEST_CASE("errors") {
  auto usage = run({"frobnicate"});
  CHECK(usage.status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"color", "corpus:K1.pres"}).status == 2);
  CHECK(run({"enumerate", "--order", "9"}).status == 2);

  auto missing = run({"invariants", "/nonexistent/file"});
  CHECK(missing.status == 1);
  CHECK(missing.err.find("cannot read") != std::string::npos);
  CHECK(std::count(missing.err.begin(), missing.err.end(), '\n') == 1);

  auto parse = run({"invariants", "-"}, "knot k\ncode cd cq\n");
  CHECK(parse.status == 1);
  CHECK(parse.err.find("2:") != std::string::npos);

  auto invalid = run({"validate", "-"}, "knot k\ncode x1o+ cd cu\n");
  CHECK(invalid.status == 1);
  CHECK(invalid.out.find("violation missing-pass") != std::string::npos);

  CHECK(run({"present", "corpus:unknot"}).status == 1);
  CHECK(run({"invariants", "corpus:nope"}).status == 1);
  CHECK(run({"color", "corpus:K1.pres", "--rack", "perm:9:1:1"}).status == 1);
  CHECK(run({"move", "corpus:trefoil", "--move", "1", "--dir", "bwd", "--site", "0"}).status == 1);
  CHECK(run({"stabilize", "corpus:unknot", "+", "--site", "9"}).status == 1);
  CHECK(run({"invariants", "corpus:K1.pres"}).status == 1);
}

TEST_CASE("README examples run as documented") {
  std::ifstream f(GLR_README);
  REQUIRE(f);
  std::vector<std::string> lines;
  for (std::string line; std::getline(f, line);)
    lines.push_back(line);

  int examples = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!lines[i].starts_with("$ glr "))
      continue;
    std::vector<std::string> args;
    std::istringstream words(lines[i].substr(6));
    for (std::string w; words >> w;)
      args.push_back(w);
    // Expected output runs to the next prompt or the end of the block.
    std::string expected;
    std::size_t j = i + 1;
    for (; j < lines.size() && !lines[j].starts_with("$ ") && lines[j] != "```"; ++j)
      expected += lines[j] + "\n";
    while (expected.size() >= 2 && expected.ends_with("\n\n"))
      expected.pop_back();
    auto r = run(args);
    CHECK_MESSAGE(r.status == 0, lines[i]);
    CHECK_MESSAGE(r.out == expected, lines[i]);
    ++examples;
  }
  CHECK(examples >= 10);
}
