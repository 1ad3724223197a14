#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "sturmlex/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "sturmlex");
  std::ostringstream out, err;
  const int code = sturmlex::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(STURMLEX_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("generate") {
  const auto r = run({"generate", "--spec", "fib", "--len", "32"});
  CHECK(r.code == 0);
  CHECK(r.out == "01001010010010100101001001010010\n");
  CHECK(run({"generate", "--spec", "mech:1/3@1/2", "--len", "6"}).out == "010010\n");
}

TEST_CASE("check nfop") {
  const auto ok = run({"check", "--spec", "fib", "--what", "nfop", "--max-n", "40"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "nfop: ConsistentUpTo 40\n");

  const auto tm = run({"check", "--spec", "morphic:0->01,1->10;seed=0", "--what", "nfop", "--max-n", "5"});
  CHECK(tm.code == 1);
  CHECK(tm.out.starts_with("nfop: Violated n=3 011 100"));
}

TEST_CASE("check sturmian on a periodic word") {
  const auto r = run({"check", "--spec", "periodic:01", "--what", "sturmian", "--max-n", "10"});
  CHECK(r.code == 1);
  CHECK(r.out.find("nfop: Violated n=3 010 101") != std::string::npos);
  CHECK(r.out.find("sturmian: NotSturmian n=3 010 101") != std::string::npos);
}

TEST_CASE("check balance classifies the imbalance") {
  const auto r = run({"check", "--spec", "ultper:00|01001010", "--what", "balance", "--max-n", "12"});
  CHECK(r.code == 1);
  CHECK(r.out.find("imbalance: PrefixCase u='0' x=0") != std::string::npos);
}

TEST_CASE("check json keeps key order") {
  const auto r = run({"check", "--spec", "fib", "--what", "ones", "--max-n", "8", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j[0].items()) keys.push_back(k);
  REQUIRE(keys.size() >= 5);
  CHECK(keys[0] == "check");
  CHECK(keys[1] == "status");
  CHECK(keys[2] == "upTo");
  CHECK(keys[3] == "witness");
  CHECK(keys[4] == "saturatedLengths");
  CHECK(j[0]["status"] == "ConsistentUpTo");
}

TEST_CASE("sturmian json ends with the combined verdict") {
  const auto r = run({"check", "--spec", "fib", "--what", "sturmian", "--max-n", "10", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.back()["check"] == "sturmian");
}

TEST_CASE("factors") {
  const auto r = run({"factors", "--spec", "fib", "--len", "32", "--max-n", "3", "--dump"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# n=3 complexity=4 saturated=yes") != std::string::npos);
  CHECK(r.out.find("3\t010\t") != std::string::npos);
  CHECK(run({"factors", "--spec", "fib", "--len", "4", "--max-n", "5"}).code == 64);
}

TEST_CASE("christoffel") {
  const auto r = run({"christoffel", "--p", "2", "--q", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("lower\t00101\nupper\t10100\ncore\t010\n"));

  const auto v = run({"christoffel", "--p", "2", "--q", "3", "--verify", "--spec", "fib", "--max-n", "5"});
  CHECK(v.out.find("(i)\t") != std::string::npos);
  CHECK(v.out.find("(v)\t") != std::string::npos);

  CHECK(run({"christoffel", "--p", "2", "--q", "4"}).code == 64);
}

TEST_CASE("harness") {
  const auto ok = run({"harness", "--corpus", data("sturmian.txt"), "--max-n", "12"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("0 failed") != std::string::npos);

  const auto mixed = run({"harness", "--corpus", data("mixed.txt"), "--max-n", "12"});
  CHECK(mixed.code == 0);

  CHECK(run({"harness", "--corpus", data("bad.txt"), "--max-n", "12"}).code == 65);
  CHECK(run({"harness", "--corpus", data("missing.txt"), "--max-n", "12"}).code == 65);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({"check", "--spec", "fib"}).code == 64);
  CHECK(run({"check", "--spec", "fib", "--what", "nfop", "--max-n", "0"}).code == 64);
  CHECK(run({"generate", "--spec", "fibonacci", "--len", "4"}).code == 65);
  CHECK(run({"check", "--spec", "periodic:012", "--what", "balance", "--max-n", "4"}).code == 65);
  CHECK(run({"check", "--spec", "periodic:012", "--what", "nfop", "--max-n", "4"}).code == 65);
  CHECK(run({"check", "--spec", "periodic:012", "--what", "nfop", "--variant", "1", "--max-n", "4"}).code == 1);
  CHECK(run({"generate", "--help"}).code == 0);
}
