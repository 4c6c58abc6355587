#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "fibtan/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fibtan::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("list") {
    const Outcome text = invoke({"list"});
    CHECK(text.code == 0);
    CHECK(text.out.find("L1-5 (m odd)") != std::string::npos);
    CHECK(text.out.find("L1-6 (m even)") != std::string::npos);
    const Outcome json = invoke({"list", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(nlohmann::json::parse(json.out).size() == 32);
  }

  TEST_CASE("verify exit codes") {
    CHECK(invoke({"verify", "T3-c", "--m", "1", "--t", "1"}).code == 0);
    const Outcome parity = invoke({"verify", "T1-a", "--m", "1", "--t", "3"});
    CHECK(parity.code == 2);
    CHECK(parity.err.find("m even") != std::string::npos);
    CHECK(parity.out.empty());
    CHECK(invoke({"verify", "I-E4", "--digits", "30"}).code == 0);
  }

  TEST_CASE("usage errors") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"verify", "X-1"}).code == 2);
    CHECK(invoke({"verify", "HR63-T5", "--m", "1", "--t", "3"}).code == 2);
    CHECK(invoke({"verify", "T1-b", "--m", "1"}).code == 2);
    CHECK(invoke({"verify", "L1-1", "--m", "2", "--n", "0"}).code == 2);
    CHECK(invoke({"verify", "I-E7", "--m", "1"}).code == 2);
    CHECK(invoke({"verify", "C1-a", "--digits", "10"}).code == 2);
    CHECK(invoke({"verify", "I-E7", "--digits", "0"}).code == 2);
    CHECK(invoke({"sweep", "T1-b", "--m-range", "5..1", "--t-range", "0..3"}).code == 2);
    CHECK(invoke({"sweep", "T1-b", "--m-range", "1..x", "--t-range", "0..3"}).code == 2);
    CHECK(invoke({"verify", "T1-b", "--m", "1", "--t", "3", "--format", "xml"}).code == 2);
    CHECK(invoke({"eval", "T1-b", "--m", "1"}).code == 2);
    CHECK(invoke({"algebraic", "ALG-99", "--m-range", "0..1", "--n-range", "0..1"}).code == 2);
  }

  TEST_CASE("help is not an error") {
    CHECK(invoke({"--help"}).code == 0);
  }

  TEST_CASE("sweeps") {
    const Outcome hr = invoke({"sweep", "HR63-T5", "--t-range", "0..64", "--format", "json"});
    CHECK(hr.code == 0);
    const auto j = nlohmann::json::parse(hr.out);
    CHECK(j["instances"] == 65);
    CHECK(j["verified"] == 65);
    CHECK(j["first_counterexample"].is_null());

    const Outcome t1b = invoke({"sweep", "T1-b", "--m-range", "1..11", "--t-range", "0..32"});
    CHECK(t1b.code == 0);
    CHECK(t1b.out.find("0 failed") != std::string::npos);

    const Outcome empty = invoke({"sweep", "T1-a", "--m-range", "1..1", "--t-range", "0..5"});
    CHECK(empty.code == 2);
    CHECK(empty.err.find("parity-valid") != std::string::npos);

    CHECK(invoke({"sweep", "C3-a", "--m-range", "1..5", "--digits", "20"}).code == 0);
    CHECK(invoke({"sweep", "L1-3", "--m-range", "0..6", "--n-range", "1..6"}).code == 0);
  }

  TEST_CASE("parallel and serial sweeps are byte-identical") {
    for (const char* format : {"json", "csv", "text"}) {
      const Outcome serial = invoke({"sweep", "T2-b", "--m-range", "0..8", "--t-range",
                                     "0..16", "--jobs", "1", "--format", format});
      const Outcome parallel = invoke({"sweep", "T2-b", "--m-range", "0..8", "--t-range",
                                       "0..16", "--jobs", "4", "--format", format});
      CHECK(serial.code == 0);
      CHECK(serial.out == parallel.out);
    }
  }

  TEST_CASE("JSON reports round-trip byte for byte") {
    const std::vector<std::vector<std::string>> commands = {
        {"verify", "T3-c", "--m", "1", "--t", "1", "--format", "json"},
        {"verify", "L1-5", "--m", "3", "--n", "7", "--format", "json"},
        {"verify", "I-E6", "--digits", "25", "--format", "json"},
        {"eval", "C2-a", "--m", "3", "--digits", "25", "--format", "json"},
        {"sweep", "HR64", "--t-range", "0..10", "--format", "json"},
        {"algebraic", "ALG-21", "--m-range", "0..9", "--n-range", "0..9", "--format", "json"},
        {"list", "--format", "json"}};
    for (const auto& args : commands) {
      const Outcome o = invoke(args);
      INFO(args[0], " ", args[1]);
      const auto parsed = nlohmann::ordered_json::parse(o.out);
      CHECK(parsed.dump(2) + "\n" == o.out);
    }
  }

  TEST_CASE("report schema") {
    const auto j = nlohmann::ordered_json::parse(
        invoke({"verify", "T1-b", "--m", "3", "--t", "5", "--format", "json"}).out);
    std::vector<std::string> keys;
    for (const auto& item : j.items()) keys.push_back(item.key());
    CHECK(keys == std::vector<std::string>{"id", "m", "t", "n", "status", "gaussian",
                                           "pi_multiple", "lhs", "rhs", "radius",
                                           "terms_used", "elapsed_ms"});
    CHECK(j["gaussian"]["re"].is_string());
    CHECK(j["gaussian"]["im"] == "0");
    CHECK(j["pi_multiple"] == 0);
  }

  TEST_CASE("csv has one row per instance and a fixed header") {
    const Outcome o = invoke({"sweep", "T1-b", "--m-range", "1..3", "--t-range", "0..4",
                              "--format", "csv"});
    std::istringstream lines(o.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line ==
          "id,m,t,n,status,gaussian_re,gaussian_im,pi_multiple,lhs,rhs,radius,"
          "terms_used,elapsed_ms");
    int rows = 0;
    while (std::getline(lines, line)) {
      CHECK(std::count(line.begin(), line.end(), ',') == 12);
      ++rows;
    }
    CHECK(rows == 10);
  }

  TEST_CASE("algebraic and eval") {
    CHECK(invoke({"algebraic", "ALG-19", "--m-range", "0..20", "--n-range", "0..20"}).code == 0);
    const Outcome none = invoke({"algebraic", "ALG-20", "--m-range", "0..3", "--n-range", "1..1"});
    CHECK(none.code == 2);
    const Outcome e = invoke({"eval", "I-E7", "--digits", "40"});
    CHECK(e.code == 0);
    CHECK(e.out.find("7.85398163397448309615660845819875721049") != std::string::npos);
  }

  TEST_CASE("selftest quick") {
    const Outcome o = invoke({"selftest", "--quick"});
    CHECK(o.code == 0);
    CHECK(o.out.find("FAIL") == std::string::npos);
    CHECK(invoke({"selftest", "--quick", "--full"}).code == 2);
  }
}
