/*
 * Copyright 2026 The flatstring Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli/cli.hpp"

using flatstring::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = invoke(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("genus subcommand") {
  const auto j = invoke_json({"genus", "a+ / a+"});
  CHECK(j["schema"] == "report_v1");
  CHECK(j["command"] == "genus");
  CHECK(j["result"]["genus_total"] == 1);
  CHECK(j["result"]["connected"] == true);
  CHECK(j["inputs"][0]["canonical"] == "1+ / 1+");
  CHECK_FALSE(j.contains("timing_ms"));

  const auto text = invoke({"genus", "a+ / a+"});
  CHECK(text.code == 0);
  CHECK(text.out.find("genus: 1") != std::string::npos);
}

TEST_CASE("reduce subcommand") {
  const auto j = invoke_json({"reduce", "a+ a+"});
  CHECK(j["result"]["final"] == "()");
  CHECK(j["result"]["steps"].size() == 1);
}

TEST_CASE("other subcommands run") {
  CHECK(invoke_json({"validate", "a+ a+"})["result"]["valid"] == true);
  CHECK(invoke_json({"canon", "b+ a+ b+ a+"})["result"]["canonical"] == "1+ 2+ 1+ 2+");
  CHECK(invoke_json({"faces", "a+ a+"})["result"]["faces"].size() == 3);
  CHECK(invoke_json({"moves", "a+ a+"})["result"]["count"] == 1);
  CHECK(invoke_json({"moves", "()", "--extra", "1"})["result"]["count"] == 2);
  CHECK(invoke_json({"orbit", "a+ b- c+ a+ b- c+"})["result"]["exhausted"] == true);
  CHECK(invoke_json({"irreducible", "a+ a+"})["result"]["irreducible"] == false);
  CHECK(invoke_json({"classify", "() / ()"})["result"]["connected_class"] == false);
  CHECK(invoke_json({"equiv", "a+ a+", "()"})["result"]["witness_length"] == 1);
  CHECK(invoke_json({"scramble", "a+ / a+", "--seed", "3", "--steps", "4"})["result"]
            ["steps_applied"] == 4);
  CHECK(invoke_json({"corpus-check"})["result"]["ok"] == true);
  CHECK(invoke_json({"corpus", "check"})["result"]["ok"] == true);
  CHECK(invoke({"corpus", "list"}).out.find("interchange_left") != std::string::npos);
  CHECK(invoke({"draw", "a+ / a+"}).out.rfind("digraph", 0) == 0);
  CHECK(invoke({"draw", "a+ / a+", "--as", "svg"}).out.rfind("<svg", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"genus"}).code == 1);
  CHECK(invoke({"genus", "a+ a-"}).code == 1);
  CHECK(invoke({"validate", "a+ a-"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"orbit", "a+ b- c+ a+ b- c+", "--cap", "1"}).code == 0);
  CHECK(invoke({"orbit", "a+ b- c+ a+ b- c+", "--cap", "1", "--strict"}).code == 3);
  CHECK(invoke({"irreducible", "a+ b- c+ a+ b- c+", "--cap", "1"}).code == 0);
  CHECK(invoke({"irreducible", "bogus", "--cap", "1"}).code == 1);
  CHECK(invoke({"equiv", "() / ()", "a+ / a+"}).code == 0);
  CHECK(invoke({"equiv", "() / ()", "a+ / a+", "--strict"}).code == 3);
  CHECK(invoke({"equiv", "() / ()", "a+ / a+", "--require-connected-nonparallel"}).code == 2);
  CHECK(invoke({"corpus-check", "--corpus", "/nonexistent/file.fsc"}).code == 1);
}

TEST_CASE("verify-counterexample") {
  const auto r = invoke({"verify-counterexample"});
  CHECK(r.code == 0);
  for (const auto* line : {"step 1 validation: PASS", "step 2 crossing-irreducible: PASS",
                           "step 3 Type 3 orbits: PASS",
                           "step 4 parallel flag on components 1, 2: PASS"}) {
    CHECK(r.out.find(line) != std::string::npos);
  }
  CHECK(r.out.find("step 5") == std::string::npos);

  const auto w = invoke_json({"verify-counterexample", "--witness"});
  CHECK(w["result"]["steps"][4]["verdict"] == "PASS");
  CHECK(w["result"]["passed"] == true);
  const auto low = invoke({"verify-counterexample", "--witness", "--extra", "1", "--strict"});
  CHECK(low.code == 3);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> args{"scramble", "a+ b+ c+ a+ c+ b+", "--seed", "17",
                                      "--steps", "9", "--format", "json"};
  CHECK(invoke(args).out == invoke(args).out);
  const std::vector<std::string> eq{"equiv", "a+ a+ / ()", "() / ()", "--format", "json"};
  CHECK(invoke(eq).out == invoke(eq).out);
}
