#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "obembed_cli/json_io.hpp"

namespace obembed::cli {

inline constexpr std::string_view kSchema = "obembed.report/1";

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kBadInput = 2 };

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::vector<Check> checks;
  std::vector<std::string> lines;  // human-readable summary

  bool ok() const;
  void check(std::string name, bool pass, std::string detail = {});
  Json to_json(bool timestamp) const;
  std::string to_text() const;
};

// Runs `command` on a JSON inputs object (the same object a report echoes
// back). Throws obembed::Error for bad input.
//
//   lens        {"p":7,"q":2}
//   embed       {"page":3,"word":"T{1,2}^-1 ..."}
//   certify-s4  {"page":2,"word":"T{1}^3 P{2|1}"}
//   surgery     {"diagram":"strands 1\nframings -7\n","moves":"blow_up +1 1\n"}
//   pi1         {"presentation":"gens 1\nx1 x1\n","fuzz":100,"seed":1}
//   evaluate    {"page":{...},"monodromy":{...}}
RunReport run_command(std::string_view command, const Json& inputs);

RunReport cmd_lens(std::int64_t p, std::int64_t q);
RunReport cmd_embed(int page, std::string_view word);
RunReport cmd_certify_s4(int page, std::string_view word);
RunReport cmd_surgery(std::string_view diagram, std::string_view moves);
RunReport cmd_pi1(std::string_view presentation, int fuzz, std::uint64_t seed);
RunReport cmd_evaluate(const Json& page, const Json& monodromy);

// Runs every *.json fixture in `dir` (sorted by file name). A fixture is
//   {"name":..,"command":..,"inputs":{..},"expect":{..},"expect_ok":true}
// and passes when each key of "expect" equals the same key of the report's
// outputs and the report's own checks pass (or fail, if expect_ok is false).
RunReport run_corpus(const std::string& dir);

}  // namespace obembed::cli
