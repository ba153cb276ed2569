#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "obembed/error.hpp"
#include "obembed_cli/commands.hpp"

namespace {

using obembed::cli::Json;
using obembed::cli::RunReport;

std::string read_file(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw obembed::InvalidInput("cannot read \"" + path + "\"");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct OutputFlags {
  bool json = false;
  bool no_timestamp = false;
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
  cmd->add_flag("--json", flags.json, "Print the report as JSON");
  cmd->add_flag("--no-timestamp", flags.no_timestamp, "Omit the timestamp from JSON output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spun embeddings of planar open books, lens spaces and push-map presentations"};
  app.require_subcommand(1);
  OutputFlags flags;
  add_output_flags(&app, flags);

  std::int64_t p = 0, q = 0;
  auto* lens = app.add_subcommand("lens", "Continued fraction, slid diagram, open book and target of L(P,Q)");
  lens->add_option("P", p, "Order of H_1")->required();
  lens->add_option("Q", q, "Coprime to P, 0 < Q < P")->required();
  add_output_flags(lens, flags);

  int page = 0;
  std::string word_file, word_text;
  bool raw_only = false, normalized_only = false;
  auto* embed = app.add_subcommand("embed", "Spun embedding target of a planar open book");
  embed->add_option("--page", page, "Number of inner boundary components")->required();
  auto* wf = embed->add_option("--word", word_file, "File with the monodromy word ('-' for stdin)");
  auto* wt = embed->add_option("--word-text", word_text, "Monodromy word given inline");
  wf->excludes(wt);
  auto* raw = embed->add_flag("--raw", raw_only, "Print only the raw W_{i,j}");
  embed->add_flag("--normalized", normalized_only, "Print only the normalized form")->excludes(raw);
  add_output_flags(embed, flags);

  auto* s4 = app.add_subcommand("certify-s4", "Check the S^4 condition for a word with paired pushes");
  s4->add_option("--page", page, "Number of inner boundary components (2n)")->required();
  auto* sf = s4->add_option("--word", word_file, "File with the monodromy word ('-' for stdin)");
  s4->add_option("--word-text", word_text, "Monodromy word given inline")->excludes(sf);
  add_output_flags(s4, flags);

  std::string diagram_file, moves_file;
  auto* surgery = app.add_subcommand("surgery", "Kirby moves with H_1 audit and planar open book export");
  surgery->add_option("DIAGRAM", diagram_file, "Diagram file")->required();
  surgery->add_option("--moves", moves_file, "Moves file");
  add_output_flags(surgery, flags);

  std::string presentation_file;
  int fuzz = 0;
  std::uint64_t seed = 1;
  auto* pi1 = app.add_subcommand("pi1", "Push-map open book of a presentation and its π_1");
  pi1->add_option("--presentation", presentation_file, "Presentation file")->required();
  pi1->add_option("--fuzz", fuzz, "Also round-trip this many random presentations")->check(CLI::NonNegativeNumber);
  pi1->add_option("--seed", seed, "Seed for --fuzz");
  add_output_flags(pi1, flags);

  std::string evaluate_file;
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate an open book given as page and monodromy JSON");
  evaluate->add_option("FILE", evaluate_file, "JSON file {\"page\":..,\"monodromy\":..}")->required();
  add_output_flags(evaluate, flags);

  std::string corpus_dir;
  auto* corpus = app.add_subcommand("corpus", "Regression corpus");
  corpus->require_subcommand(1);
  auto* corpus_run = corpus->add_subcommand("run", "Run every fixture in a directory");
  corpus_run->add_option("DIR", corpus_dir, "Fixture directory")->required();
  add_output_flags(corpus_run, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : obembed::cli::kBadInput;
  }

  auto word_input = [&]() { return word_file.empty() ? word_text : read_file(word_file); };

  RunReport report;
  try {
    if (*lens) {
      report = obembed::cli::cmd_lens(p, q);
    } else if (*embed) {
      report = obembed::cli::cmd_embed(page, word_input());
      if (raw_only || normalized_only) {
        const char* key = raw_only ? "raw_notation" : "normalized_notation";
        report.lines = {report.outputs[key].get<std::string>()};
      }
    } else if (*s4) {
      report = obembed::cli::cmd_certify_s4(page, word_input());
    } else if (*surgery) {
      report = obembed::cli::cmd_surgery(read_file(diagram_file), moves_file.empty() ? "" : read_file(moves_file));
    } else if (*pi1) {
      report = obembed::cli::cmd_pi1(read_file(presentation_file), fuzz, seed);
    } else if (*evaluate) {
      auto j = Json::parse(read_file(evaluate_file));
      if (!j.is_object() || !j.contains("page") || !j.contains("monodromy")) {
        throw obembed::InvalidInput("expected {\"page\":..,\"monodromy\":..}");
      }
      report = obembed::cli::cmd_evaluate(j.at("page"), j.at("monodromy"));
    } else {
      report = obembed::cli::run_corpus(corpus_dir);
    }
  } catch (const obembed::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return obembed::cli::kBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: invalid JSON: " << e.what() << "\n";
    return obembed::cli::kBadInput;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return obembed::cli::kBadInput;
  }

  if (flags.json) {
    std::cout << report.to_json(!flags.no_timestamp).dump(2) << "\n";
  } else {
    std::cout << report.to_text();
  }
  return report.ok() ? obembed::cli::kOk : obembed::cli::kCheckFailed;
}
