#include "obembed_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "obembed/error.hpp"
#include "obembed/lens.hpp"
#include "obembed/pi1.hpp"
#include "obembed/spun.hpp"
#include "obembed/word_text.hpp"

namespace obembed::cli {

bool RunReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void RunReport::check(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

namespace {

Json convention_block() {
  return Json{{"page_surgery", SignConvention::page_surgery},
              {"framing", SignConvention::framing},
              {"braid_letter", SignConvention::braid_letter},
              {"blow_up", SignConvention::blow_up}};
}

std::string utc_now() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::string big_string(const BigInt& v) { return v.str(); }

std::string rational_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace

Json RunReport::to_json(bool timestamp) const {
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  Json out{{"schema", kSchema},
           {"command", command},
           {"convention", convention_block()},
           {"inputs", inputs},
           {"outputs", outputs},
           {"checks", checks_json},
           {"ok", ok()}};
  if (timestamp) out["timestamp"] = utc_now();
  return out;
}

std::string RunReport::to_text() const {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  for (const auto& c : checks) {
    out += std::string(c.pass ? "  ok    " : "  FAIL  ") + c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  return out;
}

RunReport cmd_lens(std::int64_t p, std::int64_t q) {
  RunReport r;
  r.command = "lens";
  r.inputs = {{"p", p}, {"q", q}};

  auto cf = cf_expand(p, q);
  auto value = cf_eval(cf);
  auto plumbing = plumbing_matrix(cf);
  auto plumbing_det = determinant(plumbing);
  auto slid = slid_diagram(cf);
  auto slid_m = slid.linking_matrix();
  auto slid_det = determinant(difference_congruence(slid_m));
  auto h1_plumbing = h1_invariants(plumbing);
  auto h1_slid = h1_invariants(difference_congruence(slid_m));
  auto book = lens_open_book(cf);
  auto target = lens_embedding_target(cf);

  r.outputs["continued_fraction"] = std::vector<std::int64_t>(cf.coefficients().begin(), cf.coefficients().end());
  r.outputs["cf_eval"] = rational_string(value);
  r.outputs["plumbing_matrix"] = to_json(plumbing);
  r.outputs["plumbing_determinant"] = big_string(plumbing_det);
  r.outputs["slid_diagram"] = {{"framings", slid.framings},
                               {"twist_regions", slid.twist_regions},
                               {"linking_matrix", to_json(slid_m)},
                               {"determinant", big_string(slid_det)}};
  r.outputs["h1"] = to_json(h1_plumbing);
  r.outputs["open_book"] = {{"page", book.page.inner_count()},
                            {"word", format_word(book.monodromy)},
                            {"word_parity", to_json(book.word_parity)}};
  r.outputs["parity"] = to_json(book.psi_parity);
  r.outputs["reconciliation"] = {{"agree", book.parities_agree()}, {"detail", book.reconciliation()}};
  r.outputs["normalized"] = to_json(target);
  r.outputs["target"] = target.notation();
  r.outputs["spin"] = target.is_spin();

  r.lines = {"L(" + std::to_string(p) + "," + std::to_string(q) + ")",
             "  -p/q = " + cf.to_string() + " = " + rational_string(value),
             "  plumbing det = " + big_string(plumbing_det) + ", H_1 = " + h1_plumbing.notation(),
             "  slid framings b = " + Json(slid.framings).dump() +
                 ", twist regions t = " + Json(slid.twist_regions).dump(),
             "  open book on " + book.page.notation() + ": " + format_word(book.monodromy),
             "  " + book.reconciliation(),
             "  parity " + book.psi_parity.to_string() + " -> " + target.notation()};

  r.check("cf_eval equals -p/q", value == Rational(-p) / q, rational_string(value));
  r.check("|det plumbing| = p", abs(plumbing_det) == p, big_string(plumbing_det));
  r.check("|det slid| = p", abs(slid_det) == p, big_string(slid_det));
  r.check("slides preserve H_1", h1_plumbing == h1_slid, h1_slid.notation());
  r.check("braid realization matches slid linking", linking_matrix(slid_braid_diagram(cf)) == slid_m);
  r.check("spin iff every coefficient even", target.is_spin() == cf.all_even());
  return r;
}

namespace {

EmbeddingReport embed_report(RunReport& r, const TwistWord& word) {
  auto rep = embedding_target(word);
  r.outputs["exponents"] = rep.exponents.entries;
  r.outputs["parity"] = to_json(rep.parity);
  r.outputs["raw"] = to_json(rep.raw);
  r.outputs["raw_notation"] = rep.raw_notation();
  r.outputs["normalized"] = to_json(rep.normalized);
  r.outputs["normalized_notation"] = rep.normalized.notation();
  r.outputs["spin"] = rep.spin();

  // Independent route: sum the sphere-twist images of the letters over Z/2.
  Z2Vector image(word.page().size());
  for (const auto& l : word.letters()) {
    if (l.exponent % 2 == 0) continue;
    const auto& t = std::get<DehnTwist>(l.generator);
    image += twist_image(t.curve.members(), word.page().size());
  }
  r.check("i + j = n", rep.even_count() + rep.odd_count() == word.page().inner_count());
  r.check("parity agrees with sphere-twist images", image == rep.parity, image.to_string());
  r.check("spin agrees with parity test", spin_target(word) == rep.spin());
  return rep;
}

}  // namespace

RunReport cmd_embed(int page, std::string_view word_text) {
  RunReport r;
  r.command = "embed";
  r.inputs = {{"page", page}, {"word", std::string(word_text)}};
  PlanarPage pg(page);
  auto word = parse_word(word_text, pg);
  auto rep = embed_report(r, word);
  r.outputs["note"] = rep.note();
  r.lines = {"page " + pg.notation() + ", word " + (word.empty() ? std::string("(empty)") : format_word(word)),
             "  exponent sums " + Json(rep.exponents.entries).dump() + ", parity " + rep.parity.to_string(),
             "  raw " + rep.raw_notation() + " = " + rep.raw.notation(),
             "  normalized " + rep.normalized.notation(),
             std::string("  spin target: ") + (rep.spin() ? "yes" : "no")};
  return r;
}

RunReport cmd_certify_s4(int page, std::string_view word_text) {
  RunReport r;
  r.command = "certify-s4";
  r.inputs = {{"page", page}, {"word", std::string(word_text)}};
  PlanarPage pg(page);
  auto word = parse_word(word_text, pg);
  auto cert = s4_certificate(word);
  r.outputs["certified"] = cert.certified;
  r.outputs["applicable"] = cert.applicable;
  r.outputs["reason"] = cert.reason;
  r.outputs["a_exponents"] = cert.a_exponents;
  r.outputs["b_exponents"] = cert.b_exponents;
  r.outputs["target"] = cert.target ? to_json(*cert.target) : Json(nullptr);
  r.outputs["target_notation"] = cert.target_notation();
  r.lines = {"page " + pg.notation() + ", word " + format_word(word),
             std::string("  certified: ") + (cert.certified ? "yes" : "no") + " (" + cert.reason + ")"};
  if (cert.target) r.lines.push_back("  " + cert.target_notation());
  r.check("spun embeds in S^4", cert.certified, cert.reason);
  return r;
}

namespace {

struct MoveLine {
  std::string kind;
  std::vector<std::int64_t> args;
};

std::vector<MoveLine> parse_moves(std::string_view text) {
  std::vector<MoveLine> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    MoveLine m;
    if (!(ls >> m.kind)) continue;
    std::int64_t v;
    while (ls >> v) m.args.push_back(v);
    if (!ls.eof()) throw InvalidInput("moves line " + std::to_string(lineno) + ": expected integers");
    bool ok = (m.kind == "blow_up" && m.args.size() >= 2) ||
              (m.kind == "blow_down" && m.args.size() == 1) ||
              (m.kind == "rolfsen" && m.args.size() == 2);
    if (!ok) {
      throw InvalidInput("moves line " + std::to_string(lineno) +
                         ": expected 'blow_up EPS R1 R2 ...', 'blow_down C' or 'rolfsen C T'");
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

RunReport cmd_surgery(std::string_view diagram_text, std::string_view moves_text) {
  RunReport r;
  r.command = "surgery";
  r.inputs = {{"diagram", std::string(diagram_text)}, {"moves", std::string(moves_text)}};
  auto d = parse_diagram(diagram_text);
  auto moves = parse_moves(moves_text);

  auto lk = linking_matrix(d);
  auto h1 = h1_invariants(lk);
  auto det = determinant(lk);
  r.outputs["diagram"] = to_json(d);
  r.outputs["linking_matrix"] = to_json(lk);
  r.outputs["determinant"] = big_string(det);
  r.outputs["h1"] = to_json(h1);
  r.lines = {"diagram with " + std::to_string(d.strands()) + " strands, |det| = " + big_string(abs(det)) +
             ", H_1 = " + h1.notation()};
  r.check("|H_1| = |det| when finite", h1.free_rank > 0 ? det == 0 : h1.order() == abs(det));

  Json log = Json::array();
  bool all_discharged = true;
  for (const auto& m : moves) {
    MoveResult res;
    if (m.kind == "blow_up") {
      std::vector<int> region(m.args.begin() + 1, m.args.end());
      res = blow_up(d, region, static_cast<int>(m.args[0]));
    } else if (m.kind == "blow_down") {
      res = blow_down(d, static_cast<int>(m.args[0]));
    } else {
      res = rolfsen_twist(d, static_cast<int>(m.args[0]), m.args[1]);
    }
    log.push_back(to_json(res.record));
    all_discharged = all_discharged && res.record.discharged();
    r.lines.push_back("  " + res.record.move + " " + res.record.detail + ": " + res.record.before.notation() +
                      " -> " + res.record.after.notation());
    d = std::move(res.diagram);
  }
  r.outputs["moves"] = log;
  r.outputs["final_diagram"] = to_json(d);
  r.outputs["final_h1"] = to_json(h1_invariants(linking_matrix(d)));
  if (!moves.empty()) r.check("every move preserves H_1", all_discharged);

  auto book = to_planar_open_book(d);
  auto rep = embedding_target(book.monodromy);
  r.outputs["open_book"] = {{"page", book.page.inner_count()},
                            {"word", format_word(book.monodromy)},
                            {"parity", to_json(rep.parity)}};
  r.outputs["raw"] = to_json(rep.raw);
  r.outputs["normalized"] = to_json(rep.normalized);
  r.outputs["spin"] = rep.spin();
  r.lines.push_back("  open book on " + book.page.notation() + ": " +
                    (book.monodromy.empty() ? std::string("(identity)") : format_word(book.monodromy)));
  r.lines.push_back("  spun target " + rep.raw_notation() + " -> " + rep.normalized.notation());
  return r;
}

namespace {

GroupPresentation random_presentation(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> gdist(0, 5), kdist(0, 5), ldist(0, 12);
  int g = gdist(rng);
  int k = kdist(rng);
  std::vector<GroupWord> rel;
  for (int j = 0; j < k; ++j) {
    GroupWord w;
    if (g > 0) {
      std::uniform_int_distribution<int> letter(1, g), sign(0, 1);
      int len = ldist(rng);
      for (int i = 0; i < len; ++i) w.letters.push_back(sign(rng) ? letter(rng) : -letter(rng));
    }
    rel.push_back(free_reduce(w));
  }
  return GroupPresentation(g, std::move(rel));
}

bool round_trips(const GroupPresentation& g) {
  std::vector<GroupWord> reduced;
  for (const auto& w : g.relators()) reduced.push_back(free_reduce(w));
  return pi1_of_open_book(page_for_presentation(g)) == GroupPresentation(g.generators(), reduced);
}

}  // namespace

RunReport cmd_pi1(std::string_view text, int fuzz, std::uint64_t seed) {
  RunReport r;
  r.command = "pi1";
  r.inputs = {{"presentation", std::string(text)}};
  if (fuzz > 0) {
    r.inputs["fuzz"] = fuzz;
    r.inputs["seed"] = seed;
  }
  auto g = parse_presentation(text);
  auto page = page_for_presentation(g);
  auto recovered = pi1_of_open_book(page);
  auto ab = abelianization(recovered);

  Json words = Json::array();
  for (const auto& w : page.push_words) words.push_back(w.to_string());
  Json rels = Json::array();
  for (const auto& w : recovered.relators()) rels.push_back(w.to_string('a'));
  r.outputs["push_page"] = {{"handle_count", page.handle_count},
                            {"sphere_count", page.sphere_count},
                            {"push_words", words}};
  r.outputs["description"] = page.description();
  r.outputs["presentation"] = recovered.to_string('a');
  r.outputs["relators"] = rels;
  r.outputs["abelianization"] = to_json(ab);
  r.lines = {"input " + g.to_string(), "  " + page.description(), "  π_1 = " + recovered.to_string('a'),
             "  H_1 = " + ab.notation()};

  r.check("round trip", round_trips(g));
  r.check("abelianization unchanged", abelianization(g) == ab, ab.notation());
  r.check("abelianization invariant under cyclic reduction", abelianization(simplify(g)) == ab);

  if (fuzz > 0) {
    std::mt19937_64 rng(seed);
    int passed = 0;
    for (int i = 0; i < fuzz; ++i) {
      auto h = random_presentation(rng);
      if (round_trips(h) && abelianization(h) == abelianization(pi1_of_open_book(page_for_presentation(h)))) {
        ++passed;
      }
    }
    r.outputs["fuzz"] = {{"cases", fuzz}, {"seed", seed}, {"passed", passed}};
    r.lines.push_back("  fuzz: " + std::to_string(passed) + "/" + std::to_string(fuzz) + " round trips");
    r.check("fuzzed round trips", passed == fuzz, std::to_string(passed) + "/" + std::to_string(fuzz));
  }
  return r;
}

RunReport cmd_evaluate(const Json& page_json, const Json& mono_json) {
  RunReport r;
  r.command = "evaluate";
  r.inputs = {{"page", page_json}, {"monodromy", mono_json}};
  auto page = page_form_from_json(page_json);
  auto mono = monodromy_from_json(mono_json);
  auto form = evaluate_open_book(page, mono);
  auto norm = normalize(form);
  r.outputs["raw"] = to_json(form);
  r.outputs["raw_notation"] = form.notation();
  r.outputs["normalized"] = to_json(norm);
  r.outputs["normalized_notation"] = norm.notation();
  r.lines = {"OB = " + form.notation(), "  normalized " + norm.notation()};
  r.check("normalization keeps the summand count",
          form.s1_cross_sphere() + form.trivial_bundle() + form.twisted_bundle() ==
              norm.s1_cross_sphere() + norm.trivial_bundle() + norm.twisted_bundle());
  return r;
}

namespace {

template <typename T>
T input(const Json& in, const char* key) {
  if (!in.is_object() || !in.contains(key)) throw InvalidInput(std::string("missing input \"") + key + "\"");
  try {
    return in.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(std::string("input \"") + key + "\" has the wrong type");
  }
}

template <typename T>
T input_or(const Json& in, const char* key, T fallback) {
  return in.contains(key) ? input<T>(in, key) : fallback;
}

}  // namespace

RunReport run_command(std::string_view command, const Json& in) {
  if (command == "lens") return cmd_lens(input<std::int64_t>(in, "p"), input<std::int64_t>(in, "q"));
  if (command == "embed") return cmd_embed(input<int>(in, "page"), input_or<std::string>(in, "word", ""));
  if (command == "certify-s4") {
    return cmd_certify_s4(input<int>(in, "page"), input_or<std::string>(in, "word", ""));
  }
  if (command == "surgery") {
    return cmd_surgery(input<std::string>(in, "diagram"), input_or<std::string>(in, "moves", ""));
  }
  if (command == "pi1") {
    return cmd_pi1(input<std::string>(in, "presentation"), input_or<int>(in, "fuzz", 0),
                   input_or<std::uint64_t>(in, "seed", 1));
  }
  if (command == "evaluate") return cmd_evaluate(input<Json>(in, "page"), input<Json>(in, "monodromy"));
  throw InvalidInput("unknown command \"" + std::string(command) + "\"");
}

RunReport run_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  RunReport r;
  r.command = "corpus run";
  r.inputs = {{"dir", dir}};
  if (!fs::is_directory(dir)) throw InvalidInput("corpus directory \"" + dir + "\" does not exist");

  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());

  Json results = Json::array();
  for (const auto& path : files) {
    std::string name = path.filename().string();
    std::string detail;
    bool pass = true;
    try {
      std::ifstream f(path);
      auto fixture = Json::parse(f);
      name = fixture.value("name", name);
      bool expect_error = fixture.value("expect_error", false);
      try {
        auto rep = run_command(fixture.at("command").get<std::string>(), fixture.at("inputs"));
        if (expect_error) {
          pass = false;
          detail = "expected an input error";
        } else {
          bool expect_ok = fixture.value("expect_ok", true);
          if (rep.ok() != expect_ok) {
            pass = false;
            detail = expect_ok ? "report checks failed" : "report checks unexpectedly passed";
          }
          if (fixture.contains("expect")) {
            for (const auto& [key, want] : fixture.at("expect").items()) {
              if (!rep.outputs.contains(key) || rep.outputs.at(key) != want) {
                pass = false;
                detail += (detail.empty() ? "" : "; ") + key + ": got " +
                          (rep.outputs.contains(key) ? rep.outputs.at(key).dump() : "nothing") +
                          ", want " + want.dump();
              }
            }
          }
        }
      } catch (const Error& e) {
        if (!expect_error) {
          pass = false;
          detail = e.what();
        }
      }
    } catch (const nlohmann::json::exception& e) {
      pass = false;
      detail = std::string("bad fixture: ") + e.what();
    }
    results.push_back({{"fixture", path.filename().string()}, {"name", name}, {"pass", pass}});
    r.check(name, pass, detail);
  }
  r.outputs["fixtures"] = results;
  r.outputs["count"] = files.size();
  r.lines.push_back(std::to_string(files.size()) + " fixtures in " + dir);
  return r;
}

}  // namespace obembed::cli
