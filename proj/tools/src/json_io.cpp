#include "obembed_cli/json_io.hpp"

#include "obembed/error.hpp"

namespace obembed::cli {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("JSON object is missing \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(std::string("JSON field \"") + key + "\" has the wrong type");
  }
}

}  // namespace

Json to_json(const Z2Vector& v) { return Json(v.to_ints()); }

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const H1Invariants& h) {
  return Json{{"torsion", h.torsion}, {"free_rank", h.free_rank}, {"notation", h.notation()}};
}

H1Invariants h1_from_json(const Json& j) {
  return H1Invariants{field<std::vector<std::int64_t>>(j, "torsion"), field<std::size_t>(j, "free_rank")};
}

Json to_json(const FourManifoldForm& f) {
  return Json{{"dim", f.m()},
              {"s1xs", f.s1_cross_sphere()},
              {"trivial", f.trivial_bundle()},
              {"twisted", f.twisted_bundle()}};
}

FourManifoldForm form_from_json(const Json& j) {
  return FourManifoldForm(field<int>(j, "dim"), field<std::int64_t>(j, "s1xs"),
                          field<std::int64_t>(j, "trivial"), field<std::int64_t>(j, "twisted"));
}

Json to_json(const PageForm& p) {
  Json atoms = Json::array();
  for (const auto& a : p.atoms) {
    atoms.push_back({{"kind", a.kind == AtomKind::SphereCyl ? "sphere_cyl" : "circle_disk"}, {"m", a.m}});
  }
  return Json{{"atoms", atoms}};
}

PageForm page_form_from_json(const Json& j) {
  PageForm p;
  for (const auto& a : field<Json>(j, "atoms")) {
    auto kind = field<std::string>(a, "kind");
    int m = field<int>(a, "m");
    if (kind == "sphere_cyl") {
      p.atoms.push_back(sphere_cyl(m));
    } else if (kind == "circle_disk") {
      p.atoms.push_back(circle_disk(m));
    } else {
      throw InvalidInput("unknown atom kind \"" + kind + "\"");
    }
  }
  return p;
}

Json to_json(const MonodromyForm& m) {
  Json pushes = Json::array();
  for (const auto& p : m.pushes) pushes.push_back({{"circle", p.circle}, {"sphere", p.sphere}});
  return Json{{"twist_exponents", m.twist_exponents}, {"pushes", pushes}};
}

MonodromyForm monodromy_from_json(const Json& j) {
  MonodromyForm m;
  m.twist_exponents = field<std::vector<std::int64_t>>(j, "twist_exponents");
  if (j.contains("pushes")) {
    for (const auto& p : j.at("pushes")) {
      m.pushes.push_back({field<std::size_t>(p, "circle"), field<std::size_t>(p, "sphere")});
    }
  }
  return m;
}

Json to_json(const Letter& l) {
  auto members = [](const CurveClass& c) { return std::vector<int>(c.members().begin(), c.members().end()); };
  if (const auto* t = std::get_if<DehnTwist>(&l.generator)) {
    return Json{{"op", "twist"}, {"curve", members(t->curve)}, {"exp", l.exponent}};
  }
  const auto& p = std::get<PlanarPush>(l.generator);
  return Json{{"op", "push"}, {"boundary", p.boundary}, {"around", members(p.around)}, {"exp", l.exponent}};
}

Letter letter_from_json(const Json& j) {
  auto op = field<std::string>(j, "op");
  std::int64_t exp = j.contains("exp") ? field<std::int64_t>(j, "exp") : 1;
  if (op == "twist") return twist(CurveClass(field<std::vector<int>>(j, "curve")), exp);
  if (op == "push") {
    return push(field<int>(j, "boundary"), CurveClass(field<std::vector<int>>(j, "around")), exp);
  }
  throw InvalidInput("unknown letter op \"" + op + "\"");
}

Json to_json(const TwistWord& w) {
  Json letters = Json::array();
  for (const auto& l : w.letters()) letters.push_back(to_json(l));
  return Json{{"page", w.page().inner_count()}, {"letters", letters}};
}

TwistWord word_from_json(const Json& j) {
  std::vector<Letter> letters;
  for (const auto& l : field<Json>(j, "letters")) letters.push_back(letter_from_json(l));
  return TwistWord(PlanarPage(field<int>(j, "page")), std::move(letters));
}

Json to_json(const FramedBraidDiagram& d) {
  Json word = Json::array();
  for (const auto& l : d.braid_word()) word.push_back({l.i, l.j, l.sign});
  return Json{{"strands", d.strands()},
              {"framings", std::vector<std::int64_t>(d.framings().begin(), d.framings().end())},
              {"word", word}};
}

FramedBraidDiagram diagram_from_json(const Json& j) {
  auto framings = field<std::vector<std::int64_t>>(j, "framings");
  if (field<int>(j, "strands") != static_cast<int>(framings.size())) {
    throw InvalidInput("strand count does not match the number of framings");
  }
  std::vector<BraidLetter> word;
  for (const auto& l : field<Json>(j, "word")) {
    auto v = l.get<std::vector<int>>();
    if (v.size() != 3) throw InvalidInput("braid letter must be [i, j, sign]");
    word.push_back({v[0], v[1], v[2]});
  }
  return FramedBraidDiagram(std::move(framings), std::move(word));
}

Json to_json(const MoveRecord& r) {
  return Json{{"move", r.move},
              {"detail", r.detail},
              {"obligation", r.obligation},
              {"before", to_json(r.before)},
              {"after", to_json(r.after)},
              {"discharged", r.discharged()}};
}

}  // namespace obembed::cli
