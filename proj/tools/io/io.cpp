#include "firwb/io.hpp"

#include <fstream>
#include <sstream>

namespace firwb::io {

namespace {

template <class T>
T get_as(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::InvalidInput, std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorKind::InvalidInput, std::string("bad value for \"") + key + "\"");
  }
}

Label label_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, "label must be an array");
  Label l;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) fail(ErrorKind::InvalidInput, "label entries must be positive integers");
    l.push_back(x.get<std::uint32_t>());
  }
  return l;
}

ExactMatrix matrix_from_json(const Json& j, std::uint64_t p, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) fail(ErrorKind::InvalidInput, "matrix has the wrong number of rows");
  std::vector<Vec> rows;
  for (const auto& r : j) {
    if (!r.is_array() || r.size() != dim) fail(ErrorKind::InvalidInput, "matrix has the wrong number of columns");
    Vec row;
    for (const auto& x : r) row.push_back(ratfunc_from_json(x, p));
    rows.push_back(std::move(row));
  }
  return ExactMatrix::from_rows(rows, dim);
}

}  // namespace

RatFunc ratfunc_from_json(const Json& j, std::uint64_t p) {
  if (j.is_string()) return parse_ratfunc(j.get<std::string>(), p);
  if (j.is_number_integer()) return parse_ratfunc(std::to_string(j.get<long long>()), p);
  fail(ErrorKind::InvalidInput, "coefficient must be a string or an integer");
}

Json to_json(const RatFunc& f) { return to_string(f); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const ExactMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const StdObject& o) {
  Json s = Json::array();
  for (const auto& x : o.summands) s.push_back((x.kind == Kind::I ? "I" : "J") + std::to_string(x.degree));
  if (o.base == 0) return s;
  return Json{{"summands", s}, {"base", o.base}};
}

StdObject object_from_json(const Json& j) {
  StdObject o;
  const Json* s = &j;
  if (j.is_object()) {
    o.base = j.contains("base") ? get_as<std::uint32_t>(j, "base") : 0;
    if (!j.contains("summands")) fail(ErrorKind::InvalidInput, "missing key \"summands\"");
    s = &j.at("summands");
  }
  if (!s->is_array()) fail(ErrorKind::InvalidInput, "object must list its summands");
  for (const auto& x : *s) {
    if (!x.is_string()) fail(ErrorKind::InvalidInput, "summand must be a string like \"I2\"");
    auto t = x.get<std::string>();
    if (t.size() < 2 || (t[0] != 'I' && t[0] != 'J') ||
        t.find_first_not_of("0123456789", 1) != std::string::npos) {
      fail(ErrorKind::InvalidInput, "bad summand \"" + t + "\"");
    }
    o.summands.push_back({t[0] == 'I' ? Kind::I : Kind::J, static_cast<std::uint32_t>(std::stoul(t.substr(1)))});
  }
  return o;
}

Json to_json(const FirMorphism& f) {
  Json terms = Json::array();
  for (const auto& [phi, c] : f.terms()) terms.push_back(Json{{"inj", phi}, {"coef", to_json(c)}});
  return Json{{"source", f.source()}, {"target", f.target()}, {"terms", terms}};
}

FirMorphism fir_from_json(const Json& j, std::uint64_t p) {
  FirMorphism f(get_as<std::uint32_t>(j, "source"), get_as<std::uint32_t>(j, "target"));
  if (j.contains("terms")) {
    if (!j.at("terms").is_array()) fail(ErrorKind::InvalidInput, "terms must be an array");
    for (const auto& t : j.at("terms")) {
      if (!t.is_object() || !t.contains("inj")) fail(ErrorKind::InvalidInput, "term needs \"inj\"");
      RatFunc c = t.contains("coef") ? ratfunc_from_json(t.at("coef"), p) : parse_ratfunc("1", p);
      f = f + FirMorphism::single(f.source(), f.target(), label_from_json(t.at("inj")), c);
    }
  }
  return f;
}

Json to_json(const TruncElement& e) {
  Json coords = Json::array();
  for (const auto& [k, c] : e.coords()) {
    coords.push_back(Json{{"summand", k.first}, {"label", k.second}, {"coef", to_json(c)}});
  }
  return Json{{"level", e.level()}, {"coords", coords}, {"object", to_json(e.object())}};
}

TruncElement element_from_json(const Json& j, std::uint64_t p, const StdObject* fallback) {
  StdObject obj;
  if (j.is_object() && j.contains("object")) {
    obj = object_from_json(j.at("object"));
  } else if (fallback) {
    obj = *fallback;
  } else {
    fail(ErrorKind::InvalidInput, "element needs \"object\"");
  }
  TruncElement e(obj, get_as<std::uint32_t>(j, "level"));
  if (j.contains("coords")) {
    if (!j.at("coords").is_array()) fail(ErrorKind::InvalidInput, "coords must be an array");
    for (const auto& c : j.at("coords")) {
      auto s = c.contains("summand") ? get_as<std::size_t>(c, "summand") : 0;
      if (!c.contains("label") || !c.contains("coef")) fail(ErrorKind::InvalidInput, "coordinate needs label and coef");
      e.add(s, label_from_json(c.at("label")), ratfunc_from_json(c.at("coef"), p));
    }
  }
  return e;
}

Json to_json(const StdMap& f) {
  Json images = Json::array();
  for (const auto& x : f.images()) images.push_back(to_json(x));
  return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"images", images}};
}

StdMap map_from_json(const Json& j, std::uint64_t p) {
  if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("images")) {
    fail(ErrorKind::InvalidInput, "map needs source, target and images");
  }
  auto src = object_from_json(j.at("source"));
  auto tgt = object_from_json(j.at("target"));
  std::vector<TruncElement> images;
  for (const auto& x : j.at("images")) images.push_back(element_from_json(x, p, &tgt));
  return StdMap(src, tgt, images);
}

Json to_json(const SemilinearRep& rep) {
  const auto& act = rep.action();
  Json gens = Json::array(), mats = Json::array();
  for (const auto& g : act.generators()) {
    gens.push_back(g);
    mats.push_back(to_json(rep.matrix(g)));
  }
  return Json{{"n", act.n()}, {"dim", rep.dim()}, {"generators", gens}, {"matrices", mats}};
}

SemilinearRep rep_from_json(const Json& j, std::uint64_t p) {
  auto n = get_as<std::size_t>(j, "n");
  auto dim = get_as<std::size_t>(j, "dim");
  auto gens = get_as<std::vector<Perm>>(j, "generators");
  for (const auto& g : gens) {
    if (g.size() != n || !is_permutation(g)) fail(ErrorKind::InvalidInput, "generator is not a permutation of [n]");
  }
  if (!j.contains("matrices") || !j.at("matrices").is_array() || j.at("matrices").size() != gens.size()) {
    fail(ErrorKind::InvalidInput, "one matrix per generator expected");
  }
  std::vector<ExactMatrix> mats;
  for (const auto& m : j.at("matrices")) mats.push_back(matrix_from_json(m, p, dim));
  return SemilinearRep::from_generators(GroupAction(n, gens), dim, mats);
}

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const auto& row : p.rels) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e ? to_json(*e) : Json(nullptr));
    rels.push_back(r);
  }
  return Json{{"gens", p.gens}, {"rel_degrees", p.rel_degrees}, {"rels", rels}};
}

Presentation presentation_from_json(const Json& j, std::uint64_t field) {
  Presentation p;
  p.gens = get_as<std::vector<std::uint32_t>>(j, "gens");
  if (j.contains("rel_degrees")) p.rel_degrees = get_as<std::vector<std::uint32_t>>(j, "rel_degrees");
  if (j.contains("rels")) {
    if (!j.at("rels").is_array()) fail(ErrorKind::InvalidInput, "rels must be an array");
    for (const auto& row : j.at("rels")) {
      if (!row.is_array()) fail(ErrorKind::InvalidInput, "relation must be an array");
      std::vector<std::optional<FirMorphism>> r;
      for (const auto& e : row) {
        if (e.is_null()) {
          r.emplace_back();
        } else {
          r.emplace_back(fir_from_json(e, field));
        }
      }
      p.rels.push_back(std::move(r));
    }
  }
  p.validate();
  return p;
}

Json to_json(const ClassVector& c) {
  Json out = Json::object();
  for (const auto& [r, a] : c) {
    if (a) out[std::to_string(r)] = a;
  }
  return out;
}

ClassVector class_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::InvalidInput, "class must be an object");
  ClassVector c;
  for (const auto& [k, v] : j.items()) {
    if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos || !v.is_number_integer()) {
      fail(ErrorKind::InvalidInput, "class entries must be \"r\": integer");
    }
    if (auto a = v.get<long long>()) c[static_cast<std::uint32_t>(std::stoul(k))] = a;
  }
  return c;
}

Json to_json(const SubspaceV& v) {
  return Json{{"dim", v.dim()}, {"basis", to_json(v.basis)}, {"complete_up_to_degree", v.complete_up_to_degree}};
}

SubspaceV subspace_from_json(const Json& j, std::uint64_t p) {
  const Json* b = &j;
  if (j.is_object()) {
    if (!j.contains("basis")) fail(ErrorKind::InvalidInput, "missing key \"basis\"");
    b = &j.at("basis");
  }
  if (!b->is_array()) fail(ErrorKind::InvalidInput, "basis must be an array");
  std::vector<RatFunc> fs;
  for (const auto& x : *b) fs.push_back(ratfunc_from_json(x, p));
  auto v = SubspaceV::from_functions(fs, p);
  if (j.is_object() && j.contains("complete_up_to_degree")) {
    v.complete_up_to_degree = get_as<std::uint32_t>(j, "complete_up_to_degree");
  }
  return v;
}

Json to_json(const LevelCheck& c) {
  return Json{{"level", c.level},   {"dual_dim", c.dual_dim}, {"dims", c.dims}, {"ranks", c.ranks},
              {"injective", c.injective}, {"exact", c.exact},   {"euler", c.euler}};
}

Json to_json(const RefinedProjective& r) {
  Json out = Json::object();
  for (const auto& [deg, d] : r.multiplicity) out[std::to_string(deg)] = d;
  return out;
}

Json to_json(const Resolution& r) {
  Json terms = Json::array(), duals = Json::array(), diffs = Json::array(), checks = Json::array();
  for (const auto& t : r.terms) terms.push_back(to_json(t));
  for (const auto& d : r.duals) duals.push_back(to_json(d));
  for (const auto& d : r.differentials) diffs.push_back(to_json(d));
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"n", r.n},
              {"length", r.length()},
              {"certified", r.certified()},
              {"composites_zero", r.composites_zero},
              {"degrees_ok", r.degrees_ok},
              {"dropped", r.dropped},
              {"terms", terms},
              {"checks", checks},
              {"duals", duals},
              {"augmentation", to_json(r.augmentation)},
              {"rho", to_json(r.rho)},
              {"differentials", diffs}};
}

Json to_json(const CoverStep& c) {
  Json checks = Json::array();
  for (const auto& x : c.checks) checks.push_back(to_json(x));
  return Json{{"n", c.n},
              {"certified", c.certified()},
              {"cover", to_json(c.cover)},
              {"top_multiplicity", c.top_multiplicity},
              {"top_dimension", c.top_dimension},
              {"invariant_count", c.invariant_count},
              {"kernel_class", to_json(c.kernel_class)},
              {"checks", checks}};
}

Json error_json(const Error& e) { return Json{{"error", e.name()}, {"message", e.what()}}; }

Json load(const std::string& arg) {
  std::string text;
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) fail(ErrorKind::ParseError, "cannot read " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

}  // namespace firwb::io
