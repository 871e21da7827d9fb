#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "firwb/io.hpp"

using namespace firwb;
using io::Json;

namespace {

enum class Format { Default, Json, Table };

struct Opts {
  std::optional<std::uint32_t> level;
  std::string field = "rat";
  std::uint32_t degree_bound = 6;
  bool json = false;
  bool table = false;

  std::uint64_t p() const { return field == "rat" ? 0 : std::stoull(field.substr(3)); }
  Format format() const { return json ? Format::Json : table ? Format::Table : Format::Default; }
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string check_field(const std::string& f) {
  if (f == "rat") return {};
  if (f.rfind("fp:", 0) == 0 && f.size() > 3 && f.find_first_not_of("0123456789", 3) == std::string::npos &&
      f.size() < 13 && is_prime(std::stoull(f.substr(3)))) {
    return {};
  }
  return "field must be rat or fp:<prime>";
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

void emit_matrix(const ExactMatrix& m, Format f) {
  if (f != Format::Table) return emit(io::to_json(m));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::cout << (j ? "\t" : "") << to_string(m(i, j));
    std::cout << '\n';
  }
}

std::string label_text(const Label& l) {
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s + ")";
}

void emit_element(const TruncElement& e, Format f) {
  if (f != Format::Table) return emit(io::to_json(e));
  for (const auto& [k, c] : e.coords()) std::cout << k.first << '\t' << label_text(k.second) << '\t' << to_string(c) << '\n';
}

void emit_class(const ClassVector& c, Format f) {
  if (f != Format::Table) return emit(io::to_json(c));
  std::cout << "r,a\n";
  for (const auto& [r, a] : c) std::cout << r << ',' << a << '\n';
}

/// "I1+J2" or a JSON object.
StdObject parse_object(const std::string& s) {
  if (!s.empty() && (s[0] == '[' || s[0] == '{')) return io::object_from_json(io::load(s));
  Json arr = Json::array();
  std::size_t start = 0;
  while (start <= s.size()) {
    auto end = s.find('+', start);
    if (end == std::string::npos) end = s.size();
    auto part = s.substr(start, end - start);
    part.erase(0, part.find_first_not_of(' '));
    part.erase(part.find_last_not_of(' ') + 1);
    arr.push_back(part);
    start = end + 1;
  }
  return io::object_from_json(arr);
}

template <class T, class F>
std::vector<T> one_or_many(const Json& j, F&& f) {
  std::vector<T> out;
  if (j.is_array()) {
    for (const auto& x : j) out.push_back(f(x));
  } else {
    out.push_back(f(j));
  }
  return out;
}

Presentation load_presentation(const std::string& arg, const Opts& o) {
  return io::presentation_from_json(io::load(arg), o.p());
}

/// Smallest g <= r with the cokernel of phi_{I^r} generated in degree g at N.
std::optional<std::uint32_t> phi_cokernel_degree(const StdMap& phi, std::uint32_t r, std::uint32_t N) {
  for (std::uint32_t g = 0; g <= r && g + 2 <= N; ++g) {
    if (generated_in_degree(phi, g, N)) return g;
  }
  return std::nullopt;
}

// ------------------------------------------------------------------ selftest

std::string random_poly(std::mt19937_64& rng, std::uint32_t vars, int degree, const std::string& prefix = "t") {
  std::uniform_int_distribution<int> coef(-3, 3), var(1, static_cast<int>(vars)), deg(0, degree);
  std::string s = std::to_string(coef(rng));
  for (int k = 0; k < 2; ++k) {
    int c = coef(rng);
    if (!c || !vars) continue;
    s += " + (" + std::to_string(c) + ")";
    for (int d = deg(rng); d > 0; --d) s += "*" + prefix + std::to_string(var(rng));
  }
  return s;
}

FirMorphism random_fir(std::mt19937_64& rng, std::uint32_t a, std::uint32_t b) {
  FirMorphism f(a, b);
  for (const auto& phi : injections(a, b)) {
    if (rng() % 2) f.add_term(phi, parse_ratfunc(random_poly(rng, b, 1)));
  }
  return f;
}

int selftest() {
  std::uint64_t seed = 20240611;
  if (const char* s = std::getenv("FIRWB_SEED")) seed = std::strtoull(s, nullptr, 10);
  std::mt19937_64 rng(seed);
  std::cout << "seed " << seed << '\n';
  int failed = 0;
  auto report = [&](const char* name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
    failed += !ok;
  };

  bool ok = true;
  for (std::uint32_t m = 0; m <= 5; ++m) {
    for (std::uint32_t n = 0; n <= m; ++n) ok &= injections(n, m).size() == falling(m, n);
  }
  report("injection-counts", ok);

  ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<std::uint32_t> d(0, 3);
    std::uint32_t n = d(rng), m = d(rng), u = d(rng);
    if (n > m) std::swap(n, m);
    if (m > u) std::swap(m, u);
    if (n > m) std::swap(n, m);
    auto f = random_fir(rng, n, m), g = random_fir(rng, m, u);
    std::uint32_t N = u + 1;
    ok &= level_matrix(realize(compose(f, g)), N) == level_matrix(realize(f), N) * level_matrix(realize(g), N);
  }
  report("fir-functoriality", ok);

  ok = true;
  for (std::uint32_t r = 0; r <= 3; ++r) {
    for (std::uint32_t s = 0; s <= 3; ++s) ok &= hom_basis(r, s).k_basis.size() == binomial(r, s);
  }
  report("hom-dimensions", ok);

  ok = true;
  for (std::uint32_t r = 1; r <= 3; ++r) {
    ShiftDecomposition sd(r);
    for (std::uint32_t N = r; N <= r + 2; ++N) {
      auto f = sd.forward_matrix(N), b = sd.backward_matrix(N);
      ok &= f * b == ExactMatrix::identity(f.rows()) && b * f == ExactMatrix::identity(b.rows());
    }
  }
  report("shift-decomposition", ok);

  ok = true;
  for (int trial = 0; trial < 10; ++trial) {
    auto text = random_poly(rng, 1, 3, "x");
    auto g = parse_ratfunc(text);
    auto f = g - g.rename_indices(Family::xi, {{1, 2}});
    auto sp = split_symmetric_cocycle(f);
    ok &= sp.g + sp.h.rename_indices(Family::xi, {{1, 2}}) == f;
  }
  report("cocycle-split", ok);

  ok = true;
  for (std::uint32_t n = 0; n <= 2; ++n) {
    ok &= grothendieck_class(Presentation::free({n})) == ClassVector{{n, static_cast<long long>(falling(n, n))}};
  }
  report("free-classes", ok);

  std::cout << (failed ? "FAILED " : "OK ") << failed << '\n';
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with modules over finite sets and injections"};
  app.require_subcommand(1);
  Opts o;
  std::function<void()> action;

  auto common = [&](CLI::App* c) {
    c->add_option("--level", o.level, "Level N");
    c->add_option("--field", o.field, "rat or fp:<p>")->check(CLI::Validator(check_field, "FIELD"));
    c->add_option("--degree-bound", o.degree_bound, "Numerator degree bound for ansatz searches");
    auto* j = c->add_flag("--json", o.json, "JSON output");
    auto* t = c->add_flag("--table", o.table, "Plain table output");
    j->excludes(t);
    return c;
  };
  auto group = [&](const char* name, const char* help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };

  std::string a1, a2;
  std::uint32_t n1 = 0, n2 = 0;
  std::optional<std::uint32_t> from;

  auto* fir = group("fir", "Morphisms of the category of finite sets and injections");
  {
    auto* c = common(fir->add_subcommand("compose", "g after f"));
    c->add_option("f", a1)->required();
    c->add_option("g", a2)->required();
    c->callback([&] {
      action = [&] {
        auto f = io::fir_from_json(io::load(a1), o.p()), g = io::fir_from_json(io::load(a2), o.p());
        auto h = compose(f, g);
        if (o.format() != Format::Table) return emit(io::to_json(h));
        for (const auto& [phi, c] : h.terms()) std::cout << label_text(phi) << '\t' << to_string(c) << '\n';
      };
    });
  }
  {
    auto* c = common(fir->add_subcommand("injections", "All injections [n] -> [m]"));
    c->add_option("n", n1)->required();
    c->add_option("m", n2)->required();
    c->callback([&] {
      action = [&] {
        auto all = injections(n1, n2);
        if (o.format() != Format::Table) return emit(Json(all));
        for (const auto& phi : all) std::cout << label_text(phi) << '\n';
      };
    });
  }
  {
    auto* c = common(fir->add_subcommand("realize", "Level matrix of the realized map J^m -> J^n"));
    c->add_option("f", a1)->required();
    c->callback([&] {
      action = [&] {
        auto f = io::fir_from_json(io::load(a1), o.p());
        emit_matrix(level_matrix(realize(f), o.level.value_or(f.target())), o.format());
      };
    });
  }

  auto* sl = group("sl", "Semilinear standard objects and maps");
  {
    auto* c = common(sl->add_subcommand("apply", "Apply a map to an element"));
    c->add_option("map", a1)->required();
    c->add_option("element", a2)->required();
    c->callback([&] {
      action = [&] {
        auto f = io::map_from_json(io::load(a1), o.p());
        emit_element(apply(f, io::element_from_json(io::load(a2), o.p(), &f.source())), o.format());
      };
    });
  }
  {
    auto* c = common(sl->add_subcommand("matrix", "Level matrix of a map"));
    c->add_option("map", a1)->required();
    c->callback([&] {
      action = [&] {
        auto f = io::map_from_json(io::load(a1), o.p());
        auto N = o.level.value_or(std::max(f.source().max_degree(), f.target().max_degree()));
        emit_matrix(level_matrix(f, N), o.format());
      };
    });
  }
  {
    auto* c = common(sl->add_subcommand("hom-basis", "Maps I^r -> I^s"));
    c->add_option("r", n1)->required();
    c->add_option("s", n2)->required();
    c->callback([&] {
      action = [&] {
        auto h = hom_basis(n1, n2);
        Json k = Json::array(), inv = Json::array();
        for (const auto& e : h.k_basis) k.push_back(io::to_json(e));
        for (const auto& e : h.invariant) inv.push_back(io::to_json(e));
        if (o.format() != Format::Table) return emit(Json{{"k_basis", k}, {"invariant", inv}});
        std::cout << "k_basis " << h.k_basis.size() << "\ninvariant " << h.invariant.size() << '\n';
      };
    });
  }
  {
    auto* c = common(sl->add_subcommand("shift-decompose", "Shift of I^r split as I^r + I^(r-1)"));
    c->add_option("r", n1)->required();
    c->callback([&] {
      action = [&] {
        ShiftDecomposition sd(n1);
        auto N = o.level.value_or(n1);
        auto f = sd.forward_matrix(N), b = sd.backward_matrix(N);
        bool inv = f * b == ExactMatrix::identity(f.rows()) && b * f == ExactMatrix::identity(b.rows());
        if (o.format() == Format::Table) {
          std::cout << "forward\n";
          emit_matrix(f, Format::Table);
          std::cout << "backward\n";
          emit_matrix(b, Format::Table);
          std::cout << "inverse " << (inv ? "yes" : "no") << '\n';
          return;
        }
        emit(Json{{"r", n1},
                  {"level", N},
                  {"split", io::to_json(sd.split_object())},
                  {"forward", io::to_json(f)},
                  {"backward", io::to_json(b)},
                  {"inverse", inv}});
      };
    });
  }
  {
    auto* c = common(sl->add_subcommand("omega-sigma", "Matrix of Omega^n(M) -> Sigma^n(M)"));
    c->add_option("object", a1, "e.g. I1+J2")->required();
    c->add_option("n", n1)->required();
    c->callback([&] {
      action = [&] {
        auto m = parse_object(a1);
        emit_matrix(omega_to_sigma(m, n1, o.level.value_or(m.max_degree() + n1)), o.format());
      };
    });
  }
  {
    auto* c = common(sl->add_subcommand("phi-degree", "Generation degree of the cokernel of phi on I^r"));
    c->add_option("r", n1)->required();
    c->callback([&] {
      action = [&] {
        auto phi = phi_decomposed(n1);
        std::vector<std::uint32_t> levels = {n1 + 3, n1 + 4};
        if (o.level) levels = {*o.level};
        Json rows = Json::array();
        std::optional<std::uint32_t> first;
        bool agree = true;
        for (auto N : levels) {
          auto g = phi_cokernel_degree(phi, n1, N);
          rows.push_back(Json{{"level", N}, {"degree", g ? Json(*g) : Json(nullptr)}});
          if (N == levels.front()) first = g;
          agree &= g == first;
        }
        if (o.format() != Format::Table) return emit(Json{{"r", n1}, {"levels", rows}, {"agree", agree}});
        for (const auto& x : rows) std::cout << x["level"] << '\t' << x["degree"] << '\n';
      };
    });
  }

  auto* desc = group("desc", "Galois descent");
  {
    auto* c = common(desc->add_subcommand("invariants", "Fixed vectors of a semilinear representation"));
    c->add_option("rep", a1)->required();
    c->callback([&] {
      action = [&] {
        auto rep = io::rep_from_json(io::load(a1), o.p());
        auto vs = invariant_vectors(rep);
        Json arr = Json::array();
        for (const auto& v : vs) arr.push_back(io::to_json(v));
        if (o.format() != Format::Table) return emit(Json{{"vectors", arr}, {"verified", verify_descent(rep, vs)}});
        for (const auto& v : vs) {
          for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "\t" : "") << to_string(v[i]);
          std::cout << '\n';
        }
      };
    });
  }

  auto* coh = group("coh", "Cocycles of the infinite symmetric group");
  {
    auto* c = common(coh->add_subcommand("split", "f(x1,x2) = g(x1) + h(x2)"));
    c->add_option("f", a1)->required();
    c->callback([&] {
      action = [&] {
        auto s = split_symmetric_cocycle(parse_ratfunc(a1, o.p()));
        if (o.format() != Format::Table) return emit(Json{{"g", to_string(s.g)}, {"h", to_string(s.h)}});
        std::cout << "g\t" << to_string(s.g) << "\nh\t" << to_string(s.h) << "\ny0\t" << s.y0.str() << '\n';
      };
    });
  }
  {
    auto* c = common(coh->add_subcommand("solve", "Solve a cocycle into I^r from its value at (1 2)"));
    c->add_option("r", n1)->required();
    c->add_option("c12", a1, "RatFunc (r = 0, 2) or element JSON")->required();
    c->callback([&] {
      action = [&] {
        auto obj = StdObject::I(n1);
        TruncElement c12;
        if (n1 == 1 || (!a1.empty() && a1[0] == '{')) {
          c12 = io::element_from_json(io::load(a1), o.p(), &obj);
        } else {
          c12 = TruncElement(obj, 2);
          Label l;
          for (std::uint32_t i = 1; i <= n1 && i <= 2; ++i) l.push_back(i);
          auto v = parse_ratfunc(a1, o.p());
          if (!v.is_zero()) c12.add(0, l, v);
        }
        auto s = solve_transposition_cocycle(n1, c12);
        Json out{{"zero", s.zero}};
        if (s.generator) {
          out["generator"] = io::to_json(*s.generator);
          out["verified"] = verify_coboundary(c12, *s.generator);
        }
        if (o.format() != Format::Table || !s.generator) return emit(out);
        emit_element(*s.generator, Format::Table);
      };
    });
  }

  auto* mod = group("mod", "Finitely presented modules");
  {
    auto* c = common(mod->add_subcommand("dims", "Dual dimensions per level as CSV"));
    c->add_option("presentation", a1)->required();
    c->add_option("--from", from, "First level (default: the largest degree)");
    c->callback([&] {
      action = [&] {
        auto p = load_presentation(a1, o);
        auto last = o.level.value_or(stable_level(p) + 3);
        Json rows = Json::array();
        if (o.format() != Format::Json) std::cout << "N,dim\n";
        for (auto N = from.value_or(p.max_degree()); N <= last; ++N) {
          auto d = dual_level_dim(p, N);
          if (o.format() == Format::Json) {
            rows.push_back(Json{{"N", N}, {"dim", d}});
          } else {
            std::cout << N << ',' << d << '\n';
          }
        }
        if (o.format() == Format::Json) emit(rows);
      };
    });
  }
  {
    auto* c = common(mod->add_subcommand("class", "Grothendieck class in the basis [I^r]"));
    c->add_option("presentation", a1)->required();
    c->callback([&] { action = [&] { emit_class(grothendieck_class(load_presentation(a1, o)), o.format()); }; });
  }
  {
    auto* c = common(mod->add_subcommand("lambda", "Pairing of [I^r]^* with a class or presentation"));
    c->add_option("r", n1)->required();
    c->add_option("input", a1)->required();
    c->callback([&] {
      action = [&] {
        auto j = io::load(a1);
        auto cls = j.is_object() && j.contains("gens") ? grothendieck_class(io::presentation_from_json(j, o.p()))
                                                       : io::class_from_json(j);
        emit(Json(euler_pairing(n1, cls)));
      };
    });
  }
  {
    auto* c = common(mod->add_subcommand("kernel-p1", "Kernel of maps out of P^1 as a subspace of k(t)"));
    c->add_option("maps", a1, "A morphism or an array of morphisms")->required();
    c->callback([&] {
      action = [&] {
        auto fs = one_or_many<FirMorphism>(io::load(a1), [&](const Json& x) { return io::fir_from_json(x, o.p()); });
        auto v = kernel_from_P1(fs, o.degree_bound);
        if (o.format() != Format::Table) return emit(io::to_json(v));
        for (const auto& b : v.basis) std::cout << to_string(b) << '\n';
      };
    });
  }
  {
    auto* c = common(mod->add_subcommand("lattice-to", "Generator of the submodule of I^1 attached to V"));
    c->add_option("subspace", a1)->required();
    c->callback([&] {
      action = [&] { emit_element(subspace_to_generator(io::subspace_from_json(io::load(a1), o.p())), o.format()); };
    });
  }
  {
    auto* c = common(mod->add_subcommand("lattice-from", "Subspace V annihilated by generators in I^1"));
    c->add_option("generators", a1)->required();
    c->callback([&] {
      action = [&] {
        auto obj = StdObject::I(1);
        auto gens = one_or_many<TruncElement>(io::load(a1),
                                              [&](const Json& x) { return io::element_from_json(x, o.p(), &obj); });
        auto v = generator_to_subspace(gens, o.degree_bound);
        if (o.format() != Format::Table) return emit(io::to_json(v));
        for (const auto& b : v.basis) std::cout << to_string(b) << '\n';
      };
    });
  }
  {
    auto* c = common(mod->add_subcommand("cover", "Projective cover step by the top generators"));
    c->add_option("presentation", a1)->required();
    c->callback([&] { action = [&] { emit(io::to_json(projective_cover_step(load_presentation(a1, o)))); }; });
  }
  {
    auto* c = common(mod->add_subcommand("resolve", "Projective resolution, generation degree <= 2"));
    c->add_option("presentation", a1)->required();
    c->callback([&] {
      action = [&] {
        auto r = resolve(load_presentation(a1, o), o.degree_bound);
        if (o.format() != Format::Table) return emit(io::to_json(r));
        for (std::size_t i = 0; i < r.terms.size(); ++i) {
          std::cout << "P" << i;
          for (const auto& [deg, d] : r.terms[i].multiplicity) std::cout << "\tQ" << deg << "^" << d;
          std::cout << '\n';
        }
        std::cout << "certified " << (r.certified() ? "yes" : "no") << '\n';
      };
    });
  }

  auto* st = app.add_subcommand("selftest", "Randomized checks; FIRWB_SEED fixes the seed");
  int st_code = 0;
  st->callback([&] { action = [&] { st_code = selftest(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    action();
  } catch (const Error& e) {
    std::cerr << io::error_json(e).dump() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << io::error_json(Error(ErrorKind::InvalidInput, e.what())).dump() << '\n';
    return 1;
  }
  return st_code;
}
