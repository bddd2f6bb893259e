// Command-line front end. Exit codes: 0 success, 1 domain violation,
// 2 I/O or syntax error, 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gentle/cluster.hpp"
#include "gentle/cm_construct.hpp"
#include "gentle/coxeter.hpp"
#include "gentle/errors.hpp"
#include "gentle/hall.hpp"
#include "gentle/json_io.hpp"
#include "gentle/reproduce.hpp"
#include "gentle/strings.hpp"

using namespace gentle;

namespace {

struct IoError : Error {
  using Error::Error;
};

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t dim_cap = kDefaultDimCap;
  std::size_t string_cap = kDefaultStringCap;
  std::vector<std::uint32_t> primes = {2, 3, 5, 7};
  std::vector<std::uint32_t> check_primes = {11, 13};
};

Presentation load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const auto text = buf.str();
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    const auto j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("'" + path + "' is not valid JSON");
    return presentation_from_json(j);
  }
  return parse_presentation(text);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::size_t vertex_arg(const Quiver& q, const std::string& id) {
  if (auto v = q.find_vertex(id)) return *v;
  throw DomainError("no vertex '" + id + "'");
}

Quiver require_cluster(const Presentation& p) {
  const auto rep = is_cluster_tilted_a(p.quiver());
  if (!rep.ok()) {
    std::string msg = "not a cluster-tilted quiver of type A:";
    for (const auto& v : rep.violations) msg += "\n  " + v;
    throw DomainError(msg);
  }
  return p.quiver();
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : sep) + x;
  return s;
}

Json multiplicities_json(const HallContext& ctx, const Multiplicities& m) {
  return format_iso_class(ctx.algebra().quiver(), ctx.to_iso_class(m));
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.size() > 9 || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad prime list '" + text + "'");
    const auto q = static_cast<std::uint32_t>(std::stoul(item));
    if (!is_prime(q)) throw ParseError(item + " is not prime");
    out.push_back(q);
  }
  return out;
}

int run_validate(const Options& o, const std::string& file) {
  const auto rep = validate_gentle(load(file));
  Json viol = Json::array();
  for (const auto& v : rep.violations) viol.push_back({{"clause", v.clause}, {"witness", v.witness}});
  if (o.json)
    emit(Json{{"gentle", rep.ok()}, {"violations", viol}});
  else if (rep.ok())
    std::cout << "gentle\n";
  else
    for (const auto& v : rep.violations) std::cout << "violation: " << v.clause << ": " << v.witness << "\n";
  return rep.ok() ? 0 : 1;
}

int run_cmaus(const Options& o, const std::string& file) {
  const auto p = load(file);
  if (o.json)
    emit(cm_auslander_json(p));
  else
    std::cout << serialize(cm_auslander(p));
  return 0;
}

int run_strings(const Options& o, const std::string& file) {
  const auto p = load(file);
  const auto ws = enumerate_strings(p, o.string_cap);
  const Quiver& q = p.quiver();
  if (o.json) {
    Json a = Json::array();
    for (const auto& w : ws) {
      Json dims = Json::object();
      const auto d = dimension_vector(p, w);
      for (std::size_t v = 0; v < d.size(); ++v)
        if (d[v]) dims[q.vertex_name(v)] = d[v];
      a.push_back({{"string", format_string(q, w)}, {"dimension_vector", dims}});
    }
    emit(Json{{"count", ws.size()}, {"strings", a}});
  } else {
    for (const auto& w : ws)
      std::cout << format_string(q, w) << "  " << format_dimension_vector(q, dimension_vector(p, w)) << "\n";
    std::cout << ws.size() << " strings\n";
  }
  return 0;
}

int run_bands(const Options& o, const std::string& file) {
  const auto p = load(file);
  const auto b = find_band(p);
  if (o.json)
    emit(Json{{"band", b ? Json(format_string(p.quiver(), *b)) : Json(nullptr)}});
  else
    std::cout << (b ? format_string(p.quiver(), *b) : "none") << "\n";
  return 0;
}

int run_repfinite(const Options& o, const std::string& file) {
  const bool f = is_representation_finite(load(file));
  if (o.json)
    emit(Json{{"representation_finite", f}});
  else
    std::cout << (f ? "finite" : "infinite") << "\n";
  return 0;
}

int run_cartan(const Options& o, const std::string& file) {
  const auto c = cartan_matrix(load(file));
  if (o.json) {
    emit(Json{{"cartan", to_json(c.c)}, {"det", to_json(c.det)}});
    return 0;
  }
  const auto& labels = c.c.row_labels();
  std::cout << "     " << join(labels, " ") << "\n";
  for (std::size_t i = 0; i < c.c.rows(); ++i) {
    std::cout << labels[i] << ":";
    for (std::size_t j = 0; j < c.c.cols(); ++j) std::cout << " " << c.c(i, j);
    std::cout << "\n";
  }
  std::cout << "det " << c.det << "\n";
  return 0;
}

int run_coxeter(const Options& o, const std::string& file, const std::vector<std::size_t>& closed) {
  const auto d = coxeter_data(load(file));
  if (!d.poly.integral) throw DomainError("characteristic polynomial is not integral: " + to_string(d.poly.rational));
  const auto& chi = *d.poly.integral;
  std::optional<IntPolynomial> cf;
  if (closed.size() == 2) cf = coxeter_closed_form(closed[0], closed[1]);
  if (o.json) {
    Json j{{"coefficients", to_json(chi)},
           {"polynomial", to_string(chi)},
           {"factored", factored_form(chi)},
           {"asymmetry_integral", d.asymmetry_integral}};
    if (cf) {
      j["closed_form"] = to_json(*cf);
      j["matches_closed_form"] = *cf == chi;
    }
    emit(j);
  } else {
    std::cout << factored_form(chi) << "\n" << to_string(chi) << "\n";
    if (cf) std::cout << "closed form " << factored_form(*cf) << (*cf == chi ? " (equal)" : " (different)") << "\n";
  }
  return cf && !(*cf == chi) ? 1 : 0;
}

int run_closed_form(const Options& o, std::size_t t, std::size_t s) {
  const auto cf = coxeter_closed_form(t, s);
  if (o.json)
    emit(Json{{"t", t}, {"s", s}, {"coefficients", to_json(cf)}, {"factored", factored_form(cf)}});
  else
    std::cout << factored_form(cf) << "\n" << to_string(cf) << "\n";
  return 0;
}

int run_mutate(const Options& o, const std::string& file, const std::string& k) {
  const auto q = require_cluster(load(file));
  const auto m = cluster_relations(fz_mutate(q, vertex_arg(q, k)));
  if (o.json)
    emit(to_json(m));
  else
    std::cout << serialize(m);
  return 0;
}

int run_good_mutations(const Options& o, const std::string& file) {
  const auto q = require_cluster(load(file));
  Json a = Json::array();
  for (std::size_t k = 0; k < q.vertex_count(); ++k) {
    const auto type = neighborhood_type(q, k);
    const bool good = is_good_mutation(q, k);
    if (o.json)
      a.push_back({{"vertex", q.vertex_name(k)}, {"type", type}, {"good", good}});
    else
      std::cout << q.vertex_name(k) << "  " << (type.empty() ? "-" : type) << "  " << (good ? "good" : "bad") << "\n";
  }
  if (o.json) emit(a);
  return 0;
}

int run_derived_class(const Options& o, const std::string& f1, const std::string& f2) {
  const auto q1 = require_cluster(load(f1));
  const auto q2 = require_cluster(load(f2));
  const auto v = derived_equivalent(q1, q2);
  const auto c1 = coxeter_polynomial(cm_auslander(cluster_relations(q1)));
  const auto c2 = coxeter_polynomial(cm_auslander(cluster_relations(q2)));
  const auto lt1 = count_lines_triangles(q1), lt2 = count_lines_triangles(q2);
  if (o.json) {
    emit(Json{{"derived_equivalent", v.equivalent},
          {"size_mismatch", v.size_mismatch},
          {"coxeter", {factored_form(c1), factored_form(c2)}},
          {"triangles", {lt1.second, lt2.second}}});
  } else {
    std::cout << (v.equivalent ? "derived equivalent" : "not derived equivalent")
              << (v.size_mismatch ? " (different numbers of vertices)" : "") << "\n";
    std::cout << "coxeter " << factored_form(c1) << " | " << factored_form(c2) << "\n";
    std::cout << "triangles " << lt1.second << " | " << lt2.second << "\n";
  }
  return 0;
}

int run_hexagons(const Options& o, const std::string& file) {
  const auto n = count_hexagons(cm_auslander(load(file)));
  if (o.json)
    emit(Json{{"hexagons", n}});
  else
    std::cout << n << "\n";
  return 0;
}

int run_gen(const Options& o, std::size_t t, std::size_t s) {
  const auto p = cluster_relations(random_cluster_quiver(t, s, o.seed));
  if (o.json) {
    emit(Json{{"t", t}, {"s", s}, {"seed", o.seed}, {"presentation", to_json(p)}});
  } else {
    std::cout << "# t=" << t << " s=" << s << " seed=" << o.seed << "\n" << serialize(p);
  }
  return 0;
}

int run_hall_number(const Options& o, const std::string& file, const std::string& l, const std::string& m,
                    const std::string& n) {
  const auto p = load(file);
  const auto il = parse_iso_class(p, l), im = parse_iso_class(p, m), in = parse_iso_class(p, n);
  Json values = Json::object();
  for (auto q : o.primes) {
    const HallContext ctx(p, q, o.dim_cap);
    const auto f = hall_number(ctx, ctx.to_multiplicities(il), ctx.to_multiplicities(im), ctx.to_multiplicities(in));
    values[std::to_string(q)] = f;
    if (!o.json) std::cout << "q=" << q << "  " << f << "\n";
  }
  if (o.json)
    emit(Json{{"triple",
           {format_iso_class(p.quiver(), il), format_iso_class(p.quiver(), im), format_iso_class(p.quiver(), in)}},
          {"values", values}});
  return 0;
}

int run_hall_poly(const Options& o, const std::string& file, const std::string& l, const std::string& m,
                  const std::string& n) {
  const auto p = load(file);
  const auto il = parse_iso_class(p, l), im = parse_iso_class(p, m), in = parse_iso_class(p, n);
  const auto r = hall_polynomial(p, il, im, in, o.primes, o.check_primes, o.dim_cap);
  Json values = Json::object();
  for (const auto& [q, v] : r.values) values[std::to_string(q)] = v;
  if (o.json) {
    emit(Json{{"triple",
           {format_iso_class(p.quiver(), il), format_iso_class(p.quiver(), im), format_iso_class(p.quiver(), in)}},
          {"values", values},
          {"polynomial", to_json(r.polynomial)},
          {"verified_at", r.verified_at}});
  } else {
    std::cout << to_string(r.polynomial) << "\n";
    for (const auto& [q, v] : r.values) std::cout << "q=" << q << "  " << v << "\n";
  }
  return 0;
}

int run_hall_product(const Options& o, const std::string& file, const std::string& m, const std::string& n) {
  const auto p = load(file);
  const HallContext ctx(p, o.primes.at(0), o.dim_cap);
  const auto prod = hall_product(ctx, ctx.to_multiplicities(parse_iso_class(p, m)),
                                 ctx.to_multiplicities(parse_iso_class(p, n)));
  Json terms = Json::array();
  for (const auto& [l, f] : prod) {
    if (o.json)
      terms.push_back({{"module", multiplicities_json(ctx, l)}, {"coefficient", f}});
    else
      std::cout << f << "  " << format_iso_class(p.quiver(), ctx.to_iso_class(l)) << "\n";
  }
  if (o.json) emit(Json{{"q", ctx.field().q()}, {"terms", terms}});
  return 0;
}

int run_hall_vanishing(const Options& o, const std::string& file) {
  const auto p = load(file);
  bool ok = true;
  Json reports = Json::array();
  for (auto q : o.primes) {
    const HallContext ctx(p, q, o.dim_cap);
    const auto rep = one_sided_vanishing_report(ctx, o.dim_cap);
    ok &= rep.ok();
    Json viol = Json::array();
    for (const auto& v : rep.violations) {
      const auto& ws = ctx.indecomposables();
      viol.push_back({{"M", format_string(p.quiver(), ws[v.m])},
                      {"L", format_string(p.quiver(), ws[v.l])},
                      {"N", multiplicities_json(ctx, v.n)},
                      {"F_NL", v.f_nl},
                      {"F_LN", v.f_ln}});
    }
    if (o.json)
      reports.push_back({{"q", q}, {"triples", rep.triples_checked}, {"violations", viol}});
    else {
      std::cout << "q=" << q << "  " << rep.triples_checked << " triples, " << rep.violations.size()
                << " violations\n";
      for (const auto& v : viol) std::cout << "  " << v.dump() << "\n";
    }
  }
  if (o.json) emit(reports);
  return ok ? 0 : 1;
}

int run_reproduce(const Options& o) {
  bool ok = true;
  Json a = Json::array();
  for (const auto& r : run_acceptance()) {
    ok &= r.passed;
    if (o.json)
      a.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"seconds", r.seconds}, {"detail", r.detail}});
    else
      std::cout << format_result(r) << std::endl;
  }
  if (o.json) emit(a);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for gentle algebras and their CM-Auslander algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--dim-cap", o.dim_cap, "Largest module dimension for Hall computations")->check(CLI::PositiveNumber);
  app.add_option("--string-cap", o.string_cap, "Largest number of strings to enumerate")->check(CLI::PositiveNumber);
  std::string primes_text = "2,3,5,7", check_text = "11,13";
  app.add_option("--primes", primes_text, "Field sizes, comma-separated (fit primes for hall poly)");
  app.add_option("--check-primes", check_text, "Verification primes for hall poly");

  std::function<int()> action;
  std::string file, file2, vertex, l, m, n;
  std::size_t t = 0, s = 0;
  std::vector<std::size_t> closed;

  auto with_file = [&](const char* name, const char* help, auto fn) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", file, "Presentation (.quiver or .json)")->required();
    c->callback([&, fn] { action = [&, fn] { return fn(o, file); }; });
    return c;
  };
  with_file("validate", "Check the gentle axioms", run_validate);
  with_file("cmaus", "CM-Auslander algebra", run_cmaus);
  with_file("strings", "Enumerate strings up to inversion", run_strings);
  with_file("bands", "Find a band", run_bands);
  with_file("repfinite", "Representation-finiteness", run_repfinite);
  with_file("cartan", "Cartan matrix", run_cartan);
  auto* cox = app.add_subcommand("coxeter", "Coxeter polynomial");
  cox->add_option("file", file)->required();
  cox->add_option("--closed-form", closed, "Compare with the closed form for t s")->expected(2);
  cox->callback([&] { action = [&] { return run_coxeter(o, file, closed); }; });

  auto* cf = app.add_subcommand("closed-form", "Closed-form Coxeter polynomial for t triangles and s lines");
  cf->add_option("t", t)->required();
  cf->add_option("s", s)->required();
  cf->callback([&] { action = [&] { return run_closed_form(o, t, s); }; });

  auto* mu = app.add_subcommand("mutate", "Mutate a cluster quiver at a vertex");
  mu->add_option("file", file)->required();
  mu->add_option("vertex", vertex)->required();
  mu->callback([&] { action = [&] { return run_mutate(o, file, vertex); }; });

  with_file("good-mutations", "Neighborhood type and goodness of every mutation", run_good_mutations);

  auto* dc = app.add_subcommand("derived-class", "Compare two cluster quivers up to derived equivalence");
  dc->add_option("first", file)->required();
  dc->add_option("second", file2)->required();
  dc->callback([&] { action = [&] { return run_derived_class(o, file, file2); }; });

  with_file("hexagons", "Oriented hexagons of the CM-Auslander algebra", run_hexagons);

  auto* gen = app.add_subcommand("gen", "Random cluster quiver with t triangles and s lines");
  gen->add_option("t", t)->required();
  gen->add_option("s", s)->required();
  gen->callback([&] { action = [&] { return run_gen(o, t, s); }; });

  auto* hall = app.add_subcommand("hall", "Hall numbers");
  hall->require_subcommand(1);
  auto* hn = hall->add_subcommand("number", "F^L_{MN} at each of --primes");
  auto* hp = hall->add_subcommand("poly", "Hall polynomial fitted at --primes, checked at --check-primes");
  for (auto* c : {hn, hp}) {
    c->add_option("file", file)->required();
    c->add_option("L", l)->required();
    c->add_option("M", m)->required();
    c->add_option("N", n)->required();
  }
  hn->callback([&] { action = [&] { return run_hall_number(o, file, l, m, n); }; });
  hp->callback([&] { action = [&] { return run_hall_poly(o, file, l, m, n); }; });
  auto* hpr = hall->add_subcommand("product", "u_M u_N over the first of --primes");
  hpr->add_option("file", file)->required();
  hpr->add_option("M", m)->required();
  hpr->add_option("N", n)->required();
  hpr->callback([&] { action = [&] { return run_hall_product(o, file, m, n); }; });
  auto* hv = hall->add_subcommand("vanishing-report", "One-sided vanishing up to --dim-cap");
  hv->add_option("file", file)->required();
  hv->callback([&] { action = [&] { return run_hall_vanishing(o, file); }; });

  auto* rep = app.add_subcommand("reproduce", "Run the acceptance suite");
  rep->callback([&] { action = [&] { return run_reproduce(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    o.primes = parse_primes(primes_text);
    o.check_primes = parse_primes(check_text);
    if (o.primes.empty()) throw ParseError("--primes needs at least one prime");
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    return action();
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
