#include "dynalg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "dynalg/parser.hpp"
#include "dynalg/solvers.hpp"

#ifndef DYNALG_DEFAULT_FIXTURES
#define DYNALG_DEFAULT_FIXTURES "fixtures"
#endif

namespace dynalg {

std::string dump_canonical(const Json& j) { return j.dump(2); }

namespace {

struct Options {
  std::string field = "Q";
  std::string out;
  int degree_cap = kDefaultDegreeCap;

  std::string map, a, b, x, a1, a2, x1, x2, curve;
  std::string point, z0, z1, z2;
  std::string leading;
  std::string s1, s2, scales = "1";
  std::string support, target, kind = "lattes";
  std::string fixtures = DYNALG_DEFAULT_FIXTURES;
  std::vector<int> bidegree{2, 2};
  int order = 40, terms = 20, d1 = 1, d2 = 1, extra = 10, budget = 4096, bound = 12;
  int l1 = 1, l2 = 1, k = 1, nu_max = 4, support_budget = 6, jobs = 1;
};

struct Context {
  Options& o;
  Field field;
  RationalFunction fn(const std::string& text) const { return parse_ratfunc(text, field); }
  Polynomial poly(const std::string& text) const { return fn(text).as_polynomial(); }
  PointP1 pt(const std::string& text) const { return parse_point(text, field); }
};

CliResult ok_if(bool cond, Json j) { return {cond ? 0 : 1, std::move(j), "", ""}; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  return out;
}

// "coeffs:c0,c1,...", "boettcher:<map>" or "<map>@<point>".
LaurentSeries series_from_spec(const Context& c, const std::string& spec, int d, int need) {
  LaurentSeries s;
  if (spec.rfind("coeffs:", 0) == 0) {
    std::vector<Scalar> v;
    for (const auto& t : split(spec.substr(7), ',')) v.push_back(parse_scalar(t, c.field));
    if (v.empty()) throw Error(ErrorCode::InvalidArgument, "empty coefficient list");
    s = LaurentSeries::from_power_series(TruncatedPowerSeries(v));
  } else if (spec.rfind("boettcher:", 0) == 0) {
    const Polynomial p = c.poly(spec.substr(10));
    s = boettcher_series(p, need + 8 * (c.o.bidegree[0] + c.o.bidegree[1] + 2), c.field).in_reciprocal_variable();
  } else {
    const auto at = spec.rfind('@');
    if (at == std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, "series spec '" + spec + "' must be map@point, boettcher:map or coeffs:...");
    }
    s = LaurentSeries::from_power_series(poincare_series(c.fn(spec.substr(0, at)), c.pt(spec.substr(at + 1)), need));
  }
  return d == 1 ? s : s.substitute_power(d);
}

CliResult cmd_parse(const Context& c) {
  const RationalFunction r = c.fn(c.o.map);
  return ok_if(true, Json{{"input", c.o.map},
                          {"canonical", r.to_string()},
                          {"numerator", r.numerator().to_string()},
                          {"denominator", r.denominator().to_string()},
                          {"degree", r.degree()}});
}

CliResult cmd_fixpoints(const Context& c) {
  const RationalFunction r = c.fn(c.o.map);
  Json j = to_json(fixed_points(r, c.field));
  j["map"] = r.to_string();
  return ok_if(!j["fixed_points"].empty(), j);
}

CliResult cmd_poincare(const Context& c) {
  const RationalFunction r = c.fn(c.o.map);
  const PointP1 z0 = c.pt(c.o.point);
  const TruncatedPowerSeries p = poincare_series(r, z0, c.o.order);
  const Scalar lambda = multiplier_at(r, z0);
  Json j = to_json(p);
  j["map"] = r.to_string();
  j["multiplier"] = to_json(lambda);
  j["residual_vanishes"] = poincare_residual(r, p, lambda).is_zero();
  return ok_if(true, j);
}

CliResult cmd_boettcher(const Context& c) {
  const Polynomial p = c.poly(c.o.map);
  std::optional<Scalar> lead;
  if (!c.o.leading.empty()) lead = parse_scalar(c.o.leading, c.field);
  const BoettcherSeries b = boettcher_series(p, c.o.terms, c.field, lead);
  Json j = to_json(b);
  j["map"] = p.to_string();
  j["residual_vanishes"] = boettcher_residual(p, b).vanishes_through(boettcher_residual_top(p, b));
  return ok_if(true, j);
}

CliResult cmd_algdep(const Context& c) {
  if (c.o.bidegree.size() != 2) throw Error(ErrorCode::InvalidArgument, "--bidegree takes two counts");
  const int need = c.o.order + c.o.extra;
  RelationOptions opts;
  opts.verification_extra = c.o.extra;
  opts.scales.clear();
  for (const auto& t : split(c.o.scales, ',')) opts.scales.push_back(parse_scalar(t, c.field));
  const auto cert = find_relation(series_from_spec(c, c.o.s1, c.o.d1, need), series_from_spec(c, c.o.s2, c.o.d2, need),
                                  c.o.bidegree[0], c.o.bidegree[1], c.o.order, opts);
  Json j = to_json(cert);
  j["note"] = "certificates hold up to the stated orders only";
  return ok_if(cert.verdict == Verdict::Relation, j);
}

CliResult cmd_implicitize(const Context& c) {
  const RationalFunction x1 = c.fn(c.o.x1), x2 = c.fn(c.o.x2);
  const BivariatePolynomial f = implicitize(x1, x2);
  const OneToOneReport r = is_generically_one_to_one(x1, x2, f);
  return ok_if(true, Json{{"curve", to_json(f)}, {"fiber_degree", r.fiber_degree}, {"one_to_one", r.one_to_one}});
}

CliResult cmd_one_to_one(const Context& c) {
  const RationalFunction x1 = c.fn(c.o.x1), x2 = c.fn(c.o.x2);
  const BivariatePolynomial f = c.o.curve.empty() ? implicitize(x1, x2) : parse_bivariate(c.o.curve, c.field);
  const OneToOneReport r = is_generically_one_to_one(x1, x2, f);
  return ok_if(r.one_to_one, Json{{"curve", to_json(f)}, {"fiber_degree", r.fiber_degree}, {"one_to_one", r.one_to_one}});
}

CliResult cmd_semiconj(const Context& c) {
  const auto t = verify_semiconjugacy(c.fn(c.o.a), c.fn(c.o.x), c.fn(c.o.b), c.o.degree_cap);
  return ok_if(t.verified, Json{{"a", to_json(t.a)},
                                {"x", to_json(t.x)},
                                {"b", to_json(t.b)},
                                {"a_of_x", to_json(compose(t.a, t.x, c.o.degree_cap))},
                                {"x_of_b", to_json(compose(t.x, t.b, c.o.degree_cap))},
                                {"verified", t.verified}});
}

CliResult cmd_commute(const Context& c) {
  const bool v = verify_commute(c.fn(c.o.a), c.fn(c.o.b), c.o.degree_cap);
  return ok_if(v, Json{{"commute", v}});
}

CliResult cmd_common_iterate(const Context& c) {
  const auto r = common_iterate_search(c.fn(c.o.a), c.fn(c.o.b), c.o.budget);
  return ok_if(r.pair.has_value(),
               Json{{"pair", r.pair ? Json::array({r.pair->first, r.pair->second}) : Json(nullptr)},
                    {"budget_exhausted", r.budget_exhausted},
                    {"candidates_checked", r.candidates_checked}});
}

CliResult cmd_independence(const Context& c) {
  const auto r = independence_check(c.fn(c.o.a1), c.pt(c.o.z1), c.fn(c.o.a2), c.pt(c.o.z2), c.o.bound);
  return ok_if(r.independent, to_json(r));
}

CliResult cmd_theorem(const Context& c) {
  TheoremInput in{c.fn(c.o.x1), c.fn(c.o.x2), c.fn(c.o.b), c.fn(c.o.a1), c.fn(c.o.a2), c.pt(c.o.z0),
                  c.o.l1, c.o.l2, c.o.d1, c.o.d2, c.o.k, std::nullopt, std::nullopt};
  if (!c.o.z1.empty()) in.z1 = c.pt(c.o.z1);
  if (!c.o.z2.empty()) in.z2 = c.pt(c.o.z2);
  const auto r = verify_theorem_conditions(in, c.o.degree_cap);
  return ok_if(r.all(), to_json(r));
}

CliResult cmd_orbifold_euler(const Context& c) {
  const Orbifold o = parse_orbifold(c.o.support, c.field);
  Json j = to_json(o);
  j["euler_characteristic"] = to_json(euler_char(o));
  return ok_if(true, j);
}

CliResult cmd_orbifold_check(const Context& c) {
  const RationalFunction f = c.fn(c.o.map);
  const Orbifold o1 = parse_orbifold(c.o.support, c.field);
  const Orbifold o2 = c.o.target.empty() ? o1 : parse_orbifold(c.o.target, c.field);
  Json j{{"kind", c.o.kind}, {"source", to_json(o1)}, {"target", to_json(o2)}};
  bool holds = false;
  if (c.o.kind == "lattes") {
    const auto r = check_generalized_lattes(f, o1, c.field);
    j["result"] = to_json(r);
    holds = r.holds;
  } else {
    MapCheck m;
    if (c.o.kind == "covering") m = is_covering_map(f, o1, o2, c.field);
    else if (c.o.kind == "holomorphic") m = is_holomorphic_map(f, o1, o2, c.field);
    else if (c.o.kind == "minimal") m = is_minimal_holomorphic(f, o1, o2, c.field);
    else throw Error(ErrorCode::InvalidArgument, "unknown --kind " + c.o.kind);
    j["result"] = to_json(m);
    j["euler_characteristics"] = Json::array({to_json(euler_char(o1)), to_json(euler_char(o2))});
    holds = m.holds;
  }
  return ok_if(holds, j);
}

CliResult cmd_lattes_detect(const Context& c) {
  const auto d = detect_generalized_lattes(c.fn(c.o.map), c.o.nu_max, c.o.support_budget, c.field);
  return ok_if(d.found.has_value(), to_json(d));
}

CliResult cmd_invariant_curve(const Context& c) {
  const BivariatePolynomial f = parse_bivariate(c.o.curve, c.field);
  std::optional<std::pair<RationalFunction, RationalFunction>> param;
  if (!c.o.x1.empty() || !c.o.x2.empty()) param = std::make_pair(c.fn(c.o.x1), c.fn(c.o.x2));
  const bool v = verify_invariant_curve(f, c.fn(c.o.a1), c.fn(c.o.a2), param);
  return ok_if(v, Json{{"curve", to_json(f)}, {"invariant", v}, {"parametrized", param.has_value()}});
}

CliResult cmd_transport(const Context& c) {
  const auto r = poincare_transport_check(c.fn(c.o.a), c.fn(c.o.x), c.fn(c.o.b), c.pt(c.o.z0), c.o.order);
  return ok_if(r.holds, to_json(r));
}

CliResult cmd_boettcher_transport(const Context& c) {
  const auto r = transport_boettcher_check(c.poly(c.o.a), c.poly(c.o.x), c.poly(c.o.b), c.o.terms, c.field);
  return ok_if(r.holds, to_json(r));
}

using Handler = CliResult (*)(const Context&);

struct Command {
  const char* name;
  const char* help;
  Handler handler;
};

}  // namespace

CliResult run_command(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Exact dynamics toolkit: Poincaré and Böttcher series, relations, semiconjugacies, orbifolds"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--field", o.field, "coefficient field: Q or Qi")->check(CLI::IsMember({"Q", "Qi"}));
  app.add_option("--out", o.out, "also write the JSON result to this file");
  app.add_option("--degree-cap", o.degree_cap, "cap on composition degrees");

  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };
  auto req = [](CLI::App* s, const char* flag, std::string& v, const char* help) { s->add_option(flag, v, help)->required(); };

  CLI::App* s = sub("parse", "parse and print a rational function");
  req(s, "--map", o.map, "expression in z");
  s = sub("fixpoints", "fixed points with multipliers");
  req(s, "--map", o.map, "expression in z");
  s = sub("poincare", "normalized Poincaré series at a fixed point");
  req(s, "--map", o.map, "expression in z");
  req(s, "--point", o.point, "fixed point");
  s->add_option("--order", o.order, "truncation order");
  s = sub("boettcher", "Böttcher series of a polynomial");
  req(s, "--map", o.map, "polynomial in z");
  s->add_option("--order", o.terms, "last computed index M");
  s->add_option("--leading", o.leading, "explicit leading coefficient");
  s = sub("algdep", "search for an algebraic relation between two series");
  req(s, "--s1", o.s1, "map@point, boettcher:map or coeffs:c0,c1,...");
  req(s, "--s2", o.s2, "second series, same forms");
  s->add_option("--d1", o.d1, "substitute z^d1 into s1");
  s->add_option("--d2", o.d2, "substitute z^d2 into s2");
  s->add_option("--bidegree", o.bidegree, "bidegree bound m n")->expected(2);
  s->add_option("--order", o.order, "truncation order");
  s->add_option("--extra", o.extra, "extra verification order");
  s->add_option("--scales", o.scales, "comma-separated rescalings of s2");
  s = sub("implicitize", "implicit equation of a rational parametrization");
  req(s, "--x1", o.x1, "first coordinate");
  req(s, "--x2", o.x2, "second coordinate");
  s = sub("one-to-one", "whether a parametrization is generically one-to-one");
  req(s, "--x1", o.x1, "first coordinate");
  req(s, "--x2", o.x2, "second coordinate");
  s->add_option("--curve", o.curve, "implicit equation in x, y (computed when absent)");
  s = sub("semiconj", "check A∘X = X∘B");
  req(s, "--a", o.a, "A");
  req(s, "--x", o.x, "X");
  req(s, "--b", o.b, "B");
  s = sub("commute", "check A∘B = B∘A");
  req(s, "--a", o.a, "A");
  req(s, "--b", o.b, "B");
  s = sub("common-iterate", "bounded search for A^l1 = B^l2");
  req(s, "--a", o.a, "A");
  req(s, "--b", o.b, "B");
  s->add_option("--budget", o.budget, "degree budget");
  s = sub("independence", "degree and multiplier criterion for two repelling fixed points");
  req(s, "--a1", o.a1, "A1");
  req(s, "--z1", o.z1, "fixed point of A1");
  req(s, "--a2", o.a2, "A2");
  req(s, "--z2", o.z2, "fixed point of A2");
  s->add_option("--bound", o.bound, "exponent bound for multipliers");
  s = sub("theorem-check", "check the hypotheses of the dependence theorem");
  req(s, "--x1", o.x1, "X1");
  req(s, "--x2", o.x2, "X2");
  req(s, "--b", o.b, "B");
  req(s, "--a1", o.a1, "A1");
  req(s, "--a2", o.a2, "A2");
  req(s, "--z0", o.z0, "base point");
  s->add_option("--z1", o.z1, "expected X1(z0)");
  s->add_option("--z2", o.z2, "expected X2(z0)");
  s->add_option("--l1", o.l1, "iterate of A1");
  s->add_option("--l2", o.l2, "iterate of A2");
  s->add_option("--d1", o.d1, "d1");
  s->add_option("--d2", o.d2, "d2");
  s->add_option("--k", o.k, "k");
  s = sub("orbifold-euler", "Euler characteristic of an orbifold");
  req(s, "--support", o.support, "e.g. 0:2,inf:2");
  s = sub("orbifold-check", "covering / holomorphic / minimal / generalized Lattès checks");
  req(s, "--map", o.map, "map");
  req(s, "--support", o.support, "source orbifold");
  s->add_option("--target", o.target, "target orbifold (defaults to the source)");
  s->add_option("--kind", o.kind, "lattes, covering, holomorphic or minimal")
      ->check(CLI::IsMember({"lattes", "covering", "holomorphic", "minimal"}));
  s = sub("lattes-detect", "bounded search for a generalized Lattès orbifold");
  req(s, "--map", o.map, "map");
  s->add_option("--nu-max", o.nu_max, "largest ramification tried");
  s->add_option("--budget", o.support_budget, "number of candidate points");
  s = sub("invariant-curve", "check that (A1, A2) maps a curve into itself");
  req(s, "--curve", o.curve, "f(x, y)");
  req(s, "--a1", o.a1, "A1");
  req(s, "--a2", o.a2, "A2");
  s->add_option("--x1", o.x1, "parametrization, first coordinate");
  s->add_option("--x2", o.x2, "parametrization, second coordinate");
  s = sub("transport", "Poincaré series transport along a semiconjugacy");
  req(s, "--a", o.a, "A");
  req(s, "--x", o.x, "X");
  req(s, "--b", o.b, "B");
  req(s, "--z0", o.z0, "fixed point of B");
  s->add_option("--order", o.order, "truncation order");
  s = sub("boettcher-transport", "Böttcher series transport along a polynomial semiconjugacy");
  req(s, "--a", o.a, "A");
  req(s, "--x", o.x, "X");
  req(s, "--b", o.b, "B");
  s->add_option("--terms", o.terms, "Laurent terms compared");
  s = sub("verify-paper", "run every fixture and report pass/fail per check");
  s->add_option("--fixtures", o.fixtures, "fixture directory");
  s->add_option("--jobs", o.jobs, "parallel fixture checks")->check(CLI::PositiveNumber);

  static const Command commands[] = {
      {"parse", "", cmd_parse},
      {"fixpoints", "", cmd_fixpoints},
      {"poincare", "", cmd_poincare},
      {"boettcher", "", cmd_boettcher},
      {"algdep", "", cmd_algdep},
      {"implicitize", "", cmd_implicitize},
      {"one-to-one", "", cmd_one_to_one},
      {"semiconj", "", cmd_semiconj},
      {"commute", "", cmd_commute},
      {"common-iterate", "", cmd_common_iterate},
      {"independence", "", cmd_independence},
      {"theorem-check", "", cmd_theorem},
      {"orbifold-euler", "", cmd_orbifold_euler},
      {"orbifold-check", "", cmd_orbifold_check},
      {"lattes-detect", "", cmd_lattes_detect},
      {"invariant-curve", "", cmd_invariant_curve},
      {"transport", "", cmd_transport},
      {"boettcher-transport", "", cmd_boettcher_transport},
  };

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    return {0, Json(nullptr), app.help(), ""};
  } catch (const CLI::ParseError& e) {
    return {64, Json(nullptr), std::string(e.what()) + "\n" + app.help(), ""};
  }

  CliResult result;
  try {
    const Context ctx{o, parse_field(o.field)};
    if (app.got_subcommand("verify-paper")) {
      result = verify_paper(o.fixtures, o.jobs);
    } else {
      for (const auto& c : commands) {
        if (app.got_subcommand(c.name)) {
          result = c.handler(ctx);
          result.output["command"] = c.name;
          result.output["field"] = o.field;
          break;
        }
      }
    }
  } catch (const std::exception& e) {
    result = {2, error_json(e), "", ""};
  }
  result.out_path = o.out;
  return result;
}

namespace {

// Expected objects match any superset; arrays of equal length match element-wise.
bool subset_match(const Json& expected, const Json& actual, const std::string& path, std::string& why) {
  if (expected.is_object()) {
    if (!actual.is_object()) {
      why = path + ": expected an object";
      return false;
    }
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      if (!actual.contains(it.key())) {
        why = path + "/" + it.key() + ": missing";
        return false;
      }
      if (!subset_match(it.value(), actual.at(it.key()), path + "/" + it.key(), why)) return false;
    }
    return true;
  }
  if (expected.is_array() && actual.is_array() && expected.size() == actual.size()) {
    for (std::size_t k = 0; k < expected.size(); ++k)
      if (!subset_match(expected[k], actual[k], path + "/" + std::to_string(k), why)) return false;
    return true;
  }
  if (expected != actual) {
    why = path + ": expected " + expected.dump() + ", got " + actual.dump();
    return false;
  }
  return true;
}

Json run_fixture(const std::filesystem::path& file) {
  Json check{{"file", file.filename().string()}};
  try {
    std::ifstream in(file);
    const Json fx = Json::parse(in);
    check["name"] = fx.value("name", file.stem().string());
    check["provenance"] = fx.value("provenance", "");
    const auto args = fx.at("job").get<std::vector<std::string>>();
    if (!args.empty() && args.front() == "verify-paper") throw Error(ErrorCode::InvalidArgument, "fixtures cannot nest verify-paper");
    const CliResult r = run_command(args);
    const Json& expect = fx.at("expect");
    std::string why;
    bool pass = true;
    if (r.exit_code != expect.value("exit", 0)) {
      pass = false;
      why = "exit code " + std::to_string(r.exit_code) + ", expected " + std::to_string(expect.value("exit", 0));
      if (r.output.contains("error")) why += " (" + r.output["error"].value("message", "") + ")";
    } else if (expect.contains("output")) {
      pass = subset_match(expect["output"], r.output, "", why);
    }
    check["passed"] = pass;
    check["detail"] = pass ? "ok" : why;
  } catch (const std::exception& e) {
    check["passed"] = false;
    check["detail"] = std::string("fixture could not be run: ") + e.what();
  }
  return check;
}

}  // namespace

CliResult verify_paper(const std::filesystem::path& dir, int jobs) {
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(dir)) {
    for (const auto& e : std::filesystem::directory_iterator(dir))
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  if (files.empty()) throw Error(ErrorCode::MissingFixture, "no fixtures found in " + dir.string());
  std::sort(files.begin(), files.end());

  std::vector<Json> checks(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) checks[i] = run_fixture(files[i]);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  int passed = 0;
  Json list = Json::array();
  for (auto& c : checks) {
    if (c.value("passed", false)) ++passed;
    list.push_back(std::move(c));
  }
  const int failed = static_cast<int>(files.size()) - passed;
  return {failed == 0 ? 0 : 1,
          Json{{"command", "verify-paper"}, {"checks", list}, {"passed", passed}, {"failed", failed}, {"total", files.size()}},
          "", ""};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const CliResult r = run_command(args);
  if (r.exit_code == 64) {
    err << r.usage;
    return 64;
  }
  if (r.output.is_null()) {
    out << r.usage;
    return r.exit_code;
  }
  const std::string text = dump_canonical(r.output);
  out << text << "\n";
  if (!r.out_path.empty()) {
    std::ofstream f(r.out_path);
    if (!f) {
      err << "cannot write " << r.out_path << "\n";
      return 2;
    }
    f << text << "\n";
  }
  return r.exit_code;
}

}  // namespace dynalg
