// jetfiber: command line front end for the jet-scheme engine.
//
// Every verb prints either a human-readable summary or, with --json, a single-line JSON
// document with a fixed key order. Exit codes: 0 pass, 1 verification failure, 2 budget
// exceeded, 3 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "jetfiber/components.hpp"
#include "jetfiber/errors.hpp"
#include "jetfiber/intersection.hpp"
#include "jetfiber/oracle.hpp"
#include "jetfiber/suite.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace jetfiber;

enum Exit { kPass = 0, kVerification = 1, kBudget = 2, kUsage = 3 };

struct Globals {
  std::string surface = "d40";
  int m = 5;
  std::uint64_t budget = kDefaultBudget;
  bool json = false;
  std::string dot;
};

json to_json(std::span<const Polynomial> ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

void emit(const Globals& g, const json& doc, const std::string& text) {
  if (g.json)
    std::cout << doc.dump() << '\n';
  else
    std::cout << text;
}

std::vector<int> split_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw PreconditionError("expected comma separated integers, got '" + text + "'");
    out.push_back(v);
  }
  return out;
}

TruncationSpec parse_spec(const std::string& text) {
  const auto v = split_ints(text);
  if (v.size() != 3) throw PreconditionError("a truncation needs three integers p,q,r");
  return {v[0], v[1], v[2]};
}

VarId parse_var(const std::string& text, int m) {
  const auto v = parse_polynomial(text, m).as_variable();
  if (!v) throw PreconditionError("'" + text + "' is not a single variable");
  return *v;
}

// J1..J3, L:p,q,r, S (the singular fiber L_111 + jets), C (L_322 + jets), Z0..Z3.
Ideal build_named(const std::string& name, Surface s, int m, std::uint64_t budget) {
  if (name.size() == 2 && name[0] == 'J' && name[1] >= '1' && name[1] <= '3') return build_J(s, name[1] - '0', m);
  if (name.rfind("L:", 0) == 0) return build_L(parse_spec(name.substr(2)), m);
  if (name == "S") return center_ideal(s, m, {1, 1, 1});
  if (name == "C") return center_ideal(s, m);
  if (name.size() == 2 && name[0] == 'Z') return component_ideal(s, m, parse_label(name), budget).sat_ideal;
  throw PreconditionError("unknown ideal '" + name + "'; use J1, J2, J3, L:p,q,r, S, C or Z0..Z3");
}

int cmd_expand(const Globals& g, const std::string& mod) {
  const Surface s = parse_surface(g.surface);
  const auto sys = jet_coeffs(s, g.m);
  std::optional<TruncationSpec> spec;
  if (!mod.empty()) spec = parse_spec(mod);
  json coeffs = json::array();
  std::string text;
  for (const auto& c : sys.coeffs) {
    const Polynomial p = spec ? reduce_mod_L(c, *spec) : c;
    coeffs.push_back(p.to_string());
    text += p.to_string() + "\n";
  }
  json doc{{"surface", to_string(s)}, {"m", g.m}};
  doc["mod"] = spec ? json::array({spec->p, spec->q, spec->r}) : json(nullptr);
  doc["coeffs"] = std::move(coeffs);
  emit(g, doc, text);
  return kPass;
}

int cmd_lemma_g(const Globals& g, int pmax, int lmax) {
  if (pmax < 1 || lmax < 0) throw PreconditionError("lemma-g needs --pmax >= 1 and --lmax >= 0");
  json rows = json::array();
  int total = 0, failed = 0;
  std::string text;
  for (int p = 1; p <= pmax; ++p)
    for (int q = 1; q <= pmax; ++q)
      for (int r = 1; r <= pmax; ++r)
        for (int l = 0; l <= lmax; ++l) {
          const auto rep = verify_G_lemma({p, q, r}, l);
          json cases = json::array();
          for (const auto& c : rep.checks) cases.push_back(c.case_id);
          const bool ok = rep.all_match();
          ++total;
          if (!ok) {
            ++failed;
            text += "mismatch at (" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) +
                    ") l=" + std::to_string(l) + "\n";
          }
          rows.push_back(json{{"p", p}, {"q", q}, {"r", r}, {"l", l}, {"closed_form", rep.closed_form.to_string()},
                              {"cases", std::move(cases)}, {"match", ok}});
        }
  text += std::to_string(total - failed) + "/" + std::to_string(total) + " grid points match\n";
  emit(g, json{{"pmax", pmax}, {"lmax", lmax}, {"total", total}, {"failed", failed}, {"rows", std::move(rows)}}, text);
  return failed == 0 ? kPass : kVerification;
}

int cmd_ideal(const Globals& g, const std::string& build, const std::string& sat, bool gb, bool dim) {
  const Surface s = parse_surface(g.surface);
  Ideal I = build_named(build, s, g.m, g.budget);
  if (!sat.empty()) I = saturate(I, parse_var(sat, g.m), g.budget);
  json doc{{"surface", to_string(s)}, {"m", g.m}, {"ideal", build}};
  doc["saturated_at"] = sat.empty() ? json(nullptr) : json(sat);
  doc["generators"] = to_json(I.generators());
  std::string text;
  for (const auto& p : I.generators()) text += p.to_string() + "\n";
  if (gb) {
    I = groebner(I, g.budget);
    doc["gb"] = to_json(I.basis()->elements());
    text += "-- reduced basis (" + std::to_string(I.basis()->elements().size()) + " elements)\n";
    for (const auto& p : I.basis()->elements()) text += p.to_string() + "\n";
  }
  if (dim) {
    const int d = dimension(I, g.budget);
    doc["dimension"] = d;
    text += "dimension " + std::to_string(d) + "\n";
  }
  emit(g, doc, text);
  return kPass;
}

int cmd_decompose(const Globals& g) {
  const Surface s = parse_surface(g.surface);
  const auto dec = decompose(s, g.m, g.budget);
  json comps = json::array();
  std::string text;
  for (const auto& c : dec.components) {
    json witnesses = json::array();
    for (const auto& w : dec.witnesses) {
      if (w.owner != c.label) continue;
      json member;
      for (auto l : kLabels) member[to_string(l)] = w.member[static_cast<std::size_t>(l)];
      witnesses.push_back(json{{"jet", w.witness.to_string()}, {"member", std::move(member)}, {"ok", w.ok()}});
    }
    json images;
    for (auto which : {Symmetry::Psi1, Symmetry::Psi2})
      images[to_string(which)] = to_string(apply_symmetry(which, c, dec.components, g.budget).label);
    text += to_string(c.label) + ": dimension " + std::to_string(c.dim) + ", " +
            std::to_string(c.sat_ideal.generators().size()) + " generators, psi1 -> " + images["psi1"].get<std::string>() +
            ", psi2 -> " + images["psi2"].get<std::string>() + "\n";
    json comp{{"label", to_string(c.label)}};
    comp["localizer"] = c.localizer ? json(to_string(*c.localizer)) : json(nullptr);
    comp["generators"] = to_json(c.sat_ideal.generators());
    comp["dimension"] = c.dim;
    comp["certified_height"] = c.certificate ? json(c.certificate->height()) : json(nullptr);
    comp["witnesses"] = std::move(witnesses);
    comp["symmetry_images"] = std::move(images);
    comps.push_back(std::move(comp));
  }
  const bool ok = dec.distinct();
  text += ok ? "components pairwise distinct\n" : "distinctness witnesses FAILED\n";
  emit(g, json{{"surface", to_string(s)}, {"m", g.m}, {"distinct", ok}, {"components", std::move(comps)}}, text);
  return ok ? kPass : kVerification;
}

int cmd_graph(const Globals& g) {
  const Surface s = parse_surface(g.surface);
  const auto dec = decompose(s, g.m, g.budget);
  const auto poset = pairwise_intersections(dec.components, g.budget);
  const auto maximal = maximal_elements(poset.records);
  const Graph graph = build_graph(dec.components, maximal);
  const bool d4 = dynkin_d4_check(graph);
  const std::string dot = to_dot(graph);

  json records = json::array();
  for (const auto& r : poset.records) {
    json below = json::array();
    for (const auto& p : r.strict_subset_of) below.push_back(to_string(p));
    records.push_back(json{{"pair", to_string(r.pair)}, {"maximal", r.maximal}, {"strict_subset_of", std::move(below)}});
  }
  json verdicts = json::array();
  for (std::size_t a = 0; a < poset.records.size(); ++a)
    for (std::size_t b = 0; b < poset.records.size(); ++b) {
      if (a == b) continue;
      const auto& v = *poset.inclusion[a][b];
      json row{{"from", to_string(poset.records[a].pair)}, {"to", to_string(poset.records[b].pair)},
               {"included", v.included}, {"tier", to_string(v.tier)}, {"method", v.method}};
      row["witness"] = v.witness ? json(*v.witness) : json(nullptr);
      verdicts.push_back(std::move(row));
    }
  json edges = json::array();
  for (const auto& e : graph.edges) edges.push_back(to_string(e));

  if (!g.dot.empty()) {
    std::ofstream out(g.dot);
    if (!out) throw PreconditionError("cannot write " + g.dot);
    out << dot << '\n';
  }
  std::string text;
  for (const auto& r : maximal) text += "maximal " + to_string(r.pair) + "\n";
  text += dot + "\n" + std::string(d4 ? "Dynkin D4: yes\n" : "Dynkin D4: NO\n");
  emit(g,
       json{{"surface", to_string(s)}, {"m", g.m}, {"records", std::move(records)}, {"inclusions", std::move(verdicts)},
            {"edges", std::move(edges)}, {"dynkin_d4", d4}, {"weakest_tier", to_string(poset.weakest_tier())}, {"dot", dot}},
       text);
  return d4 ? kPass : kVerification;
}

int cmd_count(const Globals& g, const std::string& build, int k, std::size_t samples) {
  const Surface s = parse_surface(g.surface);
  const Ideal I = build_named(build, s, g.m, g.budget);
  auto rep = point_count(I, k, samples);
  rep.description = build;
  json pts = json::array();
  for (const auto& j : rep.samples) pts.push_back(j.to_string());
  emit(g,
       json{{"surface", to_string(s)}, {"ideal", rep.description}, {"m", rep.m}, {"k", rep.k}, {"count", rep.count},
            {"samples", std::move(pts)}},
       build + " over GF(2^" + std::to_string(k) + "): " + std::to_string(rep.count) + " points\n");
  return kPass;
}

int cmd_suite(const Globals& g, std::optional<int> center_u) {
  const Surface s = parse_surface(g.surface);
  SuiteReport report = run_paper_suite(s, g.m, g.budget);
  if (center_u) report.append(verify_center_cases(*center_u, g.m, g.budget));

  json checks = json::array();
  std::string text;
  for (const auto& c : report.checks) {
    checks.push_back(json{{"id", c.id}, {"anchor", c.anchor}, {"status", to_string(c.status)},
                          {"tier", to_string(c.tier)}, {"detail", c.detail}});
    text += to_string(c.status) + " " + c.id + " [" + to_string(c.tier) + "] " + c.detail + "\n";
  }
  const auto passed = report.count(CheckStatus::Pass), failed = report.count(CheckStatus::Fail),
             skipped = report.count(CheckStatus::SkippedBudget);
  text += std::to_string(passed) + " passed, " + std::to_string(failed) + " failed, " + std::to_string(skipped) +
          " skipped (budget)\n";
  emit(g,
       json{{"surface", to_string(s)}, {"m", g.m}, {"passed", passed}, {"failed", failed}, {"skipped_budget", skipped},
            {"checks", std::move(checks)}},
       text);
  if (failed > 0) return kVerification;
  return skipped > 0 ? kBudget : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jet schemes of the characteristic-2 D4 surface singularities"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--surface", g.surface, "d40 or d41")->check(CLI::IsMember({"d40", "d41", "D40", "D41"}));
  app.add_option("-m", g.m, "jet order")->check(CLI::Range(0, kMaxJetIndex));
  app.add_option("--budget", g.budget, "reduction steps per Groebner computation");
  app.add_flag("--json", g.json, "single-line JSON output");
  app.add_option("--dot", g.dot, "write the graph in DOT format to FILE");

  std::function<int()> run;

  auto* expand = app.add_subcommand("expand", "jet equations f^(0)..f^(m), one per line");
  std::string mod;
  expand->add_option("--mod", mod, "reduce modulo L_pqr, given as p,q,r");
  expand->callback([&] { run = [&] { return cmd_expand(g, mod); }; });

  auto* lemma = app.add_subcommand("lemma-g", "check the truncated closed forms on a grid");
  int pmax = 5, lmax = 12;
  lemma->add_option("--pmax", pmax, "largest p, q and r");
  lemma->add_option("--lmax", lmax, "largest l");
  lemma->callback([&] { run = [&] { return cmd_lemma_g(g, pmax, lmax); }; });

  auto* ideal = app.add_subcommand("ideal", "build an ideal and optionally saturate, reduce or measure it");
  std::string build, sat;
  bool gb = false, dim = false;
  ideal->add_option("--build", build, "J1, J2, J3, L:p,q,r, S, C or Z0..Z3")->required();
  ideal->add_option("--saturate", sat, "variable to saturate at, e.g. z1");
  ideal->add_flag("--gb", gb, "print the reduced Groebner basis");
  ideal->add_flag("--dim", dim, "print the Krull dimension");
  ideal->callback([&] { run = [&] { return cmd_ideal(g, build, sat, gb, dim); }; });

  auto* dec = app.add_subcommand("decompose", "the four components with witnesses and symmetry images");
  dec->callback([&] { run = [&] { return cmd_decompose(g); }; });

  auto* graph = app.add_subcommand("graph", "intersection poset and component graph");
  graph->callback([&] { run = [&] { return cmd_graph(g); }; });

  auto* count = app.add_subcommand("count", "count GF(2^k)-points of an ideal by enumeration");
  std::string count_build;
  int k = 1;
  std::size_t samples = 4;
  count->add_option("--build", count_build, "J1, J2, J3, L:p,q,r, S, C or Z0..Z3")->required();
  count->add_option("-k", k, "extension degree")->check(CLI::Range(1, kMaxEnumerationDegree));
  count->add_option("--samples", samples, "sample points to print");
  count->callback([&] { run = [&] { return cmd_count(g, count_build, k, samples); }; });

  auto* suite = app.add_subcommand("suite", "run every mechanical check for one surface and order");
  std::optional<int> center_u;
  suite->add_option("--center", center_u, "also verify the center cases for this u");
  suite->callback([&] { run = [&] { return cmd_suite(g, center_u); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run();
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerification;
  } catch (const PreconditionError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  }
}
