#include "hurwitz/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "hurwitz/dsl.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/properties.hpp"
#include "hurwitz/report.hpp"
#include "hurwitz/ring_core.hpp"
#include "hurwitz/scenarios.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ms(Clock::time_point t0) {
  return std::uint64_t(std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count());
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("HURWITZ_BUDGET")) {
    try {
      std::size_t used = 0;
      auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw DomainError(std::string("HURWITZ_BUDGET must be a positive integer, got '") + env + "'");
  }
  return kDefaultBudget;
}

struct Output {
  bool json = false;
  bool timing = false;
  std::string path;
};

void add_output_flags(CLI::App* cmd, Output& o) {
  cmd->add_flag("--json", o.json, "emit the JSON report");
  cmd->add_flag("--timing", o.timing, "record wall time in JSON reports (otherwise 0)");
  cmd->add_option("--out", o.path, "write the report to this file instead of stdout");
}

void write(const Output& o, const std::string& text, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.path, std::ios::binary);
  if (!f) throw DomainError("cannot write " + o.path);
  f << text;
}

std::string render(const std::vector<Report>& reports, const Output& o) {
  if (!o.json) {
    std::string s;
    for (const auto& r : reports) s += emit_report(r, Format::text);
    return s;
  }
  if (reports.size() == 1) return emit_report(reports.front(), Format::json);
  // A registry run is a JSON array of reports.
  std::string s = "[\n";
  for (std::size_t k = 0; k < reports.size(); ++k) {
    auto one = emit_report(reports[k], Format::json);
    one.pop_back();
    s += one + (k + 1 < reports.size() ? ",\n" : "\n");
  }
  return s + "]\n";
}

int worst(const std::vector<Report>& reports) {
  Status s = Status::holds;
  for (const auto& r : reports) {
    auto t = overall_status(r);
    if (t == Status::fails) return exit_code(Status::fails);
    if (t == Status::unknown) s = Status::unknown;
  }
  return exit_code(s);
}

struct CheckArgs {
  std::string property;
  std::string ring;
  long degree = 1;
  long trunc = 0;
  std::string mode = "directed";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  Output out;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  auto t0 = Clock::now();
  auto ring = ring_from_spec(a.ring);
  CheckOptions o;
  o.degree = a.degree;
  o.trunc = a.trunc;
  o.mode = parse_mode(a.mode);
  o.samples = a.samples;
  o.seed = a.seed;
  o.budget = a.budget.value_or(default_budget());
  Report r;
  r.ring = ring->spec();
  r.seed = a.seed;
  r.add(a.property, check_property(a.property, ring, o));
  if (!a.out.json || a.out.timing) r.timing_ms = elapsed_ms(t0);
  write(a.out, render({r}, a.out), out);
  return exit_code(overall_status(r));
}

int cmd_reproduce(const std::string& id, std::optional<std::uint64_t> seed, const Output& o, std::ostream& out) {
  std::vector<std::string> ids = id == "all" ? scenario_ids() : std::vector<std::string>{id};
  std::vector<Report> reports;
  for (const auto& s : ids) {
    auto t0 = Clock::now();
    auto r = run_scenario(s, seed);
    if (!o.json || o.timing) r.timing_ms = elapsed_ms(t0);
    reports.push_back(std::move(r));
  }
  write(o, render(reports, o), out);
  return worst(reports);
}

int cmd_radicals(const std::string& spec, const Output& o, std::ostream& out) {
  auto t0 = Clock::now();
  auto ring = ring_from_spec(spec);
  auto chain = check_radical_chain(ring);
  Report r;
  r.ring = ring->spec();
  r.add("radical-chain", chain.verdict);
  r.add("ifp", chain.ifp);
  const Ring& R = *ring;
  r.narrative = {"N = " + set_to_string(R, chain.nilpotents), "N_0 = N_* = " + set_to_string(R, chain.lower),
                 "N^* = " + set_to_string(R, chain.upper), "J = " + set_to_string(R, chain.jacobson)};
  if (!chain.consistent) r.narrative.push_back("IFP holds but N_* != N");
  if (!o.json || o.timing) r.timing_ms = elapsed_ms(t0);
  write(o, render({r}, o), out);
  return exit_code(overall_status(r));
}

int cmd_annihilator(const std::string& spec, const std::string& set, const std::string& side, const Output& o,
                    std::ostream& out) {
  auto ring = ring_from_spec(spec);
  const Ring& R = *ring;
  auto s = parse_set(R, set);
  auto ann = side == "left" ? left_annihilator(R, s) : right_annihilator(R, s);
  std::string text;
  if (o.json) {
    std::ostringstream j;
    j << "{\"ring\": \"" << R.spec() << "\", \"side\": \"" << side << "\", \"set\": \"" << set_to_string(R, s)
      << "\", \"annihilator\": \"" << set_to_string(R, ann) << "\", \"size\": " << ann.size() << "}\n";
    text = j.str();
  } else {
    text = (side == "left" ? "l(" : "r(") + set_to_string(R, s) + ") = " + set_to_string(R, ann) + "  (" +
           std::to_string(ann.size()) + " elements)\n";
  }
  write(o, text, out);
  return kExitHolds;
}

int cmd_idempotent_jets(const std::string& spec, std::size_t order, const Output& o, std::ostream& out) {
  auto ring = ring_from_spec(spec);
  auto jets = idempotent_jets(ring, order);
  std::string text;
  std::size_t nonconstant = 0;
  for (const auto& e : jets) nonconstant += !e.is_constant();
  if (o.json) {
    text = "{\"ring\": \"" + ring->spec() + "\", \"order\": " + std::to_string(order) + ", \"jets\": [";
    for (std::size_t k = 0; k < jets.size(); ++k) text += (k ? ", \"" : "\"") + to_string(jets[k]) + "\"";
    text += "], \"nonconstant\": " + std::to_string(nonconstant) + "}\n";
  } else {
    for (const auto& e : jets) text += to_string(e) + (e.is_constant() ? "\n" : "  non-constant\n");
    text += std::to_string(jets.size()) + " idempotent jets, " + std::to_string(nonconstant) + " non-constant\n";
  }
  write(o, text, out);
  return kExitHolds;
}

int cmd_product(const std::string& spec, const std::string& f, const std::string& g, const std::string& kind,
                std::ostream& out) {
  auto ring = ring_from_spec(spec);
  auto fc = parse_coeffs(*ring, f);
  auto gc = parse_coeffs(*ring, g);
  if (kind == "ordinary") {
    out << to_string(opoly_mul(OrdinaryPoly(ring, fc), OrdinaryPoly(ring, gc))) << "\n";
  } else {
    out << to_string(hpoly_mul(HurwitzPoly(ring, fc), HurwitzPoly(ring, gc))) << "\n";
  }
  return kExitHolds;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hurwitz series rings: constructions, property checks and scenarios", "hurwitz"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  CheckArgs check;
  auto* c = app.add_subcommand("check", "run one property check on a ring");
  c->add_option("property", check.property, "property name")->required()->check(CLI::IsMember(property_names()));
  c->add_option("--ring", check.ring, "ring spec, e.g. \"Zn(4)\"")->required();
  c->add_option("--deg", check.degree, "maximum degree of f and g")->check(CLI::NonNegativeNumber);
  c->add_option("--trunc", check.trunc, "jet order for the truncated search channel")->check(CLI::NonNegativeNumber);
  c->add_option("--mode", check.mode, "exhaustive|random|directed")
      ->check(CLI::IsMember({"exhaustive", "random", "directed"}));
  c->add_option("--samples", check.samples, "random samples");
  c->add_option("--seed", check.seed, "random seed");
  c->add_option("--budget", check.budget, "operation budget (default HURWITZ_BUDGET or 5e8)");
  add_output_flags(c, check.out);

  std::string scenario;
  std::optional<std::uint64_t> seed;
  Output rep_out;
  auto* r = app.add_subcommand("reproduce", "run a registered scenario, or all of them");
  r->add_option("scenario", scenario, "scenario id or 'all'")->required();
  r->add_option("--seed", seed, "replace the scenario's seed");
  add_output_flags(r, rep_out);

  auto* l = app.add_subcommand("list", "list scenario ids");

  std::string spec;
  Output misc_out;
  auto* rad = app.add_subcommand("radicals", "nilpotent set, prime and upper nilradicals, Jacobson radical");
  rad->add_option("--ring", spec, "ring spec")->required();
  add_output_flags(rad, misc_out);

  std::string set, side = "right";
  auto* ann = app.add_subcommand("annihilator", "one-sided annihilator of a finite set");
  ann->add_option("--ring", spec, "ring spec")->required();
  ann->add_option("--set", set, "set literal such as \"{2}\"")->required();
  ann->add_option("--side", side, "right|left")->check(CLI::IsMember({"right", "left"}));
  add_output_flags(ann, misc_out);

  std::size_t order = 1;
  auto* idj = app.add_subcommand("idempotent-jets", "all idempotent jets of a finite ring");
  idj->add_option("--ring", spec, "ring spec")->required();
  idj->add_option("--order", order, "jet order")->required();
  add_output_flags(idj, misc_out);

  std::string f, g, kind = "hurwitz";
  auto* prod = app.add_subcommand("product", "multiply two polynomials given as <c0,c1,...>");
  prod->add_option("--ring", spec, "ring spec")->required();
  prod->add_option("--element,--f", f, "first factor")->required();
  prod->add_option("--g", g, "second factor")->required();
  prod->add_option("--kind", kind, "hurwitz|ordinary")->check(CLI::IsMember({"hurwitz", "ordinary"}));

  auto* parse = app.add_subcommand("parse", "print the canonical form of a ring spec");
  parse->add_option("--ring", spec, "ring spec")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (c->parsed()) return cmd_check(check, out);
    if (r->parsed()) return cmd_reproduce(scenario, seed, rep_out, out);
    if (l->parsed()) {
      for (const auto& id : scenario_ids()) out << id << "  " << scenario_summary(id) << "\n";
      return kExitHolds;
    }
    if (rad->parsed()) return cmd_radicals(spec, misc_out, out);
    if (ann->parsed()) return cmd_annihilator(spec, set, side, misc_out, out);
    if (idj->parsed()) return cmd_idempotent_jets(spec, order, misc_out, out);
    if (prod->parsed()) return cmd_product(spec, f, g, kind, out);
    if (parse->parsed()) {
      out << print_ring_spec(parse_ring_spec(spec)) << "\n";
      return kExitHolds;
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const CapabilityMissing& e) {
    err << "capability error: " << e.what() << "\n";
    return kExitCapability;
  } catch (const BudgetExceeded& e) {
    err << "budget error: " << e.what() << "\n";
    return kExitCapability;
  } catch (const HypothesisNotEstablished& e) {
    err << "hypothesis not established: " << e.what() << "\n";
    return kExitCapability;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hurwitz
