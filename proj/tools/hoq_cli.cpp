// Copyright 2026 The hoq developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.  Data goes to stdout, diagnostics to stderr.
// Exit codes: 0 = success / property holds, 1 = checked property fails,
// 2 = usage, syntax or construction errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hoq/causality.hpp"
#include "hoq/expr.hpp"
#include "hoq/sampling.hpp"

namespace {

using namespace hoq;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
}

void emit(const std::optional<std::string>& out_path, const std::string& text) {
  if (out_path) {
    write_file(*out_path, text);
  } else {
    std::cout << text << "\n";
  }
}

std::string join(const std::set<std::string>& labels) {
  std::string s;
  for (const auto& l : labels) {
    if (!s.empty()) s += ",";
    s += l;
  }
  return s.empty() ? "(none)" : s;
}

void print_projector(const OpMap& p) {
  if (p.symbolic()) {
    std::cout << "projector: " << to_string(p.as_subset_map()) << "\n";
  } else {
    const auto& d = p.as_dense();
    std::cout << "projector: dense, " << d.m.rows() << "x" << d.m.cols()
              << " on vectorized operators\n";
  }
}

void print_set(const SetDescription& s) {
  std::cout << "set: " << name_of(s) << "\n";
  std::cout << "space: " << describe(space_of(s)) << "\n";
  if (std::holds_alternative<ObjectSet>(s)) {
    const auto& o = std::get<ObjectSet>(s);
    print_projector(o.projector);
    std::cout << "gamma: " << format_rational(o.gamma_value());
    if (!o.gamma.exponents().empty()) std::cout << "  (" << o.gamma.to_string() << ")";
    std::cout << "\n";
    std::cout << "psd: " << (o.require_psd ? "required" : "not required") << "\n";
    std::cout << "wires: in {" << join(o.wires.inputs) << "} out {" << join(o.wires.outputs)
              << "}\n";
  } else {
    const auto& a = std::get<AffineConstraintSet>(s);
    print_projector(a.projector);
    if (a.affine) {
      std::cout << "affine: one operator-valued equation after tracing out {"
                << join(a.affine->trace_out_first) << "}\n";
    } else {
      std::cout << "affine: none (purely linear description)\n";
    }
    std::cout << "psd: " << (a.require_psd ? "required" : "not required") << "\n";
  }
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

BuiltObject build_from_text(const std::string& text, int budget) {
  return build_object(parse_expr(text), budget);
}

int cmd_build(const std::string& text, int budget, bool json) {
  BuiltObject b = build_from_text(text, budget);
  print_warnings(b.warnings);
  if (json) {
    if (b.transform) {
      std::cout << to_json(*b.transform) << "\n";
    } else {
      std::cout << to_json(b.set) << "\n";
    }
    return 0;
  }
  if (b.transform) {
    std::cout << "construction: " << b.transform->path << "\n";
    std::cout << "rescale (gamma_out / gamma_in): " << b.transform->rescale.to_string() << "\n";
  }
  print_set(b.set);
  return 0;
}

int cmd_validate(const std::string& text, const std::string& member_path, int budget, double tol) {
  BuiltObject b = build_from_text(text, budget);
  print_warnings(b.warnings);
  const Operator w = operator_from_json(read_file(member_path));
  const ValidationReport r = validate(w, b.set, tol);
  std::cout << "projector condition: " << (r.projector_ok ? "ok" : "violated")
            << "  (residual " << format_real(r.projector_residual) << ")\n";
  std::cout << "trace / affine condition: " << (r.trace_ok ? "ok" : "violated") << "  (residual "
            << format_real(r.trace_residual) << ")\n";
  std::cout << "positivity: " << (r.psd_ok ? "ok" : "violated") << "  (min eigenvalue "
            << format_real(r.min_eig) << ")\n";
  std::cout << (r.pass() ? "member" : "not a member") << "\n";
  return r.pass() ? 0 : 1;
}

int cmd_causality(const std::string& text, int budget, const std::string& outputs_csv,
                  const std::string& inputs_csv) {
  BuiltObject b = build_from_text(text, budget);
  print_warnings(b.warnings);
  if (!std::holds_alternative<ObjectSet>(b.set)) {
    throw Error("causal analysis needs a projector-plus-trace set description");
  }
  const ObjectSet& s = std::get<ObjectSet>(b.set);
  auto parse_csv = [](const std::string& csv) {
    std::set<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.insert(item);
    }
    return out;
  };
  std::set<std::string> outputs = outputs_csv.empty() ? s.wires.outputs : parse_csv(outputs_csv);
  std::set<std::string> inputs = inputs_csv.empty() ? s.wires.inputs : parse_csv(inputs_csv);
  if (outputs.empty()) throw Error("no output wires to survey; pass --outputs");
  const SurveyReport r = causal_order_survey(s, outputs, inputs);
  for (const auto& e : r.entries) {
    std::cout << "candidate " << e.candidate << ": "
              << (e.admissible ? "admissible final output" : "not admissible");
    if (e.witness_partner) std::cout << "  (witness input wire " << *e.witness_partner << ")";
    std::cout << "\n";
  }
  std::cout << r.verdict << "\n";
  return r.any_admissible ? 0 : 1;
}

int cmd_sample(const std::string& text, int budget, std::uint64_t seed,
               const std::optional<std::string>& out_path) {
  BuiltObject b = build_from_text(text, budget);
  print_warnings(b.warnings);
  if (!std::holds_alternative<ObjectSet>(b.set)) {
    throw Error("sampling needs a projector-plus-trace set description");
  }
  const Operator w = random_member(std::get<ObjectSet>(b.set), seed);
  emit(out_path, to_json(w));
  return 0;
}

int cmd_export(const std::string& text, int budget, bool with_basis,
               const std::optional<std::string>& out_path) {
  BuiltObject b = build_from_text(text, budget);
  print_warnings(b.warnings);
  std::string body = b.transform ? to_json(*b.transform) : to_json(b.set);
  if (with_basis) {
    const OpMap& p = b.transform
                         ? b.transform->projector()
                         : std::visit([](const auto& v) -> const OpMap& { return v.projector; },
                                      b.set);
    const ImageBasis basis = image_basis(p, 1e-7, budget);
    std::string arr = "[";
    for (std::size_t i = 0; i < basis.ops.size(); ++i) {
      if (i) arr += ",";
      arr += to_json(basis.ops[i]);
    }
    arr += "]";
    // Attach as a sibling key of the bundle.
    body.pop_back();  // strip trailing '}'
    body += ",\"image_basis\":" + arr + "}";
  }
  emit(out_path, body);
  return 0;
}

int cmd_dual(const std::string& text, int budget, bool json) {
  BuiltObject b = build_from_text(text, budget);
  print_warnings(b.warnings);
  if (!std::holds_alternative<ObjectSet>(b.set)) {
    throw Error("dual needs a projector-plus-trace set description");
  }
  const SetDescription d = dual_set(std::get<ObjectSet>(b.set), budget);
  if (json) {
    std::cout << to_json(d) << "\n";
  } else {
    print_set(d);
  }
  return 0;
}

int cmd_check_map(const std::string& text, const std::string& choi_path, int budget, int samples,
                  std::uint64_t seed, double tol) {
  BuiltObject b = build_from_text(text, budget);
  print_warnings(b.warnings);
  if (!b.transform) {
    throw Error("check-map needs a transform(...) expression");
  }
  const Operator op = operator_from_json(read_file(choi_path));
  const ChoiMatrix t(b.transform->s_in.space, b.transform->s_out.space,
                     align_to(op, concat(b.transform->s_in.space, b.transform->s_out.space)));
  const MapCheckReport r =
      check_map_version(t, b.transform->s_in, b.transform->s_out, samples, seed);
  std::cout << "probes: " << r.probes << (r.deterministic ? " (full basis)" : " (sampled)")
            << "\n";
  std::cout << "max projector residual: " << format_real(r.projector_residual) << "\n";
  std::cout << "max trace residual: " << format_real(r.trace_residual) << "\n";
  std::cout << (r.pass(tol) ? "map conditions hold" : "map conditions fail") << "\n";
  return r.pass(tol) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hoq: projector-based characterization of quantum object sets and the "
               "transformations between them"};
  app.require_subcommand(1);

  int budget = kDefaultDenseBudget;
  double tol = kDefaultTol;
  app.add_option("--dense-budget", budget,
                 "largest total dimension for dense supermap fallbacks");
  app.add_option("--tol", tol, "numerical tolerance for validation and checks");

  std::string expr_text;
  bool json = false;

  auto* build = app.add_subcommand("build", "elaborate an expression and print its description");
  build->add_option("expr", expr_text, "object expression")->required();
  build->add_flag("--json", json, "emit the JSON description instead of text");

  std::string member_path;
  auto* validate_cmd =
      app.add_subcommand("validate", "check an operator (JSON file) against a set");
  validate_cmd->add_option("expr", expr_text, "object expression")->required();
  validate_cmd->add_option("--in", member_path, "operator JSON file")->required();

  std::string outputs_csv, inputs_csv;
  auto* causality =
      app.add_subcommand("causality", "survey admissible final output wires of a set");
  causality->add_option("expr", expr_text, "object expression")->required();
  causality->add_option("--outputs", outputs_csv, "comma-separated candidate output wires");
  causality->add_option("--inputs", inputs_csv, "comma-separated partner input wires");

  std::uint64_t seed = 1;
  std::string out_path;
  auto* sample = app.add_subcommand("sample", "draw a deterministic pseudo-random member");
  sample->add_option("expr", expr_text, "object expression")->required();
  sample->add_option("--seed", seed, "random seed");
  sample->add_option("--out", out_path, "output file (stdout when omitted)");

  bool with_basis = false;
  auto* export_cmd =
      app.add_subcommand("export", "emit the JSON constraint bundle for external solvers");
  export_cmd->add_option("expr", expr_text, "object expression")->required();
  export_cmd->add_flag("--with-basis", with_basis, "include an image basis of the projector");
  export_cmd->add_option("--out", out_path, "output file (stdout when omitted)");

  auto* dual = app.add_subcommand("dual", "describe the dual of a set");
  dual->add_option("expr", expr_text, "object expression")->required();
  dual->add_flag("--json", json, "emit the JSON description instead of text");

  std::string choi_path;
  int samples = 48;
  auto* check_map =
      app.add_subcommand("check-map", "probe a Choi matrix against the map-level conditions");
  check_map->add_option("expr", expr_text, "transform expression")->required();
  check_map->add_option("--choi", choi_path, "Choi matrix JSON file")->required();
  check_map->add_option("--samples", samples, "probe count above the exhaustive-basis cutoff");
  check_map->add_option("--seed", seed, "random seed for sampled probes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::optional<std::string> out =
        out_path.empty() ? std::nullopt : std::optional<std::string>(out_path);
    if (build->parsed()) return cmd_build(expr_text, budget, json);
    if (validate_cmd->parsed()) return cmd_validate(expr_text, member_path, budget, tol);
    if (causality->parsed()) return cmd_causality(expr_text, budget, outputs_csv, inputs_csv);
    if (sample->parsed()) return cmd_sample(expr_text, budget, seed, out);
    if (export_cmd->parsed()) return cmd_export(expr_text, budget, with_basis, out);
    if (dual->parsed()) return cmd_dual(expr_text, budget, json);
    if (check_map->parsed())
      return cmd_check_map(expr_text, choi_path, budget, samples, seed, tol);
  } catch (const SyntaxError& e) {
    std::cerr << e.what() << "\n";  // message already carries line:column
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
