#include "flowcat/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "flowcat/control.hpp"
#include "flowcat/json_io.hpp"
#include "flowcat/opsem.hpp"
#include "flowcat/semantics.hpp"

namespace flowcat {
namespace {

// Command failures that should exit 2 with a message rather than a crash.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// A term argument names an existing file or is the term text itself.
std::string term_source(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

TypedTerm load_term(const std::string& arg) { return typecheck(parse_term(term_source(arg))); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

FieldVector parse_values(const std::string& text, Field field) {
  FieldVector out;
  if (text.empty()) return out;
  for (const std::string& part : split(text, ',')) out.push_back(field.parse_scalar(part));
  return out;
}

// Ticks separated by ',', wires within a tick by ':', '_' marks an unknown.
std::vector<TickInput> parse_input_text(const std::string& text, Field field) {
  std::vector<TickInput> out;
  if (text.empty()) return out;
  for (const std::string& tick : split(text, ',')) {
    TickInput in;
    for (const std::string& value : split(tick, ':')) {
      if (value == "_") {
        in.u.emplace_back();
      } else {
        in.u.emplace_back(field.parse_scalar(value));
      }
    }
    out.push_back(std::move(in));
  }
  return out;
}

std::vector<std::optional<Scalar>> partial_from_json(const json& j, Field field) {
  std::vector<std::optional<Scalar>> out;
  if (j.is_null()) return out;
  if (!j.is_array()) throw UsageError("tick valuation must be an array");
  for (const json& x : j) {
    if (x.is_null()) {
      out.emplace_back();
    } else if (x.is_string()) {
      out.emplace_back(field.parse_scalar(x.get<std::string>()));
    } else if (x.is_number_integer()) {
      out.emplace_back(field.from_int(x.get<long>()));
    } else {
      throw UsageError("tick value must be a string, an integer or null");
    }
  }
  return out;
}

// Either [[u...], ...] or {"u": [[...], ...], "v": [[...], ...]}; null marks unknowns.
std::vector<TickInput> parse_input_json(const json& j, Field field) {
  std::vector<TickInput> out;
  const json* u = &j;
  const json* v = nullptr;
  if (j.is_object()) {
    u = j.contains("u") ? &j.at("u") : nullptr;
    v = j.contains("v") ? &j.at("v") : nullptr;
  }
  const std::size_t ticks = std::max(u ? u->size() : 0, v ? v->size() : 0);
  out.resize(ticks);
  for (std::size_t k = 0; u && k < u->size(); ++k) out[k].u = partial_from_json((*u)[k], field);
  for (std::size_t k = 0; v && k < v->size(); ++k) out[k].v = partial_from_json((*v)[k], field);
  return out;
}

std::string vector_text(const FieldVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + "]";
}

std::string type_text(std::size_t m, std::size_t n) { return std::to_string(m) + " -> " + std::to_string(n); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compile, compare and analyse linear time-invariant systems written as diagram terms"};
  app.require_subcommand(1);

  std::string field_name = "q";
  if (const char* env = std::getenv("FLOWCAT_FIELD"); env && *env) field_name = env;
  app.add_option("--field", field_name, "Coefficient field: q or zp:<p> (default $FLOWCAT_FIELD or q)");

  std::string term_a, term_b, format = "json", report = "text", init_text, input_text, input_file;
  std::size_t steps = 0, length = 6;
  bool backward = false;

  auto* parse_cmd = app.add_subcommand("parse", "Parse and typecheck a term");
  parse_cmd->add_option("term", term_a, "Term file or inline text")->required();

  auto* normalize_cmd = app.add_subcommand("normalize", "Print the canonical corelation");
  normalize_cmd->add_option("term", term_a, "Term file or inline text")->required();
  normalize_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* equiv_cmd = app.add_subcommand("equiv", "Decide behavioural equality (exit 0 equal, 3 different)");
  equiv_cmd->add_option("lhs", term_a, "Term file or inline text")->required();
  equiv_cmd->add_option("rhs", term_b, "Term file or inline text")->required();

  auto* controllable_cmd = app.add_subcommand("controllable", "Decide controllability (exit 0 yes, 3 no)");
  controllable_cmd->add_option("term", term_a, "Term file or inline text")->required();
  controllable_cmd->add_option("--report", report, "text or json")->check(CLI::IsMember({"json", "text"}));

  auto* part_cmd = app.add_subcommand("controllable-part", "Print the controllable part as a corelation");
  part_cmd->add_option("term", term_a, "Term file or inline text")->required();

  auto* simulate_cmd = app.add_subcommand("simulate", "Run the operational semantics from a register assignment");
  simulate_cmd->add_option("term", term_a, "Term file or inline text")->required();
  simulate_cmd->add_option("--init", init_text, "Initial registers, comma separated");
  auto* input_opt = simulate_cmd->add_option("--input", input_text, "Left boundary per tick: ticks split by ',', wires by ':', '_' unknown");
  auto* input_file_opt = simulate_cmd->add_option("--input-file", input_file, "JSON tick valuations");
  input_opt->excludes(input_file_opt);
  simulate_cmd->add_option("--steps", steps, "Number of ticks (default: number of inputs)");
  simulate_cmd->add_flag("--backward", backward, "Run backwards in time, ending at --init");
  simulate_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* check_cmd = app.add_subcommand("check-trace", "Check a trace window against the step relation");
  check_cmd->add_option("term", term_a, "Term file or inline text")->required();
  check_cmd->add_option("trace", term_b, "Trace JSON file")->required();

  auto* window_cmd = app.add_subcommand("window-compare", "Compare operational and denotational windows");
  window_cmd->add_option("term", term_a, "Term file or inline text")->required();
  window_cmd->add_option("--length", length, "Window length")->check(CLI::PositiveNumber);

  auto* axioms_cmd = app.add_subcommand("axioms", "Check the curated axiom suite");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitError;
  }

  try {
    const Field field = Field::parse(field_name);

    if (*parse_cmd) {
      TypedTerm t = load_term(term_a);
      out << pretty(t.term) << "\n";
      out << "type: " << type_text(t.arity, t.coarity) << "\n";
      out << "registers: " << t.registers.size();
      for (const RegisterSite& r : t.registers) out << (r.kind == RegisterKind::delay ? " delay" : " co_delay");
      out << "\n";
      return kExitYes;
    }
    if (*normalize_cmd) {
      Corelation c = normalize(load_term(term_a).term, field);
      if (format == "json") {
        out << corelation_to_json(c).dump(2) << "\n";
      } else {
        out << "type: " << type_text(c.m(), c.n()) << "\n" << c.kernel_rep().to_string() << "\n";
      }
      return kExitYes;
    }
    if (*equiv_cmd) {
      Corelation x = normalize(load_term(term_a).term, field);
      Corelation y = normalize(load_term(term_b).term, field);
      if (x.m() != y.m() || x.n() != y.n()) {
        throw UsageError("boundary types differ: " + type_text(x.m(), x.n()) + " vs " + type_text(y.m(), y.n()));
      }
      if (behavior_equal(x, y)) {
        out << "equivalent\n";
        return kExitYes;
      }
      out << "not equivalent\n";
      out << "lhs: " << corelation_to_json(x).dump() << "\n";
      out << "rhs: " << corelation_to_json(y).dump() << "\n";
      return kExitNo;
    }
    if (*controllable_cmd) {
      ControllabilityReport r = is_controllable(normalize(load_term(term_a).term, field));
      if (report == "json") {
        out << report_to_json(r).dump(2) << "\n";
      } else {
        out << (r.controllable ? "controllable" : "not controllable") << "\n";
        if (!r.controllable) out << "obstruction: " << r.obstruction.to_string() << "\n";
      }
      return r.controllable ? kExitYes : kExitNo;
    }
    if (*part_cmd) {
      out << corelation_to_json(controllable_part(normalize(load_term(term_a).term, field))).dump(2) << "\n";
      return kExitYes;
    }
    if (*simulate_cmd) {
      TypedTerm t = load_term(term_a);
      FieldVector init = parse_values(init_text, field);
      if (init_text.empty()) init.assign(t.registers.size(), field.zero());
      std::vector<TickInput> inputs = input_file.empty() ? parse_input_text(input_text, field)
                                                         : parse_input_json(json::parse(read_file(input_file)), field);
      const std::size_t ticks = steps ? steps : inputs.size();
      if (ticks == 0) throw UsageError("simulate: give --steps or a non-empty input");
      if (inputs.size() > ticks) inputs.resize(ticks);
      std::optional<TraceWindow> w =
          simulate(t, field, init, inputs, ticks, backward ? Direction::backward : Direction::forward);
      if (!w) {
        err << "inputs are inconsistent with the step relation\n";
        return kExitNo;
      }
      if (format == "json") {
        out << trace_to_json(*w).dump(2) << "\n";
      } else {
        for (std::size_t k = 0; k < w->length(); ++k) {
          out << "t=" << w->t0 + static_cast<long>(k) << " u=" << vector_text(w->u[k]) << " v=" << vector_text(w->v[k])
              << " r=" << vector_text(w->registers[k]) << "\n";
        }
      }
      return kExitYes;
    }
    if (*check_cmd) {
      TypedTerm t = load_term(term_a);
      TraceWindow w = trace_from_json(json::parse(read_file(term_b)), field);
      const bool ok = check_window_trace(t, field, w);
      out << (ok ? "valid" : "invalid") << "\n";
      return ok ? kExitYes : kExitNo;
    }
    if (*window_cmd) {
      TypedTerm t = load_term(term_a);
      Subspace operational = opsem_window_set(t, field, length);
      Subspace denotational = window_behavior(normalize(t.term, field).kernel_rep(), length);
      if (operational == denotational) {
        out << "MATCH dim=" << operational.dim() << "\n";
        return kExitYes;
      }
      out << "MISMATCH operational_dim=" << operational.dim() << " denotational_dim=" << denotational.dim() << "\n";
      return kExitNo;
    }
    if (*axioms_cmd) {
      std::size_t failures = 0;
      for (const AxiomResult& r : axiom_soundness_suite(field)) {
        out << (r.passed ? "PASS " : "FAIL ") << r.axiom.name << ": " << r.axiom.lhs << " = " << r.axiom.rhs;
        if (!r.detail.empty()) out << " (" << r.detail << ")";
        out << "\n";
        failures += r.passed ? 0 : 1;
      }
      out << failures << " failures\n";
      return failures == 0 ? kExitYes : kExitNo;
    }
  } catch (const ParseError& e) {
    err << "parse error at " << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace flowcat
