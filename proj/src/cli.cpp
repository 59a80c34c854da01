#include "wsg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wsg/multi_place.hpp"
#include "wsg/riemann_roch.hpp"
#include "wsg/single_place.hpp"
#include "wsg/spec_io.hpp"

namespace wsg::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string format = "table";
  bool strict = false;
  bool force = false;
  int place = -1;
  std::string places;
  std::string coeffs;
  std::string lambda_preset;
  std::int64_t lambda = 0;
  bool lambda_given = false;
  bool witnesses = false;
  std::string oracle_kind;
};

struct Outcome {
  json payload = json::object();
  std::vector<std::string> warnings;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::string fingerprint;
  int exit_code = kExitOk;
};

std::vector<int> parse_places(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--places expects comma-separated integers, got \"" + text + "\"");
    }
  }
  if (out.empty()) throw UsageError("--places is empty");
  return out;
}

CoeffVector parse_coeffs(const std::string& text) {
  CoeffVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(item);
      std::size_t u1 = 0, u2 = 0;
      const std::string lhs = item.substr(0, colon), rhs = item.substr(colon + 1);
      const int l = std::stoi(lhs, &u1);
      const std::int64_t a = std::stoll(rhs, &u2);
      if (u1 != lhs.size() || u2 != rhs.size()) throw std::invalid_argument(item);
      out.push_back({l, a});
    } catch (const std::exception&) {
      throw UsageError("--coeffs expects \"l:a,l:a,...\", got \"" + text + "\"");
    }
  }
  return out;
}

std::vector<std::string> tuple_row(const Tuple& t) {
  std::vector<std::string> row;
  for (auto v : t) row.push_back(std::to_string(v));
  return row;
}

struct Context {
  SpecDocument doc;
  ValidatedSpec validated;
  std::string fingerprint;
  bool concrete = false;
};

Context load(const Options& opt, std::int64_t requested_places = 0) {
  std::ifstream in(opt.file);
  if (!in) throw UsageError("cannot read " + opt.file);
  std::stringstream buf;
  buf << in.rdbuf();
  Context ctx{parse_spec_file(buf.str()), {}, {}, false};
  ctx.concrete = std::holds_alternative<ConcreteSpec>(ctx.doc);
  ValidationOptions vo;
  vo.strict = opt.strict;
  vo.requested_places = requested_places;
  vo.max_degree = opt.force ? std::numeric_limits<std::int64_t>::max() : kDefaultMaxDegree;
  ctx.validated = resolve_spec(ctx.doc, vo);
  ctx.fingerprint = spec_fingerprint(ctx.doc);
  return ctx;
}

void add_validation_warnings(const Context& ctx, Outcome& o) {
  for (const auto& f : ctx.validated.report.failures()) o.warnings.push_back("validation check failed: " + f);
}

std::int64_t oracle_budget(const Options& opt) {
  return opt.force ? std::numeric_limits<std::int64_t>::max() : kDefaultOracleBudget;
}

std::int64_t single_lambda(const Options& opt, const FieldSpec& spec, int l) {
  if (opt.lambda_preset == "inverse") return inverse_lambda(spec, l);
  if (!opt.lambda_preset.empty()) throw UsageError("unknown --lambda-preset \"" + opt.lambda_preset + "\"");
  return opt.lambda_given ? opt.lambda : -1;
}

void check_gamma_field(const Context& ctx, std::size_t t, Outcome& o) {
  if (!ctx.concrete) {
    o.warnings.push_back("abstract mode: a concrete constant field must have at least " + std::to_string(t) +
                         " elements");
    return;
  }
  const auto& field = *std::get<ConcreteSpec>(ctx.doc).field;
  if (field.size() < t)
    throw Error(ErrorCode::ValidationFailure,
                "|K| = " + std::to_string(field.size()) + " < t = " + std::to_string(t));
}

Outcome cmd_validate(const Options& opt) {
  Outcome o;
  Context ctx = load(opt);
  o.fingerprint = ctx.fingerprint;
  const auto& spec = ctx.validated.spec;
  json checks = json::array();
  o.csv_header = {"check", "passed", "detail"};
  for (const auto& c : ctx.validated.report.checks) {
    checks.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    o.csv_rows.push_back({c.name, c.passed ? "true" : "false", c.detail});
  }
  json I = json::array(), J = json::array();
  for (const auto& x : spec.ramified()) I.push_back({x.index, x.mult, x.deg});
  for (const auto& x : spec.zero_places()) J.push_back({x.index, x.mult, x.deg});
  o.payload = {{"mode", ctx.concrete ? "concrete" : "abstract"},
               {"p", spec.p()},
               {"n", spec.n()},
               {"q", spec.q_pow()},
               {"n0", spec.n0()},
               {"m", spec.m()},
               {"genus", spec.genus()},
               {"I", I},
               {"J", J},
               {"checks", checks},
               {"valid", ctx.validated.report.all_passed()}};
  add_validation_warnings(ctx, o);
  return o;
}

Outcome cmd_genus(const Options& opt) {
  Outcome o;
  Context ctx = load(opt);
  o.fingerprint = ctx.fingerprint;
  o.payload = {{"genus", genus(ctx.validated.spec)}};
  o.csv_header = {"genus"};
  o.csv_rows = {{std::to_string(ctx.validated.spec.genus())}};
  add_validation_warnings(ctx, o);
  return o;
}

Outcome cmd_gaps(const Options& opt) {
  Outcome o;
  Context ctx = load(opt);
  o.fingerprint = ctx.fingerprint;
  const auto& spec = ctx.validated.spec;
  const std::int64_t lambda = single_lambda(opt, spec, opt.place);
  const auto gs = gap_set(spec, opt.place, lambda);
  o.payload = {{"place", opt.place}, {"lambda", lambda}, {"genus", spec.genus()}, {"gaps", gs.elements}};
  o.csv_header = {"place", "element"};
  for (auto v : gs.elements) o.csv_rows.push_back({std::to_string(opt.place), std::to_string(v)});
  add_validation_warnings(ctx, o);
  return o;
}

Outcome cmd_semigroup(const Options& opt) {
  Outcome o;
  Context ctx = load(opt);
  o.fingerprint = ctx.fingerprint;
  const auto prof = semigroup_profile(ctx.validated.spec, opt.place);
  const auto pruned = prune_generators(prof.generators);
  o.payload = {{"place", prof.place},
               {"generators", prof.generators},
               {"generators_pruned", pruned},
               {"multiplicity", prof.multiplicity},
               {"frobenius", prof.frobenius},
               {"symmetric", prof.symmetric}};
  o.csv_header = {"place", "kind", "value"};
  const std::string l = std::to_string(prof.place);
  for (auto g : prof.generators) o.csv_rows.push_back({l, "generator", std::to_string(g)});
  for (auto g : pruned) o.csv_rows.push_back({l, "generator_pruned", std::to_string(g)});
  o.csv_rows.push_back({l, "multiplicity", std::to_string(prof.multiplicity)});
  o.csv_rows.push_back({l, "frobenius", std::to_string(prof.frobenius)});
  o.csv_rows.push_back({l, "symmetric", prof.symmetric ? "true" : "false"});
  add_validation_warnings(ctx, o);
  return o;
}

Outcome cmd_dim(const Options& opt) {
  Outcome o;
  Context ctx = load(opt);
  o.fingerprint = ctx.fingerprint;
  const auto cv = parse_coeffs(opt.coeffs);
  const auto d = rr_dimension(ctx.validated.spec, cv);
  json basis = json::array();
  for (const auto& b : rr_basis(ctx.validated.spec, cv)) {
    json denom = json::object(), mandatory = json::object();
    for (auto [i, c] : b.denom_exp) denom[std::to_string(i)] = c;
    for (auto [i, c] : b.mandatory_factor) mandatory[std::to_string(i)] = c;
    basis.push_back({{"k", b.k},
                     {"denom_exp", denom},
                     {"num_degree_bound", b.num_degree_bound},
                     {"mandatory_factor", mandatory},
                     {"contribution", b.contribution()}});
  }
  o.payload = {{"dimension", d}, {"basis", basis}};
  o.csv_header = {"dimension"};
  o.csv_rows = {{std::to_string(d)}};
  add_validation_warnings(ctx, o);
  return o;
}

json witness_json(const WitnessExpr& w) {
  json p = json::object(), q = json::object();
  for (auto [i, e] : w.p_exp) p[std::to_string(i)] = e;
  for (auto [j, e] : w.q_exp) q[std::to_string(j)] = e;
  return {{"y_exp", w.y_exp}, {"p_exp", p}, {"q_exp", q}, {"ratio_exp", w.ratio_exp}};
}

Outcome cmd_gamma(const Options& opt) {
  Outcome o;
  const auto places = parse_places(opt.places);
  Context ctx = load(opt, static_cast<std::int64_t>(places.size()));
  o.fingerprint = ctx.fingerprint;
  check_gamma_field(ctx, places.size(), o);
  const auto& spec = ctx.validated.spec;
  std::int64_t lambda = opt.lambda_given ? opt.lambda : -1;
  if (opt.lambda_preset == "inverse") lambda = inverse_lambda(spec, places.front());
  else if (!opt.lambda_preset.empty()) throw UsageError("unknown --lambda-preset \"" + opt.lambda_preset + "\"");
  const auto gs = gamma(spec, places, lambda);
  json tuples = json::array();
  for (const auto& t : gs.tuples) {
    if (opt.witnesses) {
      const auto w = gamma_witness(spec, places, t);
      tuples.push_back({{"values", t.values},
                        {"i", t.i},
                        {"j", t.j_vec},
                        {"witness", witness_json(w)},
                        {"divisor", to_string(divisor_of_witness(spec, w))}});
    } else {
      tuples.push_back(t.values);
    }
  }
  o.payload = {{"places", places}, {"lambda", lambda}, {"count", gs.tuples.size()}, {"tuples", tuples}};
  for (int l : places) o.csv_header.push_back("Q" + std::to_string(l));
  for (const auto& t : gs.tuples) o.csv_rows.push_back(tuple_row(t.values));
  add_validation_warnings(ctx, o);
  return o;
}

template <class T>
json set_difference_json(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Outcome cmd_oracle(const Options& opt) {
  Outcome o;
  const bool multi = opt.oracle_kind != "gaps";
  const auto places = multi ? parse_places(opt.places) : std::vector<int>{opt.place};
  Context ctx = load(opt, multi ? static_cast<std::int64_t>(places.size()) : 0);
  o.fingerprint = ctx.fingerprint;
  const auto& spec = ctx.validated.spec;
  std::string unit;
  std::size_t count = 0;
  bool match = true;
  std::string closed_form_error;
  json details = json::object();

  if (opt.oracle_kind == "gaps") {
    unit = "gaps";
    const auto oracle = gap_set_oracle(spec, opt.place);
    std::vector<std::int64_t> closed;
    try {
      closed = gap_set(spec, opt.place, single_lambda(opt, spec, opt.place)).elements;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Internal) throw;
      closed_form_error = e.what();
    }
    match = closed_form_error.empty() && closed == oracle;
    count = oracle.size();
    details = {{"only_closed_form", set_difference_json(closed, oracle)},
               {"only_oracle", set_difference_json(oracle, closed)}};
  } else if (opt.oracle_kind == "gamma") {
    unit = "tuples";
    check_gamma_field(ctx, places.size(), o);
    const auto oracle = gamma_oracle(spec, places, oracle_budget(opt));
    std::vector<Tuple> closed;
    try {
      closed = gamma(spec, places, opt.lambda_given ? opt.lambda : -1).values();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Internal) throw;
      closed_form_error = e.what();
    }
    match = closed_form_error.empty() && closed == oracle;
    count = oracle.size();
    details = {{"only_closed_form", set_difference_json(closed, oracle)},
               {"only_oracle", set_difference_json(oracle, closed)}};
  } else {
    unit = "tuples";
    check_gamma_field(ctx, places.size(), o);
    std::int64_t box = 0;
    for (int l : places) box = std::max(box, frobenius(spec, l) + spec.q_pow());
    std::int64_t cells = 1;
    for (std::size_t k = 0; k < places.size(); ++k) {
      cells *= box + 1;
      if (cells > oracle_budget(opt)) throw Error(ErrorCode::BudgetExceeded, "closure box too large; use --force");
    }
    std::vector<Tuple> generators;
    try {
      generators = tilde_gamma(spec, places, box, opt.lambda_given ? opt.lambda : -1);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Internal) throw;
      closed_form_error = e.what();
    }
    json disagreements = json::array();
    Tuple a(places.size(), 0);
    while (closed_form_error.empty()) {
      ++count;
      if (lub_closure_contains(generators, a) != membership_multi(spec, places, a)) {
        match = false;
        if (disagreements.size() < 20) disagreements.push_back(a);
      }
      std::size_t k = a.size();
      bool done = true;
      while (k > 0) {
        --k;
        if (++a[k] <= box) {
          done = false;
          break;
        }
        a[k] = 0;
      }
      if (done) break;
    }
    match = match && closed_form_error.empty();
    details = {{"box_max", box}, {"disagreements", disagreements}};
  }
  if (!closed_form_error.empty()) details["closed_form_error"] = closed_form_error;
  const std::string status = (match ? "MATCH (" : "MISMATCH (") + std::to_string(count) + " " + unit + ")";
  o.payload = {{"check", opt.oracle_kind}, {"status", status}, {"match", match}, {"count", count}, {"details", details}};
  o.csv_header = {"check", "match", "count"};
  o.csv_rows = {{opt.oracle_kind, match ? "true" : "false", std::to_string(count)}};
  o.exit_code = match ? kExitOk : kExitOracleMismatch;
  add_validation_warnings(ctx, o);
  return o;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + "}";
  }
  return v.dump();
}

void render_table(std::ostream& out, const json& payload, const std::string& prefix = "") {
  for (const auto& [key, v] : payload.items()) {
    const std::string name = prefix + key;
    if (v.is_object()) {
      render_table(out, v, name + ".");
    } else if (v.is_array() && !v.empty() && (v.front().is_array() || v.front().is_object())) {
      out << name << " (" << v.size() << "):\n";
      for (const auto& row : v) {
        if (row.is_array()) {
          std::string s = "(";
          for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + scalar_text(row[i]);
          out << "  " << s << ")\n";
        } else {
          std::string s;
          for (const auto& [k2, v2] : row.items()) s += (s.empty() ? "" : "  ") + k2 + "=" + scalar_text(v2);
          out << "  " << s << "\n";
        }
      }
    } else {
      out << name << ": " << scalar_text(v) << "\n";
    }
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(std::ostream& out, std::ostream& err, const Options& opt, const std::vector<std::string>& args,
          const Outcome& o) {
  const std::string& fingerprint = o.fingerprint;
  if (opt.format == "json") {
    json doc = {{"format_version", kFormatVersion},
                {"command", args},
                {"fingerprint", fingerprint},
                {"payload", o.payload},
                {"warnings", o.warnings}};
    out << doc.dump() << "\n";
    return;
  }
  for (const auto& w : o.warnings) err << "warning: " << w << "\n";
  if (opt.format == "csv") {
    for (std::size_t i = 0; i < o.csv_header.size(); ++i) out << (i ? "," : "") << csv_cell(o.csv_header[i]);
    out << "\n";
    for (const auto& row : o.csv_rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << "\n";
    }
    return;
  }
  out << "spec " << fingerprint << "\n";
  render_table(out, o.payload);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Weierstrass semigroups at totally ramified places of linearized function fields", "wsg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--strict", opt.strict, "Abort on any failed validation check");
  app.add_flag("--force", opt.force, "Lift the p^n and oracle size guards");

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", opt.file, "Spec file (JSON)")->required(); };
  std::vector<CLI::Option*> lambda_options;
  auto add_lambda = [&](CLI::App* sub) {
    auto* l = sub->add_option("--lambda", opt.lambda, "Parameter coprime to p");
    lambda_options.push_back(l);
    auto* preset = sub->add_option("--lambda-preset", opt.lambda_preset, "Named lambda: inverse");
    l->excludes(preset);
  };

  auto* validate = app.add_subcommand("validate", "Check the spec and print derived data");
  add_file(validate);
  auto* genus_cmd = app.add_subcommand("genus", "Genus of the function field");
  add_file(genus_cmd);
  auto* gaps = app.add_subcommand("gaps", "Gap set at one place");
  add_file(gaps);
  gaps->add_option("--place", opt.place, "Index l in I")->required();
  add_lambda(gaps);
  auto* semigroup = app.add_subcommand("semigroup", "Generators, multiplicity, Frobenius number, symmetry");
  add_file(semigroup);
  semigroup->add_option("--place", opt.place, "Index l in I")->required();
  auto* dim = app.add_subcommand("dim", "Riemann-Roch dimension of a divisor on the Q_i");
  add_file(dim);
  dim->add_option("--coeffs", opt.coeffs, "l:a,l:a,...")->required();
  auto* gamma_cmd = app.add_subcommand("gamma", "Minimal generating tuples at several places");
  add_file(gamma_cmd);
  gamma_cmd->add_option("--places", opt.places, "l,l,...")->required();
  add_lambda(gamma_cmd);
  gamma_cmd->add_flag("--witnesses", opt.witnesses, "Attach witness functions and their divisors");
  auto* oracle = app.add_subcommand("oracle", "Compare a closed form against its dimension oracle");
  add_file(oracle);
  oracle->add_option("kind", opt.oracle_kind, "gaps | gamma | closure")
      ->required()
      ->check(CLI::IsMember({"gaps", "gamma", "closure"}));
  oracle->add_option("--place", opt.place, "Index l in I (gaps)");
  oracle->add_option("--places", opt.places, "l,l,... (gamma, closure)");
  add_lambda(oracle);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  opt.lambda_given = std::any_of(lambda_options.begin(), lambda_options.end(), [](CLI::Option* o) { return o->count() > 0; });

  try {
    Outcome o;
    auto* sub = app.get_subcommands().front();
    if (sub == oracle) {
      if (opt.oracle_kind == "gaps" && oracle->count("--place") == 0) throw UsageError("oracle gaps needs --place");
      if (opt.oracle_kind != "gaps" && opt.places.empty()) throw UsageError("oracle " + opt.oracle_kind + " needs --places");
    }
    if (sub == validate) o = cmd_validate(opt);
    else if (sub == genus_cmd) o = cmd_genus(opt);
    else if (sub == gaps) o = cmd_gaps(opt);
    else if (sub == semigroup) o = cmd_semigroup(opt);
    else if (sub == dim) o = cmd_dim(opt);
    else if (sub == gamma_cmd) o = cmd_gamma(opt);
    else o = cmd_oracle(opt);
    emit(out, err, opt, args, o);
    return o.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::ValidationFailure) return kExitValidation;
    if (e.code() == ErrorCode::BudgetExceeded) err << "hint: pass --force to lift size guards\n";
    return kExitUsage;
  }
}

}  // namespace wsg::cli
