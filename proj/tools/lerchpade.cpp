// Command-line front end: `lerchpade <group> <action> [flags]`.
//
// Every run writes a JSON/CSV/text report (to --output, or to stdout with
// `--output -`) and prints a one-line summary. Exit status is 0 on success,
// 1 when a verification fails and 2 on invalid input; failures also emit one
// JSON object on stderr.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lerchpade/json_io.hpp"
#include "lerchpade/lerchpade.hpp"

namespace lp = lerchpade;
using lp::Json;
using lp::Rat;

namespace {

// ---------------------------------------------------------------- flag parsing

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

Rat parse_rat(const std::string& flag, const std::string& text) {
  try {
    return Rat::parse(trim(text));
  } catch (const std::exception& e) {
    throw lp::InvalidInput("--" + flag + ": cannot parse '" + text + "' as a rational");
  }
}

std::vector<Rat> parse_rat_list(const std::string& flag, const std::string& text) {
  std::vector<Rat> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_rat(flag, part));
  if (out.empty()) throw lp::InvalidInput("--" + flag + " is empty");
  return out;
}

long parse_long(const std::string& flag, const std::string& text) {
  const std::string t = trim(text);
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (t.empty() || used != t.size()) throw lp::InvalidInput("--" + flag + ": '" + text + "' is not an integer");
  return v;
}

unsigned parse_unsigned(const std::string& flag, const std::string& text, long lo = 0) {
  const long v = parse_long(flag, text);
  if (v < lo) throw lp::InvalidInput("--" + flag + " must be >= " + std::to_string(lo));
  return static_cast<unsigned>(v);
}

/// "x:r" pairs, comma-separated; r defaults to 1.
std::vector<lp::Shift> parse_shifts(const std::string& text) {
  std::vector<lp::Shift> out;
  for (const auto& part : split(text, ',')) {
    const auto colon = part.find(':');
    const std::string xs = colon == std::string::npos ? part : part.substr(0, colon);
    const unsigned r = colon == std::string::npos ? 1 : parse_unsigned("shifts", part.substr(colon + 1), 1);
    out.push_back({lp::ShiftParam(parse_rat("shifts", xs)), r});
  }
  if (out.empty()) throw lp::InvalidInput("--shifts is empty");
  return out;
}

// ---------------------------------------------------------------- run config

/// Flag values after merging the config file (flags win).
class RunConfig {
 public:
  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::string& get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw lp::InvalidInput("missing required flag --" + key);
    return it->second;
  }
  std::string get_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? get(key) : fallback;
  }
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

void load_config_file(const std::string& path, const std::vector<std::string>& known, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw lp::InvalidInput("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw lp::InvalidInput(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    if (key == "config" || std::find(known.begin(), known.end(), key) == known.end())
      throw lp::InvalidInput(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (!cfg.has(key)) cfg.set(key, value);
  }
}

long precision_of(const RunConfig& cfg) {
  if (!cfg.has("precision")) return lp::precision_from_env();
  const long p = parse_long("precision", cfg.get("precision"));
  if (p < 16) throw lp::InvalidInput("--precision must be >= 16");
  return p;
}

std::vector<Rat> alphas_of(const RunConfig& cfg) {
  std::vector<Rat> alphas;
  if (cfg.has("alphas")) {
    alphas = parse_rat_list("alphas", cfg.get("alphas"));
  } else {
    const unsigned m = parse_unsigned("m", cfg.get("m"), 1);
    for (unsigned i = 1; i <= m; ++i) alphas.emplace_back(static_cast<long>(i));
  }
  if (cfg.has("m") && parse_unsigned("m", cfg.get("m"), 1) != alphas.size())
    throw lp::InvalidInput("--m disagrees with the number of --alphas");
  return alphas;
}

lp::Instance instance_of(const RunConfig& cfg) {
  return lp::Instance(alphas_of(cfg), parse_shifts(cfg.get("shifts")), parse_unsigned("n", cfg.get("n"), 1));
}

lp::CriterionInput criterion_input_of(const RunConfig& cfg) {
  lp::CriterionInput in{alphas_of(cfg), parse_shifts(cfg.get("shifts")), parse_rat("beta", cfg.get("beta")),
                        precision_of(cfg)};
  in.validate();
  return in;
}

lp::RatPoly poly_of(const std::string& flag, const RunConfig& cfg) {
  return lp::RatPoly(parse_rat_list(flag, cfg.get(flag)), lp::Var::z);
}

// ---------------------------------------------------------------- output

struct Outcome {
  Json result;
  std::string summary;
  bool pass = true;
  std::string failed_check;  // set when pass is false
  // Explicit table for CSV output; otherwise the JSON is flattened.
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty()) out.emplace_back(prefix, "[]");
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string render(const Json& envelope, const Outcome& o, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    os << envelope.dump(2) << "\n";
  } else if (format == "csv") {
    std::vector<std::string> header = o.header;
    std::vector<std::vector<std::string>> rows = o.rows;
    if (header.empty()) {
      header = {"key", "value"};
      std::vector<std::pair<std::string, std::string>> flat;
      flatten(envelope, "", flat);
      for (auto& [k, v] : flat) rows.push_back({k, v});
    }
    for (std::size_t c = 0; c < header.size(); ++c) os << (c ? "," : "") << csv_field(header[c]);
    os << "\n";
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(row[c]);
      os << "\n";
    }
  } else {
    std::vector<std::pair<std::string, std::string>> flat;
    flatten(envelope, "", flat);
    for (auto& [k, v] : flat) os << k << ": " << v << "\n";
  }
  return os.str();
}

std::string rstr(const Rat& r) { return r.short_str(); }

std::string yes_no(bool b) { return b ? "pass" : "FAIL"; }

// ---------------------------------------------------------------- commands

Outcome cmd_pade_build(const RunConfig& cfg) {
  const lp::Instance inst = instance_of(cfg);
  const unsigned terms = cfg.has("terms") ? parse_unsigned("terms", cfg.get("terms"), inst.n() + 2) : lp::default_terms(inst);
  const lp::PadeSystem sys = lp::build_system(inst);
  Outcome o;
  o.result = lp::to_json(sys, terms);
  std::ostringstream s;
  s << "built P_0..P_" << inst.rho_m() << " and " << sys.Pnum.size() << " numerators; P_0 = " << sys.P.front();
  o.summary = s.str();
  return o;
}

/// Deterministic sample from the grid m <= 2, d <= 2, r_j <= 2, n <= 3.
lp::Instance sample_instance(std::mt19937_64& rng) {
  auto pick = [&](std::uint64_t k) { return static_cast<unsigned>(rng() % k); };
  static const std::vector<Rat> xs{Rat(0), Rat(1, 3), Rat(1, 2), Rat(2, 3)};
  static const std::vector<Rat> as{Rat(1), Rat(2), Rat(-1), Rat(1, 2), Rat(3), Rat(-2, 3)};
  const unsigned m = 1 + pick(2), d = 1 + pick(2), n = 1 + pick(3);
  std::vector<Rat> alphas;
  while (alphas.size() < m) {
    const Rat a = as[pick(as.size())];
    if (std::find(alphas.begin(), alphas.end(), a) == alphas.end()) alphas.push_back(a);
  }
  std::vector<lp::Shift> shifts;
  while (shifts.size() < d) {
    const Rat x = xs[pick(xs.size())];
    bool fresh = true;
    for (const auto& s : shifts) fresh = fresh && s.x.value() != x;
    if (fresh) shifts.push_back({lp::ShiftParam(x), 1 + pick(2)});
  }
  return lp::Instance(alphas, shifts, n);
}

Outcome cmd_pade_verify(const RunConfig& cfg) {
  Outcome o;
  if (cfg.has("samples")) {
    const unsigned count = parse_unsigned("samples", cfg.get("samples"), 1);
    if (!cfg.has("seed")) throw lp::InvalidInput("--samples requires --seed");
    std::mt19937_64 rng(static_cast<std::uint64_t>(parse_long("seed", cfg.get("seed"))));
    Json reports = Json::array();
    for (unsigned k = 0; k < count; ++k) {
      const lp::OrderReport rep = lp::verify_order(sample_instance(rng));
      reports.push_back(lp::to_json(rep));
    }
    o.result = Json{{"samples", count}, {"reports", reports}};
    o.summary = "pass: " + std::to_string(count) + " sampled instances, every remainder has ord >= n+1";
    return o;
  }
  const lp::OrderReport rep = lp::verify_order(instance_of(cfg));
  o.result = lp::to_json(rep);
  o.pass = rep.pass;
  o.failed_check = "pade_order";
  o.summary = std::string(rep.pass ? "pass" : "FAIL") + ": ord >= " + std::to_string(rep.n + 1) +
              " for every remainder (smallest observed ord " + std::to_string(rep.min_ord) + ")";
  return o;
}

Outcome cmd_det_delta(const RunConfig& cfg) {
  const lp::Instance inst = instance_of(cfg);
  const Rat delta = lp::delta_det(inst);
  Outcome o;
  o.result = Json{{"instance", lp::instance_json(inst)}, {"delta", lp::to_json(delta)}};
  o.summary = rstr(delta);
  return o;
}

Outcome cmd_det_chain(const RunConfig& cfg) {
  const lp::DetChainReport rep = lp::chain_check(instance_of(cfg));
  Outcome o;
  o.result = lp::to_json(rep);
  o.pass = rep.pass();
  o.failed_check = rep.delta_matches ? "det_u_vs_E_det_w" : "delta_vs_c_det_u";
  o.summary = yes_no(rep.pass()) + ": delta=" + rstr(rep.delta) + " c=" + rstr(rep.c_leading) + " det_u=" + rstr(rep.det_u) +
              " E=" + rstr(rep.E) + " det_w=" + rstr(rep.det_w) + " signs=" + std::to_string(rep.sign_delta) + "," +
              std::to_string(rep.sign_u);
  return o;
}

Outcome cmd_det_hermite(const RunConfig& cfg) {
  const std::vector<Rat> x = parse_rat_list("x", cfg.get("x"));
  std::vector<unsigned> r;
  if (cfg.has("r")) {
    for (const auto& part : split(cfg.get("r"), ',')) r.push_back(parse_unsigned("r", part, 1));
  } else {
    r.assign(x.size(), 1);
  }
  const lp::DetPair p = lp::hermite_det_pair(x, r);
  Outcome o;
  o.result = Json{{"x", lp::rats_json(x)}, {"r", r}, {"hermite", lp::to_json(p)}};
  o.pass = p.abs_equal();
  o.failed_check = "hermite_abs";
  o.summary = yes_no(p.abs_equal()) + ": direct=" + rstr(p.direct) + " closed=" + rstr(p.closed) +
              " sign=" + std::to_string(p.sign());
  return o;
}

Outcome cmd_det_m_pair(const RunConfig& cfg) {
  const auto shifts = parse_shifts(cfg.get("shifts"));
  const unsigned n = parse_unsigned("n", cfg.get("n"), 1);
  const lp::MPairReport rep = lp::det_M_pair(shifts, n);
  Outcome o;
  o.result = Json{{"shifts", lp::shifts_json(shifts)}, {"n", n}, {"m_pair", lp::to_json(rep)}};
  o.pass = rep.pass();
  o.failed_check = "det_M_pair";
  o.summary = yes_no(rep.pass()) + ": det M direct=" + rstr(rep.M.direct) + " closed=" + rstr(rep.M.closed) +
              " sign=" + std::to_string(rep.M.sign());
  return o;
}

Json criterion_input_json(const lp::CriterionInput& in) {
  return Json{{"alphas", lp::rats_json(in.alphas)}, {"shifts", lp::shifts_json(in.shifts)}, {"beta", lp::to_json(in.beta)},
              {"place", "archimedean"}, {"precision", in.precision}};
}

Outcome cmd_criterion_eval(const RunConfig& cfg) {
  const lp::CriterionInput in = criterion_input_of(cfg);
  const lp::CriterionReport rep = lp::compute_V(in);
  Outcome o;
  o.result = Json{{"input", criterion_input_json(in)}, {"report", lp::to_json(rep)}};
  o.summary = "V = " + rep.V.to_string(20) + " (" + rep.verdict + ")";
  return o;
}

Outcome cmd_criterion_measure(const RunConfig& cfg) {
  const lp::CriterionInput in = criterion_input_of(cfg);
  const Rat eps = parse_rat("epsilon", cfg.get("epsilon"));
  const lp::CriterionReport rep = lp::compute_measure(in, eps);
  Outcome o;
  o.result = Json{{"input", criterion_input_json(in)}, {"epsilon", lp::to_json(eps)}, {"report", lp::to_json(rep)}};
  o.summary = "mu = " + rep.mu_exponent.to_string(20) + ", C = " + rep.C_constant.to_string(20);
  return o;
}

Outcome cmd_criterion_tables(const RunConfig& cfg) {
  const long prec = precision_of(cfg);
  const auto rows = lp::table_rows(prec);
  Outcome o;
  Json arr = Json::array();
  o.header = {"g", "p", "q", "published_value", "computed_threshold", "computed_error_bound", "difference"};
  for (const auto& r : rows) {
    arr.push_back(lp::to_json(r));
    o.rows.push_back({std::to_string(r.g), std::to_string(r.p), std::to_string(r.q), std::to_string(r.published_value),
                      r.computed.to_string(20), r.computed.rad_string(), r.difference.to_string(20)});
  }
  o.result = Json{{"rows", arr}};
  o.summary = std::to_string(rows.size()) + " rows; computed threshold at (g,p,q)=(2,2,1): " +
              rows.front().computed.to_string(10) + " vs tabulated " + std::to_string(rows.front().published_value);
  return o;
}

Outcome cmd_eval_lerch(const RunConfig& cfg) {
  const long prec = precision_of(cfg);
  const Rat x = parse_rat("x", cfg.get("x"));
  const unsigned s = parse_unsigned("s", cfg.get("s"), 0);
  const Rat z = parse_rat("z", cfg.get("z"));
  const lp::BigFloat v = lp::eval_lerch(x, s, z, prec);
  const int digits = static_cast<int>(static_cast<double>(prec) * std::log10(2.0));
  Outcome o;
  o.result = Json{{"x", lp::to_json(x)}, {"s", s}, {"z", lp::to_json(z)}, {"precision", prec}, {"value", lp::to_json(v, digits)}};
  o.summary = v.to_string(digits);
  return o;
}

Outcome cmd_eval_periodic(const RunConfig& cfg) {
  const long prec = precision_of(cfg);
  const lp::PeriodicSpec spec{poly_of("b", cfg), poly_of("w", cfg)};
  const Rat x = parse_rat("x", cfg.get("x"));
  const unsigned s = parse_unsigned("s", cfg.get("s"), 0);
  const Rat beta = parse_rat("beta", cfg.get("beta"));
  const lp::PartialFractions pf = lp::partial_fractions(spec);
  const lp::BigFloat v = lp::eval_periodic(spec, x, s, beta, prec);
  const int digits = static_cast<int>(static_cast<double>(prec) * std::log10(2.0));
  Outcome o;
  o.result = Json{{"b", lp::to_json(spec.b)},      {"w", lp::to_json(spec.w)},         {"x", lp::to_json(x)},
                  {"s", s},                         {"beta", lp::to_json(beta)},        {"roots", lp::rats_json(pf.roots)},
                  {"gammas", lp::rats_json(pf.gammas)}, {"precision", prec},           {"value", lp::to_json(v, digits)}};
  o.summary = v.to_string(digits);
  return o;
}

Outcome cmd_check_remainder(const RunConfig& cfg) {
  const lp::Instance inst = instance_of(cfg);
  const Rat beta = parse_rat("beta", cfg.get("beta"));
  const lp::RemainderReport rep = lp::remainder_bound_check(inst, beta, precision_of(cfg));
  Outcome o;
  o.result = lp::to_json(rep);
  o.pass = rep.pass;
  o.failed_check = "remainder_bound";
  std::size_t holds = 0;
  for (const auto& c : rep.cells) holds += c.holds && c.routes_agree ? 1 : 0;
  o.summary = yes_no(rep.pass) + ": " + std::to_string(holds) + "/" + std::to_string(rep.cells.size()) +
              " cells satisfy the bound with agreeing evaluation routes";
  return o;
}

Outcome cmd_check_linear_form(const RunConfig& cfg) {
  const lp::CriterionInput in = criterion_input_of(cfg);
  const Rat eps = parse_rat("epsilon", cfg.get("epsilon"));
  const long cap = parse_long("cap", cfg.get_or("cap", "10"));
  const unsigned threads = cfg.has("threads") ? parse_unsigned("threads", cfg.get("threads"), 1) : 0;
  const lp::LinearFormReport rep = lp::bruteforce_linear_form_min(in, eps, cap, in.precision, threads);
  Outcome o;
  o.result = Json{{"input", criterion_input_json(in)}, {"epsilon", lp::to_json(eps)}, {"report", lp::to_json(rep)}};
  o.pass = rep.all_positive;
  o.failed_check = "linear_form_positive";
  std::size_t above = 0;
  for (const auto& lv : rep.levels) above += lv.exceeds ? 1 : 0;
  o.summary = std::string(rep.all_positive ? "pass" : "FAIL") + ": min |form| = " + rep.min_form.to_string(12) + " over " +
              std::to_string(rep.vectors) + " vectors; " + std::to_string(above) + "/" + std::to_string(rep.levels.size()) +
              " height levels above C*H^(1-mu)";
  return o;
}

struct Command {
  std::string group, action, help;
  std::vector<std::string> flags;
  std::function<Outcome(const RunConfig&)> run;
  std::string default_format = "json";
};

const std::vector<std::string> kInstanceFlags{"m", "alphas", "shifts", "n"};

std::vector<std::string> with(std::vector<std::string> base, std::initializer_list<std::string> extra) {
  base.insert(base.end(), extra);
  return base;
}

std::vector<Command> commands() {
  return {
      {"pade", "build", "Build P_l and P_{l,i,s} with remainder prefixes", with(kInstanceFlags, {"terms"}), cmd_pade_build},
      {"pade", "verify", "Verify degrees and the order condition", with(kInstanceFlags, {"samples"}), cmd_pade_verify},
      {"det", "delta", "Exact determinant Delta", kInstanceFlags, cmd_det_delta},
      {"det", "chain", "Check |Delta| = |c det u| and |det u| = |E det w|", kInstanceFlags, cmd_det_chain},
      {"det", "hermite", "Confluent Vandermonde determinant, direct vs closed form", {"x", "r"}, cmd_det_hermite},
      {"det", "m-pair", "det M direct vs closed form", {"shifts", "n"}, cmd_det_m_pair},
      {"criterion", "eval", "Evaluate V and its term breakdown", {"m", "alphas", "shifts", "beta"}, cmd_criterion_eval},
      {"criterion", "measure", "Measure exponent mu and constant C", {"m", "alphas", "shifts", "beta", "epsilon"},
       cmd_criterion_measure},
      {"criterion", "tables", "Tabulated thresholds next to computed ones", {}, cmd_criterion_tables, "csv"},
      {"eval", "lerch", "Phi_s(x, z) with a rigorous error bound", {"x", "s", "z"}, cmd_eval_lerch},
      {"eval", "periodic", "Periodic-coefficient Lerch function at beta", {"b", "w", "x", "s", "beta"}, cmd_eval_periodic},
      {"check", "remainder-bound", "Remainder estimate on every cell", with(kInstanceFlags, {"beta"}), cmd_check_remainder},
      {"check", "linear-form", "Exhaustive small-height linear-form search",
       {"m", "alphas", "shifts", "beta", "epsilon", "cap", "threads"}, cmd_check_linear_form},
  };
}

const std::vector<std::string> kCommonFlags{"precision", "output", "format", "seed"};

void emit_error(const std::string& kind, const std::string& check, const std::string& message) {
  Json j{{"error", kind}};
  if (!check.empty()) j["check"] = check;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Pade approximants and linear-independence criteria for Lerch functions"};
  app.require_subcommand(1);
  const std::vector<Command> cmds = commands();
  std::map<std::string, CLI::App*> groups;
  struct Leaf {
    const Command* cmd;
    CLI::App* app;
    std::map<std::string, CLI::Option*> opts;
    std::map<std::string, std::string> storage;
    std::string config_path;
  };
  std::vector<Leaf> leaves;
  leaves.reserve(cmds.size());
  for (const auto& c : cmds) {
    if (!groups.count(c.group)) {
      groups[c.group] = app.add_subcommand(c.group, c.group + " commands");
      groups[c.group]->require_subcommand(1);
    }
    leaves.push_back({&c, groups[c.group]->add_subcommand(c.action, c.help), {}, {}, {}});
  }
  for (auto& leaf : leaves) {
    std::vector<std::string> flags = leaf.cmd->flags;
    flags.insert(flags.end(), kCommonFlags.begin(), kCommonFlags.end());
    for (const auto& f : flags)
      leaf.opts[f] = leaf.app->add_option("--" + f, leaf.storage[f]);
    leaf.app->add_option("--config", leaf.config_path, "key=value file; flags win on conflict");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("invalid_input", "", e.what());
    return 2;
  }

  for (auto& leaf : leaves) {
    if (!leaf.app->parsed()) continue;
    const Command& cmd = *leaf.cmd;
    try {
      RunConfig cfg;
      for (const auto& [name, opt] : leaf.opts)
        if (opt->count() > 0) cfg.set(name, leaf.storage[name]);
      if (!leaf.config_path.empty()) {
        std::vector<std::string> known;
        for (const auto& [name, opt] : leaf.opts) known.push_back(name);
        load_config_file(leaf.config_path, known, cfg);
      }
      const std::string format = cfg.get_or("format", cmd.default_format);
      if (format != "json" && format != "csv" && format != "text")
        throw lp::InvalidInput("--format must be json, csv or text");

      Outcome o = cmd.run(cfg);
      Json config = Json::object();
      for (const auto& [k, v] : cfg.values())
        if (k != "output" && k != "format") config[k] = v;
      config["precision_bits"] = precision_of(cfg);
      Json envelope{{"command", cmd.group + " " + cmd.action}, {"config", config}, {"status", o.pass ? "pass" : "fail"},
                    {"result", o.result}};
      const std::string text = render(envelope, o, format);
      const std::string out = cfg.get_or("output", "");
      if (out == "-") {
        std::cout << text;
        std::cerr << o.summary << "\n";
      } else {
        if (!out.empty()) {
          std::ofstream f(out, std::ios::binary);
          if (!f) throw lp::InvalidInput("cannot write output file " + out);
          f << text;
        }
        std::cout << o.summary << "\n";
      }
      if (!o.pass) {
        emit_error("verification_failure", o.failed_check, o.summary);
        return 1;
      }
      return 0;
    } catch (const lp::VerificationFailure& e) {
      emit_error("verification_failure", e.check(), e.what());
      return 1;
    } catch (const lp::InvalidInput& e) {
      emit_error("invalid_input", "", e.what());
      return 2;
    } catch (const std::exception& e) {
      emit_error("internal_error", "", e.what());
      return 1;
    }
  }
  emit_error("invalid_input", "", "no command given");
  return 2;
}
