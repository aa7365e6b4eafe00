// Command-line front end: validation, parameters and distance, error-set
// correctability, EACQ representability, the four code constructions, and
// the built-in reproduction suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "eaoa/catalog.hpp"
#include "eaoa/code_io.hpp"
#include "eaoa/construct.hpp"
#include "eaoa/correct.hpp"
#include "eaoa/distance.hpp"
#include "eaoa/eacq.hpp"
#include "eaoa/reproduce.hpp"

using nlohmann::json;
using namespace eaoa;

namespace {

constexpr const char* kJsonSchemaVersion = "1";

// Exit codes: 0 success / affirmative, 1 negative verdict, 2 input error.
enum ExitCode { kOk = 0, kNegative = 1, kInputError = 2 };

struct Options {
  bool json = false;
  unsigned threads = 0;
};

unsigned env_threads() {
  if (const char* env = std::getenv("EAOA_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return unsigned(v);
  }
  return 0;  // hardware concurrency
}

EaoaqecCode load_code(const std::string& spec) {
  if (spec.rfind("catalog:", 0) == 0) return catalog_code(spec.substr(8));
  return read_code_file(spec);
}

json params_json(const CodeParameters& p) {
  json j{{"n", p.n}, {"k", p.k}, {"r", p.r}, {"e", p.e}, {"c_b", p.c_b}};
  if (p.d)
    j["d"] = *p.d;
  else if (p.d_exceeds_cutoff)
    j["d_exceeds_cutoff"] = true;
  return j;
}

json op_json(const PauliOperator& op, std::size_t ebits) {
  return json{{"compact", op.str()}, {"cells", format_cells(op, ebits)}};
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json) {
    json out = j;
    out["schema_version"] = kJsonSchemaVersion;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_validate(const Options& opt, const std::string& code_spec) {
  EaoaqecCode code = load_code(code_spec);
  ValidationReport rep = validate(code);
  json checks = json::array();
  std::ostringstream text;
  for (const ValidationCheck& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    text << (c.passed ? "pass" : "FAIL") << "  " << c.name
         << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
  }
  text << (rep.ok() ? "valid" : "invalid") << "\n";
  emit(opt, json{{"command", "validate"}, {"valid", rep.ok()}, {"checks", checks}},
       text.str());
  return rep.ok() ? kOk : kNegative;
}

int cmd_params(const Options& opt, const std::string& code_spec,
               const std::string& mode_name, int cutoff) {
  EaoaqecCode code = load_code(code_spec);
  CodeParameters p = parameters(code);
  json j{{"command", "params"}};
  if (!mode_name.empty()) {
    DistanceMode mode = mode_name == "bare"        ? DistanceMode::Bare
                        : mode_name == "noisy-bob" ? DistanceMode::NoisyBob
                                                   : DistanceMode::Dressed;
    int w = cutoff > 0 ? cutoff : default_cutoff(code.n);
    DistanceReport dr = distance(code, mode, w, opt.threads);
    p.d = dr.d;
    p.d_exceeds_cutoff = !dr.d.has_value();
    j["distance"] = {{"mode", mode_name},
                     {"cutoff", dr.cutoff},
                     {"exceeds_cutoff", !dr.d.has_value()}};
    if (dr.d) {
      // Witnesses live on n qubits, except in noisy-bob mode (n+e).
      std::size_t ebits = dr.witness->num_qubits() == code.n + code.e ? code.e : 0;
      j["distance"]["d"] = *dr.d;
      j["distance"]["witness"] = op_json(*dr.witness, ebits);
      j["distance"]["branch"] = dr.branch;
    }
  }
  j["parameters"] = params_json(p);
  j["parameters"]["formatted"] = p.str();
  std::ostringstream text;
  text << p.str() << "\n";
  if (p.d_exceeds_cutoff) text << "distance exceeds cutoff\n";
  emit(opt, j, text.str());
  return kOk;
}

int cmd_correctable(const Options& opt, const std::string& code_spec,
                    const std::string& errors_path, const std::string& framework) {
  EaoaqecCode code = load_code(code_spec);
  std::vector<PauliOperator> errors = read_error_set_file(errors_path, code.n);
  if (errors.empty()) throw IoError(0, "the error file lists no operators");
  std::string used = framework;
  CorrectabilityVerdict v;
  if (framework == "eaoqec") {
    v = eaoqec_correctable(code, errors);
  } else if (framework == "eacq") {
    v = eacq_correctable(code, errors);
  } else if (framework == "eaqec") {
    if (!code.gauge_pairs.empty() || code.transversal.size() > 1)
      throw CodeError("the eaqec criterion needs a trivial gauge group and transversal");
    v = ea_correctable(code, errors);
  } else {  // auto / eaoaqec: the general criterion
    used = "eaoaqec";
    v = ea_correctable(code, errors);
  }
  json j{{"command", "correctable"},
         {"framework", used},
         {"correctable", v.correctable}};
  std::ostringstream text;
  if (v.correctable) {
    text << "correctable (" << used << ")\n";
  } else {
    text << "not correctable (" << used << ")\n";
    if (v.witness) {
      text << "witness: E_" << v.witness->a << "^dag E_" << v.witness->b << " = "
           << v.witness->product.str() << "  [" << v.witness->violated_branch << "]\n";
      j["witness"] = {{"a", v.witness->a},
                      {"b", v.witness->b},
                      {"product", op_json(v.witness->product, 0)},
                      {"violated_branch", v.witness->violated_branch}};
    }
  }
  emit(opt, j, text.str());
  return v.correctable ? kOk : kNegative;
}

int cmd_eacq_check(const Options& opt, const std::string& code_spec) {
  EaoaqecCode code = load_code(code_spec);
  RepresentabilityResult r = is_eacq_representable(code);
  json j{{"command", "eacq-check"}, {"representable", r.representable}};
  std::ostringstream text;
  if (r.representable) {
    text << "representable\n";
    json q = json::array(), cg = json::array(), ct = json::array();
    text << "quantum stabilizer generators:\n";
    for (const PauliOperator& g : r.split->quantum_gens) {
      text << "  " << g.str() << "\n";
      q.push_back(op_json(g, 0));
    }
    text << "classical stabilizer generators (with transversal certificates):\n";
    for (std::size_t i = 0; i < r.split->classical_gens.size(); ++i) {
      text << "  " << r.split->classical_gens[i].str() << "   <- "
           << r.split->classical_transversal[i].str() << "\n";
      cg.push_back(op_json(r.split->classical_gens[i], 0));
      ct.push_back(op_json(r.split->classical_transversal[i], 0));
    }
    j["split"] = {{"quantum_gens", q},
                  {"classical_gens", cg},
                  {"classical_transversal", ct}};
  } else {
    text << "not representable (" << r.obstruction << ")\n" << r.detail << "\n";
    j["obstruction"] = r.obstruction;
    j["detail"] = r.detail;
  }
  emit(opt, j, text.str());
  return r.representable ? kOk : kNegative;
}

const char* status_name(HypothesisCheck::Status s) {
  switch (s) {
    case HypothesisCheck::Status::Pass: return "pass";
    case HypothesisCheck::Status::Fail: return "fail";
    case HypothesisCheck::Status::Guaranteed: return "guaranteed";
    default: return "inconclusive";
  }
}

int cmd_construct(const Options& opt, const std::string& kind,
                  const std::string& code_spec, ConstructionRequest req,
                  const std::string& transversal_path, const std::string& gauge_path,
                  const std::string& out_path) {
  EaoaqecCode code = load_code(code_spec);
  if (!transversal_path.empty()) {
    req.policy = TransversalPolicy::ExplicitList;
    req.explicit_transversal = read_error_set_file(transversal_path, code.n);
  }
  if (!gauge_path.empty()) {
    std::vector<PauliOperator> flat =
        read_error_set_file(gauge_path, code.n + code.e);
    if (flat.size() % 2 != 0)
      throw IoError(0, "the gauge file must list (x, z) pairs of lines");
    for (std::size_t i = 0; i + 1 < flat.size(); i += 2)
      req.repaired_gauge.push_back(SymplecticPair{flat[i], flat[i + 1]});
  }
  req.threads = opt.threads;
  ConstructionResult r;
  if (kind == "gf")
    r = gauge_fix(code, req);
  else if (kind == "cq")
    r = clean_qubits(code, req);
  else if (kind == "css-cq")
    r = css_clean_qubits(code, req);
  else if (kind == "eagf")
    r = ea_gauge_fix(code, req);
  else
    r = general_gauge_fix(code, req);

  std::ostringstream code_text;
  write_code(code_text, r.code);
  if (!out_path.empty()) write_code_file(out_path, r.code);

  json hyp = json::array();
  std::ostringstream text;
  text << "before: " << r.before.str() << "\nafter:  " << r.after.str() << "\n";
  for (const HypothesisCheck& h : r.hypothesis_report) {
    text << "hypothesis " << h.name << ": " << status_name(h.status)
         << (h.detail.empty() ? "" : "  (" + h.detail + ")") << "\n";
    hyp.push_back({{"name", h.name},
                   {"status", status_name(h.status)},
                   {"detail", h.detail}});
  }
  if (r.coset_collisions)
    text << "transversal coset collisions dropped: " << r.coset_collisions << "\n";
  if (!r.ebit_qubits.empty()) {
    text << "ebit qubits (1-based):";
    for (std::size_t q : r.ebit_qubits) text << " " << q + 1;
    text << "\n";
  }
  if (out_path.empty())
    text << code_text.str();
  else
    text << "result written to " << out_path << "\n";

  json j{{"command", "construct"},
         {"construction", kind},
         {"before", params_json(r.before)},
         {"after", params_json(r.after)},
         {"hypothesis_report", hyp},
         {"coset_collisions", r.coset_collisions},
         {"code_file", code_text.str()}};
  if (!r.ebit_qubits.empty()) j["ebit_qubits"] = r.ebit_qubits;
  emit(opt, j, text.str());
  return kOk;
}

int cmd_reproduce(const Options& opt, const std::vector<std::string>& ids) {
  std::vector<CriterionResult> results = run_criteria(ids, opt.threads);
  bool all_ok = true;
  json arr = json::array();
  std::ostringstream text;
  for (const CriterionResult& r : results) {
    all_ok = all_ok && r.passed;
    text << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  -  " << r.detail << "\n";
    arr.push_back({{"id", r.id}, {"passed", r.passed}, {"detail", r.detail}});
  }
  text << (all_ok ? "all reproductions passed" : "reproduction failures") << "\n";
  emit(opt, json{{"command", "reproduce"}, {"passed", all_ok}, {"results", arr}},
       text.str());
  return all_ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entanglement-assisted operator-algebra code toolkit"};
  app.require_subcommand(1);

  Options opt;
  opt.threads = env_threads();
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--threads", opt.threads,
                 "enumeration threads (default: EAOA_THREADS or all cores)");

  std::string code_spec, mode_name, errors_path, framework = "auto";
  std::string transversal_path, gauge_path, out_path, construct_kind;
  int cutoff = 0;
  std::vector<std::string> repro_ids;
  ConstructionRequest req;
  std::vector<std::size_t> pairs1, qubits1;

  auto* validate_cmd = app.add_subcommand("validate", "check a code's invariants");
  validate_cmd->add_option("code", code_spec, "code file or catalog:NAME")->required();

  auto* params_cmd = app.add_subcommand("params", "print [[n,k(,d);r,e,c_b]]");
  params_cmd->add_option("code", code_spec)->required();
  params_cmd->add_option("--distance", mode_name, "dressed|bare|noisy-bob")
      ->check(CLI::IsMember({"dressed", "bare", "noisy-bob"}));
  params_cmd->add_option("--cutoff", cutoff, "distance enumeration cutoff");

  auto* corr_cmd = app.add_subcommand("correctable", "test an error set");
  corr_cmd->add_option("code", code_spec)->required();
  corr_cmd->add_option("--errors", errors_path, "file with one operator per line")
      ->required();
  corr_cmd->add_option("--framework", framework)
      ->check(CLI::IsMember({"auto", "eaqec", "eaoqec", "eacq", "eaoaqec"}));

  auto* eacq_cmd = app.add_subcommand("eacq-check", "EACQ representability");
  eacq_cmd->add_option("code", code_spec)->required();

  auto* cons_cmd = app.add_subcommand("construct", "derive a new code");
  cons_cmd->add_option("kind", construct_kind, "gf|cq|css-cq|eagf|ggf")
      ->required()
      ->check(CLI::IsMember({"gf", "cq", "css-cq", "eagf", "ggf"}));
  cons_cmd->add_option("code", code_spec)->required();
  cons_cmd->add_option("--pairs", pairs1, "1-based gauge pair indices (gf/eagf)");
  cons_cmd->add_flag("--swap-roles", req.swap_roles,
                     "gf: x members join the stabilizer instead of z members");
  cons_cmd->add_option("--qubits", qubits1, "1-based ebit qubit choices (cq)");
  cons_cmd->add_option("--ebits", req.ebits, "ebit count (css-cq)");
  cons_cmd->add_option("--yi", req.y_i, "ggf: pairs converted to stabilizer/transversal");
  cons_cmd->add_option("--ys", req.y_s, "ggf: pairs converted with ebits");
  cons_cmd->add_option("--repaired-gauge", gauge_path,
                       "ggf: file of replacement gauge (x, z) line pairs");
  cons_cmd->add_option("--transversal", transversal_path,
                       "explicit transversal file (default: full product)");
  cons_cmd->add_option("--cutoff", req.hypothesis_cutoff, "hypothesis-check cutoff");
  bool no_distance = false;
  cons_cmd->add_flag("--no-distance-check", no_distance,
                     "skip distance work in the hypothesis report");
  cons_cmd->add_option("-o,--output", out_path, "write the resulting code file here");

  auto* repro_cmd = app.add_subcommand("reproduce", "run built-in reproductions");
  repro_cmd->add_option("ids", repro_ids, "criterion ids, or 'all'")
      ->expected(-1)
      ->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate_cmd)) return cmd_validate(opt, code_spec);
    if (app.got_subcommand(params_cmd))
      return cmd_params(opt, code_spec, mode_name, cutoff);
    if (app.got_subcommand(corr_cmd))
      return cmd_correctable(opt, code_spec, errors_path, framework);
    if (app.got_subcommand(eacq_cmd)) return cmd_eacq_check(opt, code_spec);
    if (app.got_subcommand(cons_cmd)) {
      for (std::size_t p : pairs1) {
        if (p == 0) throw CodeError("pair indices are 1-based");
        req.pair_indices.push_back(p - 1);
      }
      for (std::size_t q : qubits1) {
        if (q == 0) throw CodeError("qubit indices are 1-based");
        req.e_qubits.push_back(q - 1);
      }
      req.check_distances = !no_distance;
      return cmd_construct(opt, construct_kind, code_spec, req, transversal_path,
                           gauge_path, out_path);
    }
    if (app.got_subcommand(repro_cmd)) return cmd_reproduce(opt, repro_ids);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
