// Command-line front end: compute Hall-Littlewood P-polynomials of types B
// and C for regular weights by the tableau and alcove-walk formulas, verify
// the per-fiber compression between them, and run the related identity and
// counting checks.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "hlbc/characters.hpp"
#include "hlbc/formula.hpp"

using namespace hlbc;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string type_str = "C";
  int n = 0;
  std::string lambda_str;
  std::string alpha_str;
  std::string format = "text";
  int threads = 0;
  std::size_t max_pairs = 10'000'000;
  bool check_levels = false;

  LieType type() const { return lie_type_from_string(type_str); }

  EnumOptions enum_options() const {
    EnumOptions opt;
    opt.threads = threads;
    opt.max_pairs = max_pairs;
    opt.check_levels = check_levels;
    return opt;
  }
};

std::vector<int> parse_parts(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

int default_threads() {
  if (const char* env = std::getenv("HLBC_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Normalizes the weight input (parts, or fundamental coefficients for type
// B) and validates regularity.
std::vector<int> resolve_parts(const RunConfig& cfg) {
  std::vector<int> parts;
  if (!cfg.alpha_str.empty()) {
    if (cfg.type() != LieType::B)
      throw std::invalid_argument("--alpha is only meaningful for type B");
    const std::vector<int> alpha = parse_parts(cfg.alpha_str);
    if (static_cast<int>(alpha.size()) != cfg.n)
      throw std::invalid_argument("--alpha needs exactly n entries");
    for (int k = cfg.n; k >= 1; --k)
      for (int c = 0; c < alpha[static_cast<std::size_t>(k) - 1]; ++c) parts.push_back(k);
  } else {
    parts = parse_parts(cfg.lambda_str);
  }
  if (parts.empty()) throw std::invalid_argument("missing weight (use -l or --alpha)");
  if (!is_regular(cfg.type(), cfg.n, parts))
    throw std::invalid_argument("lambda not regular for type " + cfg.type_str);
  return parts;
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool instance_required = true) {
  auto* t = cmd->add_option("-t,--type", cfg.type_str, "Lie type (B or C)");
  auto* n = cmd->add_option("-n,--rank", cfg.n, "rank")->check(CLI::PositiveNumber);
  if (instance_required) {
    t->required();
    n->required();
  }
  cmd->add_option("-l,--lambda", cfg.lambda_str, "weight as a comma-separated partition");
  cmd->add_option("--alpha", cfg.alpha_str,
                  "type B weight as fundamental-coefficient list (alternative to -l)");
  cmd->add_option("--format", cfg.format, "output format (text or json)")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--threads", cfg.threads, "worker threads (default: machine parallelism)");
  cmd->add_option("--max-pairs", cfg.max_pairs, "abort enumerations beyond this many walks");
  cmd->add_flag("--check-levels", cfg.check_levels,
                "assert the hyperplane-level/content invariant during enumeration");
}

json pair_json(const AdmissiblePair& p) {
  json j;
  std::vector<int> w;
  for (Letter x : p.w.window) w.push_back(x.val);
  j["w"] = w;
  j["J"] = p.positions;
  j["a"] = p.t_exponent();
  j["b"] = p.fold_count();
  j["weight"] = p.weight().d;
  return j;
}

json poly_meta(const RunConfig& cfg, const std::vector<int>& parts) {
  json j;
  j["type"] = cfg.type_str;
  j["n"] = cfg.n;
  j["parts"] = parts;
  return j;
}

int cmd_compute(RunConfig& cfg, const std::string& method, bool emit_pairs,
                bool emit_fillings) {
  const std::vector<int> parts = resolve_parts(cfg);
  const LambdaChain chain = lambda_chain(cfg.type(), cfg.n, parts);
  const HatShape shape = shape_of(chain);

  if (emit_pairs) {
    for (const AdmissiblePair& p : enumerate_admissible(chain, cfg.enum_options()))
      std::cout << pair_json(p).dump() << "\n";
    return kExitOk;
  }
  if (emit_fillings) {
    for (const Filling& f : enumerate_fillings(shape))
      std::cout << filling_to_json(f).dump() << "\n";
    return kExitOk;
  }

  HLPoly result;
  bool agree = true;
  if (method == "tableau") {
    result = tableau_evaluate(shape);
  } else if (method == "alcove") {
    result = alcove_evaluate(chain, cfg.enum_options());
  } else {
    const HLPoly a = alcove_evaluate(chain, cfg.enum_options());
    const HLPoly t = tableau_evaluate(shape);
    agree = a == t;
    result = t;
  }

  if (cfg.format == "json") {
    json j = poly_meta(cfg, parts);
    j["method"] = method;
    j["terms"] = result.to_json();
    if (method == "both") j["agree"] = agree;
    std::cout << j.dump(2) << "\n";
  } else {
    if (method == "both")
      std::cout << (agree ? "methods agree\n" : "METHOD DISAGREEMENT\n");
    std::cout << result.str() << "\n";
  }
  return agree ? kExitOk : kExitVerifyFailed;
}

int cmd_dump_chain(RunConfig& cfg) {
  const std::vector<int> parts = resolve_parts(cfg);
  std::cout << dump_chain(lambda_chain(cfg.type(), cfg.n, parts));
  return kExitOk;
}

int cmd_kn(RunConfig& cfg, bool dump) {
  const std::vector<int> parts = resolve_parts(cfg);
  const LambdaChain chain = lambda_chain(cfg.type(), cfg.n, parts);
  const HatShape shape = shape_of(chain);
  const std::vector<Filling> kn = kn_fillings(shape);
  const long long dim = dimension(cfg.type(), cfg.n, chain.lambda);
  const bool match = static_cast<long long>(kn.size()) == dim;
  if (cfg.format == "json") {
    json j = poly_meta(cfg, parts);
    j["count"] = kn.size();
    j["dimension"] = dim;
    j["match"] = match;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "fillings with N=0: " << kn.size() << "\n";
    std::cout << "dimension oracle:  " << dim << "\n";
    std::cout << (match ? "match\n" : "MISMATCH\n");
    if (dump)
      for (const Filling& f : kn) std::cout << render_filling(shape, f) << "\n";
  }
  return match ? kExitOk : kExitVerifyFailed;
}

json fiber_json(const FiberReport& fr) {
  json j;
  j["cols"] = filling_to_json(fr.filling);
  j["size"] = fr.fiber_size;
  j["sum"] = fr.sum.c;
  j["predicted"] = fr.predicted.c;
  j["match"] = fr.match;
  return j;
}

struct CheckOutcome {
  bool pass = true;
  std::string detail;
};

int run_checks(RunConfig& cfg, std::vector<std::string> checks, bool fiber_table) {
  // instance-independent checks may run without a weight
  const bool instance_free =
      cfg.lambda_str.empty() && cfg.alpha_str.empty() &&
      std::all_of(checks.begin(), checks.end(),
                  [](const std::string& c) { return c == "chain" || c == "identities"; });

  json report;
  std::map<std::string, CheckOutcome> outcomes;
  std::optional<CompressionReport> comp;

  std::vector<int> parts;
  std::optional<LambdaChain> chain;
  std::optional<HatShape> shape;
  if (!instance_free) {
    parts = resolve_parts(cfg);
    chain = lambda_chain(cfg.type(), cfg.n, parts);
    shape = shape_of(*chain);
    report = poly_meta(cfg, parts);
  }

  auto need_compression = [&]() -> const CompressionReport& {
    if (!comp) comp = verify_compression(*chain, cfg.enum_options());
    return *comp;
  };

  for (const std::string& check : checks) {
    CheckOutcome out;
    if (check == "chain") {
      if (instance_free) {
        // the built-in catalogue: every regular weight with small parts
        for (LieType type : {LieType::B, LieType::C})
          for (int n = 1; n <= 3 && out.pass; ++n) {
            std::vector<std::vector<int>> cat;
            if (type == LieType::C) {
              if (n == 1) cat = {{1}, {2}};
              if (n == 2) cat = {{2, 1}, {3, 1}, {3, 2}};
              if (n == 3) cat = {{3, 2, 1}, {4, 2, 1}, {4, 3, 1}, {4, 3, 2}};
            } else {
              if (n == 1) cat = {{1}, {1, 1}};
              if (n == 2) cat = {{2, 1}, {2, 2, 1}, {2, 1, 1}};
              if (n == 3) cat = {{3, 2, 1}, {3, 3, 2, 1}, {3, 2, 2, 1, 1}};
            }
            for (const auto& p : cat)
              if (const auto v = validate_chain(lambda_chain(type, n, p))) {
                out.pass = false;
                out.detail = v->rule + ": " + v->detail;
              }
          }
      } else if (const auto v = validate_chain(*chain)) {
        out.pass = false;
        out.detail = v->rule + ": " + v->detail;
      }
    } else if (check == "fibers") {
      const CompressionReport& rep = need_compression();
      out.pass = rep.fibers_match && rep.image_equals_fillings;
      if (!out.pass && rep.first_failure) out.detail = *rep.first_failure;
    } else if (check == "weight") {
      const CompressionReport& rep = need_compression();
      out.pass = rep.weights_match;
      if (!out.pass && rep.first_failure) out.detail = *rep.first_failure;
    } else if (check == "character") {
      const HLPoly p = tableau_evaluate(*shape);
      const bool at0 =
          p.specialize_t(0) == weyl_character(cfg.type(), cfg.n, chain->lambda).specialize_t(0);
      const bool at1 =
          p.specialize_t(1) == orbit_sum(cfg.type(), cfg.n, chain->lambda).specialize_t(0);
      out.pass = at0 && at1;
      if (!out.pass) out.detail = at0 ? "t=1 vs orbit sum" : "t=0 vs character";
    } else if (check == "hhl") {
      if (cfg.type() == LieType::B) {
        out.detail = "skipped: the attack-statistic comparison applies to type C";
      } else {
        for (const Filling& f : enumerate_fillings(*shape)) {
          bool special = true;
          for (std::size_t c = 0; c + 1 < f.size() && special; ++c)
            if (!transition_decompose(f[c], f[c + 1], shape->cols[c], shape->type, shape->n)
                     .cycle.empty())
              special = false;
          if (!special) continue;
          // one unprimed representative per group
          std::vector<Column> tau;
          for (std::size_t c = 0; c < f.size(); ++c)
            if (shape->cols[c].kind == SegKind::Unprimed && shape->cols[c].index == 1)
              tau.push_back(f[c]);
          const InvStats s = inversion_stats(tau, shape->n);
          if (stat_N(*shape, f) != s.cinv || stat_des(*shape, f) != s.des) {
            out.pass = false;
            out.detail = "attack statistics differ on a cycle-free filling";
            break;
          }
        }
      }
    } else if (check == "identities") {
      const IdentityReport rep = identity_suite(std::min(cfg.n > 0 ? cfg.n : 3, 3), 200, 1u);
      out.pass = rep.ok;
      out.detail = rep.first_failure;
    } else {
      throw std::invalid_argument("unknown check '" + check + "'");
    }
    outcomes[check] = out;
  }

  bool all_pass = true;
  json jchecks;
  for (const auto& [name, out] : outcomes) {
    jchecks[name] = out.pass ? "pass" : "fail: " + out.detail;
    all_pass = all_pass && out.pass;
  }
  report["checks"] = jchecks;
  if (comp) {
    report["fillings"] = comp->filling_count;
    report["pairs"] = comp->pair_count;
    report["factor"] = comp->factor;
    if (fiber_table || cfg.format == "json") {
      json fibers = json::array();
      for (const FiberReport& fr : comp->fibers) fibers.push_back(fiber_json(fr));
      report["fibers"] = fibers;
    }
  }

  if (cfg.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& [name, out] : outcomes) {
      std::cout << name << ": " << (out.pass ? "pass" : "FAIL") << "\n";
      if (!out.pass && !out.detail.empty()) std::cout << "  " << out.detail << "\n";
    }
    if (comp) {
      std::cout << "fillings: " << comp->filling_count << "\npairs: " << comp->pair_count
                << "\nfactor: " << comp->factor << "\n";
      if (fiber_table)
        for (const FiberReport& fr : comp->fibers)
          std::cout << "fiber size " << fr.fiber_size << "  sum " << fr.sum.str() << "  "
                    << (fr.match ? "ok" : "MISMATCH") << "\n";
    }
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall-Littlewood P-polynomials of types B and C"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.threads = default_threads();

  std::string method = "both";
  bool emit_pairs = false, emit_fillings = false, kn_dump = false;
  std::string checks_str = "chain,fibers,weight,character,hhl,identities";

  CLI::App* compute = app.add_subcommand("compute", "evaluate the polynomial");
  add_common(compute, cfg);
  compute->add_option("--method", method, "tableau, alcove, or both")
      ->check(CLI::IsMember({"tableau", "alcove", "both"}));
  compute->add_flag("--emit-pairs", emit_pairs, "stream walk terms as JSON lines and exit");
  compute->add_flag("--emit-fillings", emit_fillings,
                    "stream fillings as JSON lines and exit");

  CLI::App* verify = app.add_subcommand("verify", "run consistency checks");
  add_common(verify, cfg, false);
  verify->add_option("--checks", checks_str,
                     "comma list from chain,fibers,weight,character,hhl,identities");

  CLI::App* kn = app.add_subcommand("kn", "count the fillings surviving at t=0");
  add_common(kn, cfg);
  kn->add_flag("--dump", kn_dump, "also print the surviving fillings");

  CLI::App* dump = app.add_subcommand("dump-chain", "print the chain, one root per line");
  add_common(dump, cfg);

  CLI::App* fibers = app.add_subcommand("fibers", "per-fiber compression report");
  add_common(fibers, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(cfg, method, emit_pairs, emit_fillings);
    if (dump->parsed()) return cmd_dump_chain(cfg);
    if (kn->parsed()) return cmd_kn(cfg, kn_dump);
    if (fibers->parsed()) return run_checks(cfg, {"fibers", "weight"}, true);
    if (verify->parsed()) {
      std::vector<std::string> checks;
      std::stringstream ss(checks_str);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) checks.push_back(item);
      return run_checks(cfg, checks, false);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
