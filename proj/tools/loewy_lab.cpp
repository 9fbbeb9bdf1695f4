// loewy_lab: queries on the block of lambda_0 for SL(n+1).
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "loewy/chardim.hpp"
#include "loewy/ext.hpp"
#include "loewy/loewy.hpp"
#include "loewy/projective.hpp"
#include "loewy/report.hpp"
#include "loewy/verify.hpp"

using namespace loewy;
using nlohmann::json;

namespace {

struct Options {
  int n = 0;
  long p = 0;
  int i = -1;
  int j = -1;
  std::string nu;
  std::string nu2;
  std::string eps;
  std::string format = "text";
  std::string series = "rad";
  bool full = false;
};

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<Integer> parse_integers(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty coordinate in '" + text + "'");
    item = item.substr(b, e - b + 1);
    const std::size_t start = (item[0] == '-' || item[0] == '+') ? 1 : 0;
    if (start == item.size() || item.find_first_not_of("0123456789", start) != std::string::npos) {
      throw InputError("not an integer: '" + item + "'");
    }
    out.emplace_back(item[0] == '+' ? item.substr(1) : item);
  }
  return out;
}

Weight parse_nu(const std::string& text, int n, const char* flag) {
  if (text.empty()) return Weight::zero(n);
  auto coords = parse_integers(text);
  if (static_cast<int>(coords.size()) != n) {
    throw InputError(std::string(flag) + " needs " + std::to_string(n) + " fundamental-weight coordinates");
  }
  return Weight(std::move(coords));
}

Weight translation(const Options& o) {
  if (!o.eps.empty()) {
    if (!o.nu.empty()) throw InputError("--nu and --eps are exclusive");
    const auto coeffs = parse_integers(o.eps);
    if (static_cast<int>(coeffs.size()) != o.n + 1) {
      throw InputError("--eps needs " + std::to_string(o.n + 1) + " coefficients");
    }
    return from_eps(o.n, std::span<const Integer>(coeffs));
  }
  return parse_nu(o.nu, o.n, "--nu");
}

int require_i(const Options& o) {
  if (o.i < 0 || o.i > o.n) throw InputError("--i must lie in [0, n]");
  return o.i;
}

bool as_json(const Options& o) { return o.format == "json"; }

std::size_t limit(const Options& o) { return o.full ? 0 : kDefaultLabelLimit; }

std::string verma_name(const char* module, int i, const Weight& nu) {
  return std::string(module) + "(lambda_" + std::to_string(i) + " + p" + nu.to_string() + ")";
}

// ---------------------------------------------------------------- commands

int cmd_block(const Options& o, const BlockContext& ctx) {
  if (as_json(o)) {
    json rows = json::array();
    for (int i = 0; i <= ctx.n(); ++i) {
      json eps = json::array();
      for (const auto& e : to_eps(ctx.lambda(i))) eps.push_back(integer_json(e));
      rows.push_back({{"i", i},
                      {"lambda", weight_json(ctx.lambda(i))},
                      {"eps", std::move(eps)},
                      {"weyl_dim", weyl_dim(ctx.lambda(i)).str()}});
    }
    std::cout << json{{"n", ctx.n()}, {"p", ctx.p()}, {"object", "block"}, {"lambdas", rows}}.dump() << '\n';
    return 0;
  }
  std::cout << "block of lambda_0, n=" << ctx.n() << " p=" << ctx.p() << '\n';
  for (int i = 0; i <= ctx.n(); ++i) {
    std::cout << "lambda_" << i << " = " << ctx.lambda(i) << "  dim L = " << weyl_dim(ctx.lambda(i)) << '\n';
  }
  return 0;
}

int emit_layers(const Options& o, const LayerReport& report) {
  if (as_json(o)) {
    std::cout << emit_json(report, limit(o)) << '\n';
  } else {
    std::cout << emit_text(report, limit(o));
  }
  return 0;
}

int cmd_verma(const Options& o, const BlockContext& ctx, bool dual) {
  const int i = require_i(o);
  const Weight nu = translation(o);
  if (dual) {
    return emit_layers(o, {ctx.n(), ctx.p(), verma_name("Z'^", i, nu) + " radical layers",
                           rad_layers_Zprime_g1t(ctx, i, nu), false});
  }
  LayerReport rad{ctx.n(), ctx.p(), verma_name("Z^", i, nu) + " radical layers",
                  rad_layers_Z_g1t(ctx, i, nu), false};
  LayerReport soc{ctx.n(), ctx.p(), verma_name("Z^", i, nu) + " socle layers (layer 0 = soc_1)",
                  soc_layers_Z_g1t(ctx, i, nu), false};
  if (as_json(o)) {
    if (o.series != "rad" && o.series != "soc") throw InputError("--series must be rad or soc");
    return emit_layers(o, o.series == "rad" ? rad : soc);
  }
  emit_layers(o, rad);
  return emit_layers(o, soc);
}

int cmd_proj(const Options& o, const BlockContext& ctx) {
  const int i = require_i(o);
  const Weight nu = translation(o);
  const auto q = rad_layers_Qhat(ctx, i, nu);
  return emit_layers(o, {ctx.n(), ctx.p(), verma_name("Q^", i, nu) + " radical layers", q.layers,
                         q.conditional_on_loewy_length_conjecture});
}

int cmd_ext(const Options& o, const BlockContext& ctx) {
  const int n = ctx.n();
  if (o.i >= 0 && o.j >= 0) {
    if (o.i > n || o.j > n) throw InputError("--i and --j must lie in [0, n]");
    const auto a = ctx.label(o.i, translation(o));
    const auto b = ctx.label(o.j, parse_nu(o.nu2, n, "--nu2"));
    const auto kind = ext1_g1(ctx, o.i, o.j).kind;
    const int dim = ext1_g1t_dim(ctx, a, b);
    if (as_json(o)) {
      std::cout << json{{"n", n}, {"p", ctx.p()}, {"object", "ext1"},
                        {"a", {{"i", a.index}, {"nu", weight_json(a.nu)}}},
                        {"b", {{"i", b.index}, {"nu", weight_json(b.nu)}}},
                        {"g1", to_string(kind)}, {"g1t_dim", dim}}.dump() << '\n';
    } else {
      std::cout << "Ext^1_G1(L(lambda_" << o.i << "), L(lambda_" << o.j << ")) = " << to_string(kind)
                << "\nExt^1_G1T(" << a.to_string() << ", " << b.to_string() << ") has dimension " << dim
                << '\n';
    }
    return 0;
  }
  if (o.i >= 0) {
    const int i = require_i(o);
    const Weight nu = translation(o);
    LayerDecomposition layers;
    for (const auto& [label, mult] : rad1_Qhat(ctx, i, nu)) layers.add(1, label, mult);
    layers.add(0, ctx.label(i, nu));
    return emit_layers(o, {n, ctx.p(), verma_name("Q^", i, nu) + " head and Ext^1 layer", layers, false});
  }
  if (as_json(o)) {
    json table = json::array();
    for (int i = 0; i <= n; ++i) {
      json row = json::array();
      for (int j = 0; j <= n; ++j) row.push_back(to_string(ext1_g1(ctx, i, j).kind));
      table.push_back(std::move(row));
    }
    std::cout << json{{"n", n}, {"p", ctx.p()}, {"object", "ext1_g1"}, {"table", table}}.dump() << '\n';
    return 0;
  }
  std::cout << "Ext^1_G1(L(lambda_i), L(lambda_j)), rows i, columns j\n";
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) std::cout << (j ? " " : "") << to_string(ext1_g1(ctx, i, j).kind);
    std::cout << '\n';
  }
  return 0;
}

int cmd_dim(const Options& o, const BlockContext& ctx) {
  const int n = ctx.n();
  json rows = json::array();
  bool all = true;
  for (int i = 0; i <= n; ++i) {
    json row = {{"i", i}, {"weyl_dim", weyl_dim(ctx.lambda(i)).str()}};
    if (i < n) {
      const bool ok = verify_dim_identity(ctx, i, ParabolicSide::I);
      all = all && ok;
      row["dim_M_I"] = dim_M(ctx, i, ParabolicSide::I).str();
      row["identity_I"] = ok;
    }
    if (i > 0) {
      const bool ok = verify_dim_identity(ctx, i, ParabolicSide::J);
      all = all && ok;
      row["dim_M_J"] = dim_M(ctx, i, ParabolicSide::J).str();
      row["identity_J"] = ok;
    }
    rows.push_back(std::move(row));
  }
  if (as_json(o)) {
    std::cout << json{{"n", n}, {"p", ctx.p()}, {"object", "dimensions"}, {"rows", rows}, {"all_hold", all}}.dump()
              << '\n';
  } else {
    for (int i = 0; i <= n; ++i) {
      const auto& r = rows[static_cast<std::size_t>(i)];
      std::cout << "i=" << i << "  dim L(lambda_i) = " << r["weyl_dim"].get<std::string>();
      if (r.contains("dim_M_I")) {
        std::cout << "  dim M_I = " << r["dim_M_I"].get<std::string>() << " = L_i + L_{i+1}: "
                  << (r["identity_I"].get<bool>() ? "yes" : "NO");
      }
      if (r.contains("dim_M_J")) {
        std::cout << "  dim M_J = " << r["dim_M_J"].get<std::string>() << " = L_i + L_{i-1}: "
                  << (r["identity_J"].get<bool>() ? "yes" : "NO");
      }
      std::cout << '\n';
    }
  }
  return all ? 0 : 1;
}

std::string root_string(RootPair r) {
  return "(" + std::to_string(r.k) + "," + std::to_string(r.j) + ")";
}

json certificate_json(const WitnessCertificate& c) {
  json betas = json::array();
  for (const auto& b : c.betas) betas.push_back({b.k, b.j});
  return {{"root", {c.root.k, c.root.j}},
          {"m", c.decomposition.m.str()},
          {"s", c.decomposition.s},
          {"a", c.decomposition.a.str()},
          {"b", c.decomposition.b.str()},
          {"beta0", {c.beta0.k, c.beta0.j}},
          {"betas", std::move(betas)}};
}

int cmd_jantzen(const Options& o, const BlockContext& ctx) {
  const auto report = check_block_simplicity(ctx);
  std::size_t replay_ok = 0;
  for (const auto& r : report.replays) replay_ok += r.valid ? 1 : 0;
  if (as_json(o)) {
    json certs = json::array();
    for (std::size_t k = 0; k < report.certificates.size(); ++k) {
      if (o.i >= 0 && report.certificate_index[k] != o.i) continue;
      auto c = certificate_json(report.certificates[k]);
      c["i"] = report.certificate_index[k];
      certs.push_back(std::move(c));
    }
    json replays = json::array();
    for (const auto& r : report.replays) {
      if (o.i >= 0 && r.index != o.i) continue;
      auto c = certificate_json(r.certificate);
      c["i"] = r.index;
      c["case"] = r.sub_case;
      c["valid"] = r.valid;
      replays.push_back(std::move(c));
    }
    json failures = json::array();
    for (const auto& f : report.failures) {
      failures.push_back({{"i", f.index}, {"root", {f.root.k, f.root.j}}, {"reason", f.reason}});
    }
    std::cout << json{{"n", ctx.n()}, {"p", ctx.p()}, {"object", "jantzen"},
                      {"certificates", certs}, {"replays", replays}, {"failures", failures},
                      {"ok", report.ok()}}.dump() << '\n';
  } else {
    for (std::size_t k = 0; k < report.certificates.size(); ++k) {
      const int i = report.certificate_index[k];
      if (o.i >= 0 && i != o.i) continue;
      const auto& c = report.certificates[k];
      std::cout << "i=" << i << " root " << root_string(c.root) << ": m=" << c.decomposition.m << " = "
                << c.decomposition.a << "*" << ctx.p() << "^" << c.decomposition.s << " + " << c.decomposition.b
                << "*" << ctx.p() << "^" << c.decomposition.s + 1 << "  beta0=" << root_string(c.beta0);
      if (!c.betas.empty()) {
        std::cout << " betas=";
        for (const auto& b : c.betas) std::cout << root_string(b);
      }
      std::cout << '\n';
    }
    for (const auto& f : report.failures) {
      std::cout << "FAIL i=" << f.index << " root " << root_string(f.root) << ": " << f.reason << '\n';
    }
    std::cout << report.certificates.size() << " certificates, " << report.failures.size() << " failures, "
              << replay_ok << "/" << report.replays.size() << " sub-case constructions valid\n";
  }
  return report.ok() ? 0 : 1;
}

int cmd_verify(const Options& o, const BlockContext& ctx) {
  const auto report = run_verification(ctx);
  if (as_json(o)) {
    std::cout << to_json(report).dump() << '\n';
  } else {
    for (const auto& c : report.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.module << ": " << c.invariant << " [" << c.cases
                << " cases]";
      if (!c.passed) std::cout << "  counterexample: " << c.counterexample;
      std::cout << '\n';
    }
    std::cout << report.passed_count() << " passed, " << report.failed_count() << " failed\n";
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loewy series of baby Verma modules and projective covers in the block of lambda_0"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "rank n of SL(n+1)")->required()->check(CLI::PositiveNumber);
    sub->add_option("--p", o.p, "odd prime not dividing n+1")->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto labelled = [&o](CLI::App* sub) {
    sub->add_option("--i", o.i, "block index in [0, n]");
    sub->add_option("--nu", o.nu, "translation in fundamental-weight coordinates, e.g. 1,-1");
    sub->add_option("--eps", o.eps, "translation as n+1 epsilon coefficients");
    sub->add_flag("--full", o.full, "do not truncate layers with more than 200 labels");
  };

  std::string command;
  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    common(sub);
    sub->callback([&command, name] { command = name; });
    return sub;
  };
  add("block", "list the weights lambda_i with their dimensions");
  auto* verma = add("verma", "radical and socle layers of Z^(lambda_i + p nu)");
  labelled(verma);
  verma->get_option("--i")->required();
  verma->add_option("--series", o.series, "with --format json: rad or soc");
  auto* dual = add("verma-dual", "radical layers of Z'^(lambda_i + p nu)");
  labelled(dual);
  dual->get_option("--i")->required();
  auto* proj = add("proj", "radical layers of the projective cover Q^(lambda_i + p nu)");
  labelled(proj);
  proj->get_option("--i")->required();
  auto* ext = add("ext", "Ext^1 between block irreducibles");
  labelled(ext);
  ext->add_option("--j", o.j, "second block index");
  ext->add_option("--nu2", o.nu2, "translation of the second label");
  add("dim", "Weyl dimensions and the parabolic dimension identity");
  auto* jantzen = add("jantzen", "Jantzen criterion witness certificates");
  jantzen->add_option("--i", o.i, "restrict output to one block index");
  add("verify", "run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const BlockContext ctx(o.n, o.p);
    if (command == "block") return cmd_block(o, ctx);
    if (command == "verma") return cmd_verma(o, ctx, false);
    if (command == "verma-dual") return cmd_verma(o, ctx, true);
    if (command == "proj") return cmd_proj(o, ctx);
    if (command == "ext") return cmd_ext(o, ctx);
    if (command == "dim") return cmd_dim(o, ctx);
    if (command == "jantzen") return cmd_jantzen(o, ctx);
    if (command == "verify") return cmd_verify(o, ctx);
  } catch (const HypothesisError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
