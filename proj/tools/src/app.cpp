#include "a2cli/app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "a2/hochschild.hpp"
#include "a2/serialize.hpp"
#include "a2cli/session.hpp"
#include "a2cli/verify.hpp"

namespace a2::cli {

namespace {

struct Flags {
  std::string config, kind, lambda, format, output, pair, alpha, e, beta;
  int N = 3;
  long q_exp = 1, q12_exp = 1;
  unsigned order = 0;
};

struct FlagOptions {
  CLI::Option *kind, *N, *q_exp, *q12_exp, *order, *lambda, *format, *output;
};

FlagOptions add_session_flags(CLI::App& cmd, Flags& f) {
  FlagOptions o{};
  cmd.add_option("--config", f.config, "JSON file with session fields; flags override it")->check(CLI::ExistingFile);
  o.kind = cmd.add_option("--case", f.kind, "generic or atypical (default atypical)");
  o.N = cmd.add_option("--N", f.N, "order of q (default 3)");
  o.q_exp = cmd.add_option("--q-exp", f.q_exp, "q = zeta^q_exp (default 1)");
  o.q12_exp = cmd.add_option("--q12-exp", f.q12_exp, "q12 = zeta^q12_exp (default q_exp)");
  o.order = cmd.add_option("--order", f.order, "order L of zeta (default N)");
  o.lambda = cmd.add_option("--lambda", f.lambda, "l1,l2,l12,l112,l122 as scalar expressions");
  o.format = cmd.add_option("--format", f.format, "json, csv or md (default json)");
  o.output = cmd.add_option("--output", f.output, "write the artifact to this file");
  return o;
}

SessionConfig load_session(const Flags& f, const FlagOptions& o) {
  SessionConfig cfg;
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw Error("cannot read config file " + f.config);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error("config file " + f.config + ": " + e.what());
    }
    cfg.merge_json(j);
  }
  if (o.kind->count()) cfg.kind = parse_case(f.kind);
  if (o.N->count()) cfg.N = f.N;
  if (o.q_exp->count()) cfg.q_exp = f.q_exp;
  if (o.q12_exp->count()) cfg.q12_exp = f.q12_exp;
  if (o.order->count()) cfg.order = f.order;
  if (o.lambda->count()) cfg.lambda = f.lambda;
  if (o.format->count()) cfg.format = parse_format(f.format);
  if (o.output->count()) cfg.output = f.output;
  return cfg;
}

std::pair<Monomial, Monomial> parse_pair(const std::string& text, int N) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size()) throw Error("");
    } catch (const std::exception&) {
      throw Error("--pair: '" + item + "' is not an integer");
    }
  }
  if (v.size() != 6) throw Error("--pair expects six exponents n2,n12,n1,n2,n12,n1");
  Monomial a{v[0], v[1], v[2]}, b{v[3], v[4], v[5]};
  for (int x : v)
    if (x < 0 || x >= N) throw Error("--pair: exponents must lie in 0.." + std::to_string(N - 1));
  return {a, b};
}

template <std::size_t K>
std::array<Cyclotomic, K> parse_vector(const Braiding& br, const std::string& text, const char* flag) {
  std::array<Cyclotomic, K> out;
  if (text.empty()) return out;
  std::vector<Cyclotomic> v;
  try {
    v = parse_scalar_list(br, text, K);
  } catch (const Error& e) {
    throw Error(std::string(flag) + ": " + e.what());
  }
  for (std::size_t i = 0; i < K; ++i) out[i] = v[i];
  return out;
}

json header(const Braiding& br, Case kind) {
  return {{"N", br.N()}, {"case", to_string(kind)}, {"order", br.order()}, {"q_exp", br.q_exp()},
          {"q12_exp", br.q12_exp()}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string render_table(Format format, const Braiding& br, const CocycleTable& t) {
  switch (format) {
    case Format::Json: return dump(to_json(br, t));
    case Format::Csv: return to_csv(br, t.values);
    case Format::Markdown: return to_markdown(br, t.values);
  }
  return {};
}

std::string render_entry(Format format, const Braiding& br, const Monomial& a, const Monomial& b,
                         const Cyclotomic& value) {
  switch (format) {
    case Format::Json: return dump({{"a", to_json(a)}, {"b", to_json(b)}, {"value", scalar_json(br, value)}});
    case Format::Csv:
      return "a,b,value\n\"" + monomial_key(a) + "\",\"" + monomial_key(b) + "\",\"" + q_lift(br, value) + "\"\n";
    case Format::Markdown:
      return "| a | b | value |\n|---|---|---|\n| " + to_string(a) + " | " + to_string(b) + " | " +
             q_lift(br, value) + " |\n";
  }
  return {};
}

std::string render_element(const Braiding& br, const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : e) {
    if (!out.empty()) out += " + ";
    std::string coeff = q_lift(br, c);
    if (m.is_one()) {
      out += coeff.find(' ') == std::string::npos ? coeff : "(" + coeff + ")";
    } else {
      out += coeff == "1" ? to_string(m) : "(" + coeff + ")*" + to_string(m);
    }
  }
  return out;
}

struct Artifact {
  std::string text;
  int code = kOk;
};

Artifact cmd_table(const SessionConfig& cfg, const std::string& pair) {
  auto L = cfg.lifting();
  const auto& br = L->braiding();
  if (!pair.empty()) {
    auto [a, b] = parse_pair(pair, br.N());
    SectionMap gamma = build_section(*L);
    return {render_entry(cfg.output_format(), br, a, b, sigma(*L, gamma, a, b))};
  }
  return {render_table(cfg.output_format(), br, sigma_table(*L))};
}

Artifact cmd_orbit(const SessionConfig& cfg, const std::string& pair, const std::string& alpha_text) {
  auto L = cfg.lifting();
  const auto& br = L->braiding();
  Functional alpha = alpha_text.empty() ? Functional::epsilon(br.N())
                                        : alpha_from_params(*L, parse_vector<8>(br, alpha_text, "--alpha"));
  CocycleTable t = orbit_act(*L, alpha, sigma_table(*L));
  if (!pair.empty()) {
    auto [a, b] = parse_pair(pair, br.N());
    return {render_entry(cfg.output_format(), br, a, b, t(a, b))};
  }
  return {render_table(cfg.output_format(), br, t)};
}

Artifact cmd_exp(const SessionConfig& cfg, const std::string& pair, const std::string& e_text,
                 const std::string& beta_text) {
  auto L = cfg.lifting();
  const auto& br = L->braiding();
  HochschildCocycle eta{parse_vector<5>(br, e_text, "--e"), parse_vector<8>(br, beta_text, "--beta")};
  Bifunctional t = exponential(*L, to_bifunctional(*L, eta));
  if (!pair.empty()) {
    auto [a, b] = parse_pair(pair, br.N());
    return {render_entry(cfg.output_format(), br, a, b, t(a, b))};
  }
  switch (cfg.output_format()) {
    case Format::Json: {
      json j = header(br, L->kind());
      j["eta"] = to_json(br, eta);
      json entries = json::array();
      for (const auto& a : L->basis())
        for (const auto& b : L->basis())
          entries.push_back({{"a", to_json(a)}, {"b", to_json(b)}, {"value", scalar_json(br, t(a, b))}});
      j["entries"] = std::move(entries);
      return {dump(j)};
    }
    case Format::Csv: return {to_csv(br, t)};
    case Format::Markdown: return {to_markdown(br, t)};
  }
  return {};
}

Artifact cmd_classify(const SessionConfig& cfg) {
  auto L = cfg.lifting();
  const auto& br = L->braiding();
  PurityVerdict v = classify_purity(*L);
  int code = v.witness && !v.verified ? kVerificationFailed : kOk;
  std::string condition = v.condition ? std::string(1, v.condition) : "";
  std::string verified = v.verified ? "true" : "false";
  switch (cfg.output_format()) {
    case Format::Json: return {dump(to_json(br, v)), code};
    case Format::Csv:
      return {"verdict,condition,verified\n" + to_string(v.tag) + "," + condition + "," + verified + "\n", code};
    case Format::Markdown: {
      std::string out = "| verdict | condition | verified |\n|---|---|---|\n| " + to_string(v.tag) + " | " +
                        condition + " | " + verified + " |\n";
      if (v.witness) {
        out += "\n| witness | value |\n|---|---|\n";
        for (std::size_t i = 0; i < 8; ++i)
          out += "| alpha(" + to_string(invariant_monomials()[i]) + ") | " + q_lift(br, v.witness->alpha[i]) + " |\n";
        static const char* names[5] = {"e1", "e2", "e12", "e112", "e122"};
        for (std::size_t i = 0; i < 5; ++i)
          out += std::string("| ") + names[i] + " | " + q_lift(br, v.witness->eta.e[i]) + " |\n";
        for (std::size_t i = 0; i < 8; ++i)
          out += "| beta(" + to_string(invariant_monomials()[i]) + ") | " + q_lift(br, v.witness->eta.beta[i]) +
                 " |\n";
      }
      return {out, code};
    }
  }
  return {};
}

Artifact cmd_section(const SessionConfig& cfg) {
  auto L = cfg.lifting();
  const auto& br = L->braiding();
  SectionMap gamma = build_section(*L);
  int code = gamma.verified ? kOk : kVerificationFailed;
  switch (cfg.output_format()) {
    case Format::Json: return {dump(to_json(br, gamma)), code};
    case Format::Csv: {
      std::string out = "b,monomial,coeff\n";
      for (const auto& b : L->basis())
        for (const auto& [m, c] : gamma(b))
          out += "\"" + monomial_key(b) + "\",\"" + monomial_key(m) + "\",\"" + q_lift(br, c) + "\"\n";
      return {out, code};
    }
    case Format::Markdown: {
      std::string out = "| b | gamma(b) |\n|---|---|\n";
      for (const auto& b : L->basis()) out += "| " + to_string(b) + " | " + render_element(br, gamma(b)) + " |\n";
      return {out, code};
    }
  }
  return {};
}

Artifact cmd_verify(const SessionConfig& cfg) {
  auto L = cfg.lifting();
  auto checks = run_checks(*L);
  bool all = true;
  for (const auto& c : checks) all = all && c.passed;
  if (cfg.format == Format::Json) {
    json out = header(L->braiding(), L->kind());
    json list = json::array();
    for (const auto& c : checks) list.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out["checks"] = std::move(list);
    out["passed"] = all;
    return {dump(out), all ? kOk : kVerificationFailed};
  }
  std::string out;
  for (const auto& c : checks) out += (c.passed ? "PASS " : "FAIL ") + c.name + " (" + c.detail + ")\n";
  out += all ? "all checks passed\n" : "some checks failed\n";
  return {out, all ? kOk : kVerificationFailed};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hopf 2-cocycles, orbits and Hochschild exponentials for Nichols algebras of type A2", "a2cocycle"};
  app.require_subcommand(1);

  Flags f;
  auto* table = app.add_subcommand("table", "cocycle table sigma(a, b) on the PBW basis");
  auto* orbit = app.add_subcommand("orbit", "the table of alpha -> sigma");
  auto* exp = app.add_subcommand("exp", "the exponential e^eta of a Hochschild 2-cocycle");
  auto* classify = app.add_subcommand("classify", "purity verdict with witness");
  auto* section = app.add_subcommand("section", "gamma(b) for every basis element");
  auto* verify = app.add_subcommand("verify", "run the invariant suite");

  std::vector<std::pair<CLI::App*, FlagOptions>> commands;
  for (auto* cmd : {table, orbit, exp, classify, section, verify}) commands.emplace_back(cmd, add_session_flags(*cmd, f));
  for (auto* cmd : {table, orbit, exp})
    cmd->add_option("--pair", f.pair, "print one entry: a and b as exponent triples n2,n12,n1");
  orbit->add_option("--alpha", f.alpha, "the eight coefficients of alpha (default epsilon)");
  exp->add_option("--e", f.e, "e1,e2,e12,e112,e122 (default zero)");
  exp->add_option("--beta", f.beta, "the eight coboundary coefficients (default zero)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    FlagOptions opts{};
    for (const auto& [cmd, o] : commands)
      if (cmd->parsed()) opts = o;
    SessionConfig cfg = load_session(f, opts);

    Artifact artifact;
    if (table->parsed()) artifact = cmd_table(cfg, f.pair);
    else if (orbit->parsed()) artifact = cmd_orbit(cfg, f.pair, f.alpha);
    else if (exp->parsed()) artifact = cmd_exp(cfg, f.pair, f.e, f.beta);
    else if (classify->parsed()) artifact = cmd_classify(cfg);
    else if (section->parsed()) artifact = cmd_section(cfg);
    else artifact = cmd_verify(cfg);

    if (cfg.output.empty()) {
      out << artifact.text;
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw Error("cannot write " + cfg.output);
      file << artifact.text;
    }
    if (artifact.code == kVerificationFailed) err << "error: verification failed\n";
    return artifact.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace a2::cli
