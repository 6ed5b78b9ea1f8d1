// symclone: command-line front end.
//
// Exit codes: 0 success, 1 verification failure or criteria/oracle discrepancy,
// 2 usage or parse error, 3 a resource cap kept the answer from being settled.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "symclone/basis.hpp"
#include "symclone/closure.hpp"
#include "symclone/error.hpp"
#include "symclone/formula.hpp"
#include "symclone/literal.hpp"
#include "symclone/membership.hpp"
#include "symclone/verify.hpp"

using json = nlohmann::ordered_json;
using namespace symclone;

namespace {

enum Exit
{
  ok = 0,
  failed = 1,
  usage = 2,
  capped = 3,
};

struct Options
{
  std::string format = "text";
  std::string config;
  std::uint64_t seed = 1;
  ClosureCaps caps;
  FormulaCaps formula_caps;
  VerifyConfig verify;
};

std::string read_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Config file values; command-line flags are applied afterwards and win.
void load_config(const std::string& path, Options& o)
{
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ParseError("config: " + std::string(e.what()));
  }
  auto get = [](const json& obj, const char* key, auto& target) {
    if (!obj.contains(key))
      return;
    const auto& v = obj[key];
    using T = std::decay_t<decltype(target)>;
    if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string())
        throw ParseError(std::string("config: '") + key + "' must be a string");
      target = v.get<std::string>();
    } else {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
        throw ParseError(std::string("config: '") + key + "' must be a positive integer");
      target = static_cast<T>(v.get<std::uint64_t>());
    }
  };
  get(j, "format", o.format);
  get(j, "seed", o.seed);
  if (j.contains("caps")) {
    const auto& c = j["caps"];
    get(c, "nvars", o.caps.max_nvars);
    get(c, "arity", o.caps.max_arity);
    get(c, "derived", o.caps.max_derived);
    get(c, "conjunctions", o.caps.max_conjunctions);
    get(c, "depth", o.formula_caps.max_depth);
    get(c, "nodes", o.formula_caps.max_nodes);
  }
  if (j.contains("samples")) {
    const auto& s = j["samples"];
    get(s, "formulas", o.verify.formulas);
    get(s, "tuples", o.verify.tuples);
    get(s, "descriptors", o.verify.descriptors);
    get(s, "families", o.verify.families);
  }
}

bool as_json(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const json& j, const std::string& text)
{
  if (as_json(o))
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json profile_json(const PeriodicProfile& p) { return {{"n", p.arity}, {"d", p.offset}, {"t", p.period}}; }

PeriodicProfile require_profile(const std::string& literal)
{
  const auto fn = parse_literal(literal);
  auto p = as_profile(fn);
  if (!p)
    throw DomainError("'" + literal + "' is not a periodic symmetric function");
  return *p;
}

std::vector<Generator> generators_from(const std::vector<std::string>& literals)
{
  std::vector<TableFn> fns;
  for (const auto& l : literals)
    fns.push_back(as_table(parse_literal(l)));
  return name_generators(fns);
}

Signature load_signature(const std::string& file, const std::vector<std::string>& defs)
{
  std::string text = file.empty() ? "" : read_file(file);
  for (const auto& d : defs)
    text += "\n" + d;
  return parse_signature(text);
}

std::string oracle_word(OracleVerdict v)
{
  switch (v) {
  case OracleVerdict::Yes:
    return "yes";
  case OracleVerdict::No:
    return "no";
  case OracleVerdict::Incomplete:
    return "incomplete";
  }
  return "?";
}

std::string criterion_word(CriterionVerdict v)
{
  switch (v) {
  case CriterionVerdict::Yes:
    return "yes";
  case CriterionVerdict::No:
    return "no";
  case CriterionVerdict::Inapplicable:
    return "inapplicable";
  }
  return "?";
}

json certificate_json(const MembershipCertificate& c)
{
  json j{{"t", c.ratio}};
  if (c.q)
    j["q"] = *c.q;
  if (c.s)
    j["s"] = *c.s;
  if (c.k)
    j["k"] = *c.k;
  return j;
}

std::string signature_text(const Signature& sig)
{
  std::string out;
  for (const auto& [name, fn] : sig.entries()) {
    const auto sym = from_table(fn);
    out += "  " + name + " := " + (sym ? format_literal(*sym) : format_literal(fn)) + "\n";
  }
  return out;
}

json signature_json(const Signature& sig)
{
  json j = json::object();
  for (const auto& [name, fn] : sig.entries()) {
    const auto sym = from_table(fn);
    j[name] = sym ? format_literal(*sym) : format_literal(fn);
  }
  return j;
}

// ------------------------------------------------------------------ commands

int cmd_period(const Options& o, const std::string& literal)
{
  const auto fn = parse_literal(literal);
  const auto sym = as_symmetric(fn);
  const auto p = sym ? detect_period(*sym) : std::nullopt;
  json j{{"input", literal}, {"symmetric", sym.has_value()}, {"periodic", p.has_value()}};
  std::string text;
  if (p) {
    j["profile"] = profile_json(*p);
    text = format_literal(*p) + "\n";
  } else {
    text = sym ? "not periodic\n" : "not symmetric\n";
  }
  emit(o, j, text);
  return ok;
}

int cmd_mkfn(const Options& o, std::uint64_t n, std::uint64_t d, std::uint64_t t)
{
  const auto f = make_periodic(n, d, t);
  const auto p = detect_period(f);
  json j{{"sym", format_literal(f)}, {"table", format_literal(to_table(f))}, {"profile", profile_json(*p)}};
  emit(o, j, format_literal(f) + "\n" + format_literal(to_table(f)) + "\ncanonical " + format_literal(*p) + "\n");
  return ok;
}

int cmd_eval(const Options& o, const std::string& literal, const std::string& tuple_text)
{
  Tuple a;
  for (char c : tuple_text) {
    if (c == ',' || c == ' ')
      continue;
    if (c < '0' || c > '2')
      throw ParseError("tuple components must be 0, 1 or 2: '" + tuple_text + "'");
    a.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  const auto fn = parse_literal(literal);
  const int v = std::visit(
      [&](const auto& f) -> int {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, SymmetricFn>)
          return eval_symmetric(f, a);
        else
          return f.eval(a);
      },
      fn);
  emit(o, json{{"value", v}}, std::to_string(v) + "\n");
  return ok;
}

struct MemberFlags
{
  bool with_i = false;
  bool oracle = false;
  bool both = false;
};

int cmd_member(const Options& o, const std::string& f_lit, const std::string& g_lit, const MemberFlags& fl)
{
  const auto f = require_profile(f_lit);
  const auto g = require_profile(g_lit);
  json j{{"f", format_literal(f)}, {"g", format_literal(g)}, {"with_i", fl.with_i}};
  std::string text;
  int code = ok;

  std::optional<CriterionResult> crit;
  if (!fl.oracle) {
    crit = fl.with_i ? member_single_with_I(f, g) : member_single(f, g);
    json c{{"verdict", criterion_word(crit->verdict)}};
    if (crit->branch)
      c["branch"] = to_string(*crit->branch);
    if (crit->certificate)
      c["certificate"] = certificate_json(*crit->certificate);
    if (!crit->reason.empty())
      c["reason"] = crit->reason;
    j["criterion"] = c;
    text += "criterion: " + criterion_word(crit->verdict);
    if (crit->branch)
      text += " [" + to_string(*crit->branch) + "]";
    if (crit->certificate) {
      const auto& cert = *crit->certificate;
      text += " t=" + std::to_string(cert.ratio);
      if (cert.q)
        text += " q=" + std::to_string(*cert.q);
      if (cert.s)
        text += " s=" + std::to_string(*cert.s);
      if (cert.k)
        text += " k=" + std::to_string(*cert.k);
    }
    if (!crit->reason.empty())
      text += " (" + crit->reason + ")";
    text += "\n";
  }

  // The oracle also runs when the criterion does not apply.
  const bool run_oracle = fl.oracle || fl.both || crit->verdict == CriterionVerdict::Inapplicable;
  std::optional<OracleResult> orc;
  if (run_oracle) {
    std::vector<TableFn> fns{to_table(make_periodic(g))};
    if (fl.with_i)
      fns.push_back(to_table(SymmetricFn::identity(2)));
    orc = member_oracle(to_table(make_periodic(f)), name_generators(fns), o.caps);
    json oj{{"verdict", oracle_word(orc->verdict)}, {"derived", orc->derived_size}};
    if (orc->witness) {
      oj["witness"] = to_sexpr(*orc->witness);
      oj["signature"] = signature_json(orc->signature);
    }
    if (!orc->reason.empty())
      oj["reason"] = orc->reason;
    j["oracle"] = oj;
    text += "oracle: " + oracle_word(orc->verdict);
    if (orc->witness)
      text += " via " + to_sexpr(*orc->witness) + "\n" + signature_text(orc->signature);
    else
      text += orc->reason.empty() ? "\n" : " (" + orc->reason + ")\n";
    if (orc->verdict == OracleVerdict::Incomplete)
      code = capped;
  }

  std::string verdict;
  if (crit && crit->verdict != CriterionVerdict::Inapplicable)
    verdict = criterion_word(crit->verdict);
  else if (orc)
    verdict = oracle_word(orc->verdict);
  if (crit && orc && crit->verdict != CriterionVerdict::Inapplicable && orc->verdict != OracleVerdict::Incomplete) {
    const bool agree = crit->yes() == (orc->verdict == OracleVerdict::Yes);
    j["agreement"] = agree;
    text += agree ? "agreement\n" : "DISCREPANCY between criterion and oracle\n";
    if (!agree)
      code = failed;
  }
  j["verdict"] = verdict;
  text = "verdict: " + verdict + "\n" + text;
  emit(o, j, text);
  return code;
}

int cmd_closure(const Options& o, const std::vector<std::string>& gens_lit, std::size_t nvars, bool list)
{
  const auto gens = generators_from(gens_lit);
  const auto st = close(gens, nvars, o.caps);
  json j{{"nvars", nvars},
         {"status", st.at_fixpoint() ? "fixpoint" : "incomplete"},
         {"derived", st.derived().size()},
         {"round_sizes", st.round_sizes()}};
  std::string text = std::string(st.at_fixpoint() ? "fixpoint" : "incomplete") + ": " +
                     std::to_string(st.derived().size()) + " functions over " + std::to_string(nvars) + " variables\n";
  if (!st.at_fixpoint()) {
    j["reason"] = st.incomplete_reason();
    text += "reason: " + st.incomplete_reason() + "\n";
  }
  text += signature_text(st.signature());
  j["signature"] = signature_json(st.signature());
  if (list) {
    json items = json::array();
    for (const auto& d : st.derived()) {
      std::string vars;
      for (std::size_t v = 1; v <= nvars; ++v)
        if (d.support >> (v - 1) & 1u)
          vars += (vars.empty() ? "x" : " x") + std::to_string(v);
      const auto table = format_literal(st.table_of(d));
      items.push_back({{"variables", vars}, {"table", table}, {"witness", to_sexpr(d.witness)}, {"round", d.round}});
      text += "  {" + vars + "} " + table + "  " + to_sexpr(d.witness) + "\n";
    }
    j["functions"] = items;
  }
  emit(o, j, text);
  return st.at_fixpoint() ? ok : capped;
}

int cmd_theta(const Options& o, const Signature& sig, const std::string& formula, std::size_t nvars)
{
  const auto phi = parse_formula(formula);
  check_caps(phi, o.formula_caps);
  if (nvars == 0)
    nvars = max_variable(phi);
  const auto th = theta(phi, sig, nvars);
  json j{{"formula", to_sexpr(phi)}, {"realizes", format_literal(realize(phi, sig, nvars))}};
  std::string text = "realizes " + format_literal(realize(phi, sig, nvars)) + "\n";
  json fns = json::array();
  text += "theta: " + std::to_string(th.functions.size()) + " function(s)\n";
  for (const auto& f : th.functions) {
    const auto sym = from_table(f);
    const auto lit = sym ? format_literal(*sym) : format_literal(f);
    fns.push_back(lit);
    text += "  " + lit + "\n";
  }
  j["theta"] = fns;
  json occs = json::array();
  for (const auto& occ : occurrences(phi)) {
    const auto& sub = subformula_at(phi, occ);
    const bool essential = is_essential(phi, occ, sig, nvars);
    const auto q = variable_counts(phi, occ, nvars);
    bool in_theta = false;
    for (const auto& t : th.occurrences)
      in_theta = in_theta || t.occurrence == occ;
    occs.push_back({{"path", occ}, {"subformula", to_sexpr(sub)}, {"essential", essential},
                    {"changes_when_replaced", in_theta}, {"variable_counts", q}});
    std::string qs;
    for (auto c : q)
      qs += (qs.empty() ? "" : ",") + std::to_string(c);
    text += "  " + to_sexpr(sub) + (essential ? "  essential" : "  inessential") +
            (in_theta ? ", in theta" : "") + ", q=(" + qs + ")\n";
  }
  j["occurrences"] = occs;
  emit(o, j, text);
  return ok;
}

int cmd_rewrite(const Options& o, const Signature& sig, const std::string& formula)
{
  const auto phi = parse_formula(formula);
  check_caps(phi, o.formula_caps);
  const auto out = rewrite_i(phi, sig);
  emit(o, json{{"input", to_sexpr(phi)}, {"output", to_sexpr(out)}}, to_sexpr(out) + "\n");
  return ok;
}

json extraction_json(const BasisExtraction& b)
{
  json basis = json::array(), removed = json::array(), undecided = json::array();
  for (const auto& f : b.basis)
    basis.push_back(format_literal(f));
  for (const auto& r : b.removed)
    removed.push_back({{"function", format_literal(r.profile)}, {"by", to_string(r.how)}});
  for (const auto& f : b.undecided)
    undecided.push_back(format_literal(f));
  return {{"basis", basis}, {"removed", removed}, {"undecided", undecided}};
}

std::string extraction_text(const BasisExtraction& b)
{
  std::string text = "basis:\n";
  for (const auto& f : b.basis)
    text += "  " + format_literal(f) + "\n";
  for (const auto& r : b.removed)
    text += "removed " + format_literal(r.profile) + " (" + to_string(r.how) + ")\n";
  for (const auto& f : b.undecided)
    text += "undecided " + format_literal(f) + "\n";
  return text;
}

int cmd_classify(const Options& o, const std::string& path)
{
  const auto G = parse_descriptor(read_file(path));
  const auto c = classify(G, o.caps);
  json j{{"verdict", to_string(c.verdict)}};
  std::string text = "verdict: " + to_string(c.verdict) + "\n";
  json seqs = json::array();
  for (std::size_t i = 0; i < c.sequences.size(); ++i) {
    const auto& a = c.sequences[i];
    seqs.push_back({{"degenerate", a.degenerate}, {"rho0", a.rho0}, {"slope", a.slope}});
    text += "sequence " + std::to_string(i) + ": ";
    text += a.degenerate ? "i-functions only\n"
                         : "rho(k) = " + std::to_string(a.rho0) + " + " + std::to_string(a.slope) + "k\n";
  }
  j["sequences"] = seqs;
  int code = ok;
  if (c.nobasis_exponent) {
    j["witness"] = {{"exponent", *c.nobasis_exponent}};
    text += "infinitely many functions with ratio " + std::to_string(G.p) + "^" +
            std::to_string(*c.nobasis_exponent) + "\n";
  }
  if (c.finite_basis) {
    j["witness"] = extraction_json(*c.finite_basis);
    text += extraction_text(*c.finite_basis);
    if (!c.finite_basis->undecided.empty())
      code = capped;
  }
  if (c.verdict == BasisVerdict::CountableBasis) {
    json maximal = json::array();
    for (const auto& f : c.maximal_prefix)
      maximal.push_back(format_literal(f));
    j["witness"] = {{"maximal_prefix", maximal}, {"prefix_k", c.maximal_prefix_k}};
    text += "maximal members for k <= " + std::to_string(c.maximal_prefix_k) + ":\n";
    for (const auto& f : c.maximal_prefix)
      text += "  " + format_literal(f) + "\n";
  }
  // The finite part on its own.
  if (!G.finite.empty() && !c.finite_basis) {
    const auto b = extract_finite_basis(G.finite, G.p, o.caps);
    j["finite_part"] = extraction_json(b);
    text += "finite part " + extraction_text(b);
  }
  emit(o, j, text);
  return code;
}

int cmd_basis(const Options& o, std::uint64_t p, const std::vector<std::string>& gens)
{
  std::vector<PeriodicProfile> G;
  for (const auto& l : gens)
    G.push_back(require_profile(l));
  const auto b = extract_finite_basis(G, p, o.caps);
  emit(o, extraction_json(b), extraction_text(b));
  return b.undecided.empty() ? ok : capped;
}

int cmd_verify(const Options& o, const std::string& suite)
{
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else
    names = {suite};
  VerifyConfig cfg = o.verify;
  cfg.seed = o.seed;
  cfg.caps = o.caps;
  cfg.formula_max_depth = std::min(cfg.formula_max_depth, o.formula_caps.max_depth);
  cfg.formula_max_nodes = std::min(cfg.formula_max_nodes, o.formula_caps.max_nodes);

  json all = json::array();
  std::string text;
  bool any_fail = false, any_capped = false;
  for (const auto& name : names) {
    const auto r = run_suite(name, cfg);
    json stats = json::object();
    for (const auto& [k, v] : r.stats)
      stats[k] = v;
    all.push_back({{"suite", r.name},
                   {"seed", r.seed},
                   {"passed", r.passed()},
                   {"checked", r.checked},
                   {"violations", r.violations},
                   {"incomplete", r.incomplete},
                   {"stats", stats},
                   {"counterexamples", r.counterexamples},
                   {"seconds", r.seconds}});
    text += std::string(r.passed() ? "PASS " : "FAIL ") + r.name + " seed=" + std::to_string(r.seed) +
            " checked=" + std::to_string(r.checked) + " violations=" + std::to_string(r.violations) +
            " incomplete=" + std::to_string(r.incomplete) + "\n";
    for (const auto& [k, v] : r.stats)
      text += "  " + k + ": " + std::to_string(v) + "\n";
    for (const auto& c : r.counterexamples)
      text += "  ! " + c + "\n";
    any_fail = any_fail || r.violations > 0;
    any_capped = any_capped || r.incomplete > 0;
  }
  emit(o, names.size() == 1 ? all[0] : all, text);
  return any_fail ? failed : (any_capped ? capped : ok);
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Symmetric periodic functions of three-valued logic: periods, closures, membership, bases"};
  app.require_subcommand(1);
  Options o;
  std::size_t max_nvars = 0, max_arity = 0, max_derived = 0, max_depth = 0, max_nodes = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--config", o.config, "JSON config file (flags override it)")->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "Seed for randomized suites");
  app.add_option("--max-nvars", max_nvars, "Closure cap: variables (hard limit 6)")->check(CLI::PositiveNumber);
  app.add_option("--max-arity", max_arity, "Closure cap: generator arity")->check(CLI::PositiveNumber);
  app.add_option("--max-derived", max_derived, "Closure cap: derived functions")->check(CLI::PositiveNumber);
  app.add_option("--max-depth", max_depth, "Formula cap: depth")->check(CLI::PositiveNumber);
  app.add_option("--max-nodes", max_nodes, "Formula cap: nodes")->check(CLI::PositiveNumber);

  std::string lit, lit2, tuple, formula, sig_file, descriptor, suite;
  std::vector<std::string> gens, defs;
  std::uint64_t n = 0, d = 0, t = 0, p = 2;
  std::size_t nvars = 0;
  bool list = false;
  MemberFlags mf;

  auto* period = app.add_subcommand("period", "Detect the period of a function literal");
  period->add_option("function", lit, "Function literal")->required();

  auto* mkfn = app.add_subcommand("mkfn", "Build a periodic function");
  mkfn->add_option("-n", n, "Arity")->required();
  mkfn->add_option("-d", d, "Offset")->required();
  mkfn->add_option("-t", t, "Period")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a function literal on a tuple");
  eval->add_option("function", lit, "Function literal")->required();
  eval->add_option("tuple", tuple, "Tuple over {0,1,2}, e.g. 2,1,1")->required();

  auto* member = app.add_subcommand("member", "Is f in [{g}] (or [{g} u I])?");
  member->add_option("f", lit, "Periodic function literal")->required();
  member->add_option("g", lit2, "Periodic function literal")->required();
  member->add_flag("--with-i", mf.with_i, "Add the i-functions to the generators");
  auto* only_oracle = member->add_flag("--oracle", mf.oracle, "Use the closure oracle only");
  member->add_flag("--both", mf.both, "Run criterion and oracle; a discrepancy exits with 1")->excludes(only_oracle);

  auto* closure = app.add_subcommand("closure", "Close a set of generators over nvars variables");
  closure->add_option("--gen", gens, "Generator literal (repeatable)")->required();
  closure->add_option("--nvars", nvars, "Number of variables")->required()->check(CLI::PositiveNumber);
  closure->add_flag("--list", list, "List every derived function with its witness");

  auto* th = app.add_subcommand("theta", "Theta set, essential occurrences and variable counts of a formula");
  th->add_option("formula", formula, "S-expression")->required();
  th->add_option("--sig", sig_file, "Signature file")->check(CLI::ExistingFile);
  th->add_option("--def", defs, "Signature line 'name := literal' (repeatable)");
  th->add_option("--nvars", nvars, "Number of variables (default: largest index)");

  auto* rw = app.add_subcommand("rewrite", "Normalize i-nodes of a formula");
  rw->add_option("formula", formula, "S-expression")->required();
  rw->add_option("--sig", sig_file, "Signature file")->check(CLI::ExistingFile);
  rw->add_option("--def", defs, "Signature line 'name := literal' (repeatable)");

  auto* cl = app.add_subcommand("classify", "Classify a family descriptor");
  cl->add_option("descriptor", descriptor, "Descriptor JSON file")->required()->check(CLI::ExistingFile);

  auto* basis = app.add_subcommand("basis", "Extract a finite basis");
  basis->add_option("-p", p, "Prime")->required();
  basis->add_option("generators", gens, "Periodic function literals")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("suite", suite, "Suite name or 'all'")->required()->check(CLI::IsMember(choices));
  verify->add_option("--formulas", o.verify.formulas, "Random formulas");
  verify->add_option("--tuples", o.verify.tuples, "Random intersection tuples");
  verify->add_option("--descriptors", o.verify.descriptors, "Random descriptors");
  verify->add_option("--families", o.verify.families, "Random finite families");
  verify->add_option("--max-n", o.verify.grid_max_n, "Grid: largest arity of f")->check(CLI::Range(2, 4));
  verify->add_option("--max-m", o.verify.grid_max_m, "Grid: largest arity of g")->check(CLI::Range(1, 6));
  verify->add_option("--prop2-max", o.verify.prop2_max, "Largest l, m, n for the i-identities")
      ->check(CLI::Range(2, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  try {
    if (!o.config.empty())
      load_config(o.config, o);
    if (format)
      o.format = *format;
    if (o.format != "text" && o.format != "json")
      throw ParseError("format must be text or json");
    if (seed)
      o.seed = *seed;
    if (max_nvars)
      o.caps.max_nvars = max_nvars;
    if (max_arity)
      o.caps.max_arity = max_arity;
    if (max_derived)
      o.caps.max_derived = max_derived;
    if (max_depth)
      o.formula_caps.max_depth = max_depth;
    if (max_nodes)
      o.formula_caps.max_nodes = max_nodes;

    if (*period)
      return cmd_period(o, lit);
    if (*mkfn)
      return cmd_mkfn(o, n, d, t);
    if (*eval)
      return cmd_eval(o, lit, tuple);
    if (*member)
      return cmd_member(o, lit, lit2, mf);
    if (*closure)
      return cmd_closure(o, gens, nvars, list);
    if (*th)
      return cmd_theta(o, load_signature(sig_file, defs), formula, nvars);
    if (*rw)
      return cmd_rewrite(o, load_signature(sig_file, defs), formula);
    if (*cl)
      return cmd_classify(o, descriptor);
    if (*basis)
      return cmd_basis(o, p, gens);
    if (*verify)
      return cmd_verify(o, suite);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
