#include "symclone/formula.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <variant>

#include "symclone/error.hpp"
#include "symclone/literal.hpp"

namespace symclone {

struct Formula::Node
{
  std::size_t var = 0; // 0 for applications
  std::string head;
  std::vector<Formula> args;
  std::size_t depth = 0;
  std::size_t nodes = 1;
};

namespace {

std::size_t sat_add(std::size_t a, std::size_t b)
{
  return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max() : a + b;
}

bool is_variable_token(std::string_view tok)
{
  if (tok.size() < 2 || tok[0] != 'x')
    return false;
  return std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

} // namespace

// ----------------------------------------------------------------- Formula

Formula Formula::variable(std::size_t index)
{
  if (index == 0)
    throw DomainError("variable indices start at 1");
  auto node = std::make_shared<Node>();
  node->var = index;
  return Formula(std::move(node));
}

Formula Formula::apply(std::string head, std::vector<Formula> args)
{
  if (head.empty())
    throw DomainError("application needs a head name");
  if (args.empty())
    throw DomainError("application '" + head + "' needs at least one argument");
  auto node = std::make_shared<Node>();
  std::size_t depth = 0;
  std::size_t nodes = 1;
  for (const auto& a : args) {
    depth = std::max(depth, a.depth());
    nodes = sat_add(nodes, a.node_count());
  }
  node->head = std::move(head);
  node->args = std::move(args);
  node->depth = depth + 1;
  node->nodes = nodes;
  return Formula(std::move(node));
}

Formula Formula::apply_i(std::vector<Formula> args) { return apply(std::string(i_head), std::move(args)); }

bool Formula::is_variable() const noexcept { return node_->var != 0; }

std::size_t Formula::var_index() const
{
  if (!is_variable())
    throw DomainError("not a variable");
  return node_->var;
}

const std::string& Formula::head() const
{
  if (is_variable())
    throw DomainError("a variable has no head");
  return node_->head;
}

const std::vector<Formula>& Formula::args() const noexcept { return node_->args; }

std::size_t Formula::depth() const noexcept { return node_->depth; }

std::size_t Formula::node_count() const noexcept { return node_->nodes; }

bool operator==(const Formula& a, const Formula& b) noexcept
{
  if (a.node_ == b.node_)
    return true;
  if (a.node_->var != b.node_->var || a.node_->head != b.node_->head || a.node_->args.size() != b.node_->args.size())
    return false;
  return std::equal(a.node_->args.begin(), a.node_->args.end(), b.node_->args.begin());
}

// --------------------------------------------------------------- Signature

void Signature::add(std::string name, TableFn fn)
{
  if (name.empty() || name == i_head || is_variable_token(name))
    throw DomainError("signature: reserved or empty name '" + name + "'");
  for (char c : name)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')')
      throw DomainError("signature: bad character in name '" + name + "'");
  auto [it, inserted] = entries_.emplace(std::move(name), std::move(fn));
  if (!inserted)
    throw DomainError("signature: duplicate name '" + it->first + "'");
}

const TableFn* Signature::find(std::string_view name) const
{
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

bool Signature::is_i_head(std::string_view name) const
{
  if (name == i_head)
    return true;
  auto f = find(name);
  return f && is_i(*f);
}

Signature parse_signature(std::string_view text)
{
  Signature sig;
  std::size_t lineno = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())))
      line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.remove_suffix(1);
    if (line.empty())
      continue;
    auto sep = line.find(":=");
    if (sep == std::string_view::npos)
      throw ParseError("signature line " + std::to_string(lineno) + ": expected 'name := <literal>'");
    auto name = line.substr(0, sep);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
      name.remove_suffix(1);
    try {
      sig.add(std::string(name), as_table(parse_literal(line.substr(sep + 2))));
    } catch (const Error& e) {
      throw ParseError("signature line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return sig;
}

// ------------------------------------------------------------------ syntax

namespace {

class SexprParser
{
public:
  explicit SexprParser(std::string_view text) : text_(text) {}

  Formula parse_all()
  {
    auto f = parse();
    skip_space();
    if (pos_ != text_.size())
      fail("trailing input");
    return f;
  }

private:
  Formula parse()
  {
    skip_space();
    if (pos_ >= text_.size())
      fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      skip_space();
      auto head = token();
      if (head.empty())
        fail("missing head");
      if (is_variable_token(head))
        fail("head cannot be a variable");
      std::vector<Formula> args;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size())
          fail("unclosed '('");
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        args.push_back(parse());
      }
      if (args.empty())
        fail("application '" + std::string(head) + "' has no arguments");
      return Formula::apply(std::string(head), std::move(args));
    }
    auto tok = token();
    if (!is_variable_token(tok))
      fail("expected a variable x<k> or '(' but found '" + std::string(tok) + "'");
    std::size_t index = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), index);
    if (ec != std::errc{} || index == 0)
      fail("bad variable '" + std::string(tok) + "'");
    return Formula::variable(index);
  }

  std::string_view token()
  {
    auto start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')')
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void skip_space()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const
  {
    throw ParseError("formula at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void sexpr_into(const Formula& f, std::string& out)
{
  if (f.is_variable()) {
    out += 'x';
    out += std::to_string(f.var_index());
    return;
  }
  out += '(';
  out += f.head();
  for (const auto& a : f.args()) {
    out += ' ';
    sexpr_into(a, out);
  }
  out += ')';
}

} // namespace

Formula parse_formula(std::string_view text) { return SexprParser(text).parse_all(); }

std::string to_sexpr(const Formula& f)
{
  std::string out;
  sexpr_into(f, out);
  return out;
}

void check_caps(const Formula& f, const FormulaCaps& caps)
{
  if (f.depth() > caps.max_depth)
    throw DomainError("formula depth " + std::to_string(f.depth()) + " exceeds cap " + std::to_string(caps.max_depth));
  if (f.node_count() > caps.max_nodes)
    throw DomainError("formula size " + std::to_string(f.node_count()) + " exceeds cap " +
                      std::to_string(caps.max_nodes));
}

namespace {

void check_node(const Formula& f, const Signature& sig, std::size_t nvars)
{
  if (f.is_variable()) {
    if (f.var_index() > nvars)
      throw DomainError("variable x" + std::to_string(f.var_index()) + " exceeds nvars=" + std::to_string(nvars));
    return;
  }
  if (f.head() != i_head) {
    auto fn = sig.find(f.head());
    if (!fn)
      throw DomainError("unknown function '" + f.head() + "'");
    if (fn->arity() != f.args().size())
      throw DomainError("'" + f.head() + "' has arity " + std::to_string(fn->arity()) + " but is applied to " +
                        std::to_string(f.args().size()) + " arguments");
  }
  for (const auto& a : f.args())
    check_node(a, sig, nvars);
}

void collect_vars(const Formula& f, std::vector<bool>& seen)
{
  if (f.is_variable()) {
    if (seen.size() <= f.var_index())
      seen.resize(f.var_index() + 1, false);
    seen[f.var_index()] = true;
    return;
  }
  for (const auto& a : f.args())
    collect_vars(a, seen);
}

void count_vars(const Formula& f, std::vector<std::size_t>& q)
{
  if (f.is_variable()) {
    if (f.var_index() <= q.size())
      ++q[f.var_index() - 1];
    return;
  }
  for (const auto& a : f.args())
    count_vars(a, q);
}

} // namespace

void check_formula(const Formula& f, const Signature& sig, std::size_t nvars)
{
  if (f.is_variable())
    throw DomainError("a bare variable is a projection, not a function of R");
  check_node(f, sig, nvars);
}

std::vector<std::size_t> variables_of(const Formula& f)
{
  std::vector<bool> seen;
  collect_vars(f, seen);
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j < seen.size(); ++j)
    if (seen[j])
      out.push_back(j);
  return out;
}

std::size_t max_variable(const Formula& f)
{
  auto vars = variables_of(f);
  return vars.empty() ? 0 : vars.back();
}

// --------------------------------------------------------------- semantics

int evaluate(const Formula& f, const Signature& sig, std::span<const std::uint8_t> alpha)
{
  if (f.is_variable()) {
    if (f.var_index() > alpha.size())
      throw DomainError("variable x" + std::to_string(f.var_index()) + " has no value");
    return alpha[f.var_index() - 1];
  }
  const auto& args = f.args();
  Tuple values(args.size());
  for (std::size_t k = 0; k < args.size(); ++k)
    values[k] = static_cast<std::uint8_t>(evaluate(args[k], sig, alpha));
  if (f.head() == i_head)
    return std::none_of(values.begin(), values.end(), [](auto v) { return v == 0; }) ? 1 : 0;
  auto fn = sig.find(f.head());
  if (!fn)
    throw DomainError("unknown function '" + f.head() + "'");
  return fn->eval(values);
}

TableFn realize(const Formula& f, const Signature& sig, std::size_t nvars)
{
  check_formula(f, sig, nvars);
  TableFn out(nvars);
  for (std::size_t i = 0; i < out.size(); ++i)
    if (evaluate(f, sig, index_tuple(i, nvars)))
      out.set(i);
  return out;
}

namespace {

void collect_occurrences(const Formula& f, Occurrence& path, std::vector<Occurrence>& out)
{
  if (f.is_variable())
    return;
  out.push_back(path);
  for (std::size_t k = 0; k < f.args().size(); ++k) {
    path.push_back(k);
    collect_occurrences(f.args()[k], path, out);
    path.pop_back();
  }
}

Formula replace_rec(const Formula& f, const Occurrence& occ, std::size_t depth, Formula replacement)
{
  if (depth == occ.size())
    return replacement;
  if (f.is_variable() || occ[depth] >= f.args().size())
    throw DomainError("occurrence path is not valid in the formula");
  auto args = f.args();
  args[occ[depth]] = replace_rec(args[occ[depth]], occ, depth + 1, std::move(replacement));
  return Formula::apply(f.head(), std::move(args));
}

TableFn head_function(const Formula& node, const Signature& sig)
{
  if (node.head() == i_head)
    return to_table(SymmetricFn::identity(node.args().size()));
  return *sig.find(node.head());
}

} // namespace

std::vector<Occurrence> occurrences(const Formula& f)
{
  std::vector<Occurrence> out;
  Occurrence path;
  collect_occurrences(f, path, out);
  return out;
}

const Formula& subformula_at(const Formula& f, const Occurrence& occ)
{
  const Formula* cur = &f;
  for (auto k : occ) {
    if (cur->is_variable() || k >= cur->args().size())
      throw DomainError("occurrence path is not valid in the formula");
    cur = &cur->args()[k];
  }
  return *cur;
}

Formula replace_at(const Formula& f, const Occurrence& occ, Formula replacement)
{
  return replace_rec(f, occ, 0, std::move(replacement));
}

bool zero_propagation_check(const Formula& f, const Occurrence& occ, const Signature& sig,
                            std::span<const std::uint8_t> alpha)
{
  const auto& sub = subformula_at(f, occ);
  if (evaluate(sub, sig, alpha) != 0)
    return true;
  return evaluate(f, sig, alpha) == 0;
}

bool n_subset_check(const Formula& f, const Occurrence& occ, const Signature& sig, std::size_t nvars)
{
  const auto whole = realize(f, sig, nvars);
  const auto part = realize(subformula_at(f, occ), sig, nvars);
  for (std::size_t k = 0; k < whole.words().size(); ++k)
    if (whole.words()[k] & ~part.words()[k])
      return false;
  return true;
}

ThetaResult theta(const Formula& f, const Signature& sig, std::size_t nvars)
{
  const auto whole = realize(f, sig, nvars);
  ThetaResult out;
  for (auto& occ : occurrences(f)) {
    const auto& node = subformula_at(f, occ);
    if (sig.is_i_head(node.head()))
      continue;
    auto replaced = replace_at(f, occ, Formula::apply_i(node.args()));
    if (realize(replaced, sig, nvars) == whole)
      continue;
    auto fn = head_function(node, sig);
    if (std::find(out.functions.begin(), out.functions.end(), fn) == out.functions.end())
      out.functions.push_back(fn);
    out.occurrences.push_back({std::move(occ), node.head(), std::move(fn)});
  }
  return out;
}

bool is_essential(const Formula& f, const Occurrence& occ, const Signature& sig, std::size_t nvars)
{
  const auto& sub = subformula_at(f, occ);
  if (sub.is_variable())
    throw DomainError("is_essential: occurrence is a variable");
  // Absent variables are dummy, so "equal to i over its own variables" is "all ones".
  return !realize(sub, sig, nvars).is_all_ones();
}

std::vector<std::size_t> variable_counts(const Formula& f, const Occurrence& occ, std::size_t nvars)
{
  const auto& sub = subformula_at(f, occ);
  if (sub.is_variable())
    throw DomainError("variable_counts: occurrence is a variable");
  std::vector<std::size_t> q(nvars, 0);
  for (const auto& a : sub.args())
    count_vars(a, q);
  return q;
}

Formula rewrite_i(const Formula& f, const Signature& sig)
{
  if (f.is_variable())
    return f;
  std::vector<Formula> args;
  args.reserve(f.args().size());
  for (const auto& a : f.args())
    args.push_back(rewrite_i(a, sig));
  if (!sig.is_i_head(f.head()))
    return Formula::apply(f.head(), std::move(args));

  // Children are already normal, so one flattening pass reaches the fixpoint.
  std::vector<Formula> flat;
  for (auto& a : args) {
    if (!a.is_variable() && sig.is_i_head(a.head()))
      flat.insert(flat.end(), a.args().begin(), a.args().end());
    else
      flat.push_back(std::move(a));
  }
  std::vector<Formula> unique;
  for (auto& a : flat)
    if (std::find(unique.begin(), unique.end(), a) == unique.end())
      unique.push_back(std::move(a));
  return Formula::apply_i(std::move(unique));
}

} // namespace symclone
