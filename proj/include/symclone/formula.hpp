#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symclone/symfun.hpp"

namespace symclone {

/// Reserved head name of the variadic identity-like functions i_m.
inline constexpr std::string_view i_head = "i";

/*
 * Immutable formula tree: a variable x_j (j >= 1) or an application of a named
 * function to child formulas. Nodes are shared, so copies are cheap.
 */
class Formula
{
public:
  static Formula variable(std::size_t index);
  static Formula apply(std::string head, std::vector<Formula> args);
  /// i_m(args...) with the builtin head.
  static Formula apply_i(std::vector<Formula> args);

  bool is_variable() const noexcept;
  /// 1-based variable index; throws DomainError for applications.
  std::size_t var_index() const;
  /// Head name; throws DomainError for variables.
  const std::string& head() const;
  /// Children; empty for variables.
  const std::vector<Formula>& args() const noexcept;

  /// Variables have depth 0, an application is one more than its deepest child.
  std::size_t depth() const noexcept;
  /// Number of nodes of the tree (saturating).
  std::size_t node_count() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Function names mapped to their tables. "i" is builtin and cannot be redefined.
class Signature
{
public:
  void add(std::string name, TableFn fn);
  const TableFn* find(std::string_view name) const;
  /// The builtin head, or a name bound to some i_m.
  bool is_i_head(std::string_view name) const;
  const std::map<std::string, TableFn, std::less<>>& entries() const noexcept { return entries_; }

private:
  std::map<std::string, TableFn, std::less<>> entries_;
};

/// One `name := <literal>` per line; blank lines and `#` comments are skipped.
Signature parse_signature(std::string_view text);

/// S-expression syntax: `(name arg ...)`, variables `x1 x2 ...`.
Formula parse_formula(std::string_view text);
std::string to_sexpr(const Formula& f);

struct FormulaCaps
{
  std::size_t max_depth = 8;
  std::size_t max_nodes = 64;
};

/// Throws DomainError if the formula exceeds the caps.
void check_caps(const Formula& f, const FormulaCaps& caps);

/*
 * Throws DomainError unless the root is an application, every head is known with a
 * matching arity, and every variable index is <= nvars.
 */
void check_formula(const Formula& f, const Signature& sig, std::size_t nvars);

/// Sorted indices of the variables occurring in f.
std::vector<std::size_t> variables_of(const Formula& f);
std::size_t max_variable(const Formula& f);

/// Value at alpha in {0,1,2}^nvars (variables must be <= alpha.size()).
int evaluate(const Formula& f, const Signature& sig, std::span<const std::uint8_t> alpha);

/// Realized function over x_1..x_nvars; variables absent from f are dummy coordinates.
TableFn realize(const Formula& f, const Signature& sig, std::size_t nvars);

/// Path of child indices from the root.
using Occurrence = std::vector<std::size_t>;

/// All application occurrences in pre-order.
std::vector<Occurrence> occurrences(const Formula& f);
const Formula& subformula_at(const Formula& f, const Occurrence& occ);
Formula replace_at(const Formula& f, const Occurrence& occ, Formula replacement);

/// Subformula value 0 at alpha implies formula value 0 at alpha.
bool zero_propagation_check(const Formula& f, const Occurrence& occ, const Signature& sig,
                            std::span<const std::uint8_t> alpha);

/// N of f is contained in N of the subformula, both taken over x_1..x_nvars.
bool n_subset_check(const Formula& f, const Occurrence& occ, const Signature& sig, std::size_t nvars);

struct ThetaOccurrence
{
  Occurrence occurrence;
  std::string head;
  TableFn fn;
};

struct ThetaResult
{
  /// Deduplicated head functions.
  std::vector<TableFn> functions;
  /// Every occurrence whose replacement by i_m changes the realized function.
  std::vector<ThetaOccurrence> occurrences;
};

ThetaResult theta(const Formula& f, const Signature& sig, std::size_t nvars);

/// The occurrence realizes something other than i over its own variables.
bool is_essential(const Formula& f, const Occurrence& occ, const Signature& sig, std::size_t nvars);

/// q_1..q_nvars: occurrences of each variable among the arguments of the occurrence.
std::vector<std::size_t> variable_counts(const Formula& f, const Occurrence& occ, std::size_t nvars);

/*
 * Normalizes i-nodes until nothing changes: nested i-nodes are flattened into
 * their parent i-node and repeated arguments of an i-node are dropped.
 */
Formula rewrite_i(const Formula& f, const Signature& sig);

} // namespace symclone
