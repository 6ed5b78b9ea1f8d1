#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "symclone/symfun.hpp"

namespace symclone {

using AnyFn = std::variant<SymmetricFn, TableFn>;

/*
 * Function literals:
 *   sym n=<N> layers=<d1,d2,...>
 *   periodic n=<N> d=<D> t=<T>
 *   table n=<N> bits=<hex>
 * In a table literal bit i of the hex number is the value on the tuple with index i
 * (see tuple_index). Throws ParseError on malformed text and DomainError on bad values.
 */
AnyFn parse_literal(std::string_view text);

std::string format_literal(const SymmetricFn& f);
std::string format_literal(const PeriodicProfile& p);
std::string format_literal(const TableFn& f);
std::string format_literal(const AnyFn& f);

/// Hex digits of a table, most significant first.
std::string table_hex(const TableFn& f);

TableFn as_table(const AnyFn& f);
std::optional<SymmetricFn> as_symmetric(const AnyFn& f);
std::optional<PeriodicProfile> as_profile(const AnyFn& f);

} // namespace symclone
