#include "symclone/literal.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

#include "symclone/error.hpp"

namespace symclone {

namespace {

std::uint64_t parse_uint(std::string_view key, std::string_view s)
{
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ParseError("literal: bad integer for '" + std::string(key) + "': '" + std::string(s) + "'");
  return v;
}

std::map<std::string, std::string, std::less<>> parse_fields(std::istringstream& in)
{
  std::map<std::string, std::string, std::less<>> fields;
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ParseError("literal: expected key=value, got '" + tok + "'");
    auto [it, inserted] = fields.emplace(tok.substr(0, eq), tok.substr(eq + 1));
    if (!inserted)
      throw ParseError("literal: duplicate field '" + it->first + "'");
  }
  return fields;
}

std::string_view require(const std::map<std::string, std::string, std::less<>>& fields, std::string_view key)
{
  auto it = fields.find(key);
  if (it == fields.end())
    throw ParseError("literal: missing field '" + std::string(key) + "'");
  return it->second;
}

void expect_only(const std::map<std::string, std::string, std::less<>>& fields,
                 std::initializer_list<std::string_view> keys)
{
  for (const auto& [k, v] : fields) {
    bool known = false;
    for (auto key : keys)
      known = known || k == key;
    if (!known)
      throw ParseError("literal: unknown field '" + k + "'");
  }
}

std::size_t checked_arity(std::uint64_t n)
{
  if (n == 0 || n > TableFn::max_arity)
    throw DomainError("literal: arity must be in 1.." + std::to_string(TableFn::max_arity));
  return static_cast<std::size_t>(n);
}

int hex_value(char c)
{
  if (c >= '0' && c <= '9')
    return c - '0';
  if (c >= 'a' && c <= 'f')
    return c - 'a' + 10;
  if (c >= 'A' && c <= 'F')
    return c - 'A' + 10;
  return -1;
}

} // namespace

AnyFn parse_literal(std::string_view text)
{
  std::istringstream in{std::string(text)};
  std::string kind;
  if (!(in >> kind))
    throw ParseError("literal: empty");
  auto fields = parse_fields(in);

  if (kind == "periodic") {
    expect_only(fields, {"n", "d", "t"});
    const auto n = checked_arity(parse_uint("n", require(fields, "n")));
    const auto d = parse_uint("d", require(fields, "d"));
    const auto t = parse_uint("t", require(fields, "t"));
    return make_periodic(n, d, t);
  }
  if (kind == "sym") {
    expect_only(fields, {"n", "layers"});
    const auto n = checked_arity(parse_uint("n", require(fields, "n")));
    std::vector<std::size_t> layers;
    std::string_view list = require(fields, "layers");
    while (!list.empty()) {
      auto comma = list.find(',');
      auto item = list.substr(0, comma);
      layers.push_back(parse_uint("layers", item));
      list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    }
    return SymmetricFn::from_layers(n, layers);
  }
  if (kind == "table") {
    expect_only(fields, {"n", "bits"});
    const auto n = checked_arity(parse_uint("n", require(fields, "n")));
    std::string_view hex = require(fields, "bits");
    if (hex.starts_with("0x") || hex.starts_with("0X"))
      hex.remove_prefix(2);
    if (hex.empty())
      throw ParseError("literal: empty bits");
    TableFn f(n);
    std::size_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
      const int v = hex_value(*it);
      if (v < 0)
        throw ParseError("literal: bad hex digit '" + std::string(1, *it) + "'");
      for (int b = 0; b < 4; ++b) {
        if (!((v >> b) & 1))
          continue;
        if (bit + b >= f.size())
          throw DomainError("literal: bits exceed the 2^n table entries");
        f.set(bit + b);
      }
    }
    return f;
  }
  throw ParseError("literal: unknown kind '" + kind + "' (expected sym, periodic or table)");
}

std::string table_hex(const TableFn& f)
{
  static constexpr char digits[] = "0123456789abcdef";
  const std::size_t ndigits = (f.size() + 3) / 4;
  std::string out(ndigits, '0');
  for (std::size_t k = 0; k < ndigits; ++k) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const auto i = 4 * k + b;
      if (i < f.size() && f.bit(i))
        v |= 1 << b;
    }
    out[ndigits - 1 - k] = digits[v];
  }
  return out;
}

std::string format_literal(const SymmetricFn& f)
{
  std::string out = "sym n=" + std::to_string(f.arity()) + " layers=";
  bool first = true;
  for (auto d : f.set_layers()) {
    if (!first)
      out += ',';
    out += std::to_string(d);
    first = false;
  }
  return out;
}

std::string format_literal(const PeriodicProfile& p)
{
  return "periodic n=" + std::to_string(p.arity) + " d=" + std::to_string(p.offset) + " t=" + std::to_string(p.period);
}

std::string format_literal(const TableFn& f) { return "table n=" + std::to_string(f.arity()) + " bits=" + table_hex(f); }

std::string format_literal(const AnyFn& f)
{
  return std::visit([](const auto& g) { return format_literal(g); }, f);
}

TableFn as_table(const AnyFn& f)
{
  if (auto s = std::get_if<SymmetricFn>(&f))
    return to_table(*s);
  return std::get<TableFn>(f);
}

std::optional<SymmetricFn> as_symmetric(const AnyFn& f)
{
  if (auto s = std::get_if<SymmetricFn>(&f))
    return *s;
  return from_table(std::get<TableFn>(f));
}

std::optional<PeriodicProfile> as_profile(const AnyFn& f)
{
  auto s = as_symmetric(f);
  if (!s)
    return std::nullopt;
  return detect_period(*s);
}

} // namespace symclone
