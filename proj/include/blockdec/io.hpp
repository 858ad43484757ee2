#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "blockdec/core.hpp"
#include "blockdec/stanley.hpp"
#include "blockdec/subprime.hpp"

// Parsing and rendering. Two interchangeable document forms exist: a JSON
// object {n, variable_names?, generators?, blocks?} and a text form (inline
// monomial lists for ideals, two-row matrices for decompositions). Rendered
// and re-parsed documents are identical; rendering never includes empty
// blocks. All output is deterministic.

namespace blockdec {

inline std::vector<std::string> default_variable_names(std::size_t n) {
  static const char* const letters[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  names.reserve(n);
  if (n <= 4) {
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(letters[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

inline std::string render_monomial(const ExponentVector& m,
                                   const std::vector<std::string>& names) {
  detail::require_same_dimension(m.size(), names.size());
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string render_ideal(const MonomialIdeal& ideal,
                                const std::vector<std::string>& names) {
  if (ideal.is_zero()) return "<0>";
  std::string out = "<";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i > 0) out += ", ";
    out += render_monomial(ideal.generators()[i], names);
  }
  return out + ">";
}

namespace detail {

inline std::string extent_token(const Extent& e) {
  return e.is_infinite() ? "inf" : std::to_string(e.value());
}

}  // namespace detail

/// Two-row matrix, outer corner on top, columns right-aligned.
inline std::string render_block_text(const Block& b) {
  std::vector<std::string> top, bottom;
  for (const Extent& e : b.outer()) top.push_back(detail::extent_token(e));
  for (Exponent e : b.inner()) bottom.push_back(std::to_string(e));
  std::string line1 = "[", line2 = "[";
  for (std::size_t i = 0; i < top.size(); ++i) {
    const std::size_t width = std::max(top[i].size(), bottom[i].size());
    line1 += ' ' + std::string(width - top[i].size(), ' ') + top[i];
    line2 += ' ' + std::string(width - bottom[i].size(), ' ') + bottom[i];
  }
  return line1 + " ]\n" + line2 + " ]\n";
}

/// One-line form "[ b / a ]", used inside filtration displays.
inline std::string render_block_inline(const Block& b) {
  std::ostringstream os;
  os << b;
  return os.str();
}

inline std::string render_decomposition_text(const BlockDecomposition& d) {
  std::string out;
  bool first = true;
  for (const Block& b : d.blocks()) {
    if (b.is_empty()) continue;
    if (!first) out += '\n';
    out += render_block_text(b);
    first = false;
  }
  return out;
}

inline std::string render_ideal_json(
    const MonomialIdeal& ideal,
    const std::optional<std::vector<std::string>>& names = {}) {
  nlohmann::json j;
  j["n"] = ideal.dimension();
  if (names) j["variable_names"] = *names;
  j["generators"] = ideal.generators();
  return j.dump(2) + "\n";
}

inline std::string render_decomposition_json(
    const BlockDecomposition& d,
    const std::optional<std::vector<std::string>>& names = {}) {
  nlohmann::json j;
  j["n"] = d.dimension();
  if (names) j["variable_names"] = *names;
  auto blocks = nlohmann::json::array();
  for (const Block& b : d.blocks()) {
    if (b.is_empty()) continue;
    nlohmann::json jb;
    jb["a"] = b.inner();
    auto top = nlohmann::json::array();
    for (const Extent& e : b.outer()) {
      if (e.is_infinite())
        top.push_back("inf");
      else
        top.push_back(e.value());
    }
    jb["b"] = std::move(top);
    blocks.push_back(std::move(jb));
  }
  j["blocks"] = std::move(blocks);
  return j.dump(2) + "\n";
}

inline std::string render_stanley_space(const StanleySpace& s,
                                        const std::vector<std::string>& names) {
  detail::require_same_dimension(s.base.size(), names.size());
  std::string out = "K";
  if (!s.free_variables.empty()) {
    out += '[';
    for (std::size_t k = 0; k < s.free_variables.size(); ++k) {
      if (k > 0) out += ',';
      out += names.at(s.free_variables[k]);
    }
    out += ']';
  }
  bool origin = true;
  for (Exponent e : s.base) origin = origin && e == 0;
  if (!origin) out += "·" + render_monomial(s.base, names);
  return out;
}

inline std::string render_filtration(const Filtration& f,
                                     const std::vector<std::string>& names) {
  std::string out = "I_0 = " + render_ideal(f.ideals.at(0), names) + "\n";
  for (std::size_t k = 0; k < f.blocks.size(); ++k) {
    out += "B_" + std::to_string(k + 1) + " = " +
           render_block_inline(f.blocks[k]) + "\n";
    out += "I_" + std::to_string(k + 1) + " = " +
           render_ideal(f.ideals.at(k + 1), names) + "\n";
  }
  return out;
}

struct IdealDocument {
  MonomialIdeal ideal;
  std::optional<std::vector<std::string>> variable_names;
  std::vector<ExponentVector> dropped_generators;  // redundant on load
};

struct DecompositionDocument {
  BlockDecomposition decomposition;
  std::optional<std::vector<std::string>> variable_names;
};

namespace detail {

inline bool looks_like_json(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

[[noreturn]] inline void parse_fail(std::size_t pos, const std::string& what) {
  throw std::invalid_argument("parse error at position " +
                              std::to_string(pos) + ": " + what);
}

// Inline monomial syntax: comma-separated products of name^exponent factors.
// With no explicit variable names, the classical letters x, y, z, w and the
// canonical names x1..xn are both accepted.
struct MonomialListParser {
  std::string_view text;
  const std::vector<std::string>* names = nullptr;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eof() {
    skip_ws();
    return pos == text.size();
  }

  Exponent parse_nat() {
    skip_ws();
    const std::size_t start = pos;
    Exponent value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos,
                                     text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + pos)
      parse_fail(start, "expected a number");
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }

  std::string parse_name() {
    skip_ws();
    const std::size_t start = pos;
    if (pos == text.size() ||
        !std::isalpha(static_cast<unsigned char>(text[pos])))
      parse_fail(start, "expected a variable name");
    std::string name;
    name += text[pos++];
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      name += text[pos++];
    return name;
  }

  std::size_t resolve(const std::string& name, std::size_t at) {
    if (names) {
      for (std::size_t i = 0; i < names->size(); ++i)
        if ((*names)[i] == name) return i;
      parse_fail(at, "unknown variable '" + name + "'");
    }
    static const std::string letters[] = {"x", "y", "z", "w"};
    for (std::size_t i = 0; i < 4; ++i)
      if (name == letters[i]) return i;
    if (name.size() >= 2 && name[0] == 'x') {
      std::size_t index = 0;
      auto [ptr, ec] = std::from_chars(name.data() + 1,
                                       name.data() + name.size(), index);
      if (ec == std::errc{} && ptr == name.data() + name.size() && index >= 1)
        return index - 1;
    }
    parse_fail(at, "unknown variable '" + name + "'");
  }

  // Returns (index, exponent) pairs; empty for the literal 1.
  std::vector<std::pair<std::size_t, Exponent>> parse_term() {
    std::vector<std::pair<std::size_t, Exponent>> factors;
    skip_ws();
    if (pos < text.size() && text[pos] == '1') {
      ++pos;
      return factors;
    }
    while (true) {
      skip_ws();
      const std::size_t at = pos;
      const std::string name = parse_name();
      const std::size_t index = resolve(name, at);
      Exponent exponent = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        exponent = parse_nat();
      }
      factors.emplace_back(index, exponent);
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    return factors;
  }
};

inline nlohmann::json parse_json_document(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
}

inline std::size_t json_dimension(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned())
    throw std::invalid_argument("document needs a field \"n\" >= 1");
  const std::size_t n = j["n"].get<std::size_t>();
  if (n == 0) throw std::invalid_argument("document needs \"n\" >= 1");
  return n;
}

inline std::optional<std::vector<std::string>> json_variable_names(
    const nlohmann::json& j, std::size_t n) {
  if (!j.contains("variable_names")) return std::nullopt;
  const auto& v = j["variable_names"];
  if (!v.is_array() || v.size() != n)
    throw std::invalid_argument("variable_names must list one name per axis");
  std::vector<std::string> names;
  for (const auto& name : v) {
    if (!name.is_string())
      throw std::invalid_argument("variable_names entries must be strings");
    names.push_back(name.get<std::string>());
  }
  return names;
}

inline ExponentVector json_point(const nlohmann::json& j, std::size_t n,
                                 const char* what) {
  if (!j.is_array() || j.size() != n)
    throw std::invalid_argument(std::string(what) + " must have n entries");
  ExponentVector p;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<Exponent>() < 0)
      throw std::invalid_argument(std::string(what) +
                                  " entries must be nonnegative integers");
    p.push_back(e.get<Exponent>());
  }
  return p;
}

}  // namespace detail

/// Parse an ideal from JSON or inline monomial syntax. Generators are
/// minimalized on load; anything dropped is reported so callers can warn.
inline IdealDocument parse_ideal(const std::string& text,
                                 std::optional<std::size_t> dimension = {}) {
  std::optional<std::vector<std::string>> names;
  std::vector<ExponentVector> raw;
  std::size_t n = 0;

  if (detail::looks_like_json(text)) {
    const nlohmann::json j = detail::parse_json_document(text);
    n = detail::json_dimension(j);
    if (dimension && *dimension != n)
      throw std::invalid_argument("requested dimension disagrees with \"n\"");
    names = detail::json_variable_names(j, n);
    if (j.contains("generators")) {
      if (!j["generators"].is_array())
        throw std::invalid_argument("generators must be an array");
      for (const auto& g : j["generators"])
        raw.push_back(detail::json_point(g, n, "generator"));
    }
  } else {
    detail::MonomialListParser parser{text};
    std::vector<std::vector<std::pair<std::size_t, Exponent>>> terms;
    std::size_t max_index = 0;
    bool any = false;
    if (!parser.eof()) {
      // a single "0" denotes the zero ideal
      parser.skip_ws();
      if (parser.pos < text.size() && text[parser.pos] == '0') {
        ++parser.pos;
        if (!parser.eof())
          detail::parse_fail(parser.pos, "unexpected trailing input");
      } else {
        while (true) {
          auto term = parser.parse_term();
          any = true;
          for (const auto& [index, exponent] : term)
            max_index = std::max(max_index, index);
          terms.push_back(std::move(term));
          parser.skip_ws();
          if (parser.pos < text.size() && text[parser.pos] == ',') {
            ++parser.pos;
            continue;
          }
          break;
        }
        if (!parser.eof())
          detail::parse_fail(parser.pos, "unexpected trailing input");
      }
    }
    if (dimension) {
      n = *dimension;
      if (any && max_index >= n)
        throw std::invalid_argument(
            "generator references axis beyond the requested dimension");
    } else if (any) {
      n = max_index + 1;
    } else {
      throw std::invalid_argument(
          "cannot infer the dimension of an ideal with no generators");
    }
    for (const auto& term : terms) {
      ExponentVector g(n, 0);
      for (const auto& [index, exponent] : term) g[index] += exponent;
      raw.push_back(std::move(g));
    }
  }

  MonomialIdeal ideal(n, raw);
  std::vector<ExponentVector> dropped;
  std::vector<bool> consumed(ideal.generators().size(), false);
  for (const auto& g : raw) {
    bool kept = false;
    for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
      if (!consumed[i] && ideal.generators()[i] == g) {
        consumed[i] = true;
        kept = true;
        break;
      }
    }
    if (!kept) dropped.push_back(g);
  }
  return IdealDocument{std::move(ideal), std::move(names), std::move(dropped)};
}

/// Parse a decomposition from JSON or from the two-row matrix text form.
inline DecompositionDocument parse_decomposition(const std::string& text) {
  if (detail::looks_like_json(text)) {
    const nlohmann::json j = detail::parse_json_document(text);
    const std::size_t n = detail::json_dimension(j);
    auto names = detail::json_variable_names(j, n);
    if (!j.contains("blocks") || !j["blocks"].is_array())
      throw std::invalid_argument("document needs an array \"blocks\"");
    BlockDecomposition d(n);
    for (const auto& jb : j["blocks"]) {
      if (!jb.is_object() || !jb.contains("a") || !jb.contains("b"))
        throw std::invalid_argument("each block needs fields \"a\" and \"b\"");
      ExponentVector inner = detail::json_point(jb["a"], n, "block corner a");
      const auto& top = jb["b"];
      if (!top.is_array() || top.size() != n)
        throw std::invalid_argument("block corner b must have n entries");
      ExtentVector outer;
      for (const auto& e : top) {
        if (e.is_string() && e.get<std::string>() == "inf")
          outer.push_back(Extent::infinity());
        else if (e.is_number_integer() && e.get<Exponent>() >= 0)
          outer.push_back(Extent(e.get<Exponent>()));
        else
          throw std::invalid_argument(
              "block corner b entries must be nonnegative integers or "
              "\"inf\"");
      }
      d.append(Block(std::move(inner), std::move(outer)));
    }
    return DecompositionDocument{std::move(d), std::move(names)};
  }

  // Text form: pairs of bracketed rows, outer corner first.
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto open = line.find('[');
    if (open == std::string::npos) {
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c)))
          throw std::invalid_argument("parse error at line " +
                                      std::to_string(lineno) +
                                      ": expected a bracketed row");
      continue;
    }
    const auto close = line.find(']', open);
    if (close == std::string::npos)
      throw std::invalid_argument("parse error at line " +
                                  std::to_string(lineno) +
                                  ": unterminated row");
    std::istringstream cells(line.substr(open + 1, close - open - 1));
    std::vector<std::string> tokens;
    std::string token;
    while (cells >> token) tokens.push_back(token);
    if (tokens.empty())
      throw std::invalid_argument("parse error at line " +
                                  std::to_string(lineno) + ": empty row");
    rows.push_back(std::move(tokens));
  }
  if (rows.empty())
    throw std::invalid_argument("decomposition document has no blocks");
  if (rows.size() % 2 != 0)
    throw std::invalid_argument("expected an even number of matrix rows");
  const std::size_t n = rows[0].size();
  BlockDecomposition d(n);
  for (std::size_t r = 0; r < rows.size(); r += 2) {
    const auto& top = rows[r];
    const auto& bottom = rows[r + 1];
    if (top.size() != n || bottom.size() != n)
      throw std::invalid_argument("matrix rows have inconsistent widths");
    ExtentVector outer;
    ExponentVector inner;
    for (const std::string& t : top) {
      if (t == "inf") {
        outer.push_back(Extent::infinity());
      } else {
        Exponent v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc{} || ptr != t.data() + t.size() || v < 0)
          throw std::invalid_argument("bad outer entry '" + t + "'");
        outer.push_back(Extent(v));
      }
    }
    for (const std::string& t : bottom) {
      Exponent v = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc{} || ptr != t.data() + t.size() || v < 0)
        throw std::invalid_argument("bad inner entry '" + t + "'");
      inner.push_back(v);
    }
    d.append(Block(std::move(inner), std::move(outer)));
  }
  return DecompositionDocument{std::move(d), std::nullopt};
}

}  // namespace blockdec
