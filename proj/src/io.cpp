/*
 *   Copyright 2026 The assocgraph Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "assocgraph/io.hpp"

#include "assocgraph/errors.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace assocgraph::io {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

// Content lines only: blank and '#' lines are dropped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

std::size_t line_count(std::string_view text) {
  std::size_t n = 0;
  for (char c : text) n += c == '\n';
  if (!text.empty() && text.back() != '\n') ++n;
  return n;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  while (true) {
    const auto tab = line.find('\t');
    out.push_back(line.substr(0, tab));
    if (tab == std::string_view::npos) return out;
    line.remove_prefix(tab + 1);
  }
}

// Splits on commas that are not inside braces.
std::vector<std::string_view> split_top_level_commas(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '{') ++depth;
    else if (s[i] == '}') --depth;
    else if (s[i] == ',' && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

[[noreturn]] void fail(const char* role, std::size_t line, std::string column,
                       std::string message) {
  throw ParseError(ParseDiagnostic{role, line, std::move(column), std::move(message)});
}

void check_key(const char* role, std::size_t line, std::string_view key,
               const char* what) {
  if (key.empty()) fail(role, line, what, "empty key");
}

Value decode_field(const char* role, std::size_t line, std::string_view field,
                   const char* what, const Algebra& alg) {
  try {
    return alg.decode(field);
  } catch (const DomainError& e) {
    fail(role, line, what, e.what());
  }
}

template <typename Decode>
std::vector<Triple> parse_triples_with(std::string_view text, Decode decode) {
  constexpr const char* role = "triples";
  std::vector<Triple> out;
  for (const Line& line : content_lines(text)) {
    const auto fields = split_tabs(line.text);
    if (fields.size() != 3)
      fail(role, line.number, "",
           "expected 3 tab-separated fields, found " + std::to_string(fields.size()));
    check_key(role, line.number, fields[0], "field 1 (row)");
    check_key(role, line.number, fields[1], "field 2 (col)");
    Value value;
    try {
      value = decode(fields[2]);
    } catch (const DomainError& e) {
      fail(role, line.number, "field 3 (value)", e.what());
    }
    out.push_back(Triple{std::string(fields[0]), std::string(fields[1]), std::move(value)});
  }
  return out;
}

}  // namespace

std::vector<Triple> parse_triples(std::string_view text, const Algebra& alg) {
  return parse_triples_with(text, [&](std::string_view s) { return alg.decode(s); });
}

std::vector<Triple> parse_set_triples(std::string_view text) {
  return parse_triples_with(text, Value::decode_token_set);
}

graph::Graph parse_edge_list(std::string_view text, const Algebra& alg) {
  constexpr const char* role = "edge-list";
  graph::Graph g;
  std::map<std::string, std::size_t, std::less<>> position;

  auto add_endpoint = [&](std::size_t line, std::map<Key, Value>& side,
                          std::string_view vertex, Value weight, const char* what) {
    auto [it, inserted] = side.try_emplace(std::string(vertex), weight);
    if (!inserted && it->second != weight)
      fail(role, line, what,
           "conflicting weight for vertex '" + std::string(vertex) + "': " +
               it->second.encode() + " vs " + weight.encode());
  };

  for (const Line& line : content_lines(text)) {
    const auto fields = split_tabs(line.text);
    if (fields.size() < 3 || fields.size() > 5)
      fail(role, line.number, "",
           "expected 3 to 5 tab-separated fields, found " + std::to_string(fields.size()));
    check_key(role, line.number, fields[0], "field 1 (edge)");
    check_key(role, line.number, fields[1], "field 2 (src)");
    check_key(role, line.number, fields[2], "field 3 (dst)");
    Value out_w = fields.size() > 3
                      ? decode_field(role, line.number, fields[3], "field 4 (out_value)", alg)
                      : alg.one();
    Value in_w = fields.size() > 4
                     ? decode_field(role, line.number, fields[4], "field 5 (in_value)", alg)
                     : alg.one();
    if (alg.is_zero(out_w))
      fail(role, line.number, "field 4 (out_value)", "zero weight is not allowed");
    if (alg.is_zero(in_w))
      fail(role, line.number, "field 5 (in_value)", "zero weight is not allowed");

    auto [it, fresh] = position.try_emplace(std::string(fields[0]), g.edges.size());
    if (fresh) g.edges.push_back(graph::EdgeRecord{std::string(fields[0]), {}, {}});
    graph::EdgeRecord& e = g.edges[it->second];
    add_endpoint(line.number, e.sources, fields[1], std::move(out_w), "field 2 (src)");
    add_endpoint(line.number, e.targets, fields[2], std::move(in_w), "field 3 (dst)");
  }
  return g;
}

FiniteAlgebraSpec parse_finite_algebra(std::string_view text) {
  constexpr const char* role = "algebra";
  FiniteAlgebraSpec spec;
  std::map<std::string, std::size_t, std::less<>> index;
  bool have_elements = false;
  std::optional<std::size_t> zero, one;
  bool have_plus = false, have_times = false;

  const auto lines = content_lines(text);
  const std::size_t eof_line = line_count(text) + 1;

  auto lookup = [&](std::size_t line, std::string_view name, const std::string& what) {
    const auto it = index.find(name);
    if (it == index.end())
      fail(role, line, what, "unknown element '" + std::string(name) + "'");
    return it->second;
  };

  auto header_value = [](std::string_view line, std::string_view key)
      -> std::optional<std::string_view> {
    if (line.substr(0, key.size()) != key || line.size() == key.size() ||
        line[key.size()] != ':')
      return std::nullopt;
    std::string_view rest = line.substr(key.size() + 1);
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    return rest;
  };

  std::size_t i = 0;
  auto read_table = [&](std::vector<std::vector<std::size_t>>& table, const char* name,
                        std::size_t header_line) {
    const std::size_t n = spec.elements.size();
    for (std::size_t r = 0; r < n; ++r) {
      if (i >= lines.size())
        fail(role, eof_line, name,
             std::string(name) + " table has " + std::to_string(r) + " rows, expected " +
                 std::to_string(n) + " (header on line " + std::to_string(header_line) + ")");
      const Line& row = lines[i];
      if (header_value(row.text, "plus") || header_value(row.text, "times") ||
          header_value(row.text, "zero") || header_value(row.text, "one") ||
          header_value(row.text, "elements"))
        fail(role, row.number, name,
             std::string(name) + " table has " + std::to_string(r) + " rows, expected " +
                 std::to_string(n));
      const auto cells = split_top_level_commas(row.text);
      if (cells.size() != n)
        fail(role, row.number, std::string(name) + " row " + std::to_string(r + 1),
             "row has " + std::to_string(cells.size()) + " entries, expected " +
                 std::to_string(n));
      std::vector<std::size_t> out;
      for (std::size_t c = 0; c < n; ++c)
        out.push_back(lookup(row.number, cells[c],
                             std::string(name) + " row " + std::to_string(r + 1) +
                                 " column " + std::to_string(c + 1)));
      table.push_back(std::move(out));
      ++i;
    }
  };

  while (i < lines.size()) {
    const Line& line = lines[i];
    if (auto rest = header_value(line.text, "elements")) {
      if (have_elements) fail(role, line.number, "elements", "duplicate elements line");
      for (std::string_view name : split_top_level_commas(*rest)) {
        if (name.empty()) fail(role, line.number, "elements", "empty element name");
        Value v;
        try {
          v = Value::decode_any(name);
        } catch (const DomainError& e) {
          fail(role, line.number, "elements", e.what());
        }
        if (v.encode() != name)
          fail(role, line.number, "elements",
               "element '" + std::string(name) + "' is not in canonical form");
        if (!index.emplace(std::string(name), spec.elements.size()).second)
          fail(role, line.number, "elements", "duplicate element '" + std::string(name) + "'");
        spec.elements.push_back(std::move(v));
      }
      have_elements = true;
      ++i;
      continue;
    }
    const bool is_zero = header_value(line.text, "zero").has_value();
    const bool is_one = header_value(line.text, "one").has_value();
    const bool is_plus = header_value(line.text, "plus").has_value();
    const bool is_times = header_value(line.text, "times").has_value();
    if (!(is_zero || is_one || is_plus || is_times))
      fail(role, line.number, "", "unexpected line '" + std::string(line.text) + "'");
    if (!have_elements)
      fail(role, line.number, "", "missing section 'elements' before this line");
    if (is_zero || is_one) {
      const char* key = is_zero ? "zero" : "one";
      auto& slot = is_zero ? zero : one;
      if (slot) fail(role, line.number, key, std::string("duplicate ") + key + " line");
      slot = lookup(line.number, *header_value(line.text, key), key);
      ++i;
      continue;
    }
    const char* key = is_plus ? "plus" : "times";
    bool& seen = is_plus ? have_plus : have_times;
    if (seen) fail(role, line.number, key, std::string("duplicate ") + key + " table");
    if (!header_value(line.text, key)->empty())
      fail(role, line.number, key, std::string("table rows must start on the line after '") +
                                       key + ":'");
    seen = true;
    ++i;
    read_table(is_plus ? spec.plus : spec.times, key, line.number);
  }

  if (!have_elements) fail(role, eof_line, "", "missing section 'elements'");
  if (!zero) fail(role, eof_line, "", "missing section 'zero'");
  if (!one) fail(role, eof_line, "", "missing section 'one'");
  if (!have_plus) fail(role, eof_line, "", "missing section 'plus'");
  if (!have_times) fail(role, eof_line, "", "missing section 'times'");
  spec.zero = *zero;
  spec.one = *one;
  return spec;
}

std::string serialize_triples(const AssociativeArray& a) {
  std::string out;
  for (const auto& [coord, value] : a.entries()) {
    out += coord.first;
    out += '\t';
    out += coord.second;
    out += '\t';
    out += value.encode();
    out += '\n';
  }
  return out;
}

std::string serialize_edge_list(const graph::Graph& g) {
  std::string out;
  for (const Key& v : g.isolated_vertices) out += "# isolated: " + v + "\n";
  for (const auto& e : g.edges)
    for (const auto& [src, out_w] : e.sources)
      for (const auto& [dst, in_w] : e.targets)
        out += e.key + '\t' + src + '\t' + dst + '\t' + out_w.encode() + '\t' +
               in_w.encode() + '\n';
  return out;
}

std::string serialize_finite_algebra(const FiniteAlgebraSpec& spec) {
  auto row = [&](const std::vector<std::size_t>& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c)
      out += (c ? "," : "") + spec.elements.at(cells[c]).encode();
    return out + "\n";
  };
  std::string out = "elements: ";
  for (std::size_t i = 0; i < spec.elements.size(); ++i)
    out += (i ? "," : "") + spec.elements[i].encode();
  out += "\nzero: " + spec.elements.at(spec.zero).encode() + "\n";
  out += "one: " + spec.elements.at(spec.one).encode() + "\n";
  out += "plus:\n";
  for (const auto& r : spec.plus) out += row(r);
  out += "times:\n";
  for (const auto& r : spec.times) out += row(r);
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace assocgraph::io
