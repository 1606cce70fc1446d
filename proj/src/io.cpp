// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cflat/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cflat/error.hpp"

namespace cflat {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& what) {
  throw Error(Errc::kParseError, source + ": " + what);
}

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line and column.
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    std::string what = e.what();
    const auto colon = what.rfind(": ");
    if (colon != std::string::npos) what = what.substr(colon + 2);
    fail(source, "line " + std::to_string(line) + ", column " +
                     std::to_string(offset - line_start + 1) + ": " + what);
  }
}

const json& field(const json& doc, const char* key, const std::string& source) {
  if (!doc.is_object()) fail(source, "expected a JSON object at the top level");
  auto it = doc.find(key);
  if (it == doc.end()) fail(source, std::string("missing field \"") + key + "\"");
  return *it;
}

void only_fields(const json& obj, std::initializer_list<const char*> keys, const std::string& path,
                 const std::string& source) {
  for (const auto& item : obj.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return item.key() == k; })) {
      fail(source, path + ": unexpected field \"" + item.key() + "\"");
    }
  }
}

std::vector<std::string> string_array(const json& value, const std::string& path,
                                      const std::string& source) {
  if (!value.is_array()) fail(source, path + ": expected an array of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_string()) {
      fail(source, path + "[" + std::to_string(i) + "]: expected a string");
    }
    out.push_back(value[i].get<std::string>());
  }
  return out;
}

std::int64_t integer(const json& value, const std::string& path, const std::string& source) {
  if (!value.is_number_integer()) fail(source, path + ": expected an integer");
  return value.get<std::int64_t>();
}

// Re-raises label errors with the field path in front.
template <typename Fn>
auto with_path(const std::string& path, const std::string& source, Fn fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == Errc::kParseError) throw;
    throw Error(e.code(), source + ": " + path + ": " + e.what());
  }
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string name_list(const std::vector<std::string>& names) {
  std::string out = "[";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ", ";
    out += quoted(names[i]);
  }
  return out + "]";
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kParseError, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RankedFamily parse_matroid(std::string_view text, const std::string& source) {
  const json doc = parse_json(text, source);
  const json& ground_doc = field(doc, "ground", source);
  const json& flats_doc = field(doc, "cyclic_flats", source);
  only_fields(doc, {"ground", "cyclic_flats"}, "document", source);
  GroundSet ground = with_path("ground", source, [&] {
    return GroundSet(string_array(ground_doc, "ground", source));
  });
  if (!flats_doc.is_array()) fail(source, "cyclic_flats: expected an array");
  std::vector<CyclicFlat> flats;
  for (std::size_t i = 0; i < flats_doc.size(); ++i) {
    const std::string path = "cyclic_flats[" + std::to_string(i) + "]";
    const json& entry = flats_doc[i];
    if (!entry.is_object()) fail(source, path + ": expected an object");
    only_fields(entry, {"set", "rank"}, path, source);
    if (!entry.contains("set")) fail(source, path + ": missing field \"set\"");
    if (!entry.contains("rank")) fail(source, path + ": missing field \"rank\"");
    const auto names = string_array(entry["set"], path + ".set", source);
    if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
      fail(source, path + ".set: repeated label");
    }
    const std::int64_t rank = integer(entry["rank"], path + ".rank", source);
    if (rank < 0 || rank > kMaxGroundSize) fail(source, path + ".rank: out of range");
    const Subset s = with_path(path + ".set", source, [&] { return ground.subset_of(names); });
    flats.push_back({s, static_cast<int>(rank)});
  }
  if (flats.empty()) fail(source, "cyclic_flats: expected at least one member");
  return with_path("cyclic_flats", source,
                   [&] { return RankedFamily(std::move(ground), std::move(flats)); });
}

RankedFamily read_matroid_file(const std::string& path) {
  return parse_matroid(read_text_file(path), path);
}

std::string emit_set(const GroundSet& ground, Subset s) { return name_list(ground.names_of(s)); }

std::string emit_matroid(const RankedFamily& family) {
  std::string out = "{\n  \"ground\": " + name_list(family.ground().labels()) +
                    ",\n  \"cyclic_flats\": [\n";
  const auto& entries = family.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out += "    {\"set\": " + emit_set(family.ground(), entries[i].set) +
           ", \"rank\": " + std::to_string(entries[i].rank) + "}";
    out += i + 1 < entries.size() ? ",\n" : "\n";
  }
  return out + "  ]\n}\n";
}

FiniteLattice parse_lattice(std::string_view text, const std::string& source) {
  const json doc = parse_json(text, source);
  const json& elements_doc = field(doc, "elements", source);
  const json& covers_doc = field(doc, "covers", source);
  only_fields(doc, {"elements", "covers"}, "document", source);
  auto elements = string_array(elements_doc, "elements", source);
  if (!covers_doc.is_array()) fail(source, "covers: expected an array");
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < covers_doc.size(); ++i) {
    const std::string path = "covers[" + std::to_string(i) + "]";
    const auto pair = string_array(covers_doc[i], path, source);
    if (pair.size() != 2) fail(source, path + ": expected [lower, upper]");
    covers.emplace_back(pair[0], pair[1]);
  }
  return with_path("covers", source,
                   [&] { return lattice_from_covers(std::move(elements), covers); });
}

FiniteLattice read_lattice_file(const std::string& path) {
  return parse_lattice(read_text_file(path), path);
}

std::string emit_lattice(const FiniteLattice& lattice) {
  std::string out = "{\n  \"elements\": " + name_list(lattice.names()) + ",\n  \"covers\": [";
  const auto covers = lattice.covers();
  for (std::size_t i = 0; i < covers.size(); ++i) {
    if (i > 0) out += ", ";
    out += name_list({lattice.name(covers[i].first), lattice.name(covers[i].second)});
  }
  return out + "]\n}\n";
}

Poly2 parse_polynomial(std::string_view text, const std::string& source) {
  const json doc = parse_json(text, source);
  const json& terms = field(doc, "terms", source);
  only_fields(doc, {"terms"}, "document", source);
  if (!terms.is_array()) fail(source, "terms: expected an array");
  struct Raw {
    int x, y;
    BigInt c;
  };
  std::vector<Raw> raw;
  int mx = 0, my = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = "terms[" + std::to_string(i) + "]";
    const json& t = terms[i];
    if (!t.is_object()) fail(source, path + ": expected an object");
    only_fields(t, {"x", "y", "c"}, path, source);
    for (const char* k : {"x", "y", "c"}) {
      if (!t.contains(k)) fail(source, path + ": missing field \"" + k + "\"");
    }
    const auto x = integer(t["x"], path + ".x", source);
    const auto y = integer(t["y"], path + ".y", source);
    if (x < 0 || y < 0 || x > 4096 || y > 4096) fail(source, path + ": exponent out of range");
    const BigInt c(integer(t["c"], path + ".c", source));
    raw.push_back({static_cast<int>(x), static_cast<int>(y), c});
    mx = std::max(mx, static_cast<int>(x));
    my = std::max(my, static_cast<int>(y));
  }
  Poly2 p(mx, my);
  for (const auto& r : raw) p.at(r.x, r.y) += r.c;
  return p;
}

std::string emit_polynomial(const Poly2& p) {
  const auto terms = p.terms();
  std::string out = "{\n  \"terms\": [";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"x\": " + std::to_string(terms[i].x) + ", \"y\": " + std::to_string(terms[i].y) +
           ", \"c\": " + terms[i].c.str() + "}";
  }
  out += terms.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

}  // namespace cflat
