/* Copyright (C) 2026 The chainring authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#include "chainring/io.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <sstream>

namespace chainring {

namespace {

int64_t parse_int(std::string_view tok) {
  while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
  while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    fail(ErrorKind::ParseError, "not an integer: '" + std::string(tok) + "'");
  return v;
}

std::vector<int64_t> parse_int_list(std::string_view text, std::string_view seps) {
  std::vector<int64_t> out;
  size_t i = 0;
  while (i <= text.size()) {
    size_t j = text.find_first_of(seps, i);
    if (j == std::string_view::npos) j = text.size();
    std::string_view tok = text.substr(i, j - i);
    bool blank = tok.find_first_not_of(" \t\r\n") == std::string_view::npos;
    if (!blank) out.push_back(parse_int(tok));
    i = j + 1;
  }
  return out;
}

void flatten(const json& j, std::vector<int64_t>& out) {
  if (j.is_array()) {
    for (const auto& x : j) flatten(x, out);
  } else if (j.is_number_integer()) {
    out.push_back(j.get<int64_t>());
  } else {
    fail(ErrorKind::ParseError, "expected an integer or array, got " + j.dump());
  }
}

void check_digits(const Ring& ring, std::span<const int64_t> d) {
  for (int64_t x : d)
    if (x < 0 || x >= ring.radix())
      fail(ErrorKind::ParseError, "digit " + std::to_string(x) + " out of range for " + ring.name());
}

json encode(const Ring& ring, std::span<const int64_t> d) {
  if (ring.level() == 0) {
    if (ring.family() == Family::unramified) return d[0];
    json a = json::array();
    for (int64_t x : d) a.push_back(x);
    return a;
  }
  const Ring& base = *ring.base();
  size_t bd = base.num_digits();
  json a = json::array();
  for (int j = 0; j < ring.degree_over_base(); ++j) a.push_back(encode(base, d.subspan(j * bd, bd)));
  return a;
}

void decode(const Ring& ring, const json& j, std::vector<int64_t>& out) {
  if (ring.level() == 0) {
    if (ring.family() == Family::unramified) {
      if (!j.is_number_integer()) fail(ErrorKind::ParseError, "expected an integer, got " + j.dump());
      out.push_back(j.get<int64_t>());
      return;
    }
    if (!j.is_array() || j.size() != static_cast<size_t>(ring.s()))
      fail(ErrorKind::ParseError, "expected " + std::to_string(ring.s()) + " u-coefficients, got " + j.dump());
    for (const auto& x : j) {
      if (!x.is_number_integer()) fail(ErrorKind::ParseError, "expected an integer, got " + x.dump());
      out.push_back(x.get<int64_t>());
    }
    return;
  }
  if (!j.is_array() || j.size() != static_cast<size_t>(ring.degree_over_base()))
    fail(ErrorKind::ParseError, "expected " + std::to_string(ring.degree_over_base()) +
                                    " coefficients over " + ring.base()->name() + ", got " + j.dump());
  for (const auto& x : j) decode(*ring.base(), x, out);
}

}  // namespace

json element_to_json(const Element& e) { return encode(e.ring(), e.digits()); }

Element element_from_json(const Ring& ring, const json& j) {
  if (j.is_number_integer() && !(ring.level() == 0 && ring.family() == Family::unramified))
    return ring.from_int(j.get<int64_t>());
  std::vector<int64_t> d;
  decode(ring, j, d);
  check_digits(ring, d);
  return ring.from_digits(d);
}

std::string element_to_text(const Element& e) {
  std::string out;
  for (int64_t x : e.digits()) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

Element element_from_text(const Ring& ring, const std::string& text) {
  std::vector<int64_t> d = parse_int_list(text, ",");
  if (d.size() == 1 && ring.num_digits() > 1) {
    if (d[0] < 0 || d[0] >= ring.radix())
      fail(ErrorKind::ParseError, "'" + text + "' is out of range for " + ring.name());
    return ring.from_int(d[0]);
  }
  if (d.size() != ring.num_digits())
    fail(ErrorKind::ParseError, "'" + text + "' needs " + std::to_string(ring.num_digits()) +
                                    " comma-separated digits for " + ring.name());
  check_digits(ring, d);
  return ring.from_digits(d);
}

json poly_to_json(const Poly& f) {
  json a = json::array();
  for (const auto& c : f) a.push_back(element_to_json(c));
  return a;
}

Poly poly_from_json(const Ring& ring, const json& j) {
  if (!j.is_array()) fail(ErrorKind::ParseError, "polynomial must be an array");
  Poly f;
  for (const auto& c : j) f.push_back(element_from_json(ring, c));
  return poly::trim(f);
}

Poly poly_from_text(const Ring& ring, const std::string& text) {
  std::istringstream in(text);
  Poly f;
  std::string tok;
  while (in >> tok) f.push_back(element_from_text(ring, tok));
  return poly::trim(f);
}

std::string poly_to_text(const Poly& f) {
  std::string out;
  for (const auto& c : f) {
    if (!out.empty()) out += ' ';
    out += element_to_text(c);
  }
  return out.empty() ? "0" : out;
}

json matrix_to_json(const Mat& m) {
  json a = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(element_to_json(m.at(i, j)));
    a.push_back(r);
  }
  return a;
}

Mat matrix_from_json(const RingPtr& ring, const json& j) {
  if (!j.is_array()) fail(ErrorKind::ParseError, "matrix must be an array of rows");
  std::vector<Vec> rows;
  int cols = -1;
  for (const auto& r : j) {
    if (!r.is_array()) fail(ErrorKind::ParseError, "matrix row must be an array");
    Vec v;
    for (const auto& x : r) v.push_back(element_from_json(*ring, x));
    if (cols >= 0 && static_cast<int>(v.size()) != cols) fail(ErrorKind::LengthMismatch, "ragged matrix rows");
    cols = static_cast<int>(v.size());
    rows.push_back(std::move(v));
  }
  return Mat::from_rows(ring, std::max(cols, 0), rows);
}

Mat matrix_from_text(const RingPtr& ring, const std::string& text) {
  std::vector<Vec> rows;
  int cols = -1;
  size_t i = 0;
  while (i <= text.size()) {
    size_t k = text.find_first_of(";\n", i);
    if (k == std::string::npos) k = text.size();
    std::istringstream in(text.substr(i, k - i));
    Vec v;
    std::string tok;
    while (in >> tok) v.push_back(element_from_text(*ring, tok));
    if (!v.empty()) {
      if (cols >= 0 && static_cast<int>(v.size()) != cols) fail(ErrorKind::LengthMismatch, "ragged matrix rows");
      cols = static_cast<int>(v.size());
      rows.push_back(std::move(v));
    }
    i = k + 1;
  }
  return Mat::from_rows(ring, std::max(cols, 0), rows);
}

std::string matrix_to_text(const Mat& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += element_to_text(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

json ring_to_json(const Ring& ring) {
  if (ring.level() > 1 || (ring.level() == 1 && ring.prime_modulus().empty()))
    fail(ErrorKind::Unsupported, ring.name() + " is not a directly constructed ring; encode it as a tower");
  json j;
  j["family"] = std::string(family_name(ring.family()));
  j["p"] = ring.p();
  j["n"] = ring.residue_degree();
  j["s"] = ring.s();
  j["modulus"] = ring.prime_modulus();
  return j;
}

RingPtr ring_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "ring must be an object");
  try {
    Family fam = parse_family(j.at("family").get<std::string>());
    int64_t p = j.at("p").get<int64_t>();
    int n = j.value("n", 1);
    int s = j.at("s").get<int>();
    std::optional<std::vector<int64_t>> modulus;
    if (j.contains("modulus") && !j["modulus"].empty() && n > 1)
      modulus = j["modulus"].get<std::vector<int64_t>>();
    return Ring::make(fam, p, n, s, modulus);
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("bad ring object: ") + e.what());
  }
}

json tower_to_json(const Tower& t) {
  json j;
  j["base"] = ring_to_json(t.base());
  j["m"] = t.m();
  json mod = json::array();
  if (t.m() > 1)
    for (const auto& c : t.top().modulus()) mod.push_back(element_to_json(c));
  j["modulus_top"] = mod;
  return j;
}

TowerPtr tower_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "tower must be an object");
  if (!j.contains("base")) return Tower::trivial(ring_from_json(j));
  RingPtr base = ring_from_json(j["base"]);
  int m = j.value("m", 1);
  if (m < 1) fail(ErrorKind::DegreeMismatch, "extension degree must be positive");
  if (m == 1 || !j.contains("modulus_top") || j["modulus_top"].empty()) return Tower::extend(base, m);
  std::vector<Element> mod;
  for (const auto& c : j["modulus_top"]) mod.push_back(element_from_json(*base, c));
  if (static_cast<int>(mod.size()) != m + 1)
    fail(ErrorKind::DegreeMismatch, "modulus_top must have m + 1 coefficients");
  return Tower::over(Ring::extension(base, mod));
}

json code_to_json(const Code& c) {
  json j;
  j["tower"] = tower_to_json(*c.tower());
  j["length"] = c.length();
  j["rsf"] = matrix_to_json(c.rsf());
  j["type"] = c.type();
  return j;
}

Code code_from_json(const json& j) {
  if (!j.is_object() || !j.contains("tower") || !j.contains("rsf"))
    fail(ErrorKind::ParseError, "code object needs \"tower\" and \"rsf\"");
  TowerPtr t = tower_from_json(j["tower"]);
  Mat g = matrix_from_json(t->top_ptr(), j["rsf"]);
  int length = j.value("length", g.cols());
  if (g.rows() > 0 && g.cols() != length) fail(ErrorKind::LengthMismatch, "rsf width differs from length");
  if (g.rows() == 0) return Code::zero(t, length);
  return Code::from_matrix(t, g);
}

std::string type_to_text(const Code& c) {
  std::string out = "(" + std::to_string(c.length()) + ";";
  for (size_t i = 0; i < c.type().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c.type()[i]);
  }
  return out + ")";
}

std::string set_to_text(const DefiningSet& a) {
  std::string out = "{";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out + "}";
}

DefiningSet set_from_text(const std::string& text, int ell) {
  std::string t;
  for (char ch : text)
    if (ch != '{' && ch != '}' && ch != '[' && ch != ']') t += ch;
  std::vector<int64_t> v = parse_int_list(t, ", \t");
  std::vector<int> a(v.begin(), v.end());
  return normalize_set(a, ell);
}

namespace {

struct FixtureDef {
  const char* name;
  Family family;
  int64_t p;
  int s;
  int m;
};

constexpr FixtureDef kFixtures[] = {
    {"f2", Family::unramified, 2, 1, 1},        {"f4", Family::unramified, 2, 1, 2},
    {"z4", Family::unramified, 2, 2, 1},        {"z8", Family::unramified, 2, 3, 1},
    {"z9", Family::unramified, 3, 2, 1},        {"f2u2", Family::equal_characteristic, 2, 2, 1},
    {"f2u3", Family::equal_characteristic, 2, 3, 1}, {"gr42", Family::unramified, 2, 2, 2},
    {"gr43", Family::unramified, 2, 2, 3},      {"gr44", Family::unramified, 2, 2, 4},
    {"gr92", Family::unramified, 3, 2, 2},      {"f4u2", Family::equal_characteristic, 2, 2, 2},
    {"f8u2", Family::equal_characteristic, 2, 2, 3},
};

}  // namespace

TowerPtr fixture(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, TowerPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  for (const auto& f : kFixtures) {
    if (name != f.name) continue;
    TowerPtr t = Tower::extend(Ring::make(f.family, f.p, 1, f.s), f.m);
    cache[name] = t;
    return t;
  }
  fail(ErrorKind::UnknownFixture, "unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : kFixtures) out.push_back(f.name);
  return out;
}

}  // namespace chainring
