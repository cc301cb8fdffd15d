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

// JSON and text encodings, plus the named ring fixtures.
//
// Elements are encoded recursively: an element of Z_{p^s} is an integer,
// an element of F_p[u]/(u^s) is the array of its s u-coefficients, and an
// element of base[y]/(h) is the array of the encodings of its coefficients
// in 1, y, ..., y^{d-1}. The text form is the flattened encoding joined by
// commas.

#ifndef CHAINRING_IO_HPP
#define CHAINRING_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "chainring/code.hpp"
#include "chainring/cyclic.hpp"

namespace chainring {

using json = nlohmann::ordered_json;

json element_to_json(const Element& e);
Element element_from_json(const Ring& ring, const json& j);
std::string element_to_text(const Element& e);
/// Accepts the flattened digit list, or a single integer for any ring.
Element element_from_text(const Ring& ring, const std::string& text);

json poly_to_json(const Poly& f);
Poly poly_from_json(const Ring& ring, const json& j);
Poly poly_from_text(const Ring& ring, const std::string& text);
std::string poly_to_text(const Poly& f);

json matrix_to_json(const Mat& m);
Mat matrix_from_json(const RingPtr& ring, const json& j);
/// Rows separated by ';' or newlines, entries by whitespace.
Mat matrix_from_text(const RingPtr& ring, const std::string& text);
std::string matrix_to_text(const Mat& m);

/// {"family","p","n","s","modulus"} for rings built by Ring::make.
json ring_to_json(const Ring& ring);
RingPtr ring_from_json(const json& j);

/// {"base": ring, "m": m, "modulus_top": [...]}.
json tower_to_json(const Tower& t);
TowerPtr tower_from_json(const json& j);

json code_to_json(const Code& c);
Code code_from_json(const json& j);

std::string type_to_text(const Code& c);
std::string set_to_text(const DefiningSet& a);
DefiningSet set_from_text(const std::string& text, int ell);

/// z4, z8, z9, f2u2, gr42, gr43, gr44, f8u2 and friends.
TowerPtr fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace chainring

#endif  // CHAINRING_IO_HPP
