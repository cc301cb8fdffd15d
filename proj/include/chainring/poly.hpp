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

#ifndef CHAINRING_POLY_HPP
#define CHAINRING_POLY_HPP

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "chainring/ring.hpp"

namespace chainring {

/// Dense univariate polynomial, constant term first. A trimmed polynomial
/// has a nonzero last coefficient; the zero polynomial is empty.
using Poly = std::vector<Element>;

namespace poly {

Poly trim(Poly f);
/// -1 for the zero polynomial.
int degree(const Poly& f);
bool is_monic(const Poly& f);
Poly constant(const Element& c);
Poly monomial(const Element& c, int degree);
Poly x_minus(const Element& root);
/// x^ell - 1 over the given ring.
Poly x_pow_minus_one(const Ring& ring, int ell);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Element& c);
/// Product in R[x]/(x^ell - 1); inputs of any degree, output has ell slots.
Poly cyclic_mul(const Poly& a, const Poly& b, int ell);
Poly cyclic_reduce(const Poly& a, int ell);

/// Division by a divisor whose leading coefficient is a unit.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& m);
Poly pow_mod(const Poly& a, uint64_t e, const Poly& m);

Element eval(const Poly& f, const Element& x);
/// Map base-ring coefficients into top through the constant embedding.
Poly embed(const Ring& top, const Poly& f);
/// Inverse of embed; throws NotInBase when a coefficient is outside the base.
Poly to_base(const Ring& top, const Poly& f);

// Field-only operations (the coefficient ring must have s = 1).
Poly make_monic(const Poly& f);
Poly gcd(Poly a, Poly b);
/// Returns (g, u, v) with u*a + v*b = g monic.
std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b);
bool is_irreducible(const Poly& f);
/// Lexicographically smallest monic irreducible of the given degree,
/// comparing coefficients from degree-1 down to the constant term by the
/// canonical element index.
Poly smallest_irreducible(const Ring& field, int degree);

}  // namespace poly
}  // namespace chainring

#endif  // CHAINRING_POLY_HPP
