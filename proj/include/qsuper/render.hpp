// Copyright 2026 The qsuper Authors
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

#pragma once

#include <string>

#include "qsuper/supertorus.hpp"

namespace qsuper {

enum class RenderFormat { Pretty, Latex };

/** "pretty" or "latex"; throws MalformedInput otherwise. */
RenderFormat render_format_from_string(const std::string& s);

/** Power of q from a half-exponent: "q", "q^{-1}", "q^{1/2}", empty for h = 0. */
std::string render_q_power(int half, RenderFormat fmt);

/**
 * Each term c X^e is written as a scalar times the ordered word
 * x1^a1 ... xn^an xi1 ... ximm, absorbing the normal-ordering factor into
 * the scalar. A common even monomial is pulled out on the left, so X_1''
 * of the one-vertex example prints as "x1 (1 - q^{-1} ξ1 ξ2)".
 */
std::string render(const SkewForm& lambda, const SuperPoly& p, RenderFormat fmt);

}  // namespace qsuper
