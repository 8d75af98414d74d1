/* Copyright (C) 2026 The ramlab Authors
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
#ifndef RAMLAB_CORPUS_HPP
#define RAMLAB_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ramlab/approx.hpp"
#include "ramlab/poly.hpp"

// Seeded instance families shared by the verify suites and the acceptance run.
namespace ramlab::corpus {

struct Instance {
  std::string family;
  Poly f;
  ApproximationType stream;
};

// Polynomials of degree <= 6 over the perfect hull of F_p((t)), coefficient
// exponents in (1/4)[-8, 8] for p = 2 and (1/p)[-2p, 2p] otherwise, with the
// xi stream.
std::vector<Instance> artin_schreier(long p, std::uint64_t seed, std::size_t count);

// Model Q_2(pi), pi^4 = 2.
ModelPtr two_adic_ramified();

// Inputs for the exact p = 2 engine, built from Taylor data at c1 = 1 with
// square even-index coefficients and distinct monomial values. Family "small"
// has v(d_1) <= v(2) (first case), family "large" has v(2) < v(d_1) <= 3/2
// (second case). Ambient elements are known to precision 2^12.
std::vector<Instance> kummer(std::uint64_t seed, std::size_t count);

}  // namespace ramlab::corpus

#endif
