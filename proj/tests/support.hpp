// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef FMASEC_TESTS_SUPPORT_HPP
#define FMASEC_TESTS_SUPPORT_HPP

#include "fmasec/ao.hpp"
#include "fmasec/harness/scenario.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace fmasec::test {

inline constexpr double kLambda = 0.0508;

inline LinkGeometry link_at(double angle) {
  LinkGeometry l;
  l.angle = angle;
  l.wavelength = kLambda;
  return l;
}

inline std::vector<LinkGeometry> links_at(std::initializer_list<double> angles) {
  std::vector<LinkGeometry> out;
  for (double a : angles) out.push_back(link_at(a));
  return out;
}

// Reference configuration shared with the independent numeric oracle:
// uniform confidential array, hand-placed AN array, first reference slot.
struct Reference {
  std::vector<double> conf{0.0, 0.0254, 0.0508, 0.0762, 0.1016};
  std::vector<double> an{0.0, 0.03, 0.09, 0.2, 0.4};
  LinkGeometry bob = link_at(kPi / 3);
  std::vector<LinkGeometry> eves = links_at({kPi / 9, 8 * kPi / 9});
  double noise = 1e-8;
  ComplexVector w_conf = ComplexVector::Constant(5, 1.0);
  ComplexVector w_an;

  Reference() {
    w_an.resize(5);
    using C = std::complex<double>;
    w_an << C(0.3, 0.1), C(-0.2, 0.4), C(0.5, -0.1), C(0.1, 0.2), C(-0.3, -0.3);
    w_an /= w_an.norm();
  }

  [[nodiscard]] SlotChannels channels() const { return make_slot_channels(conf, an, bob, eves, noise); }
};

inline SlotProblem reference_slot(std::size_t t) { return reference_scenario().slot_problem(t); }

}  // namespace fmasec::test

#endif  // FMASEC_TESTS_SUPPORT_HPP
