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

#include "fmasec/geometry.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace fmasec;

TEST_CASE("fixed array is the uniform d_min grid") {
  const auto a = ArrayGeometry::fixed(5, 0.0254, 0.508);
  CHECK(a.size() == 5);
  CHECK(a.kind() == ArrayKind::Fixed);
  for (std::size_t i = 0; i < 5; ++i) CHECK(a.positions()[i] == doctest::Approx(0.0254 * i));
  CHECK(ArrayGeometry::movable_uniform(5, 0.0254, 0.508).kind() == ArrayKind::Movable);
}

TEST_CASE("infeasible layouts are rejected") {
  CHECK_THROWS_AS(check_array_feasible(5, 0.0254, 0.1), GeometryError);
  CHECK_THROWS_AS(check_array_feasible(2, 0.0, 1.0), GeometryError);
  CHECK_THROWS_AS(ArrayGeometry::movable({0.0, 0.01}, 0.0254, 0.508), GeometryError);
  CHECK_THROWS_AS(ArrayGeometry::movable({0.1, 0.0}, 0.0254, 0.508), GeometryError);
  CHECK_THROWS_AS(ArrayGeometry::movable({0.0, 0.6}, 0.0254, 0.508), GeometryError);
  CHECK_THROWS_AS(ArrayGeometry::movable({0.0, std::nan("")}, 0.0254, 0.508), GeometryError);
  // Exactly at the limit is fine.
  CHECK_NOTHROW(check_array_feasible(21, 0.0254, 0.508));
}

TEST_CASE("single element array is feasible for any range") {
  CHECK_NOTHROW(ArrayGeometry::fixed(1, 0.0254, 0.0));
}

TEST_CASE("broadside steering has no phase progression") {
  const auto a = ArrayGeometry::fixed(4, 0.0254, 0.508);
  const auto v = steering_vector(a, test::link_at(kPi / 2));
  for (const auto& z : v) {
    CHECK(z.real() == 1.0);
    CHECK(z.imag() == 0.0);
  }
  CHECK(direction_cosine(kPi / 2) == 0.0);
}

TEST_CASE("steering vector with path loss matches the reference values") {
  LinkGeometry l = test::link_at(kPi / 3);
  l.path_loss_enabled = true;
  l.distance = 100.0;
  l.path_loss_exponent = 2.0;
  const std::vector<double> x{0.0, 0.0254, 0.0508};
  const auto v = steering_vector(x, l);
  const double amp = 4.042535554534141e-05;
  CHECK(l.amplitude() == doctest::Approx(amp).epsilon(1e-12));
  CHECK(v(0).real() == doctest::Approx(amp).epsilon(1e-12));
  CHECK(std::abs(v(0).imag()) < 1e-20);
  CHECK(std::abs(v(1).real()) < 1e-18);
  CHECK(v(1).imag() == doctest::Approx(amp).epsilon(1e-12));
  CHECK(v(2).real() == doctest::Approx(-amp).epsilon(1e-12));
}

TEST_CASE("path loss disabled gives unit amplitude; FSPL default reference") {
  LinkGeometry l = test::link_at(0.3);
  CHECK(l.amplitude() == 1.0);
  CHECK(l.effective_reference_loss() == doctest::Approx(fspl_reference_loss(test::kLambda)));
  l.reference_loss = 1e-3;
  l.path_loss_enabled = true;
  l.distance = 10.0;
  l.path_loss_exponent = 3.0;
  CHECK(l.amplitude() == doctest::Approx(std::sqrt(1e-3 / 1000.0)));
}

TEST_CASE("link validation") {
  LinkGeometry l = test::link_at(0.3);
  l.distance = 0.0;
  CHECK_THROWS_AS(l.validate(), GeometryError);
  l = test::link_at(0.3);
  l.wavelength = -1.0;
  CHECK_THROWS_AS(l.validate(), GeometryError);
}

TEST_CASE("beam gain of a matched beam is N^2 times |amplitude|^2") {
  const auto a = ArrayGeometry::fixed(5, 0.0254, 0.508);
  const auto link = test::link_at(1.1);
  const ComplexVector w = steering_vector(a, link);
  CHECK(beam_gain(a, link, w) == doctest::Approx(25.0));
  CHECK_THROWS_AS(beam_gain(a, link, ComplexVector::Ones(3)), std::invalid_argument);
}

TEST_CASE("dB conversion clamps to the floor") {
  CHECK(to_db(1.0) == doctest::Approx(0.0));
  CHECK(to_db(0.0) == doctest::Approx(10.0 * std::log10(kGainFloor)));
  CHECK(to_db(-1.0) == to_db(0.0));
}

TEST_CASE("pattern sweep samples the half-open angle grid") {
  const auto a = ArrayGeometry::fixed(3, 0.0254, 0.508);
  const auto p = pattern_sweep(a, test::link_at(0.0), ComplexVector::Ones(3), 8);
  REQUIRE(p.size() == 8);
  CHECK(p.front().theta == 0.0);
  CHECK(p.back().theta == doctest::Approx(7 * kPi / 8));
  for (const auto& s : p) CHECK(s.gain_db >= to_db(0.0));
}
