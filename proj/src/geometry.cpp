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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>

namespace fmasec {

namespace {

// Spacing and range checks tolerate a few ulps so that projected positions,
// which are built by repeated additions of d_min, still validate.
constexpr double kSlack = 1e-12;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

void check_array_feasible(std::size_t n, double d_min, double range_max) {
  if (n == 0) throw GeometryError("array must have at least one element");
  if (!std::isfinite(d_min) || d_min <= 0.0) throw GeometryError("d_min must be finite and > 0");
  if (!std::isfinite(range_max) || range_max < 0.0)
    throw GeometryError("range_max must be finite and >= 0");
  const double span = static_cast<double>(n - 1) * d_min;
  if (span > range_max * (1.0 + kSlack) + kSlack)
    throw GeometryError("infeasible array: (N-1)*d_min = " + fmt_double(span) + " exceeds L = " +
                        fmt_double(range_max));
}

ArrayGeometry::ArrayGeometry(std::vector<double> positions, double d_min, double range_max,
                             ArrayKind kind)
    : positions_(std::move(positions)), d_min_(d_min), range_max_(range_max), kind_(kind) {
  check_array_feasible(positions_.size(), d_min_, range_max_);
  const double tol = kSlack * std::max(1.0, range_max_);
  for (std::size_t n = 0; n < positions_.size(); ++n) {
    const double x = positions_[n];
    if (!std::isfinite(x)) throw GeometryError("position " + std::to_string(n) + " is not finite");
    if (x < -tol || x > range_max_ + tol)
      throw GeometryError("position " + std::to_string(n) + " = " + fmt_double(x) +
                          " outside [0, L]");
    if (n > 0 && x - positions_[n - 1] < d_min_ - tol)
      throw GeometryError("spacing between elements " + std::to_string(n - 1) + " and " +
                          std::to_string(n) + " is below d_min");
  }
}

ArrayGeometry ArrayGeometry::fixed(std::size_t n, double d_min, double range_max) {
  check_array_feasible(n, d_min, range_max);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>(i) * d_min;
  return ArrayGeometry(std::move(x), d_min, range_max, ArrayKind::Fixed);
}

ArrayGeometry ArrayGeometry::movable(std::vector<double> positions, double d_min, double range_max) {
  return ArrayGeometry(std::move(positions), d_min, range_max, ArrayKind::Movable);
}

ArrayGeometry ArrayGeometry::movable_uniform(std::size_t n, double d_min, double range_max) {
  auto f = fixed(n, d_min, range_max);
  return movable(std::vector<double>(f.positions().begin(), f.positions().end()), d_min, range_max);
}

RealVector ArrayGeometry::positions_vector() const {
  return Eigen::Map<const RealVector>(positions_.data(), static_cast<Eigen::Index>(positions_.size()));
}

double fspl_reference_loss(double wavelength, double d0) {
  const double r = wavelength / (4.0 * kPi * d0);
  return r * r;
}

double direction_cosine(double angle) {
  const double c = std::cos(angle);
  return std::abs(c) < 1e-15 ? 0.0 : c;
}

double LinkGeometry::effective_reference_loss() const {
  return reference_loss > 0.0 ? reference_loss : fspl_reference_loss(wavelength);
}

double LinkGeometry::amplitude() const {
  if (!path_loss_enabled) return 1.0;
  return std::sqrt(effective_reference_loss() / std::pow(distance, path_loss_exponent));
}

void LinkGeometry::validate() const {
  if (!std::isfinite(angle)) throw GeometryError("link angle is not finite");
  if (!std::isfinite(wavelength) || wavelength <= 0.0) throw GeometryError("wavelength must be > 0");
  if (!std::isfinite(distance) || distance <= 0.0) throw GeometryError("distance must be > 0");
  if (!std::isfinite(path_loss_exponent) || path_loss_exponent < 0.0)
    throw GeometryError("path-loss exponent must be >= 0");
  if (!std::isfinite(reference_loss)) throw GeometryError("reference loss is not finite");
}

ComplexVector steering_vector(std::span<const double> positions, const LinkGeometry& link) {
  link.validate();
  const double amp = link.amplitude();
  const double kc = link.wavenumber() * direction_cosine(link.angle);
  ComplexVector a(static_cast<Eigen::Index>(positions.size()));
  for (std::size_t n = 0; n < positions.size(); ++n) {
    if (!std::isfinite(positions[n])) throw GeometryError("non-finite antenna position");
    a(static_cast<Eigen::Index>(n)) = std::polar(amp, kc * positions[n]);
  }
  return a;
}

ComplexVector steering_vector(const ArrayGeometry& array, const LinkGeometry& link) {
  return steering_vector(array.positions(), link);
}

double beam_gain(const ComplexVector& steering, const ComplexVector& w) {
  if (steering.size() != w.size())
    throw std::invalid_argument("beam_gain: steering vector has " + std::to_string(steering.size()) +
                                " entries but weights have " + std::to_string(w.size()));
  return std::norm(steering.dot(w));  // Eigen's dot conjugates the left operand
}

double beam_gain(const ArrayGeometry& array, const LinkGeometry& link, const ComplexVector& w) {
  return beam_gain(steering_vector(array, link), w);
}

double to_db(double linear_gain) { return 10.0 * std::log10(std::max(linear_gain, kGainFloor)); }

std::vector<PatternSample> pattern_sweep(const ArrayGeometry& array, const LinkGeometry& link_template,
                                         const ComplexVector& w, std::size_t n_samples) {
  if (n_samples < 2) throw std::invalid_argument("pattern_sweep needs at least 2 samples");
  if (static_cast<std::size_t>(w.size()) != array.size())
    throw std::invalid_argument("pattern_sweep: weight length does not match the array");
  std::vector<PatternSample> out;
  out.reserve(n_samples);
  LinkGeometry link = link_template;
  for (std::size_t k = 0; k < n_samples; ++k) {
    link.angle = kPi * static_cast<double>(k) / static_cast<double>(n_samples);
    out.push_back({link.angle, to_db(beam_gain(array, link, w))});
  }
  return out;
}

}  // namespace fmasec
