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

#ifndef FMASEC_GEOMETRY_HPP
#define FMASEC_GEOMETRY_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fmasec {

using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;

/// Thrown when an array or link violates its physical constraints.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ArrayKind { Fixed, Movable };

/// Linear antenna array: ordered element positions on [0, L] with a minimum spacing.
///
/// Construction validates every invariant, so a live ArrayGeometry is always
/// feasible. Fixed arrays are the uniform grid {0, d_min, ..., (N-1) d_min}.
class ArrayGeometry {
 public:
  static ArrayGeometry fixed(std::size_t n, double d_min, double range_max);
  static ArrayGeometry movable(std::vector<double> positions, double d_min, double range_max);

  /// Uniform d_min spacing starting at zero, but flagged Movable.
  static ArrayGeometry movable_uniform(std::size_t n, double d_min, double range_max);

  [[nodiscard]] std::span<const double> positions() const { return positions_; }
  [[nodiscard]] RealVector positions_vector() const;
  [[nodiscard]] std::size_t size() const { return positions_.size(); }
  [[nodiscard]] double d_min() const { return d_min_; }
  [[nodiscard]] double range_max() const { return range_max_; }
  [[nodiscard]] ArrayKind kind() const { return kind_; }

  bool operator==(const ArrayGeometry&) const = default;

 private:
  ArrayGeometry(std::vector<double> positions, double d_min, double range_max, ArrayKind kind);

  std::vector<double> positions_;
  double d_min_;
  double range_max_;
  ArrayKind kind_;
};

/// (N-1) d_min <= L, plus positivity of both lengths. Throws GeometryError.
void check_array_feasible(std::size_t n, double d_min, double range_max);

/// cos(angle), snapped to exactly 0 within 1e-15 so broadside (the double
/// nearest pi/2) has no residual phase progression.
double direction_cosine(double angle);

/// Free-space reference power gain at distance d0: (lambda / (4 pi d0))^2.
double fspl_reference_loss(double wavelength, double d0 = 1.0);

/// Far-field link from the array to one receiver.
struct LinkGeometry {
  double angle = kPi / 2;           // radians, [0, pi)
  double distance = 100.0;          // meters
  double path_loss_exponent = 2.0;  // alpha
  double reference_loss = 0.0;      // kappa0 (linear); <= 0 selects the FSPL default
  double wavelength = 0.0508;       // meters
  bool path_loss_enabled = false;

  /// sqrt(kappa0 / d^alpha), or exactly 1 when path loss is disabled.
  [[nodiscard]] double amplitude() const;
  [[nodiscard]] double wavenumber() const { return 2.0 * kPi / wavelength; }
  [[nodiscard]] double effective_reference_loss() const;

  /// Throws GeometryError on d <= 0, lambda <= 0, or non-finite fields.
  void validate() const;
};

/// a(x, theta)_n = amplitude * exp(+j (2 pi / lambda) x_n cos(theta)).
ComplexVector steering_vector(const ArrayGeometry& array, const LinkGeometry& link);

/// Same as above on raw positions; the optimizer's inner loop evaluates
/// infeasible look-ahead points, so no array invariants are enforced here.
ComplexVector steering_vector(std::span<const double> positions, const LinkGeometry& link);

/// |a^H w|^2. Throws std::invalid_argument on a length mismatch.
double beam_gain(const ArrayGeometry& array, const LinkGeometry& link, const ComplexVector& w);
double beam_gain(const ComplexVector& steering, const ComplexVector& w);

/// Linear gains are clamped here before conversion to dB.
inline constexpr double kGainFloor = 1e-30;

double to_db(double linear_gain);

struct PatternSample {
  double theta;
  double gain_db;
};

/// Beam gain on the uniform grid theta_k = pi k / n_samples, k = 0..n_samples-1.
/// Only the angle of `link_template` is overridden per sample.
std::vector<PatternSample> pattern_sweep(const ArrayGeometry& array, const LinkGeometry& link_template,
                                         const ComplexVector& w, std::size_t n_samples);

}  // namespace fmasec

#endif  // FMASEC_GEOMETRY_HPP
