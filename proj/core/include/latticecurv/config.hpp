#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace latticecurv {

/// Geometric comparison tolerance used for distance-in-range and collinearity
/// tests. Coordinates are expressed in units of the optimal bond length.
inline constexpr double kDefaultTol = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }

double distance(Point a, Point b);
double squared_distance(Point a, Point b);

/// An ordered list of pairwise distinct, finite points. Immutable after
/// construction; points keep their input order.
class Configuration {
 public:
  Configuration() = default;

  /// Throws DuplicatePointError if two points are within `tol`, DomainError on
  /// non-finite coordinates or a non-positive tolerance.
  explicit Configuration(std::vector<Point> points, double tol = kDefaultTol);

  std::span<const Point> points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  double tol() const { return tol_; }

  /// Subset in the original relative order.
  Configuration subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Point> points_;
  double tol_ = kDefaultTol;
};

/// Closed bond-length interval [alpha, beta] with 0 < alpha <= 1 <= beta.
struct BondRange {
  double alpha = 1.0;
  double beta = 1.0;

  static BondRange unit() { return {1.0, 1.0}; }

  /// Throws DomainError unless 0 < alpha <= 1 <= beta.
  void validate() const;

  /// Distance test shared by the bond graph and the energy split.
  bool contains(double r, double tol) const { return r >= alpha - tol && r <= beta + tol; }

  friend bool operator==(const BondRange&, const BondRange&) = default;
};

enum class ConfigFormat { Json, XyText };

/// Picks Json for a ".json" extension and XyText otherwise.
ConfigFormat format_for_path(const std::filesystem::path& path);

Configuration load_configuration(std::istream& source, ConfigFormat format, double tol = kDefaultTol);
Configuration load_configuration(const std::filesystem::path& path, double tol = kDefaultTol);
Configuration parse_configuration(const std::string& text, ConfigFormat format, double tol = kDefaultTol);

void save_configuration(std::ostream& out, const Configuration& config, ConfigFormat format);
std::string to_string(const Configuration& config, ConfigFormat format);

/// Minimum euclidean distance over all pairs. Throws UndefinedDistanceError
/// for fewer than two points.
double min_pairwise_distance(const Configuration& config);

/// All triangular-lattice points within graph distance `shells` of the origin
/// (3m^2 + 3m + 1 points).
Configuration generate_lattice_patch(int shells);

/// Rejection-samples `n` points in a square of side 2*sqrt(n) with pairwise
/// distance >= dmin. Deterministic in `seed`. Throws SamplingError when the
/// attempt budget runs out.
Configuration generate_random_config(int n, std::uint64_t seed, double dmin);

/// Seeded mt19937_64 with portable uniform draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace latticecurv
