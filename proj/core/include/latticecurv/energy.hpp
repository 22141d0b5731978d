#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latticecurv/config.hpp"

namespace latticecurv {

/// Pair potential with minimum value -1 attained at r = 1.
class Potential {
 public:
  enum class Kind { HeitmannRadin, LennardJones, Custom };

  /// +inf below 1, -1 at 1, 0 above (all within tol).
  static Potential heitmann_radin();
  /// r^(-2p) - 2 r^(-p), p > 0.
  static Potential lennard_jones(double p);
  /// Piecewise-linear through (r, V) samples with strictly increasing r.
  /// +inf below the first sample, the last value beyond the last. Must
  /// contain r = 1 with V = -1 and no value below -1.
  static Potential custom(std::vector<std::pair<double, double>> table);

  Kind kind() const { return kind_; }
  double exponent() const { return p_; }
  const std::vector<std::pair<double, double>>& table() const { return table_; }
  std::string name() const;

  /// Throws DomainError for r <= 0.
  double operator()(double r, double tol = kDefaultTol) const;

 private:
  Kind kind_ = Kind::HeitmannRadin;
  double p_ = 0.0;
  std::vector<std::pair<double, double>> table_;
};

double potential_eval(const Potential& v, double r, double tol = kDefaultTol);

/// Sum over unordered pairs; +inf propagates.
double total_energy(const Configuration& config, const Potential& v);

/// Sum over bonded pairs of V(r) + 1.
double elastic_energy(const Configuration& config, const Potential& v, BondRange range);

/// Sum over pairs outside the bond range of V(r).
double nonbond_energy(const Configuration& config, const Potential& v, BondRange range);

struct EnergyBreakdown {
  /// Total energy is +inf; the geometric terms are not computed.
  bool infinite = false;
  double total = 0.0;
  int particles = 0;
  BondRange range;
  /// -3N
  double bulk = 0.0;
  int perimeter = 0;
  /// 3 chi
  int euler_term = 0;
  /// mu
  int defect = 0;
  double elastic = 0.0;
  double nonbond = 0.0;
  int bonds = 0;
  /// total - (bulk + perimeter + euler_term + defect + elastic + nonbond)
  double residual = 0.0;

  double reconstructed() const { return bulk + perimeter + euler_term + defect + elastic + nonbond; }
};

/// Default bond range for soft potentials: [0.8, 1.2] with beta clipped below
/// sqrt(2) d_min. Throws PlanarityError if no beta >= 1 is admissible.
BondRange default_soft_range(const Configuration& config);

/// Every term of the geometric decomposition plus the direct pair sum.
/// Heitmann-Radin requires range [1, 1]. Throws IdentityViolation if
/// |residual| > 1e-9 (1 + |total|), or is nonzero for Heitmann-Radin.
EnergyBreakdown energy_decomposition(const Configuration& config, const Potential& v, BondRange range);

/// Uses [1, 1] for Heitmann-Radin and default_soft_range otherwise.
EnergyBreakdown energy_decomposition(const Configuration& config, const Potential& v);

}  // namespace latticecurv
