#include "latticecurv/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "latticecurv/bond_graph.hpp"
#include "latticecurv/error.hpp"
#include "latticecurv/triangulation.hpp"

namespace latticecurv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Pair count above which values are streamed instead of sorted.
constexpr std::size_t kSortedPairLimit = 4'000'000;

/// Neumaier-compensated sum, after sorting by magnitude.
double stable_sum(std::vector<double>& values) {
  std::sort(values.begin(), values.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
  double sum = 0.0;
  double comp = 0.0;
  for (double v : values) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  return sum + comp;
}

class Accumulator {
 public:
  explicit Accumulator(std::size_t pairs) : sorted_(pairs <= kSortedPairLimit) {
    if (sorted_) values_.reserve(pairs);
  }

  void add(double v) {
    if (std::isinf(v)) {
      infinite_ = infinite_ || v > 0;
      return;
    }
    if (sorted_) {
      values_.push_back(v);
      return;
    }
    const double t = sum_ + v;
    comp_ += std::abs(sum_) >= std::abs(v) ? (sum_ - t) + v : (v - t) + sum_;
    sum_ = t;
  }

  double result() {
    if (infinite_) return kInf;
    return sorted_ ? stable_sum(values_) : sum_ + comp_;
  }

 private:
  bool sorted_;
  bool infinite_ = false;
  std::vector<double> values_;
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Visits every unordered pair (i < j) within `cutoff`, using a cell grid.
template <class Fn>
void for_each_close_pair(const Configuration& config, double cutoff, Fn&& fn) {
  const auto pts = config.points();
  auto key = [](long long cx, long long cy) { return (cx << 32) ^ (cy & 0xffffffffLL); };
  std::unordered_map<long long, std::vector<std::size_t>> grid;
  std::vector<std::pair<long long, long long>> cells(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    cells[i] = {static_cast<long long>(std::floor(pts[i].x / cutoff)),
                static_cast<long long>(std::floor(pts[i].y / cutoff))};
    grid[key(cells[i].first, cells[i].second)].push_back(i);
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = grid.find(key(cells[i].first + dx, cells[i].second + dy));
        if (it == grid.end()) continue;
        for (std::size_t j : it->second) {
          if (j <= i) continue;
          const double r = distance(pts[i], pts[j]);
          if (r <= cutoff) fn(i, j, r);
        }
      }
    }
  }
}

template <class Fn>
void for_each_pair(const Configuration& config, Fn&& fn) {
  const auto pts = config.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) fn(i, j, distance(pts[i], pts[j]));
  }
}

std::size_t pair_count(const Configuration& config) { return config.size() * (config.size() - (config.empty() ? 0 : 1)) / 2; }

}  // namespace

Potential Potential::heitmann_radin() { return Potential{}; }

Potential Potential::lennard_jones(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("Lennard-Jones exponent must be positive");
  Potential v;
  v.kind_ = Kind::LennardJones;
  v.p_ = p;
  return v;
}

Potential Potential::custom(std::vector<std::pair<double, double>> table) {
  if (table.size() < 2) throw DomainError("custom potential needs at least two samples");
  bool has_minimum = false;
  for (std::size_t k = 0; k < table.size(); ++k) {
    const auto [r, value] = table[k];
    if (!(r > 0.0) || !std::isfinite(r) || !std::isfinite(value)) {
      throw DomainError("custom potential samples must have finite r > 0 and finite values");
    }
    if (k > 0 && !(r > table[k - 1].first)) throw DomainError("custom potential radii must be strictly increasing");
    if (value < -1.0) throw DomainError("custom potential must not fall below -1");
    if (r == 1.0 && value == -1.0) has_minimum = true;
  }
  if (!has_minimum) throw DomainError("custom potential must contain the sample (1, -1)");
  Potential v;
  v.kind_ = Kind::Custom;
  v.table_ = std::move(table);
  return v;
}

std::string Potential::name() const {
  switch (kind_) {
    case Kind::HeitmannRadin:
      return "hr";
    case Kind::LennardJones: {
      std::ostringstream s;
      s << "lj(p=" << p_ << ")";
      return s.str();
    }
    case Kind::Custom:
      return "custom";
  }
  return "unknown";
}

double Potential::operator()(double r, double tol) const {
  if (!(r > 0.0)) throw DomainError("potential evaluated at non-positive distance");
  switch (kind_) {
    case Kind::HeitmannRadin:
      if (r < 1.0 - tol) return kInf;
      return std::abs(r - 1.0) <= tol ? -1.0 : 0.0;
    case Kind::LennardJones: {
      const double s = std::pow(r, -p_);
      return s * s - 2.0 * s;
    }
    case Kind::Custom: {
      if (r < table_.front().first) return kInf;
      if (r >= table_.back().first) return table_.back().second;
      auto hi = std::upper_bound(table_.begin(), table_.end(), r,
                                 [](double x, const auto& sample) { return x < sample.first; });
      auto lo = std::prev(hi);
      const double t = (r - lo->first) / (hi->first - lo->first);
      return lo->second + t * (hi->second - lo->second);
    }
  }
  return 0.0;
}

double potential_eval(const Potential& v, double r, double tol) { return v(r, tol); }

double total_energy(const Configuration& config, const Potential& v) {
  const double tol = config.tol();
  if (v.kind() == Potential::Kind::HeitmannRadin) {
    bool overlap = false;
    long long bonds = 0;
    for_each_close_pair(config, 1.0 + tol, [&](std::size_t, std::size_t, double r) {
      const double e = v(r, tol);
      if (std::isinf(e)) overlap = true;
      if (e == -1.0) ++bonds;
    });
    return overlap ? kInf : -static_cast<double>(bonds);
  }
  Accumulator acc(pair_count(config));
  for_each_pair(config, [&](std::size_t, std::size_t, double r) { acc.add(v(r, tol)); });
  return acc.result();
}

double elastic_energy(const Configuration& config, const Potential& v, BondRange range) {
  range.validate();
  const double tol = config.tol();
  Accumulator acc(pair_count(config));
  for_each_close_pair(config, range.beta + tol, [&](std::size_t, std::size_t, double r) {
    if (range.contains(r, tol)) acc.add(v(r, tol) + 1.0);
  });
  return acc.result();
}

double nonbond_energy(const Configuration& config, const Potential& v, BondRange range) {
  range.validate();
  const double tol = config.tol();
  if (v.kind() == Potential::Kind::HeitmannRadin) {
    // Only pairs closer than 1 - tol contribute (+inf); farther pairs give 0.
    bool overlap = false;
    for_each_close_pair(config, 1.0, [&](std::size_t, std::size_t, double r) {
      if (!range.contains(r, tol) && std::isinf(v(r, tol))) overlap = true;
    });
    return overlap ? kInf : 0.0;
  }
  Accumulator acc(pair_count(config));
  for_each_pair(config, [&](std::size_t, std::size_t, double r) {
    if (!range.contains(r, tol)) acc.add(v(r, tol));
  });
  return acc.result();
}

BondRange default_soft_range(const Configuration& config) {
  BondRange range{0.8, 1.2};
  if (config.size() < 2) return range;
  const double dmin = min_pairwise_distance(config);
  const double limit = std::sqrt(2.0) * dmin - 2.0 * config.tol();
  if (range.beta + config.tol() >= std::sqrt(2.0) * dmin) range.beta = limit;
  if (range.beta < 1.0) {
    throw PlanarityError(1.0, dmin, "no admissible bond range: sqrt(2) * d_min = " +
                                        std::to_string(std::sqrt(2.0) * dmin) + " does not exceed 1");
  }
  return range;
}

EnergyBreakdown energy_decomposition(const Configuration& config, const Potential& v, BondRange range) {
  range.validate();
  if (v.kind() == Potential::Kind::HeitmannRadin && !(range == BondRange::unit())) {
    throw DomainError("the Heitmann-Radin decomposition requires the bond range [1, 1]");
  }
  EnergyBreakdown b;
  b.particles = static_cast<int>(config.size());
  b.range = range;
  b.total = total_energy(config, v);
  if (std::isinf(b.total)) {
    b.infinite = true;
    return b;
  }

  const BondGraph graph = build_bond_graph(config, range);
  const TriGraph tri = triangulate(graph);
  b.bonds = static_cast<int>(graph.edges().size());
  b.bulk = -3.0 * b.particles;
  b.perimeter = perimeter(graph);
  b.euler_term = 3 * euler_characteristic(graph);
  b.defect = defect_measure(tri);
  b.elastic = elastic_energy(config, v, range);
  b.nonbond = nonbond_energy(config, v, range);

  // The integer part -3N + P + 3 chi + mu equals -#E exactly; summing it
  // first keeps the residual at rounding level.
  const double integer_part = static_cast<double>(-3 * b.particles + b.perimeter + b.euler_term + b.defect);
  if (integer_part != -static_cast<double>(b.bonds)) {
    throw IdentityViolation("bond-count", integer_part, -static_cast<double>(b.bonds),
                            "-3N + P + 3chi + mu != -#E");
  }
  std::vector<double> parts{integer_part, b.elastic, b.nonbond};
  b.residual = b.total - stable_sum(parts);

  const bool exact = v.kind() == Potential::Kind::HeitmannRadin;
  const double bound = exact ? 0.0 : 1e-9 * (1.0 + std::abs(b.total));
  if (!(std::abs(b.residual) <= bound)) {
    throw IdentityViolation("energy-decomposition", b.total, b.total - b.residual,
                            "energy decomposition residual " + std::to_string(b.residual) + " exceeds bound");
  }
  return b;
}

EnergyBreakdown energy_decomposition(const Configuration& config, const Potential& v) {
  const BondRange range =
      v.kind() == Potential::Kind::HeitmannRadin ? BondRange::unit() : default_soft_range(config);
  return energy_decomposition(config, v, range);
}

}  // namespace latticecurv
