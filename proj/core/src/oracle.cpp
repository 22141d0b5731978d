#include <algorithm>
#include <set>
#include <vector>

#include "latticecurv/error.hpp"
#include "latticecurv/ground_state.hpp"

namespace latticecurv {

namespace {

using Shape = std::vector<LatticeCoord>;

LatticeCoord rotate60(LatticeCoord c) { return {-c.j, c.i + c.j}; }
LatticeCoord reflect(LatticeCoord c) { return {c.j, c.i}; }

bool row_major_less(LatticeCoord a, LatticeCoord b) { return a.j < b.j || (a.j == b.j && a.i < b.i); }

void normalize(Shape& s) {
  std::sort(s.begin(), s.end(), row_major_less);
  const LatticeCoord origin = s.front();
  for (auto& c : s) c = c - origin;
}

/// Smallest image under the 12 point symmetries of the lattice, up to
/// translation.
Shape canonical(const Shape& cells) {
  Shape best;
  for (int mirror = 0; mirror < 2; ++mirror) {
    Shape s = cells;
    if (mirror) {
      for (auto& c : s) c = reflect(c);
    }
    for (int r = 0; r < 6; ++r) {
      for (auto& c : s) c = rotate60(c);
      Shape t = s;
      normalize(t);
      if (best.empty() || t < best) best = std::move(t);
    }
  }
  return best;
}

/// Redelmeier enumeration of fixed connected sets containing the root as
/// their row-major smallest cell.
class Enumerator {
 public:
  Enumerator(int n, int radius, long long budget)
      : n_(n), radius_(radius), budget_(budget), side_(2 * radius + 3), occupied_(cells(), 0), reached_(cells(), 0) {}

  OracleResult run() {
    const int root = index({0, 0});
    reached_[static_cast<std::size_t>(root)] = 1;
    recurse({root}, 0);
    OracleResult r;
    r.energy = -best_bonds_;
    r.classes = static_cast<long long>(minimizers_.size());
    r.visited = visited_;
    return r;
  }

 private:
  std::size_t cells() const { return static_cast<std::size_t>(side_) * static_cast<std::size_t>(side_); }
  int offset() const { return radius_ + 1; }
  int index(LatticeCoord c) const { return (c.j + offset()) * side_ + (c.i + offset()); }
  LatticeCoord coord(int idx) const { return {idx % side_ - offset(), idx / side_ - offset()}; }

  bool allowed(LatticeCoord c) const {
    if (c.j < 0 || (c.j == 0 && c.i < 0)) return false;
    return hex_distance(c, {0, 0}) <= radius_;
  }

  void recurse(std::vector<int> untried, int bonds) {
    while (!untried.empty()) {
      const int cell = untried.back();
      untried.pop_back();
      if (++visited_ > budget_) throw BudgetExceededError("lattice oracle exceeded its budget of visited sets");

      const LatticeCoord c = coord(cell);
      int gained = 0;
      for (const auto& d : kLatticeDirections) {
        const LatticeCoord nb = c + d;
        if (hex_distance(nb, {0, 0}) <= radius_ && occupied_[static_cast<std::size_t>(index(nb))]) ++gained;
      }
      occupied_[static_cast<std::size_t>(cell)] = 1;
      current_.push_back(c);

      if (static_cast<int>(current_.size()) == n_) {
        record(bonds + gained);
      } else {
        std::vector<int> fresh;
        for (const auto& d : kLatticeDirections) {
          const LatticeCoord nb = c + d;
          if (!allowed(nb)) continue;
          const int idx = index(nb);
          if (reached_[static_cast<std::size_t>(idx)]) continue;
          reached_[static_cast<std::size_t>(idx)] = 1;
          fresh.push_back(idx);
        }
        std::vector<int> next = untried;
        next.insert(next.end(), fresh.begin(), fresh.end());
        recurse(std::move(next), bonds + gained);
        for (int idx : fresh) reached_[static_cast<std::size_t>(idx)] = 0;
      }

      current_.pop_back();
      occupied_[static_cast<std::size_t>(cell)] = 0;
    }
  }

  void record(int bonds) {
    if (bonds < best_bonds_) return;
    if (bonds > best_bonds_) {
      best_bonds_ = bonds;
      minimizers_.clear();
    }
    minimizers_.insert(canonical(current_));
  }

  int n_;
  int radius_;
  long long budget_;
  int side_;
  std::vector<char> occupied_;
  std::vector<char> reached_;
  Shape current_;
  int best_bonds_ = -1;
  std::set<Shape> minimizers_;
  long long visited_ = 0;
};

}  // namespace

OracleResult brute_force_min_lattice(int n, int radius, long long budget) {
  if (n < 1 || n > 12) throw DomainError("lattice oracle supports 1 <= N <= 12");
  if (radius < 0) throw DomainError("lattice oracle radius must be non-negative");
  return Enumerator(n, std::max(radius, 0), budget).run();
}

}  // namespace latticecurv
