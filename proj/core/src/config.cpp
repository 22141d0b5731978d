#include "latticecurv/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "latticecurv/error.hpp"
#include "latticecurv/lattice.hpp"

namespace latticecurv {

double squared_distance(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

namespace {

std::vector<std::size_t> order_by_x(std::span<const Point> pts) {
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pts[a].x < pts[b].x || (pts[a].x == pts[b].x && a < b);
  });
  return order;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace

Configuration::Configuration(std::vector<Point> points, double tol) : points_(std::move(points)), tol_(tol) {
  if (!(tol_ > 0.0) || !std::isfinite(tol_)) {
    throw DomainError("tolerance must be a positive finite number");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y)) {
      throw DomainError("point " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
  const auto order = order_by_x(points_);
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      const Point& p = points_[order[a]];
      const Point& q = points_[order[b]];
      if (q.x - p.x > tol_) break;
      if (distance(p, q) <= tol_) {
        const auto i = std::min(order[a], order[b]);
        const auto j = std::max(order[a], order[b]);
        throw DuplicatePointError(i, j,
                                  "points " + std::to_string(i) + " and " + std::to_string(j) +
                                      " coincide within tolerance " + format_double(tol_));
      }
    }
  }
}

Configuration Configuration::subset(std::span<const std::size_t> indices) const {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (auto i : indices) pts.push_back(points_.at(i));
  return Configuration(std::move(pts), tol_);
}

void BondRange::validate() const {
  if (!(alpha > 0.0) || !(alpha <= 1.0) || !(beta >= 1.0) || !std::isfinite(beta)) {
    throw DomainError("bond range must satisfy 0 < alpha <= 1 <= beta (got [" + format_double(alpha) + ", " +
                      format_double(beta) + "])");
  }
}

ConfigFormat format_for_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".json" ? ConfigFormat::Json : ConfigFormat::XyText;
}

namespace {

Configuration parse_xy(std::istream& in, double tol) {
  std::vector<Point> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    double values[2];
    int count = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (true) {
      while (p != end && std::isspace(static_cast<unsigned char>(*p))) ++p;
      if (p == end) break;
      if (count == 2) throw ParseError("line " + std::to_string(lineno) + ": expected exactly two numbers");
      auto [next, ec] = std::from_chars(p, end, values[count]);
      if (ec != std::errc() || (next != end && !std::isspace(static_cast<unsigned char>(*next)))) {
        throw ParseError("line " + std::to_string(lineno) + ": malformed number");
      }
      ++count;
      p = next;
    }
    if (count == 0) continue;
    if (count != 2) throw ParseError("line " + std::to_string(lineno) + ": expected exactly two numbers");
    pts.push_back({values[0], values[1]});
  }
  return Configuration(std::move(pts), tol);
}

Configuration parse_json(std::istream& in, double tol) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
    throw ParseError("JSON configuration must be an object with a \"points\" array");
  }
  std::vector<Point> pts;
  for (const auto& item : doc["points"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
      throw ParseError("each point must be a two-element numeric array");
    }
    pts.push_back({item[0].get<double>(), item[1].get<double>()});
  }
  if (doc.contains("tol")) {
    if (!doc["tol"].is_number()) throw ParseError("\"tol\" must be a number");
    tol = doc["tol"].get<double>();
  }
  return Configuration(std::move(pts), tol);
}

}  // namespace

Configuration load_configuration(std::istream& source, ConfigFormat format, double tol) {
  return format == ConfigFormat::Json ? parse_json(source, tol) : parse_xy(source, tol);
}

Configuration load_configuration(const std::filesystem::path& path, double tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  return load_configuration(in, format_for_path(path), tol);
}

Configuration parse_configuration(const std::string& text, ConfigFormat format, double tol) {
  std::istringstream in(text);
  return load_configuration(in, format, tol);
}

void save_configuration(std::ostream& out, const Configuration& config, ConfigFormat format) {
  if (format == ConfigFormat::Json) {
    nlohmann::json doc;
    doc["points"] = nlohmann::json::array();
    for (const auto& p : config.points()) doc["points"].push_back({p.x, p.y});
    doc["tol"] = config.tol();
    out << doc.dump() << '\n';
    return;
  }
  for (const auto& p : config.points()) out << format_double(p.x) << ' ' << format_double(p.y) << '\n';
}

std::string to_string(const Configuration& config, ConfigFormat format) {
  std::ostringstream out;
  save_configuration(out, config, format);
  return out.str();
}

double min_pairwise_distance(const Configuration& config) {
  const auto pts = config.points();
  if (pts.size() < 2) throw UndefinedDistanceError("minimum pairwise distance needs at least two points");
  const auto order = order_by_x(pts);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      const Point& p = pts[order[a]];
      const Point& q = pts[order[b]];
      if (q.x - p.x >= best) break;
      best = std::min(best, distance(p, q));
    }
  }
  return best;
}

Configuration generate_lattice_patch(int shells) {
  if (shells < 0) throw DomainError("shell count must be non-negative");
  return to_configuration(hexagon(shells));
}

Configuration generate_random_config(int n, std::uint64_t seed, double dmin) {
  if (n < 1) throw DomainError("random configuration needs n >= 1");
  if (!(dmin > 1.0 / std::sqrt(2.0))) throw DomainError("dmin must exceed 1/sqrt(2)");
  const double side = 2.0 * std::sqrt(static_cast<double>(n));
  const long long budget = 10000LL * n;
  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  long long attempts = 0;
  while (static_cast<int>(pts.size()) < n) {
    if (attempts++ >= budget) {
      throw SamplingError(attempts - 1, "sampling budget exhausted after " + std::to_string(attempts - 1) +
                                            " attempts with " + std::to_string(pts.size()) + " of " +
                                            std::to_string(n) + " points placed");
    }
    const Point cand{side * rng.uniform(), side * rng.uniform()};
    const bool ok = std::none_of(pts.begin(), pts.end(), [&](const Point& p) { return distance(p, cand) < dmin; });
    if (ok) pts.push_back(cand);
  }
  return Configuration(std::move(pts));
}

}  // namespace latticecurv
