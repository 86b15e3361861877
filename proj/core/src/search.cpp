#include "wigner/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wigner/errors.hpp"

namespace wigner {

LineMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                    double tolerance, int max_iterations) {
  if (lo > hi) std::swap(lo, hi);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  LineMinimum best{lo, f(lo)};
  auto consider = [&best](double x, double v) {
    if (v < best.value) best = {x, v};
  };
  consider(hi, f(hi));

  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iterations && (b - a) > tolerance; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  consider(c, fc);
  consider(d, fd);
  const double mid = 0.5 * (a + b);
  consider(mid, f(mid));
  return best;
}

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

double GridAxis::step() const {
  switch (kind) {
    case AxisKind::closed:
      return steps > 1 ? (max - min) / static_cast<double>(steps - 1) : 0.0;
    case AxisKind::open:
      return (max - min) / static_cast<double>(steps + 1);
    case AxisKind::periodic:
      return (max - min) / static_cast<double>(steps);
  }
  return 0.0;
}

double GridAxis::at(std::size_t i) const {
  const double h = step();
  if (kind == AxisKind::open) return min + h * static_cast<double>(i + 1);
  if (kind == AxisKind::closed && steps > 1 && i + 1 == steps) return max;
  return min + h * static_cast<double>(i);
}

std::size_t grid_size(const std::vector<GridAxis>& axes) {
  std::size_t n = 1;
  for (const auto& axis : axes) n *= axis.steps;
  return n;
}

std::vector<double> grid_point(const std::vector<GridAxis>& axes, std::size_t flat_index) {
  std::vector<double> point(axes.size());
  for (std::size_t k = axes.size(); k-- > 0;) {
    point[k] = axes[k].at(flat_index % axes[k].steps);
    flat_index /= axes[k].steps;
  }
  return point;
}

std::vector<double> evaluate_grid(const std::vector<GridAxis>& axes, const Objective& objective,
                                  unsigned threads) {
  return parallel_map(
      grid_size(axes),
      [&](std::size_t i) {
        const std::vector<double> p = grid_point(axes, i);
        return objective(p);
      },
      threads);
}

namespace {

// Row-major strides, last axis fastest.
std::vector<std::size_t> strides_of(const std::vector<GridAxis>& axes) {
  std::vector<std::size_t> strides(axes.size(), 1);
  for (std::size_t k = axes.size(); k-- > 1;) strides[k - 1] = strides[k] * axes[k].steps;
  return strides;
}

// Calls visit(neighbour_flat_index) for each axis neighbour of `flat`.
template <class Visit>
void for_each_neighbour(const std::vector<GridAxis>& axes, const std::vector<std::size_t>& strides,
                        std::size_t flat, Visit&& visit) {
  for (std::size_t k = 0; k < axes.size(); ++k) {
    const std::size_t n = axes[k].steps;
    if (n < 2) continue;
    const std::size_t i = (flat / strides[k]) % n;
    const std::size_t base = flat - i * strides[k];
    if (i > 0) {
      visit(base + (i - 1) * strides[k]);
    } else if (axes[k].kind == AxisKind::periodic) {
      visit(base + (n - 1) * strides[k]);
    }
    if (i + 1 < n) {
      visit(base + (i + 1) * strides[k]);
    } else if (axes[k].kind == AxisKind::periodic) {
      visit(base);
    }
  }
}

double wrap(const GridAxis& axis, double x) {
  if (axis.kind != AxisKind::periodic) return x;
  const double span = axis.max - axis.min;
  double r = std::fmod(x - axis.min, span);
  if (r < 0.0) r += span;
  return axis.min + r;
}

double axis_distance(const GridAxis& axis, double a, double b) {
  double d = std::abs(a - b);
  if (axis.kind == AxisKind::periodic) d = std::min(d, (axis.max - axis.min) - d);
  return d;
}

ExtremumPoint polish(const std::vector<GridAxis>& axes, std::vector<double> point, double value,
                     const Objective& signed_objective, const RefineOptions& options) {
  for (int round = 0; round < options.max_rounds; ++round) {
    double moved = 0.0;
    for (std::size_t k = 0; k < axes.size(); ++k) {
      const GridAxis& axis = axes[k];
      if (axis.steps < 2 || axis.max <= axis.min) continue;
      const double h = axis.step();
      double lo = point[k] - h;
      double hi = point[k] + h;
      if (axis.kind != AxisKind::periodic) {
        lo = std::max(lo, axis.min);
        hi = std::min(hi, axis.max);
      }
      std::vector<double> probe = point;
      const LineMinimum m = golden_section_minimize(
          [&](double x) {
            probe[k] = x;
            return signed_objective(probe);
          },
          lo, hi, options.bracket_tolerance);
      if (m.value < value) {
        moved = std::max(moved, std::abs(m.x - point[k]));
        point[k] = m.x;
        value = m.value;
      }
    }
    if (moved < options.bracket_tolerance) break;
  }
  for (std::size_t k = 0; k < axes.size(); ++k) point[k] = wrap(axes[k], point[k]);
  return {std::move(point), value};
}

}  // namespace

RefinedExtrema refine_grid_extrema(const std::vector<GridAxis>& axes,
                                   std::span<const double> values, const Objective& objective,
                                   Sense sense, const RefineOptions& options) {
  const std::size_t n = grid_size(axes);
  if (axes.empty() || values.size() != n || n == 0) {
    throw DomainError("refine_grid_extrema: value count does not match grid");
  }
  const double sign = sense == Sense::minimize ? 1.0 : -1.0;
  const std::vector<std::size_t> strides = strides_of(axes);

  // Largest change between neighbouring nodes bounds how far the true
  // extremum can sit below the best grid value.
  double best_grid = std::numeric_limits<double>::infinity();
  double slack = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    best_grid = std::min(best_grid, sign * values[i]);
    for_each_neighbour(axes, strides, i, [&](std::size_t j) {
      slack = std::max(slack, std::abs(values[i] - values[j]));
    });
  }
  slack = 2.0 * slack + 1e-12;

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = sign * values[i];
    if (v > best_grid + slack) continue;
    bool local = true;
    for_each_neighbour(axes, strides, i, [&](std::size_t j) {
      if (sign * values[j] < v) local = false;
    });
    if (local) candidates.push_back(i);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
    return sign * values[a] < sign * values[b];
  });
  if (candidates.size() > options.max_candidates) candidates.resize(options.max_candidates);

  const Objective signed_objective = [&](std::span<const double> p) { return sign * objective(p); };
  std::vector<ExtremumPoint> polished = parallel_map(
      candidates.size(),
      [&](std::size_t c) {
        const std::size_t idx = candidates[c];
        return polish(axes, grid_point(axes, idx), sign * values[idx], signed_objective, options);
      },
      options.threads);

  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : polished) best = std::min(best, p.value);

  std::vector<ExtremumPoint> ties;
  for (auto& p : polished) {
    if (p.value > best + options.value_tolerance) continue;
    auto same = std::find_if(ties.begin(), ties.end(), [&](const ExtremumPoint& q) {
      for (std::size_t k = 0; k < axes.size(); ++k) {
        if (axis_distance(axes[k], p.parameters[k], q.parameters[k]) >= options.location_tolerance)
          return false;
      }
      return true;
    });
    if (same == ties.end()) {
      ties.push_back(p);
    } else if (p.value < same->value) {
      *same = p;
    }
  }
  std::sort(ties.begin(), ties.end(), [](const ExtremumPoint& a, const ExtremumPoint& b) {
    return a.parameters < b.parameters;
  });

  RefinedExtrema out;
  for (auto& p : ties) p.value *= sign;
  out.all = std::move(ties);
  out.best = *std::min_element(out.all.begin(), out.all.end(),
                               [sign](const ExtremumPoint& a, const ExtremumPoint& b) {
                                 return sign * a.value < sign * b.value;
                               });
  return out;
}

}  // namespace wigner
