#pragma once

// Grid scanning and one-dimensional refinement shared by the bounds and QKD
// searches.

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <span>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace wigner {

struct LineMinimum {
  double x;
  double value;
};

/// Golden-section minimization of `f` on [lo, hi] until the bracket is
/// narrower than `tolerance`. The endpoints are also evaluated, so a minimum
/// sitting on the boundary is returned as such.
LineMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                    double tolerance, int max_iterations = 500);

/// 0 means "all hardware threads"; the result is always at least 1.
unsigned resolve_thread_count(unsigned requested);

/// Evaluates fn(0) .. fn(count-1), possibly concurrently, and returns the
/// results in index order. If any call throws, the exception from the lowest
/// failing index is rethrown after all workers finish.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn, unsigned threads)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using Result = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<Result> out(count);
  const std::size_t workers =
      std::min<std::size_t>(resolve_thread_count(threads), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::size_t failure_index = std::numeric_limits<std::size_t>::max();
  std::exception_ptr failure;

  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (i < failure_index) {
          failure_index = i;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return out;
}

enum class AxisKind {
  closed,    // steps points including both endpoints
  open,      // steps interior points, endpoints excluded
  periodic,  // steps points on [min, max), wrapping around
};

struct GridAxis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  std::size_t steps = 2;
  AxisKind kind = AxisKind::closed;

  double step() const;
  double at(std::size_t i) const;
};

enum class Sense { minimize, maximize };

struct ExtremumPoint {
  std::vector<double> parameters;
  double value = 0.0;
};

struct RefineOptions {
  double bracket_tolerance = 1e-10;
  /// Refined points within this distance of the best value are all reported.
  double value_tolerance = 1e-6;
  /// Refined points closer than this (max-norm over parameters) are merged.
  double location_tolerance = 1e-6;
  std::size_t max_candidates = 32;
  int max_rounds = 60;
  unsigned threads = 0;
};

struct RefinedExtrema {
  ExtremumPoint best;
  std::vector<ExtremumPoint> all;  // within value_tolerance of best, sorted by parameters
};

using Objective = std::function<double(std::span<const double>)>;

/// Row-major index -> parameter vector (last axis varies fastest).
std::vector<double> grid_point(const std::vector<GridAxis>& axes, std::size_t flat_index);
std::size_t grid_size(const std::vector<GridAxis>& axes);

/// Evaluates `objective` at every grid node, in row-major order.
std::vector<double> evaluate_grid(const std::vector<GridAxis>& axes, const Objective& objective,
                                  unsigned threads);

/// Picks the grid's local extrema (axis neighbours only) that lie close to
/// the grid-wide extreme, polishes each by cyclic per-axis golden-section
/// search in a one-step window, and returns every polished point that ties
/// with the best one.
RefinedExtrema refine_grid_extrema(const std::vector<GridAxis>& axes,
                                   std::span<const double> values, const Objective& objective,
                                   Sense sense, const RefineOptions& options = {});

}  // namespace wigner
