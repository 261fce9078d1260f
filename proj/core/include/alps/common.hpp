#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace alps {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Axis-aligned input box, the support of all densities and designs.
struct Box {
  Vec lo, hi;

  int dim() const { return static_cast<int>(lo.size()); }
  double diameter() const { return (hi - lo).norm(); }
  double volume() const { return (hi - lo).prod(); }
  bool contains(const Eigen::Ref<const Vec>& x, double tol = 1e-12) const;

  static Box unit(int d);
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Weighted local design is singular even after ridge jitter; the bandwidth is
/// too small for the data around the query point.
struct EffectiveRankDeficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Every bandwidth candidate of a Lepski ladder was rank-deficient.
struct NoFeasibleBandwidth : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlIterationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

uint64_t splitmix64(uint64_t x);

/// Deterministic random stream (xoshiro256++). All distributions are
/// hand-rolled so that draws are bit-stable across standard library
/// implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next_u64();
  /// Uniform on [0, 1) with 53 significant bits.
  double uniform01();
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }
  /// Standard normal via Box-Muller.
  double normal();
  /// Uniform integer in [0, n).
  uint64_t below(uint64_t n);

  /// Independent substream identified by `stream`; forking commutes with use.
  Rng fork(uint64_t stream) const;

  /// Deterministic in-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  uint64_t base_seed_;
  uint64_t s_[4];  // xoshiro256++ state
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Number of worker threads used by parallel_for (process-global).
int thread_count();
void set_thread_count(int n);

/// Runs fn(begin, end) over a static partition of [0, count). Results written
/// to disjoint slots by index stay deterministic regardless of scheduling.
void parallel_for(std::int64_t count,
                  const std::function<void(std::int64_t, std::int64_t)>& fn);

/// Formats a double so the value round-trips and reruns are byte-identical.
std::string format_double(double v);

double median_inplace(std::vector<double>& v);

}  // namespace alps
