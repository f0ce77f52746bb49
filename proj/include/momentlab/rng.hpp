#ifndef MOMENTLAB_RNG_HPP
#define MOMENTLAB_RNG_HPP

#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "momentlab/types.hpp"

namespace momentlab {

// Deterministic RNG for all sampling in the library. SplitMix64 streams keyed
// by (seed, index) and Box-Muller normals from explicit bit-to-double
// conversion, so identical seeds give identical samples on any platform and
// for any worker-thread count.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : m_state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (m_state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1), 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (cosine branch).
  double gaussian() {
    double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;  // (0,1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  std::uint64_t m_state;
};

inline std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Independent per-sample stream: hashes (seed, index) into a SplitMix64 state.
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ULL)));
}

template <typename Scalar>
VectorX<Scalar> random_real_vector(SplitMix64& rng, Index n) {
  VectorX<Scalar> v(n);
  for (Index i = 0; i < n; ++i) v(i) = static_cast<Scalar>(rng.gaussian());
  return v;
}

/// Complex vector with i.i.d. standard Gaussian real and imaginary parts.
template <typename Scalar>
VectorXc<Scalar> random_state(SplitMix64& rng, Index n) {
  VectorXc<Scalar> v(n);
  for (Index i = 0; i < n; ++i) {
    const Scalar re = static_cast<Scalar>(rng.gaussian());
    const Scalar im = static_cast<Scalar>(rng.gaussian());
    v(i) = std::complex<Scalar>(re, im);
  }
  return v;
}

/// Haar-uniform point on the unit sphere of C^n (Gaussian normalization).
template <typename Scalar>
VectorXc<Scalar> random_unit_state(SplitMix64& rng, Index n) {
  VectorXc<Scalar> v = random_state<Scalar>(rng, n);
  Scalar norm = v.norm();
  while (norm == Scalar(0)) {  // probability zero, but keep the contract total
    v = random_state<Scalar>(rng, n);
    norm = v.norm();
  }
  return v / norm;
}

/// Runs fn(i) for i in [0, count) over at most `threads` workers. Results must
/// be written by index so the outcome is independent of the thread count.
template <typename Fn>
void parallel_for(Index count, int threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    for (Index i = 0; i < count; ++i) fn(i);
    return;
  }
  const int workers = static_cast<int>(std::min<Index>(threads, count));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const Index chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const Index begin = static_cast<Index>(w) * chunk;
    const Index end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &fn] {
      for (Index i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace momentlab

#endif
