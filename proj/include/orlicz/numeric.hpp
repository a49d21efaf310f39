#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace orlicz {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/*! Deterministic chunked sum: values are accumulated sequentially inside
 *  fixed-size blocks and block results are combined in index order, so the
 *  result does not depend on how many workers computed the blocks. */
inline constexpr std::size_t kSumBlock = 4096;

template <class GetValue>
double block_sum(std::size_t n, GetValue&& value_at) {
  double total = 0.0;
  for (std::size_t lo = 0; lo < n; lo += kSumBlock) {
    const std::size_t hi = std::min(n, lo + kSumBlock);
    double block = 0.0;
    for (std::size_t i = lo; i < hi; ++i) block += value_at(i);
    total += block;
  }
  return total;
}

/*! Runs body(i) for i in [0, n). Work is split into fixed ranges whose
 *  boundaries do not depend on the worker count; each index is touched by
 *  exactly one worker and the caller must make iterations independent. */
template <class Body>
void parallel_for(std::size_t n, int workers, Body&& body) {
  if (n == 0) return;
  if (workers <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const std::size_t w = std::min<std::size_t>(workers, n);
  const std::size_t chunk = (n + w - 1) / w;
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (std::size_t t = 0; t < w; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

/*! Bisection for the edge of a monotone predicate: pred is false on [lo, x*)
 *  and true on (x*, hi]; returns an approximation of x*. */
template <class Pred>
double bisect_edge(Pred&& pred, double lo, double hi, double rel_tol = 1e-13,
                   int max_iter = 400) {
  for (int i = 0; i < max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    if (pred(mid))
      hi = mid;
    else
      lo = mid;
    if (hi - lo <= rel_tol * std::max(std::abs(hi), 1e-300)) break;
  }
  return 0.5 * (lo + hi);
}

/*! Golden-section search for the maximum of a concave objective on [lo, hi].
 *  Tolerant of -inf plateaus at the edges. */
template <class F>
double golden_max(F&& f, double lo, double hi, int iters = 200) {
  static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters && b - a > 1e-14 * (std::abs(b) + 1e-300); ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    }
  }
  const double xm = 0.5 * (a + b);
  const double fm = f(xm);
  double best = fm;
  if (f1 > best) best = f1;
  if (f2 > best) best = f2;
  return best;
}

/*! Adaptive Simpson quadrature on [a, b]. */
namespace detail {
template <class F>
double simpson_rec(F& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol = 1e-12,
                        int depth = 40) {
  if (!(b > a)) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_rec(f, a, b, fa, fm, fb, whole,
                             tol * std::max(std::abs(whole), 1e-30), depth);
}

/*! FNV-1a; used wherever a platform-stable string hash is needed (std::hash
 *  is implementation-defined and would break cross-run determinism). */
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/*! Portable uniform double in [0,1) from a 64-bit generator draw.
 *  std::uniform_real_distribution is not bit-stable across standard
 *  libraries, so corpora derive their values through this instead. */
inline double uniform01(std::uint64_t raw) {
  return static_cast<double>(raw >> 11) * 0x1.0p-53;
}

}  // namespace orlicz
