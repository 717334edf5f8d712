#pragma once

#include <algorithm>
#include <complex>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fractal {

/// Element (a, b) of the first-order linear recurrence x_k = a_k x_{k-1} + b_k.
struct LinearElement {
  std::complex<double> a{1.0, 0.0};
  std::complex<double> b{0.0, 0.0};

  static constexpr LinearElement identity() { return {}; }
};

/// (a1, b1) . (a2, b2) = (a1 a2, a2 b1 + b2): apply the earlier element, then the later one.
constexpr LinearElement combine(const LinearElement& first, const LinearElement& second) {
  return {first.a * second.a, second.a * first.b + second.b};
}

template <class T, class Op>
void inclusive_scan_sequential(std::span<T> data, Op op) {
  for (std::size_t i = 1; i < data.size(); ++i) data[i] = op(data[i - 1], data[i]);
}

/// Three-phase chunked inclusive scan: local scans, a scan over chunk totals, then a
/// fix-up pass applying each chunk's carried prefix. `chunks` <= 0 picks the thread count.
/// The association order depends on the chunking, so results match a sequential scan only
/// up to floating-point reassociation.
template <class T, class Op>
void inclusive_scan_parallel(std::span<T> data, Op op, T identity, int chunks = 0) {
  const std::size_t n = data.size();
  if (n < 2) return;
  std::size_t parts = static_cast<std::size_t>(chunks);
  if (chunks <= 0) {
#ifdef _OPENMP
    parts = static_cast<std::size_t>(omp_get_max_threads());
#else
    parts = 1;
#endif
  }
  parts = std::clamp<std::size_t>(parts, 1, n);
  if (parts == 1) {
    inclusive_scan_sequential(data, op);
    return;
  }
  const std::size_t step = (n + parts - 1) / parts;
  parts = (n + step - 1) / step;

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(parts); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * step;
    const std::size_t hi = std::min(n, lo + step);
    inclusive_scan_sequential(data.subspan(lo, hi - lo), op);
  }

  std::vector<T> carry(parts, identity);
  for (std::size_t c = 1; c < parts; ++c) {
    carry[c] = op(carry[c - 1], data[std::min(n, c * step) - 1]);
  }

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 1; c < static_cast<std::ptrdiff_t>(parts); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * step;
    const std::size_t hi = std::min(n, lo + step);
    for (std::size_t i = lo; i < hi; ++i) data[i] = op(carry[c], data[i]);
  }
}

}  // namespace fractal
