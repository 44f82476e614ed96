#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature for vector-valued
// integrands. The interval with the largest error estimate is bisected until
// the summed estimate meets the tolerance or the subdivision budget runs out.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <vector>

#include "casimir/error.hpp"

namespace casimir::quad {

struct Tolerance {
  double absolute = 0.0;
  double relative = 1e-9;
  std::size_t max_subdivisions = std::size_t{1} << 20;
};

template <std::size_t N>
struct Result {
  std::array<double, N> value{};
  std::array<double, N> error{};
  std::size_t evaluations = 0;
  std::size_t subdivisions = 0;
};

namespace detail {

// Kronrod abscissae on [-1, 1] (positive half), with Kronrod and embedded
// Gauss weights. Odd indices are the Gauss-Legendre 7-point nodes.
inline constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <std::size_t N>
struct Segment {
  double lo = 0.0;
  double hi = 0.0;
  std::array<double, N> value{};
  std::array<double, N> error{};
  double worst = 0.0;  // max component error, used for ordering

  bool operator<(const Segment& other) const { return worst < other.worst; }
};

template <std::size_t N, class F>
Segment<N> gauss_kronrod(const F& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  std::array<double, N> kronrod{};
  std::array<double, N> gauss{};

  const std::array<double, N> fc = f(center);
  for (std::size_t k = 0; k < N; ++k) {
    kronrod[k] = kKronrod[7] * fc[k];
    gauss[k] = kGauss[3] * fc[k];
  }
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kNodes[j];
    const std::array<double, N> f1 = f(center - dx);
    const std::array<double, N> f2 = f(center + dx);
    for (std::size_t k = 0; k < N; ++k) {
      const double sum = f1[k] + f2[k];
      kronrod[k] += kKronrod[j] * sum;
      if (j % 2 == 1) gauss[k] += kGauss[j / 2] * sum;
    }
  }

  Segment<N> seg{lo, hi, {}, {}, 0.0};
  for (std::size_t k = 0; k < N; ++k) {
    seg.value[k] = kronrod[k] * half;
    seg.error[k] = std::abs((kronrod[k] - gauss[k]) * half);
    seg.worst = std::max(seg.worst, seg.error[k]);
  }
  return seg;
}

}  // namespace detail

/// Integrates f over [lo, hi]. f maps double -> std::array<double, N>.
/// Converged when sum of segment errors <= max(absolute, relative * max_k |I_k|)
/// for every component; the relative target uses the largest component so that
/// a component that cancels to zero does not stall refinement.
template <std::size_t N, class F>
Result<N> integrate(const F& f, double lo, double hi, const Tolerance& tol) {
  Result<N> result;
  if (lo == hi) return result;

  using Segment = detail::Segment<N>;
  std::vector<Segment> heap;
  heap.push_back(detail::gauss_kronrod<N>(f, lo, hi));
  result.evaluations = 15;

  std::array<double, N> value = heap.front().value;
  std::array<double, N> error = heap.front().error;

  // Running sums drift; recompute in interval order before accepting.
  auto resum = [&heap, &value, &error]() {
    std::vector<const Segment*> order;
    order.reserve(heap.size());
    for (const auto& s : heap) order.push_back(&s);
    std::sort(order.begin(), order.end(),
              [](const Segment* x, const Segment* y) { return x->lo < y->lo; });
    value.fill(0.0);
    error.fill(0.0);
    for (const Segment* s : order) {
      for (std::size_t k = 0; k < N; ++k) {
        value[k] += s->value[k];
        error[k] += s->error[k];
      }
    }
  };

  auto converged = [&tol, &value, &error]() {
    double scale = 0.0;
    for (double x : value) scale = std::max(scale, std::abs(x));
    const double target = std::max(tol.absolute, tol.relative * scale);
    return std::all_of(error.begin(), error.end(), [target](double x) { return x <= target; });
  };

  for (;;) {
    if (converged()) {
      resum();
      if (converged()) break;
    }
    if (result.subdivisions >= tol.max_subdivisions) {
      std::ostringstream os;
      os.precision(6);
      os << "adaptive quadrature on [" << lo << ", " << hi << "] did not converge within "
         << tol.max_subdivisions << " subdivisions";
      throw Error(ErrorCode::QuadratureNonConvergence, os.str());
    }
    std::pop_heap(heap.begin(), heap.end());
    const Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      throw Error(ErrorCode::QuadratureNonConvergence,
                  "adaptive quadrature exhausted floating-point resolution");
    }
    const Segment left = detail::gauss_kronrod<N>(f, worst.lo, mid);
    const Segment right = detail::gauss_kronrod<N>(f, mid, worst.hi);
    for (std::size_t k = 0; k < N; ++k) {
      value[k] += left.value[k] + right.value[k] - worst.value[k];
      error[k] += left.error[k] + right.error[k] - worst.error[k];
    }
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end());
    result.evaluations += 30;
    ++result.subdivisions;
  }

  result.value = value;
  result.error = error;
  return result;
}

/// Scalar convenience wrapper.
template <class F>
Result<1> integrate_scalar(const F& f, double lo, double hi, const Tolerance& tol) {
  return integrate<1>([&f](double x) { return std::array<double, 1>{f(x)}; }, lo, hi, tol);
}

}  // namespace casimir::quad
