#include "adiabatic/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "adiabatic/error.hpp"
#include "adiabatic/lower_bound.hpp"
#include "adiabatic/parallel.hpp"
#include "lapack.hpp"

namespace adiabatic {
namespace {

#if defined(__SIZEOF_FLOAT128__)
using Wide = __float128;
#else
using Wide = long double;
#endif

template <class Real>
Real magnitude(Real x) {
  return x < 0 ? -x : x;
}

template <class Real>
struct Levels {
  Real l0;
  Real l1;
  Real gap() const { return l1 - l0; }
};

// Sturm sequence count of eigenvalues strictly below x.
template <class Real>
int count_below(const std::vector<Real>& d, const std::vector<Real>& e2, Real x, Real pivmin) {
  int count = 0;
  Real q = d[0] - x;
  for (std::size_t i = 0;; ++i) {
    if (magnitude(q) <= pivmin) q = -pivmin;
    if (q < 0) ++count;
    if (i + 1 == d.size()) break;
    q = d[i + 1] - x - e2[i] / q;
  }
  return count;
}

// k-th smallest eigenvalue (k = 0, 1, ...) of a symmetric tridiagonal matrix
// given its squared off-diagonal, bisected until the midpoint is no longer
// representable.
template <class Real>
Real kth_eigenvalue(const std::vector<Real>& d, const std::vector<Real>& e2, int k, Real lo, Real hi) {
  const Real pivmin = Real(1e-290);
  for (int it = 0; it < 1000; ++it) {
    const Real mid = lo + (hi - lo) / 2;
    if (!(mid > lo && mid < hi)) break;
    if (count_below(d, e2, mid, pivmin) >= k + 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

template <class Real>
std::pair<Real, Real> gershgorin(const std::vector<Real>& d, const std::vector<Real>& e2) {
  Real lo = d[0], hi = d[0];
  for (std::size_t i = 0; i < d.size(); ++i) {
    // Radius from |e| <= (1 + e^2) / 2 keeps everything in Real without a sqrt.
    Real r = 0;
    if (i > 0) r += (1 + e2[i - 1]) / 2;
    if (i + 1 < d.size()) r += (1 + e2[i]) / 2;
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  return {lo - 1, hi + 1};
}

template <class Real>
Levels<Real> two_lowest_tridiagonal(const std::vector<Real>& d, const std::vector<Real>& e2) {
  if (d.size() == 1) return {d[0], d[0]};
  const auto [lo, hi] = gershgorin(d, e2);
  const Real l0 = kth_eigenvalue(d, e2, 0, lo, hi);
  const Real l1 = kth_eigenvalue(d, e2, 1, l0 - (hi - lo) * Real(1e-30), hi);
  return {l0, std::max(l0, l1)};
}

// Two lowest levels of the full 2^n-dimensional H(s) of a weight-symmetric
// family, assembled from its total-spin sectors. The ground state lies in the
// symmetric sector, but the first excited level may come from a sector with
// smaller total spin.
class DickeGap {
 public:
  explicit DickeGap(const ProblemFamily& family) : n_(family.n) {
    if (!family.supports_dicke()) {
      throw UnsupportedFamily("family " + family.describe() + " has no weight-symmetric reduction; use the dense backend");
    }
    for (double v : family.cost.weight_profile()) profile_.push_back(Wide(v));
  }

  Levels<Wide> at(Wide s) const {
    std::vector<Wide> d, e2;
    sector(s, n_, d, e2);
    Levels<Wide> best = two_lowest_tridiagonal(d, e2);
    auto push = [&best](Wide x) {
      if (x < best.l0) {
        best.l1 = best.l0;
        best.l0 = x;
      } else if (x < best.l1) {
        best.l1 = x;
      }
    };
    for (int two_j = n_ - 2; two_j >= 0; two_j -= 2) {
      sector(s, two_j, d, e2);
      const auto [lo, hi] = gershgorin(d, e2);
      if (lo >= best.l1) continue;
      const Wide c0 = kth_eigenvalue(d, e2, 0, lo, hi);
      push(c0);
      if (spin_sector_multiplicity(n_, two_j) > 1) {
        push(c0);
      } else if (d.size() > 1) {
        push(kth_eigenvalue(d, e2, 1, c0 - (hi - lo) * Wide(1e-30), hi));
      }
    }
    return best;
  }

 private:
  void sector(Wide s, int two_j, std::vector<Wide>& d, std::vector<Wide>& e2) const {
    const auto size = static_cast<std::size_t>(two_j) + 1;
    const int k_first = (n_ - two_j) / 2;
    d.assign(size, 0);
    e2.assign(size - 1, 0);
    const Wide t = 1 - s;
    for (std::size_t i = 0; i < size; ++i) {
      const int k = k_first + static_cast<int>(i);
      d[i] = t * n_ / 2 + s * profile_[static_cast<std::size_t>(k)];
      if (i + 1 < size) {
        // (1-s)^2 <j,m|S_x|j,m-1>^2 with 2m = n - 2k.
        const int two_m = n_ - 2 * k;
        e2[i] = t * t * Wide(two_j * (two_j + 2) - two_m * (two_m - 2)) / 16;
      }
    }
  }

  int n_;
  std::vector<Wide> profile_;
};

class DenseGap {
 public:
  DenseGap(const ProblemFamily& family, int dense_limit) {
    if (family.n > dense_limit) {
      throw CapacityError("dense backend needs n <= " + std::to_string(dense_limit) + ", got n = " + std::to_string(family.n));
    }
    kernel_ = initial_hamiltonian_kernel(family.initial_cost, dense_limit);
    cost_ = family.cost.tabulate(dense_limit);
  }

  Levels<double> at(double s) const {
    const int dim = static_cast<int>(cost_.size());
    std::vector<double> a(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
    fill(a.data(), 1.0 - s, s);
    const auto w = lapack::symmetric_eigenvalues(a.data(), dim, std::min(dim, 2));
    return {w[0], w.size() > 1 ? w[1] : w[0]};
  }

  /// Column-major a*H_0 + b*H_f.
  void fill(double* out, double a, double b) const {
    const std::size_t dim = cost_.size();
    for (std::size_t y = 0; y < dim; ++y) {
      double* col = out + y * dim;
      for (std::size_t x = 0; x < dim; ++x) col[x] = a * kernel_[x ^ y];
      col[y] += b * cost_[y];
    }
  }

  std::size_t dim() const { return cost_.size(); }

 private:
  std::vector<double> kernel_;
  std::vector<double> cost_;
};

void require_unit(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("s must lie in [0,1], got " + std::to_string(s));
}

// Golden-section search for the minimum of gap on [a, b]. Stops once the
// bracket is narrower than tol_s * min(1, best gap) or cannot shrink further.
template <class Real, class Gap>
std::pair<Real, Real> golden_minimize(const Gap& gap, Real a, Real b, double tol_s) {
  const Real invphi = Real(0.61803398874989484820458683436563811L);
  Real c = b - invphi * (b - a);
  Real d = a + invphi * (b - a);
  Real fc = gap(c);
  Real fd = gap(d);
  Real best_s = fc <= fd ? c : d;
  Real best_g = std::min(fc, fd);
  for (int it = 0; it < 600; ++it) {
    if (b - a <= Real(tol_s) * std::min(Real(1), best_g)) break;
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      if (!(c > a && c < d)) break;
      fc = gap(c);
      if (fc < best_g) best_g = fc, best_s = c;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      if (!(d > c && d < b)) break;
      fd = gap(d);
      if (fd < best_g) best_g = fd, best_s = d;
    }
  }
  return {best_s, best_g};
}

struct Candidate {
  double s;
  double g;
};

template <class Real, class Gap>
Candidate refine_on(const Gap& gap, double a, double b, double tol_s) {
  const auto [s, g] = golden_minimize<Real>(gap, Real(a), Real(b), tol_s);
  return {static_cast<double>(s), static_cast<double>(g)};
}

Candidate refine_bracket(const ProblemFamily& family, Backend backend, double a, double b, const GapOptions& options) {
  if (backend == Backend::dicke) {
    const DickeGap model(family);
    return refine_on<Wide>([&](Wide s) { return model.at(s).gap(); }, a, b, options.tol_s);
  }
  const DenseGap model(family, options.dense_limit);
  return refine_on<double>([&](double s) { return model.at(s).gap(); }, a, b, options.tol_s);
}

void fill_levels(SpectralReport& report, const ProblemFamily& family, const GapOptions& options) {
  const std::size_t count = report.s_grid.size();
  report.lambda0.assign(count, 0.0);
  report.lambda1.assign(count, 0.0);
  report.gap.assign(count, 0.0);
  auto store = [&](std::size_t i, auto levels) {
    report.lambda0[i] = static_cast<double>(levels.l0);
    report.lambda1[i] = static_cast<double>(levels.l1);
    report.gap[i] = static_cast<double>(levels.gap());
  };
  if (report.backend == Backend::dicke) {
    const DickeGap model(family);
    parallel_for(count, [&](std::size_t i) { store(i, model.at(Wide(report.s_grid[i]))); });
  } else {
    const DenseGap model(family, options.dense_limit);
    parallel_for(count, [&](std::size_t i) { store(i, model.at(report.s_grid[i])); });
  }
}

void validate_grid(std::span<const double> grid) {
  if (grid.empty()) throw DomainError("s grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require_unit(grid[i]);
    if (i > 0 && grid[i] < grid[i - 1]) throw DomainError("s grid must be sorted");
  }
}

}  // namespace

double closed_form_search_gap(int n, double s) {
  if (n < 1) throw DomainError("closed-form search gap needs n >= 1");
  require_unit(s);
  const double inv_dim = std::ldexp(1.0, -n);
  return std::sqrt(std::max(0.0, 1.0 + 4.0 * (1.0 - inv_dim) * (s * s - s)));
}

double closed_form_weight_gap(double s) {
  require_unit(s);
  return std::sqrt(2.0 * s * s - 2.0 * s + 1.0);
}

const char* to_string(Backend backend) { return backend == Backend::dense ? "dense" : "dicke"; }

Backend parse_backend(const std::string& name) {
  if (name == "dense") return Backend::dense;
  if (name == "dicke") return Backend::dicke;
  throw ContractViolation("unknown backend '" + name + "' (expected dense or dicke)");
}

Backend preferred_backend(const ProblemFamily& family) {
  return family.supports_dicke() ? Backend::dicke : Backend::dense;
}

std::vector<double> uniform_grid(int points) {
  if (points < 2) throw DomainError("a grid needs at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = static_cast<double>(i) / (points - 1);
  grid.back() = 1.0;
  return grid;
}

std::pair<double, double> two_lowest(const ProblemFamily& family, double s, Backend backend, int dense_limit) {
  require_unit(s);
  if (backend == Backend::dicke) {
    const auto l = DickeGap(family).at(Wide(s));
    return {static_cast<double>(l.l0), static_cast<double>(l.l1)};
  }
  const auto l = DenseGap(family, dense_limit).at(s);
  return {l.l0, l.l1};
}

double derivative_norm(const ProblemFamily& family, Backend backend, int dense_limit) {
  if (backend == Backend::dicke) {
    double norm = 0.0;
    for (int two_j = family.n; two_j >= 0; two_j -= 2) {
      for (double w : eigenvalues(spin_sector_derivative(family, two_j))) norm = std::max(norm, std::abs(w));
    }
    return norm;
  }
  const DenseGap model(family, dense_limit);
  const int dim = static_cast<int>(model.dim());
  std::vector<double> a(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
  model.fill(a.data(), -1.0, 1.0);
  const auto w = lapack::symmetric_eigenvalues(a.data(), dim);
  return std::max(std::abs(w.front()), std::abs(w.back()));
}

void refine_minimum(SpectralReport& report, const ProblemFamily& family, const GapOptions& options) {
  const auto& gap = report.gap;
  if (gap.empty()) throw DomainError("cannot refine an empty report");
  const auto best = static_cast<std::size_t>(std::min_element(gap.begin(), gap.end()) - gap.begin());
  report.s_star = report.s_grid[best];
  report.g_min = gap[best];
  if (!options.refine || gap.size() < 2) return;

  auto consider = [&](Candidate c) {
    if (c.g < report.g_min) {
      report.g_min = c.g;
      report.s_star = c.s;
    }
  };
  const double a = report.s_grid[best == 0 ? 0 : best - 1];
  const double b = report.s_grid[std::min(best + 1, gap.size() - 1)];
  consider(refine_bracket(family, report.backend, a, b, options));

  // The spike's avoided crossing can be narrower than the grid spacing; the
  // reduced A/B crossing point locates it independently of the grid.
  if (is_spike_family(family)) {
    const double s_c = reduced_critical_point(family.n);
    const double width = std::max(b - a, 1e-3);
    consider(refine_bracket(family, report.backend, std::max(0.0, s_c - width), std::min(1.0, s_c + width), options));
  }
}

SpectralReport gap_curve(const ProblemFamily& family, std::span<const double> grid, Backend backend,
                         const GapOptions& options) {
  validate_grid(grid);
  SpectralReport report;
  report.family = family.describe();
  report.backend = backend;
  report.s_grid.assign(grid.begin(), grid.end());
  fill_levels(report, family, options);
  refine_minimum(report, family, options);
  report.delta_max = derivative_norm(family, backend, options.dense_limit);
  return report;
}

MinGap min_gap(const ProblemFamily& family, Backend backend, const GapOptions& options) {
  SpectralReport report;
  report.backend = backend;
  report.s_grid = uniform_grid(101);
  fill_levels(report, family, options);
  GapOptions refine = options;
  refine.refine = true;
  refine_minimum(report, family, refine);
  return {report.s_star, report.g_min};
}

double spike_gap_bound(int n) { return (n + 1) * std::pow(2.0, -(n - 3) / 2.0); }

MinGapRow min_gap_row(const ProblemFamily& family, Backend backend, const GapOptions& options) {
  const auto m = min_gap(family, backend, options);
  return {family.n, m.s_star, m.g_min, spike_gap_bound(family.n)};
}

}  // namespace adiabatic
