// signal/dpss.cc

// Copyright 2026  Phonekit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "phonekit/signal/dpss.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace phonekit {

namespace {

constexpr double kPivMin = 1e-300;

// Number of eigenvalues of the tridiagonal matrix strictly below x.
int SturmCount(const Eigen::VectorXd& d, const Eigen::VectorXd& e, double x) {
  const int n = static_cast<int>(d.size());
  int count = 0;
  double q = d[0] - x;
  if (q < 0) ++count;
  for (int i = 1; i < n; ++i) {
    if (std::abs(q) < kPivMin) q = (q < 0) ? -kPivMin : kPivMin;
    q = d[i] - x - e[i - 1] * e[i - 1] / q;
    if (q < 0) ++count;
  }
  return count;
}

// m-th smallest eigenvalue (0-based) by bisection.
double BisectEigenvalue(const Eigen::VectorXd& d, const Eigen::VectorXd& e,
                        int m) {
  const int n = static_cast<int>(d.size());
  double lo = d[0], hi = d[0];
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(e[i - 1]);
    if (i < n - 1) r += std::abs(e[i]);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  // Invariant: count(lo) <= m < count(hi).
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (SturmCount(d, e, mid) <= m)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <=
        4.0 * std::numeric_limits<double>::epsilon() *
            std::max(std::abs(lo), std::abs(hi)))
      break;
  }
  return 0.5 * (lo + hi);
}

// Solves (T - lambda I) x = b by tridiagonal LU with partial pivoting.
// The second superdiagonal fill-in is kept in u2.
class ShiftedTridiagSolver {
 public:
  ShiftedTridiagSolver(const Eigen::VectorXd& d, const Eigen::VectorXd& e,
                       double lambda) {
    n_ = static_cast<int>(d.size());
    dl_.resize(n_);
    dd_.resize(n_);
    du_.resize(n_);
    u2_.assign(n_, 0.0);
    swap_.assign(n_, false);
    for (int i = 0; i < n_; ++i) {
      dd_[i] = d[i] - lambda;
      dl_[i] = (i > 0) ? e[i - 1] : 0.0;
      du_[i] = (i < n_ - 1) ? e[i] : 0.0;
    }
    for (int i = 0; i < n_ - 1; ++i) {
      if (std::abs(dl_[i + 1]) > std::abs(dd_[i])) {
        std::swap(dd_[i], dl_[i + 1]);
        std::swap(du_[i], dd_[i + 1]);
        u2_[i] = du_[i + 1];
        du_[i + 1] = 0.0;
        swap_[i] = true;
      }
      if (std::abs(dd_[i]) < kPivMin) dd_[i] = kPivMin;
      const double mult = dl_[i + 1] / dd_[i];
      dl_[i + 1] = mult;  // store the multiplier
      dd_[i + 1] -= mult * du_[i];
      if (i < n_ - 2) du_[i + 1] -= mult * u2_[i];
    }
    if (std::abs(dd_[n_ - 1]) < kPivMin) dd_[n_ - 1] = kPivMin;
  }

  void Solve(Eigen::VectorXd& b) const {
    for (int i = 0; i < n_ - 1; ++i) {
      if (swap_[i]) std::swap(b[i], b[i + 1]);
      b[i + 1] -= dl_[i + 1] * b[i];
    }
    b[n_ - 1] /= dd_[n_ - 1];
    for (int i = n_ - 2; i >= 0; --i) {
      double x = b[i] - du_[i] * b[i + 1];
      if (i < n_ - 2) x -= u2_[i] * b[i + 2];
      b[i] = x / dd_[i];
    }
  }

 private:
  int n_ = 0;
  std::vector<double> dl_, dd_, du_, u2_;
  std::vector<bool> swap_;
};

void FixSign(Eigen::VectorXd& v) {
  const double scale = v.cwiseAbs().maxCoeff();
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12 * scale) {
      if (v[i] < 0) v = -v;
      return;
    }
  }
}

}  // namespace

void slepian_tridiagonal(int n, double w, Eigen::VectorXd* diag,
                         Eigen::VectorXd* offdiag) {
  diag->resize(n);
  offdiag->resize(n - 1);
  const double c = std::cos(2.0 * std::numbers::pi * w);
  for (int i = 0; i < n; ++i) {
    const double t = 0.5 * (n - 1.0 - 2.0 * i);
    (*diag)[i] = t * t * c;
  }
  for (int i = 0; i + 1 < n; ++i)
    (*offdiag)[i] = 0.5 * (i + 1.0) * (n - 1.0 - i);
}

DpssTapers dpss_tapers(int n, const MultitaperConfig& cfg) {
  if (cfg.k < 1 || cfg.k > 2 * cfg.nw)
    throw std::invalid_argument("taper count must satisfy 1 <= k <= 2*nw");
  if (n <= 2 * cfg.k)
    throw std::invalid_argument("dpss length must exceed 2*k");

  Eigen::VectorXd d, e;
  slepian_tridiagonal(n, cfg.nw / n, &d, &e);

  DpssTapers out;
  out.tapers.resize(cfg.k, n);
  out.eigenvalues.resize(cfg.k);

  for (int j = 0; j < cfg.k; ++j) {
    const double lambda = BisectEigenvalue(d, e, n - 1 - j);
    out.eigenvalues[j] = lambda;

    ShiftedTridiagSolver solver(d, e, lambda);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = (i % 2 == 0) ? 1.0 : 0.5;
    v.normalize();
    for (int it = 0; it < 4; ++it) {
      solver.Solve(v);
      // Re-orthogonalize against the tapers already found; keeps close
      // eigenpairs from collapsing onto each other.
      for (int p = 0; p < j; ++p) {
        const double proj = out.tapers.row(p).dot(v);
        v -= proj * out.tapers.row(p).transpose();
      }
      const double norm = v.norm();
      if (norm == 0.0) throw std::runtime_error("inverse iteration broke down");
      v /= norm;
    }
    FixSign(v);
    out.tapers.row(j) = v.transpose();
  }
  return out;
}

}  // namespace phonekit
