// phonekit/signal/dpss.h

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

#ifndef PHONEKIT_SIGNAL_DPSS_H_
#define PHONEKIT_SIGNAL_DPSS_H_

#include <Eigen/Core>

#include "phonekit/signal/audio.h"

namespace phonekit {

struct DpssTapers {
  // Row j is the j-th taper (unit norm), ordered by descending eigenvalue.
  Eigen::MatrixXd tapers;       // k x n
  Eigen::VectorXd eigenvalues;  // eigenvalues of the Slepian tridiagonal form
};

// Discrete prolate spheroidal sequences of length n for half-bandwidth
// W = nw / n: the k leading eigenvectors of the symmetric tridiagonal
// Slepian matrix, found by Sturm-sequence bisection plus inverse iteration.
// Requires n > 2 * cfg.k and 1 <= k <= 2 * nw.
DpssTapers dpss_tapers(int n, const MultitaperConfig& cfg);

// Helpers shared with the test oracle: the Slepian tridiagonal matrix for
// length n and half-bandwidth w.
void slepian_tridiagonal(int n, double w, Eigen::VectorXd* diag,
                         Eigen::VectorXd* offdiag);

}  // namespace phonekit

#endif  // PHONEKIT_SIGNAL_DPSS_H_
