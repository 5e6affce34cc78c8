// phonekit/signal/lpc.h

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

#ifndef PHONEKIT_SIGNAL_LPC_H_
#define PHONEKIT_SIGNAL_LPC_H_

#include <optional>
#include <vector>

#include "phonekit/signal/audio.h"

namespace phonekit {

struct BurgResult {
  // Coefficients of A(z) = 1 + a[1] z^-1 + ... + a[p] z^-p, so that
  // A(z) * x ~ white residual.  a[0] == 1.  Burg keeps every root of A
  // strictly inside the unit circle.
  std::vector<double> coeffs;
  // Reflection coefficient of each recursion stage; k_1 ~ -rho_1 for an
  // AR(1) signal with lag-1 autocorrelation rho_1.
  std::vector<double> reflection;
  double residual_energy = 0.0;
};

// Burg's method, minimizing the summed forward+backward prediction error.
// Requires frame.size() > order >= 1; throws std::invalid_argument on an
// all-zero (or too short) frame.
BurgResult burg_lpc(const std::vector<double>& frame, int order);

// Converts LPC polynomial roots to formant candidates: roots with positive
// imaginary part give f = angle * fs / (2 pi) and bw = -(fs / pi) * ln|r|.
// Candidates with f <= 50 Hz or f >= ceiling - 50 Hz are discarded; the
// lowest max_formants by frequency are returned ascending.  The audio must
// have been resampled so that Nyquist == ceiling_hz.  Returns nullopt when
// the eigenvalue root finder does not converge.
std::optional<std::vector<Formant>> lpc_to_formants(
    const std::vector<double>& lpc_coeffs, int sample_rate_hz,
    int max_formants = 5, double ceiling_hz = 5000.0);

struct FormantTrackOptions {
  double frame_len_s = 0.025;
  double frame_step_s = 0.00625;
  int max_formants = 5;
  double ceiling_hz = 5000.0;
  double preemphasis_from_hz = 50.0;
  // LPC order; 0 means 2 * max_formants (the usual choice for a ceiling
  // equal to Nyquist).
  int lpc_order = 0;
};

// Frame-by-frame Burg formant analysis over the whole buffer.  The buffer's
// Nyquist must equal opts.ceiling_hz (resample first).
FormantTrack track_formants(const AudioBuffer& audio,
                            const FormantTrackOptions& opts = {});

}  // namespace phonekit

#endif  // PHONEKIT_SIGNAL_LPC_H_
