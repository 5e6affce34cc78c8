// phonekit/signal/dsp.h

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

#ifndef PHONEKIT_SIGNAL_DSP_H_
#define PHONEKIT_SIGNAL_DSP_H_

#include <vector>

#include "phonekit/signal/audio.h"

namespace phonekit {

// y[n] = x[n] - alpha * x[n-1] with alpha = exp(-2*pi*from_hz / rate);
// y[0] = x[0].  from_hz = 0 gives the plain first difference.
// Throws std::invalid_argument when from_hz >= Nyquist.
AudioBuffer preemphasize(const AudioBuffer& audio, double from_hz);

// ERB-rate (Glasberg & Moore): erb = 21.4 * log10(4.37 * f/1000 + 1).
// Strictly increasing; throws on negative input.
double hz_to_erb(double f_hz);
double erb_to_hz(double erb);

std::vector<double> hamming_window(int n);

// Number of full frames for the usual snip-edges framing:
// floor((n_samples - frame_len) / step) + 1, or 0 when the signal is
// shorter than one frame.
int num_frames(size_t n_samples, int frame_len, int frame_step);

}  // namespace phonekit

#endif  // PHONEKIT_SIGNAL_DSP_H_
