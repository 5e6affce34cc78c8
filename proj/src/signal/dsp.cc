// signal/dsp.cc

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

#include "phonekit/signal/dsp.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phonekit {

AudioBuffer preemphasize(const AudioBuffer& audio, double from_hz) {
  const double nyquist = 0.5 * audio.sample_rate_hz;
  if (from_hz >= nyquist)
    throw std::invalid_argument("pre-emphasis frequency must be below Nyquist");
  const double alpha =
      std::exp(-2.0 * std::numbers::pi * from_hz / audio.sample_rate_hz);
  AudioBuffer out;
  out.sample_rate_hz = audio.sample_rate_hz;
  out.samples.resize(audio.samples.size());
  if (audio.samples.empty()) return out;
  out.samples[0] = audio.samples[0];
  for (size_t n = 1; n < audio.samples.size(); ++n)
    out.samples[n] = audio.samples[n] - alpha * audio.samples[n - 1];
  return out;
}

double hz_to_erb(double f_hz) {
  if (f_hz < 0) throw std::invalid_argument("negative frequency");
  return 21.4 * std::log10(4.37e-3 * f_hz + 1.0);
}

double erb_to_hz(double erb) {
  return (std::pow(10.0, erb / 21.4) - 1.0) / 4.37e-3;
}

std::vector<double> hamming_window(int n) {
  std::vector<double> w(n);
  if (n == 1) {
    w[0] = 1.0;
    return w;
  }
  for (int i = 0; i < n; ++i)
    w[i] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * i / (n - 1));
  return w;
}

int num_frames(size_t n_samples, int frame_len, int frame_step) {
  if (n_samples < static_cast<size_t>(frame_len)) return 0;
  return static_cast<int>((n_samples - frame_len) / frame_step) + 1;
}

}  // namespace phonekit
