// signal/resample.cc

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

#include "phonekit/signal/resample.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace phonekit {

namespace {

double Sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

}  // namespace

AudioBuffer resample(const AudioBuffer& audio, int target_rate_hz) {
  if (target_rate_hz <= 0) throw std::invalid_argument("bad target rate");
  if (target_rate_hz > audio.sample_rate_hz)
    throw std::invalid_argument("resample only downsamples");
  if (target_rate_hz == audio.sample_rate_hz) return audio;

  const int g = std::gcd(audio.sample_rate_hz, target_rate_hz);
  const long long up = target_rate_hz / g;    // L
  const long long down = audio.sample_rate_hz / g;  // M > L

  // Windowed-sinc low-pass in the upsampled domain, cutoff slightly under
  // the target Nyquist.  16 zero crossings, Blackman window.
  const int zero_crossings = 16;
  const long long half = zero_crossings * down;
  const long long ntaps = 2 * half + 1;
  const double cutoff = 0.95 * 0.5 / static_cast<double>(down);
  std::vector<double> h(ntaps);
  for (long long t = 0; t < ntaps; ++t) {
    const double x = static_cast<double>(t - half);
    const double win =
        0.42 -
        0.5 * std::cos(2.0 * std::numbers::pi * t / (ntaps - 1.0)) +
        0.08 * std::cos(4.0 * std::numbers::pi * t / (ntaps - 1.0));
    h[t] = 2.0 * cutoff * Sinc(2.0 * cutoff * x) * win;
  }

  const long long n_in = static_cast<long long>(audio.samples.size());
  const long long n_out = std::llround(static_cast<double>(n_in) * up / down);

  // Mirror padding keeps the edges from fading under the filter skirt.
  auto sample_at = [&](long long i) -> double {
    if (n_in == 0) return 0.0;
    while (i < 0 || i >= n_in) {
      if (i < 0) i = -i;
      if (i >= n_in) i = 2 * (n_in - 1) - i;
    }
    return audio.samples[static_cast<size_t>(i)];
  };

  AudioBuffer out;
  out.sample_rate_hz = target_rate_hz;
  out.samples.resize(static_cast<size_t>(std::max<long long>(n_out, 0)));
  for (long long n = 0; n < n_out; ++n) {
    const long long u = n * down;  // position in the upsampled grid
    // Contributing input samples i satisfy |u - i*up| <= half.
    const long long i_lo =
        static_cast<long long>(std::ceil((u - half) / static_cast<double>(up)));
    const long long i_hi = static_cast<long long>(
        std::floor((u + half) / static_cast<double>(up)));
    double acc = 0.0;
    for (long long i = i_lo; i <= i_hi; ++i) {
      const long long tap = u - i * up + half;
      acc += sample_at(i) * h[static_cast<size_t>(tap)];
    }
    out.samples[static_cast<size_t>(n)] = acc * static_cast<double>(up);
  }
  return out;
}

}  // namespace phonekit
