// signal/mel.cc

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

#include "phonekit/signal/mel.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "phonekit/signal/dsp.h"
#include "phonekit/signal/fft.h"

namespace phonekit {

namespace {

constexpr double kFilterbankFloor = 1e-12;

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double MelToHz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

// Triangular filters on the mel scale; filters[m][j] weights FFT bin j.
std::vector<std::vector<double>> MelFilterbank(int n_filters, size_t n_bins,
                                               double bin_hz, double low_hz,
                                               double high_hz) {
  const double low_mel = HzToMel(low_hz);
  const double high_mel = HzToMel(high_hz);
  std::vector<double> centers(n_filters + 2);
  for (int i = 0; i < n_filters + 2; ++i)
    centers[i] =
        MelToHz(low_mel + (high_mel - low_mel) * i / (n_filters + 1.0));

  std::vector<std::vector<double>> filters(
      n_filters, std::vector<double>(n_bins, 0.0));
  for (int m = 0; m < n_filters; ++m) {
    const double lo = centers[m], mid = centers[m + 1], hi = centers[m + 2];
    for (size_t j = 0; j < n_bins; ++j) {
      const double f = j * bin_hz;
      if (f <= lo || f >= hi) continue;
      filters[m][j] = (f <= mid) ? (f - lo) / (mid - lo) : (hi - f) / (hi - mid);
    }
  }
  return filters;
}

}  // namespace

FeatureSequence mel_cepstra(const AudioBuffer& audio, const MelOptions& opts) {
  if (audio.samples.empty()) throw std::invalid_argument("empty audio");

  const int fs = audio.sample_rate_hz;
  const int frame_len = static_cast<int>(std::lround(opts.frame_len_s * fs));
  const int frame_step = static_cast<int>(std::lround(opts.frame_step_s * fs));
  const int t_frames = num_frames(audio.samples.size(), frame_len, frame_step);
  if (t_frames < 1)
    throw std::invalid_argument("audio shorter than one analysis frame");

  const size_t nfft = next_pow2(frame_len);
  const size_t n_bins = nfft / 2 + 1;
  const double bin_hz = static_cast<double>(fs) / nfft;
  const double high_hz = opts.high_hz > 0 ? opts.high_hz : 0.5 * fs;
  const auto filters =
      MelFilterbank(opts.n_filters, n_bins, bin_hz, opts.low_hz, high_hz);
  const std::vector<double> window = hamming_window(frame_len);

  FeatureSequence seq;
  seq.frame_step_s = opts.frame_step_s;
  seq.frame_len_s = opts.frame_len_s;
  seq.frames.resize(t_frames, opts.n_coeffs);

  std::vector<double> frame(frame_len);
  std::vector<double> log_energy(opts.n_filters);
  for (int t = 0; t < t_frames; ++t) {
    const size_t off = static_cast<size_t>(t) * frame_step;
    for (int i = 0; i < frame_len; ++i)
      frame[i] = audio.samples[off + i] * window[i];

    std::vector<double> power = power_fft(frame, nfft);
    for (int m = 0; m < opts.n_filters; ++m) {
      double acc = 0.0;
      for (size_t j = 0; j < n_bins; ++j) acc += filters[m][j] * power[j];
      log_energy[m] = std::log(std::max(acc, kFilterbankFloor));
    }

    // DCT-II with the sqrt(2/M) scaling, c0 included.
    const double scale = std::sqrt(2.0 / opts.n_filters);
    for (int c = 0; c < opts.n_coeffs; ++c) {
      double acc = 0.0;
      for (int m = 0; m < opts.n_filters; ++m)
        acc += log_energy[m] *
               std::cos(std::numbers::pi * c * (m + 0.5) / opts.n_filters);
      seq.frames(t, c) = scale * acc;
    }
  }
  return seq;
}

}  // namespace phonekit
