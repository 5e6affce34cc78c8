// signal/multitaper.cc

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

#include "phonekit/signal/multitaper.h"

#include <cmath>
#include <stdexcept>

#include "phonekit/signal/dpss.h"
#include "phonekit/signal/fft.h"

namespace phonekit {

namespace {

PowerSpectrum OneSided(const std::vector<double>& full, size_t nfft,
                       int sample_rate_hz) {
  const size_t half = nfft / 2;
  PowerSpectrum out;
  out.freqs_hz.resize(half + 1);
  out.power.resize(half + 1);
  for (size_t j = 0; j <= half; ++j) {
    out.freqs_hz[j] =
        static_cast<double>(j) * sample_rate_hz / static_cast<double>(nfft);
    const double w = (j == 0 || j == half) ? 1.0 : 2.0;
    out.power[j] = w * full[j] / static_cast<double>(nfft);
  }
  return out;
}

}  // namespace

PowerSpectrum multitaper_spectrum(const std::vector<double>& samples,
                                  const MultitaperConfig& cfg,
                                  int sample_rate_hz) {
  const int n = static_cast<int>(samples.size());
  if (n <= 2 * cfg.k)
    throw std::invalid_argument("segment too short for multitaper analysis");
  const size_t nfft =
      cfg.nfft > 0 ? next_pow2(cfg.nfft) : next_pow2(2 * samples.size());

  const DpssTapers dpss = dpss_tapers(n, cfg);

  std::vector<double> mean_power(nfft, 0.0);
  std::vector<double> windowed(n);
  for (int t = 0; t < cfg.k; ++t) {
    for (int i = 0; i < n; ++i) windowed[i] = samples[i] * dpss.tapers(t, i);
    const std::vector<double> p = power_fft(windowed, nfft);
    for (size_t j = 0; j < nfft; ++j) mean_power[j] += p[j];
  }
  for (auto& p : mean_power) p /= cfg.k;

  return OneSided(mean_power, nfft, sample_rate_hz);
}

PowerSpectrum periodogram(const std::vector<double>& samples,
                          int sample_rate_hz, int nfft_in) {
  if (samples.empty()) throw std::invalid_argument("empty signal");
  const size_t nfft =
      nfft_in > 0 ? next_pow2(nfft_in) : next_pow2(2 * samples.size());
  std::vector<double> scaled(samples.size());
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(samples.size()));
  for (size_t i = 0; i < samples.size(); ++i) scaled[i] = samples[i] * inv_sqrt_n;
  return OneSided(power_fft(scaled, nfft), nfft, sample_rate_hz);
}

}  // namespace phonekit
