// signal/lpc.cc

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

#include "phonekit/signal/lpc.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "phonekit/signal/dsp.h"

namespace phonekit {

BurgResult burg_lpc(const std::vector<double>& frame, int order) {
  const int n = static_cast<int>(frame.size());
  if (order < 1) throw std::invalid_argument("lpc order must be >= 1");
  if (n <= order)
    throw std::invalid_argument("frame shorter than lpc order + 1");

  std::vector<double> f(frame), b(frame);
  BurgResult out;
  out.coeffs.assign(order + 1, 0.0);
  out.coeffs[0] = 1.0;
  out.reflection.reserve(order);

  double energy = 0.0;
  for (double v : frame) energy += v * v;
  if (energy == 0.0)
    throw std::invalid_argument("all-zero frame has no spectrum");
  energy /= n;

  std::vector<double> prev(order + 1);
  for (int m = 1; m <= order; ++m) {
    double num = 0.0, den = 0.0;
    for (int i = m; i < n; ++i) {
      num += f[i] * b[i - 1];
      den += f[i] * f[i] + b[i - 1] * b[i - 1];
    }
    if (den == 0.0)
      throw std::invalid_argument("degenerate frame in Burg recursion");
    const double k = -2.0 * num / den;
    out.reflection.push_back(k);

    prev = out.coeffs;
    for (int i = 1; i <= m; ++i) out.coeffs[i] = prev[i] + k * prev[m - i];

    for (int i = n - 1; i >= m; --i) {
      const double fi = f[i];
      f[i] = fi + k * b[i - 1];
      b[i] = b[i - 1] + k * fi;
    }
    energy *= (1.0 - k * k);
  }
  out.residual_energy = energy;
  return out;
}

std::optional<std::vector<Formant>> lpc_to_formants(
    const std::vector<double>& lpc_coeffs, int sample_rate_hz,
    int max_formants, double ceiling_hz) {
  const int p = static_cast<int>(lpc_coeffs.size()) - 1;
  if (p < 1) throw std::invalid_argument("lpc polynomial has no roots");

  // Companion matrix of z^p + a1 z^(p-1) + ... + ap.
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
  for (int i = 0; i < p; ++i) companion(0, i) = -lpc_coeffs[i + 1];
  for (int i = 1; i < p; ++i) companion(i, i - 1) = 1.0;

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) return std::nullopt;

  const double fs = sample_rate_hz;
  std::vector<Formant> cands;
  for (int i = 0; i < p; ++i) {
    const std::complex<double> r = solver.eigenvalues()[i];
    if (r.imag() <= 0.0) continue;
    const double freq =
        std::atan2(r.imag(), r.real()) * fs / (2.0 * std::numbers::pi);
    const double mag = std::abs(r);
    if (mag <= 0.0) continue;
    const double bw = -(fs / std::numbers::pi) * std::log(mag);
    if (freq <= 50.0 || freq >= ceiling_hz - 50.0) continue;
    cands.push_back({freq, bw});
  }
  std::sort(cands.begin(), cands.end(),
            [](const Formant& a, const Formant& b) {
              return a.frequency_hz < b.frequency_hz;
            });
  if (static_cast<int>(cands.size()) > max_formants)
    cands.resize(max_formants);
  return cands;
}

FormantTrack track_formants(const AudioBuffer& audio,
                            const FormantTrackOptions& opts) {
  if (std::abs(0.5 * audio.sample_rate_hz - opts.ceiling_hz) > 1e-6)
    throw std::invalid_argument(
        "formant analysis expects audio resampled so Nyquist == ceiling");

  const AudioBuffer pre = preemphasize(audio, opts.preemphasis_from_hz);
  const int frame_len =
      static_cast<int>(std::lround(opts.frame_len_s * audio.sample_rate_hz));
  const int frame_step =
      static_cast<int>(std::lround(opts.frame_step_s * audio.sample_rate_hz));
  const int order =
      opts.lpc_order > 0 ? opts.lpc_order : 2 * opts.max_formants;
  const std::vector<double> window = hamming_window(frame_len);

  FormantTrack track;
  track.frame_step_s = opts.frame_step_s;
  track.frame_len_s = opts.frame_len_s;

  const int t_frames = num_frames(pre.samples.size(), frame_len, frame_step);
  track.frames.resize(std::max(t_frames, 0));
  std::vector<double> frame(frame_len);
  for (int t = 0; t < t_frames; ++t) {
    const int off = t * frame_step;
    double energy = 0.0;
    for (int i = 0; i < frame_len; ++i) {
      frame[i] = pre.samples[off + i] * window[i];
      energy += frame[i] * frame[i];
    }
    if (energy == 0.0) continue;  // silent frame: no candidates
    try {
      const BurgResult lpc = burg_lpc(frame, order);
      auto formants = lpc_to_formants(lpc.coeffs, audio.sample_rate_hz,
                                      opts.max_formants, opts.ceiling_hz);
      if (!formants) {
        track.frames[t].failed = true;
        continue;
      }
      track.frames[t].formants = std::move(*formants);
    } catch (const std::invalid_argument&) {
      track.frames[t].failed = true;
    }
  }
  return track;
}

}  // namespace phonekit
