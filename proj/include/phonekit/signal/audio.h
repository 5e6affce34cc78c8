// phonekit/signal/audio.h

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

#ifndef PHONEKIT_SIGNAL_AUDIO_H_
#define PHONEKIT_SIGNAL_AUDIO_H_

#include <Eigen/Core>
#include <vector>

namespace phonekit {

/// Single-channel audio.  Corpus input is 16 kHz; synthetic material may use
/// any rate.
struct AudioBuffer {
  std::vector<double> samples;
  int sample_rate_hz = 16000;

  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate_hz;
  }
};

/// Framed mel-cepstral features, c0 included.  Row t holds the coefficients
/// of the frame starting at t * frame_step_s.
struct FeatureSequence {
  Eigen::MatrixXd frames;     // T x D
  double frame_step_s = 0.00625;
  double frame_len_s = 0.025;

  Eigen::Index num_frames() const { return frames.rows(); }
  Eigen::Index dim() const { return frames.cols(); }
  double frame_center_s(Eigen::Index t) const {
    return t * frame_step_s + 0.5 * frame_len_s;
  }
};

/// One-sided power spectrum on an ascending frequency axis.
struct PowerSpectrum {
  std::vector<double> freqs_hz;
  std::vector<double> power;
};

struct MultitaperConfig {
  double nw = 4.0;  // time-bandwidth product
  int k = 8;        // number of tapers; requires 1 <= k <= 2*nw
  // DFT length; 0 means next power of two >= 2 * segment length.
  int nfft = 0;
};

/// One formant candidate from the LPC root pipeline.
struct Formant {
  double frequency_hz = 0.0;
  double bandwidth_hz = 0.0;
};

/// Per-frame formant candidates, at most max_formants per frame, ascending
/// in frequency.  A frame where the root finder failed is marked failed.
struct FormantFrame {
  std::vector<Formant> formants;
  bool failed = false;
};

struct FormantTrack {
  std::vector<FormantFrame> frames;
  double frame_step_s = 0.00625;
  double frame_len_s = 0.025;
  double start_s = 0.0;  // time of the first frame's left edge

  double frame_center_s(size_t t) const {
    return start_s + t * frame_step_s + 0.5 * frame_len_s;
  }
};

}  // namespace phonekit

#endif  // PHONEKIT_SIGNAL_AUDIO_H_
