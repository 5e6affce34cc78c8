// phonekit/signal/mel.h

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

#ifndef PHONEKIT_SIGNAL_MEL_H_
#define PHONEKIT_SIGNAL_MEL_H_

#include "phonekit/signal/audio.h"

namespace phonekit {

struct MelOptions {
  double frame_len_s = 0.025;
  double frame_step_s = 0.00625;
  int n_coeffs = 13;       // c0..c12, c0 kept in storage
  int n_filters = 26;
  double low_hz = 20.0;
  double high_hz = 0.0;    // 0 = Nyquist
};

// Mel-filterbank log-energy cepstra via DCT-II.  Frames are Hamming
// windowed; filterbank outputs are floored before the log so silence maps
// to a constant frame rather than -inf.
FeatureSequence mel_cepstra(const AudioBuffer& audio,
                            const MelOptions& opts = {});

}  // namespace phonekit

#endif  // PHONEKIT_SIGNAL_MEL_H_
