// phonekit/signal/resample.h

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

#ifndef PHONEKIT_SIGNAL_RESAMPLE_H_
#define PHONEKIT_SIGNAL_RESAMPLE_H_

#include "phonekit/signal/audio.h"

namespace phonekit {

// Rational-ratio downsampling by polyphase windowed-sinc filtering with
// mirror padding at the edges; duration is preserved within one sample.
// Identity rate returns a bitwise copy; upsampling throws.
AudioBuffer resample(const AudioBuffer& audio, int target_rate_hz);

}  // namespace phonekit

#endif  // PHONEKIT_SIGNAL_RESAMPLE_H_
