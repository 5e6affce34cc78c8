// phonekit/signal/wav.h

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

#ifndef PHONEKIT_SIGNAL_WAV_H_
#define PHONEKIT_SIGNAL_WAV_H_

#include <string>

#include "phonekit/signal/audio.h"

namespace phonekit {

// Reads a single-channel WAV file (16-bit PCM or 32-bit IEEE float).
// Multi-channel or otherwise unsupported input throws std::runtime_error.
// 16-bit samples are scaled to [-1, 1).
AudioBuffer read_wav(const std::string& path);

// 16-bit PCM writer, used for fixtures and small conversions.
void write_wav_pcm16(const std::string& path, const AudioBuffer& audio);

}  // namespace phonekit

#endif  // PHONEKIT_SIGNAL_WAV_H_
