// phonekit/signal/multitaper.h

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

#ifndef PHONEKIT_SIGNAL_MULTITAPER_H_
#define PHONEKIT_SIGNAL_MULTITAPER_H_

#include <vector>

#include "phonekit/signal/audio.h"

namespace phonekit {

// One-sided multitaper power spectrum: the k taper-windowed periodograms
// averaged, on a frequency axis 0..Nyquist.  Normalized so the one-sided
// power sums to the mean squared amplitude for white input.  The DFT length
// comes from cfg.nfft (0 = next power of two >= 2 * samples.size()).
PowerSpectrum multitaper_spectrum(const std::vector<double>& samples,
                                  const MultitaperConfig& cfg,
                                  int sample_rate_hz);

// Single-taper (boxcar) periodogram with the same normalization; the
// baseline the multitaper estimate is compared against.
PowerSpectrum periodogram(const std::vector<double>& samples,
                          int sample_rate_hz, int nfft = 0);

}  // namespace phonekit

#endif  // PHONEKIT_SIGNAL_MULTITAPER_H_
