// phonekit/signal/fft.h

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

#ifndef PHONEKIT_SIGNAL_FFT_H_
#define PHONEKIT_SIGNAL_FFT_H_

#include <complex>
#include <vector>

namespace phonekit {

// In-place radix-2 DIT FFT; data.size() must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& data, bool inverse = false);

// Smallest power of two >= n (and >= 1).
size_t next_pow2(size_t n);

// |DFT|^2 of the zero-padded input at nfft points (nfft a power of two).
std::vector<double> power_fft(const std::vector<double>& x, size_t nfft);

}  // namespace phonekit

#endif  // PHONEKIT_SIGNAL_FFT_H_
