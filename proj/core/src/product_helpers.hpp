// Copyright 2026 The logmaj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOGMAJ_SRC_PRODUCT_HELPERS_HPP_
#define LOGMAJ_SRC_PRODUCT_HELPERS_HPP_

#include <span>

#include "logmaj/spectral_products.hpp"

namespace logmaj::internal {

// Products of spectral factors go through the log domain so that zero
// factors give an exact zero and long products neither overflow nor underflow.
inline double Prod(std::span<const double> factors) { return LogProductOf(factors).value(); }

}  // namespace logmaj::internal

#endif  // LOGMAJ_SRC_PRODUCT_HELPERS_HPP_
