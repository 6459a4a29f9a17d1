/* Copyright 2026 The berezin-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Umbrella header for the whole library.

#ifndef BEREZIN_BEREZIN_HPP
#define BEREZIN_BEREZIN_HPP

#include "berezin/bounds.hpp"
#include "berezin/constants.hpp"
#include "berezin/domain_text.hpp"
#include "berezin/error.hpp"
#include "berezin/geometry.hpp"
#include "berezin/harness.hpp"
#include "berezin/numeric.hpp"
#include "berezin/remainder.hpp"
#include "berezin/report_io.hpp"
#include "berezin/specfun.hpp"
#include "berezin/spectra.hpp"

#endif  // BEREZIN_BEREZIN_HPP
