// Copyright 2026 The supercolor Authors
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

#ifndef SUPERCOLOR_SUPERCOLOR_HPP_
#define SUPERCOLOR_SUPERCOLOR_HPP_

#include "supercolor/batch.hpp"
#include "supercolor/bits.hpp"
#include "supercolor/bunch.hpp"
#include "supercolor/core.hpp"
#include "supercolor/encode.hpp"
#include "supercolor/error.hpp"
#include "supercolor/gen.hpp"
#include "supercolor/io.hpp"
#include "supercolor/matching.hpp"
#include "supercolor/oracle.hpp"
#include "supercolor/pi.hpp"
#include "supercolor/rng.hpp"

#endif  // SUPERCOLOR_SUPERCOLOR_HPP_
