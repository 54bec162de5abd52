// SPDX-License-Identifier: Apache-2.0
//
// rispath: physical path loss modelling for RIS-enabled radio channels
// Copyright (C) 2026 The rispath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Umbrella header: the whole library.

#pragma once

#include "rispath/coefficients.hpp"
#include "rispath/config.hpp"
#include "rispath/constants.hpp"
#include "rispath/csv.hpp"
#include "rispath/errors.hpp"
#include "rispath/experiments.hpp"
#include "rispath/farfield.hpp"
#include "rispath/geometry.hpp"
#include "rispath/link.hpp"
#include "rispath/pattern.hpp"
#include "rispath/selfcheck.hpp"
#include "rispath/strategies.hpp"
#include "rispath/vec3.hpp"
