/*
 * Copyright 2026 The phaseperm Authors
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

#pragma once

#include "phaseperm/configuration.hpp"
#include "phaseperm/errors.hpp"
#include "phaseperm/fock.hpp"
#include "phaseperm/linops.hpp"
#include "phaseperm/macmahon.hpp"
#include "phaseperm/matrix.hpp"
#include "phaseperm/mcint.hpp"
#include "phaseperm/permanent.hpp"
#include "phaseperm/phasespace.hpp"
#include "phaseperm/rng.hpp"
#include "phaseperm/stats.hpp"
