// Copyright 2026 The weylgenus authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "weylgenus/compact_pair.hpp"
#include "weylgenus/errors.hpp"
#include "weylgenus/genera.hpp"
#include "weylgenus/jobs.hpp"
#include "weylgenus/nilpotent_poly.hpp"
#include "weylgenus/rational.hpp"
#include "weylgenus/root_system.hpp"
#include "weylgenus/series.hpp"
#include "weylgenus/trace.hpp"
