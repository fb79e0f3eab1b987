// Copyright 2026 The lct Authors
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

#include "lct/bogoliubov.hpp"
#include "lct/dispersion.hpp"
#include "lct/error.hpp"
#include "lct/liealg.hpp"
#include "lct/metric.hpp"
#include "lct/symplectic.hpp"
#include "lct/transform1d.hpp"
#include "lct/types.hpp"
