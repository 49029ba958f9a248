// Copyright 2026 The Authors.
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

#include "spreadopt/cover.hpp"
#include "spreadopt/curvature.hpp"
#include "spreadopt/errors.hpp"
#include "spreadopt/graph.hpp"
#include "spreadopt/greedoid.hpp"
#include "spreadopt/hitting.hpp"
#include "spreadopt/node_set.hpp"
#include "spreadopt/optimize.hpp"
#include "spreadopt/ranking.hpp"
