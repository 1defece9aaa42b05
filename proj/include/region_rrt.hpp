// Copyright 2026 The region_rrt Authors. All Rights Reserved.
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

// Umbrella header.

#pragma once

#include "region_rrt/augment.hpp"
#include "region_rrt/bench.hpp"
#include "region_rrt/corpus.hpp"
#include "region_rrt/error.hpp"
#include "region_rrt/map_model.hpp"
#include "region_rrt/metrics.hpp"
#include "region_rrt/netpbm.hpp"
#include "region_rrt/random.hpp"
#include "region_rrt/rrt.hpp"
#include "region_rrt/sampling.hpp"
