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

#include "cyclemap/error.hpp"
#include "cyclemap/edge_set.hpp"
#include "cyclemap/limits.hpp"
#include "cyclemap/graph.hpp"
#include "cyclemap/circuits.hpp"
#include "cyclemap/connectivity.hpp"
#include "cyclemap/bonds.hpp"
#include "cyclemap/chains.hpp"
#include "cyclemap/generators.hpp"
#include "cyclemap/gf2.hpp"
#include "cyclemap/parallel.hpp"
#include "cyclemap/matroid.hpp"
#include "cyclemap/iso.hpp"
#include "cyclemap/maps.hpp"
#include "cyclemap/witness.hpp"
#include "cyclemap/io.hpp"
#include "cyclemap/suites.hpp"
