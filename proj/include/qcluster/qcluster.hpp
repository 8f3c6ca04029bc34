// Copyright 2026 The qcluster Authors
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

#ifndef QCLUSTER_QCLUSTER_HPP
#define QCLUSTER_QCLUSTER_HPP

#include "qcluster/channel/noise.hpp"
#include "qcluster/cluster/dbscan.hpp"
#include "qcluster/cluster/kmedoids.hpp"
#include "qcluster/cluster/points.hpp"
#include "qcluster/errors.hpp"
#include "qcluster/info/encoding.hpp"
#include "qcluster/info/entropy.hpp"
#include "qcluster/info/histogram.hpp"
#include "qcluster/probe/classical.hpp"
#include "qcluster/probe/gaussian.hpp"
#include "qcluster/probe/helstrom.hpp"
#include "qcluster/probe/jacobi.hpp"
#include "qcluster/probe/roc.hpp"
#include "qcluster/probe/three_qubit.hpp"
#include "qcluster/random.hpp"
#include "qcluster/scene/attractors.hpp"
#include "qcluster/scene/grid.hpp"
#include "qcluster/scene/particles.hpp"
#include "qcluster/sim/config.hpp"
#include "qcluster/sim/io.hpp"
#include "qcluster/sim/parallel.hpp"
#include "qcluster/sim/pipeline.hpp"

#endif
