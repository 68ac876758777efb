/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================
*/

#ifndef ORBITFLOW_ORBITFLOW_HPP_
#define ORBITFLOW_ORBITFLOW_HPP_

/// \file orbitflow.hpp
/// Umbrella header. report.hpp (JSON output) is not included here because it
/// pulls in nlohmann/json; include it explicitly when needed.

#include "orbitflow/ensemble.hpp"
#include "orbitflow/field.hpp"
#include "orbitflow/galerkin.hpp"
#include "orbitflow/golden.hpp"
#include "orbitflow/incidence.hpp"
#include "orbitflow/lattice.hpp"
#include "orbitflow/matrix.hpp"
#include "orbitflow/monte_carlo.hpp"
#include "orbitflow/parallel.hpp"
#include "orbitflow/philox.hpp"
#include "orbitflow/stats.hpp"
#include "orbitflow/symmetric_eigen.hpp"
#include "orbitflow/transfer.hpp"

#endif  // ORBITFLOW_ORBITFLOW_HPP_
