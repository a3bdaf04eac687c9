/*
   Copyright 2026 The SchurKit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "schurkit/rational.hpp"
#include "schurkit/mpoly.hpp"
#include "schurkit/matrix.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/perm.hpp"
#include "schurkit/symrep.hpp"
#include "schurkit/functor.hpp"
#include "schurkit/eval.hpp"
#include "schurkit/decompose.hpp"
#include "schurkit/equivalence.hpp"
#include "schurkit/parser.hpp"
#include "schurkit/json_io.hpp"
#include "schurkit/rng.hpp"
