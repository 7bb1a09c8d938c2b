/*
   Copyright 2026 The orbilift authors

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

#ifndef ORBILIFT_ORBILIFT_HPP
#define ORBILIFT_ORBILIFT_HPP

#include "orbilift/bigint.hpp"
#include "orbilift/common.hpp"
#include "orbilift/connection.hpp"
#include "orbilift/connection_lift.hpp"
#include "orbilift/cyclotomic.hpp"
#include "orbilift/dsl.hpp"
#include "orbilift/invariants.hpp"
#include "orbilift/lift.hpp"
#include "orbilift/linalg.hpp"
#include "orbilift/matrix_group.hpp"
#include "orbilift/polymap.hpp"
#include "orbilift/polynomial.hpp"
#include "orbilift/rational.hpp"
#include "orbilift/rational_function.hpp"
#include "orbilift/tensor.hpp"

#endif
