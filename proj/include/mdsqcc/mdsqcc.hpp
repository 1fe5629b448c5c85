/*
   Copyright 2026 The mdsqcc Authors

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

// Umbrella header.

#ifndef MDSQCC_MDSQCC_HPP
#define MDSQCC_MDSQCC_HPP

#include "block.hpp"
#include "commands.hpp"
#include "conv.hpp"
#include "cosets.hpp"
#include "errors.hpp"
#include "gf.hpp"
#include "invariants.hpp"
#include "matrix.hpp"
#include "numtheory.hpp"
#include "poly.hpp"
#include "quantum.hpp"
#include "serialize.hpp"

#endif  // MDSQCC_MDSQCC_HPP
