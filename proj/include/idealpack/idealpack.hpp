/*
   Copyright 2026 The idealpack Authors

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

/**
 * @file idealpack.hpp
 * @brief Everything.
 */

#ifndef IDEALPACK_IDEALPACK_HPP
#define IDEALPACK_IDEALPACK_HPP

#include "catalog.hpp"
#include "codes.hpp"
#include "config.hpp"
#include "embedding.hpp"
#include "errors.hpp"
#include "hnf.hpp"
#include "ideal.hpp"
#include "lattice.hpp"
#include "modp.hpp"
#include "numfield.hpp"
#include "packing.hpp"
#include "polynomial.hpp"
#include "real.hpp"
#include "roots.hpp"
#include "verify.hpp"

#endif
