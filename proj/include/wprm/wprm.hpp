/*
   Copyright 2026 the wprm authors

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

#ifndef WPRM_WPRM_HPP
#define WPRM_WPRM_HPP

#include "code.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "graded_poly.hpp"
#include "hilbert.hpp"
#include "ideal.hpp"
#include "linalg.hpp"
#include "weighted_space.hpp"

#endif
