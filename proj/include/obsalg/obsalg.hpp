/*
 * Copyright 2026 The obsalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#ifndef OBSALG_OBSALG_HPP
#define OBSALG_OBSALG_HPP

#include "rational.hpp"
#include "error.hpp"
#include "effect_algebra.hpp"
#include "observable.hpp"
#include "spectral.hpp"
#include "calculus.hpp"
#include "io.hpp"
#include "generate.hpp"
#include "lawcheck.hpp"

#endif  // OBSALG_OBSALG_HPP
