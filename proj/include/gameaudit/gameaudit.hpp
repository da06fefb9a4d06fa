// Copyright 2026 The gameaudit Authors
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

#ifndef GAMEAUDIT_GAMEAUDIT_HPP
#define GAMEAUDIT_GAMEAUDIT_HPP

#include "gameaudit/algebra.hpp"
#include "gameaudit/bimatrix.hpp"
#include "gameaudit/costbenefit.hpp"
#include "gameaudit/envy.hpp"
#include "gameaudit/equilibrium.hpp"
#include "gameaudit/numeric.hpp"
#include "gameaudit/penalty.hpp"
#include "gameaudit/rational.hpp"
#include "gameaudit/regime.hpp"
#include "gameaudit/ultimatum.hpp"
#include "gameaudit/valuation.hpp"

#endif  // GAMEAUDIT_GAMEAUDIT_HPP
