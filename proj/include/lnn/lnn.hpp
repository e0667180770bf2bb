// Copyright 2026 The lnn-cnot Authors
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

#include "lnn/bounds.hpp"
#include "lnn/circuit.hpp"
#include "lnn/constructions.hpp"
#include "lnn/f2.hpp"
#include "lnn/glsynth.hpp"
#include "lnn/search.hpp"
#include "lnn/text_format.hpp"
