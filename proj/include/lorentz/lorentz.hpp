// Copyright 2026 The Lorentz Toolkit Authors
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

#include "lorentz/embeddings.hpp"
#include "lorentz/ext_real.hpp"
#include "lorentz/format.hpp"
#include "lorentz/generate.hpp"
#include "lorentz/io.hpp"
#include "lorentz/norms.hpp"
#include "lorentz/sequence.hpp"
#include "lorentz/simple_function.hpp"
#include "lorentz/step_profile.hpp"
#include "lorentz/suites.hpp"
