// Copyright 2026 The charnoise Authors
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

#ifndef CHARNOISE_CHARNOISE_HPP_
#define CHARNOISE_CHARNOISE_HPP_

#include "charnoise/composer.hpp"
#include "charnoise/dataset_io.hpp"
#include "charnoise/edit_engine.hpp"
#include "charnoise/error.hpp"
#include "charnoise/importers.hpp"
#include "charnoise/manifest.hpp"
#include "charnoise/metrics.hpp"
#include "charnoise/noiser.hpp"
#include "charnoise/parallel.hpp"
#include "charnoise/random_stream.hpp"
#include "charnoise/rational.hpp"
#include "charnoise/tokenizer.hpp"
#include "charnoise/unicode.hpp"
#include "charnoise/word_model.hpp"

#endif  // CHARNOISE_CHARNOISE_HPP_
