/**************************************************************************
 * hntt.hpp
 *
 * Copyright 2026 The hntt-watermark Authors
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
 **************************************************************************/

#pragma once

#include "hntt/attacks.hpp"
#include "hntt/block.hpp"
#include "hntt/engine.hpp"
#include "hntt/galois.hpp"
#include "hntt/imageio.hpp"
#include "hntt/pattern.hpp"
#include "hntt/transform.hpp"
#include "hntt/watermark.hpp"
