/*
 * Copyright 2026 The homalt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <homalt/scalars.hpp>

#include <cstdint>
#include <limits>
#include <random>

namespace homalt {

// Uniform integers in [-10^6, 10^6]. std::uniform_int_distribution is
// implementation-defined, so the reduction is done here to keep seeds
// reproducible across standard libraries.
class RandomPoints {
public:
    static constexpr std::int64_t kBound = 1'000'000;

    explicit RandomPoints(std::uint64_t seed) : engine_(seed) {}

    Rational next() {
        constexpr std::uint64_t range = 2 * kBound + 1;
        constexpr std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / range * range;
        std::uint64_t v;
        do v = engine_(); while (v >= limit);
        return Rational(static_cast<long>(static_cast<std::int64_t>(v % range) - kBound));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace homalt
