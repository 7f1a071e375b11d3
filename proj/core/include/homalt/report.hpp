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

#include <homalt/linear.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homalt {

enum class Status {
    Holds,       ///< exact over the whole input space
    Fails,       ///< witness attached
    RandomPass,  ///< passed at every sampled point
    Refused,     ///< input outside the identity's hypothesis class
};

enum class StrategyKind {
    Basis,    ///< basis tuples; complete for multilinear forms
    Generic,  ///< fresh indeterminates for every coordinate of every variable
    Random,   ///< exact evaluation at random integer points
    Sweep,    ///< generic on every choice of coordinate supports of a fixed size
};

struct Strategy {
    StrategyKind kind = StrategyKind::Basis;
    std::uint64_t points = 0;  // Random
    std::uint64_t seed = 0;    // Random
    int degree_bound = -1;     // Random: total degree of the checked difference
    std::size_t support = 0;   // Sweep

    static Strategy basis() { return {}; }
    static Strategy generic() { return {StrategyKind::Generic}; }
    static Strategy random(std::uint64_t points, std::uint64_t seed) {
        return {StrategyKind::Random, points, seed};
    }
    static Strategy sweep(std::size_t support) { return {StrategyKind::Sweep, 0, 0, -1, support}; }
};

/// Where a check failed and what it found there.
struct Witness {
    std::vector<std::size_t> basis;           ///< basis-index tuple, for basis checks
    Assignment point;                         ///< parameter values, for random points
    std::vector<Element> inputs;              ///< the evaluated variable values
    std::optional<std::size_t> operator_row;  ///< row e_i where two operators differ
    std::size_t equation = 0;                 ///< index among the identity's equations
    Element lhs;
    Element rhs;

    Element difference() const { return lhs - rhs; }
};

struct CheckReport {
    std::string id;
    Status status = Status::Holds;
    Strategy strategy;
    std::optional<Witness> witness;
    std::size_t evaluations = 0;
    std::string note;

    bool passed() const { return status == Status::Holds || status == Status::RandomPass; }
};

const char* to_string(Status s);
const char* to_string(StrategyKind k);

}  // namespace homalt
