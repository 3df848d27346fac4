// Copyright 2026 The qsync Authors
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

#ifndef QSYNC_ERRORS_H
#define QSYNC_ERRORS_H

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qsync {

/// Malformed or out-of-domain argument (division by zero, even length, bad hex, ...).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A construction precondition of the synchronizable-code constructor failed.
/// `clause` names the violated condition, e.g. "a_l + a_r < k2 - k1".
struct PreconditionViolation : std::invalid_argument {
    std::string clause;
    PreconditionViolation(std::string clause, const std::string &detail)
        : std::invalid_argument("violated '" + clause + "': " + detail), clause(std::move(clause)) {
    }
};

/// An enumeration would exceed its work budget.
struct BudgetExceeded : std::runtime_error {
    double estimated_cost;
    BudgetExceeded(const std::string &what, double estimated_cost)
        : std::runtime_error(what), estimated_cost(estimated_cost) {
    }
};

}  // namespace qsync

#endif
