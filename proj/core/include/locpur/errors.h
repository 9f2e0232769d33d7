// Copyright 2026 The locpur Authors
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

#ifndef LOCPUR_ERRORS_H
#define LOCPUR_ERRORS_H

#include <stdexcept>
#include <string>

namespace locpur {

/// Base of every error thrown by the library. All are precondition failures on caller input.
struct Error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotHermitian : Error {
    using Error::Error;
};
struct NotUnitary : Error {
    using Error::Error;
};
struct NotDensityMatrix : Error {
    using Error::Error;
};
struct OutOfRange : Error {
    using Error::Error;
};
struct InfeasibleParameters : Error {
    using Error::Error;
};
struct OrthogonalityViolated : Error {
    using Error::Error;
};
struct ZeroOperator : Error {
    using Error::Error;
};
struct EmptyList : Error {
    using Error::Error;
};
struct VanishingProbability : Error {
    using Error::Error;
};
struct NoCrossing : Error {
    using Error::Error;
};
struct NotFullRank : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

}  // namespace locpur

#endif
