/*
   Copyright 2026 The k3w Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef K3W_ERRORS_HPP
#define K3W_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace k3w {

// Field layer.
struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

struct ContextMismatch : std::invalid_argument {
    explicit ContextMismatch(const std::string& what = "field context mismatch")
        : std::invalid_argument(what) {}
};

struct ReducibleModulus : std::invalid_argument {
    explicit ReducibleModulus(const std::string& what) : std::invalid_argument(what) {}
};

// Geometry layer.
struct NotEllipticFibration : std::domain_error {
    NotEllipticFibration() : std::domain_error("not an elliptic fibration: discriminant vanishes identically") {}
};

struct NonMinimalModel : std::domain_error {
    explicit NonMinimalModel(const std::string& what) : std::domain_error(what) {}
};

struct NotAnAutomorphism : std::domain_error {
    explicit NotAnAutomorphism(const std::string& what = "not an automorphism of the surface")
        : std::domain_error(what) {}
};

// Enumeration layer.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace k3w

#endif
