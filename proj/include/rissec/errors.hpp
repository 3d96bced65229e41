// rissec - RIS-assisted mm-Wave secrecy-rate simulator
// Copyright (C) 2026 the rissec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace rissec
{

    // Raised when a modelling assumption is violated (e.g. a bound that requires
    // the Bob link to be no weaker than the Eve link). The CLI maps this to a
    // dedicated exit code, distinct from plain input-validation failures.
    class assumption_error : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Raised while loading or validating a run configuration file. Carries the
    // JSON-pointer-style path of the offending field for diagnostics.
    class config_error : public std::runtime_error
    {
    public:
        config_error(std::string field, const std::string &message)
            : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

        const std::string &field() const noexcept { return field_; }

    private:
        std::string field_;
    };

} // namespace rissec
