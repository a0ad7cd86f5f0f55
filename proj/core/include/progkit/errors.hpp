// Copyright 2026 The progkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace progkit {

/// An enumeration or image computation hit its point limit. Truncation is
/// always reported loudly: callers that need a complete set must treat this
/// as a hard failure.
class TruncationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A cover precondition failed; `witness` is the first uncovered element,
/// serialized as "p/q" coordinates.
class CoverError : public std::runtime_error {
  public:
    CoverError(const std::string& msg, std::string witness_repr)
        : std::runtime_error(msg), witness(std::move(witness_repr)) {}
    std::string witness;
};

/// Internal invariant violation (e.g. an LP reported unbounded on a body
/// whose rank invariant guarantees boundedness).
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace progkit
