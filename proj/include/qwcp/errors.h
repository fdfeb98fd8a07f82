// Copyright 2026 The QWCP Authors
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

#ifndef QWCP_ERRORS_H
#define QWCP_ERRORS_H

#include <stdexcept>
#include <string>

namespace qwcp {

/// Malformed input text (network file, script, schedule JSON). Line and
/// column are 1-based; 0 means the position is unknown.
class ParseError : public std::runtime_error {
   public:
    explicit ParseError(const std::string &message, int line = 0, int column = 0);

    int line() const {
        return line_;
    }
    int column() const {
        return column_;
    }
    const std::string &message() const {
        return message_;
    }

   private:
    std::string message_;
    int line_;
    int column_;
};

/// A well-formed request that violates a protocol or model precondition.
class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace qwcp

#endif
