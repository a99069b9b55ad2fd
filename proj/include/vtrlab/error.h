// Copyright 2026 The vtr-lab Authors.
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

#ifndef VTRLAB_ERROR_H_
#define VTRLAB_ERROR_H_

#include <stdexcept>
#include <string>

namespace vtrlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition or domain violation on a public entry point.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// A linear mixture whose induced kernel is not row-stochastic.
class InvalidMixtureError : public Error {
 public:
  using Error::Error;
};

// Raised by the exhaustive oracles when an instance exceeds their guard.
class InstanceTooLargeError : public Error {
 public:
  using Error::Error;
};

}  // namespace vtrlab

#endif  // VTRLAB_ERROR_H_
