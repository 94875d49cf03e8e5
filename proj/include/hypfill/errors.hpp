// Copyright 2026 The Hypfill Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace hypfill {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Metric axiom failure. For triangle violations the offending triple (i,k,j)
// means dist(i,j) > dist(i,k) + dist(k,j).
struct MetricViolation : Error {
  MetricViolation(std::string msg, int i, int k, int j)
      : Error(std::move(msg)), i(i), k(k), j(j) {}
  int i, k, j;
};

struct DiameterOutOfRange : Error {
  using Error::Error;
};
struct DegenerateSpace : Error {
  using Error::Error;
};
struct SizeLimit : Error {
  using Error::Error;
};
struct DepthExceeded : Error {
  using Error::Error;
};
struct UnknownFormat : Error {
  using Error::Error;
};
struct MissingVertex : Error {
  using Error::Error;
};
struct NonPositiveWeight : Error {
  using Error::Error;
};
struct ZeroMass : Error {
  using Error::Error;
};
struct NotAnEdge : Error {
  using Error::Error;
};
struct EtaPlusNotBelowOne : Error {
  using Error::Error;
};
struct SchemaMismatch : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace hypfill
