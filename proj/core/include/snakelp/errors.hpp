// Copyright 2026 The snakelp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace snakelp {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- image file I/O ----

class BadMagic : public Error {
 public:
  explicit BadMagic(const std::string& what) : Error(what) {}
};

class BadHeader : public Error {
 public:
  explicit BadHeader(const std::string& what) : Error(what) {}
};

class Truncated : public Error {
 public:
  explicit Truncated(const std::string& what) : Error(what) {}
};

class CorruptPayload : public Error {
 public:
  explicit CorruptPayload(const std::string& what) : Error(what) {}
};

class IoFailure : public Error {
 public:
  explicit IoFailure(const std::string& what) : Error(what) {}
};

// ---- raster / geometry preconditions ----

class TooSmall : public Error {
 public:
  explicit TooSmall(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// ---- edge maps and sampling ----

class AllZero : public Error {
 public:
  explicit AllZero(const std::string& what) : Error(what) {}
};

class NoEdges : public Error {
 public:
  explicit NoEdges(const std::string& what) : Error(what) {}
};

class BudgetTooSmall : public Error {
 public:
  explicit BudgetTooSmall(const std::string& what) : Error(what) {}
};

class EmptyRoi : public Error {
 public:
  explicit EmptyRoi(const std::string& what) : Error(what) {}
};

// ---- model construction ----

class DegenerateEdgeMap : public Error {
 public:
  explicit DegenerateEdgeMap(const std::string& what) : Error(what) {}
};

class NonPositiveComponent : public Error {
 public:
  explicit NonPositiveComponent(const std::string& what) : Error(what) {}
};

class ZeroSnakeValue : public Error {
 public:
  explicit ZeroSnakeValue(const std::string& what) : Error(what) {}
};

class KTooLarge : public Error {
 public:
  explicit KTooLarge(const std::string& what) : Error(what) {}
};

// ---- solver ----

class FactorizationFailure : public Error {
 public:
  explicit FactorizationFailure(const std::string& what) : Error(what) {}
};

class InfeasibleStart : public Error {
 public:
  explicit InfeasibleStart(const std::string& what) : Error(what) {}
};

class TooLarge : public Error {
 public:
  explicit TooLarge(const std::string& what) : Error(what) {}
};

class InfeasibleProblem : public Error {
 public:
  explicit InfeasibleProblem(const std::string& what) : Error(what) {}
};

class UnboundedDetected : public Error {
 public:
  explicit UnboundedDetected(const std::string& what) : Error(what) {}
};

// ---- serialization ----

class ParseFailure : public Error {
 public:
  explicit ParseFailure(const std::string& what) : Error(what) {}
};

}  // namespace snakelp
