// Copyright 2026 The Authors.
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spreadopt {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problems with user-supplied data or arguments: malformed files, unknown
/// labels, out-of-range parameters, degenerate instances.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list text (bad token count, bad weight, duplicate edge).
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// An edge joins a node to itself.
class SelfLoopError : public InputError {
 public:
  using InputError::InputError;
};

/// The input graph is not connected.
class DisconnectedError : public InputError {
 public:
  using InputError::InputError;
};

/// A node label does not occur in the graph.
class UnknownNodeError : public InputError {
 public:
  using InputError::InputError;
};

/// An operation that needs a nonempty target set received the empty set.
class EmptyTargetError : public InputError {
 public:
  using InputError::InputError;
};

/// A precondition on arguments was violated (sizes, ranges, universes).
class InvalidArgumentError : public InputError {
 public:
  using InputError::InputError;
};

/// The instance exceeds a hard size gate of an exhaustive algorithm.
class TooLargeError : public InputError {
 public:
  using InputError::InputError;
};

/// The rank normalization is undefined because best and worst reference
/// values coincide.
class DegenerateRankError : public InputError {
 public:
  using InputError::InputError;
};

/// A seed family required by a search was empty.
class EmptySeedFamilyError : public InputError {
 public:
  using InputError::InputError;
};

/// The reference set handed to a marginal-gain scan does not have rank one.
class RankNotOneError : public InputError {
 public:
  using InputError::InputError;
};

/// Every candidate ratio in a curvature scan was skipped, so no estimate
/// exists.
class NoValidPairsError : public InputError {
 public:
  using InputError::InputError;
};

/// An enumeration would exceed its configured work budget.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(std::uint64_t required, std::uint64_t budget,
                      const std::string& what_arg)
      : Error(what_arg), required_(required), budget_(budget) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace spreadopt
