// Copyright 2026 The Unleft Authors.
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


// Left recursion seen by a top-down parser, computed from scratch: a rule
// reachable from the start rule that can reach itself along leading edges.
// A leading edge runs from a rule to every rule referenced before the first
// part of a definition that must consume a token; nullable rules are taken
// into account.

#ifndef UNLEFT_TESTS_TESTING_LEFT_RECURSION_CHECK_H_
#define UNLEFT_TESTS_TESTING_LEFT_RECURSION_CHECK_H_

#include <set>
#include <string>

#include "unleft/grammar.h"

namespace unleft::test_support {

// Rules from which the start rule's reachable left recursion can be entered.
std::set<std::string> LeftRecursiveRules(const Grammar& grammar);

inline bool HasReachableLeftRecursion(const Grammar& grammar) {
  return !LeftRecursiveRules(grammar).empty();
}

}  // namespace unleft::test_support

#endif  // UNLEFT_TESTS_TESTING_LEFT_RECURSION_CHECK_H_
