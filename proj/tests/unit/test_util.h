// Copyright 2026 The Promut Authors
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

#ifndef PROMUT_TESTS_UNIT_TEST_UTIL_H_
#define PROMUT_TESTS_UNIT_TEST_UTIL_H_

#include <string>
#include <vector>

namespace promut::testing {

std::string ReadFile(const std::string& path);
std::string DataPath(const std::string& name);
std::string CorpusPath(const std::string& name);

// Program names in corpus/ (without the .pl suffix), sorted.
std::vector<std::string> CorpusPrograms();

}  // namespace promut::testing

#endif  // PROMUT_TESTS_UNIT_TEST_UTIL_H_
