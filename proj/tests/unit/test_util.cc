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

#include "test_util.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace promut::testing {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string DataPath(const std::string& name) {
  return std::string(PROMUT_TEST_DATA) + "/" + name;
}

std::string CorpusPath(const std::string& name) {
  return std::string(PROMUT_CORPUS) + "/" + name;
}

std::vector<std::string> CorpusPrograms() {
  std::vector<std::string> names;
  for (const auto& entry :
       std::filesystem::directory_iterator(PROMUT_CORPUS)) {
    const std::string file = entry.path().filename().string();
    if (entry.path().extension() != ".pl") continue;
    if (file.size() > 9 && file.ends_with("_tests.pl")) continue;
    names.push_back(entry.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace promut::testing
