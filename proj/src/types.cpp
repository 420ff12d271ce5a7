// Copyright 2026 The nidsbench Authors
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

#include "nids/types.hpp"

#include "nids/error.hpp"

namespace nids {

std::string to_string(Task task) {
  return task == Task::binary ? "binary" : "multiclass";
}

Task task_from_string(const std::string& name) {
  if (name == "binary") return Task::binary;
  if (name == "multiclass") return Task::multiclass;
  throw Error(errc::bad_config, "unknown task: " + name);
}

const std::vector<std::string>& category_class_names() {
  static const std::vector<std::string> names = {
      "Analysis", "Backdoor",       "DoS",       "Exploits", "Fuzzers",
      "Generic",  "Normal",         "Reconnaissance", "Shellcode", "Worms"};
  return names;
}

const std::vector<std::string>& binary_class_names() {
  static const std::vector<std::string> names = {"Normal", "Abnormal"};
  return names;
}

const std::vector<std::string>& class_names(Task task) {
  return task == Task::binary ? binary_class_names() : category_class_names();
}

const IntVector& labels_for(const DesignMatrix& x, Task task) {
  const IntVector& labels =
      task == Task::binary ? x.labels_binary : x.labels_multiclass;
  if (labels.size() != x.samples()) {
    throw Error(errc::missing_column,
                "design matrix carries no labels for task " + to_string(task));
  }
  return labels;
}

}  // namespace nids
