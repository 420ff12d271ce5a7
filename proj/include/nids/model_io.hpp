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

#ifndef NIDS_MODEL_IO_HPP_
#define NIDS_MODEL_IO_HPP_

#include <map>
#include <string>

#include "nids/classifiers/classifier.hpp"
#include "nids/reducer.hpp"

namespace nids {

/// Versioned container for fitted artifacts: 8-byte magic "NIDSART1", a
/// little-endian u32 header length, a JSON header (kind, shapes, feature
/// names, free-form metadata), then the numeric payload as row-major 8-byte
/// little-endian floats. Reducers and classifiers share the format so bench
/// runs can cache either.
void save_reducer(const Reducer& reducer, const std::string& path,
                  const std::map<std::string, std::string>& meta = {});
Reducer load_reducer(const std::string& path,
                     std::map<std::string, std::string>* meta = nullptr);

void save_model(const TrainedModel& model, const std::string& path,
                const std::map<std::string, std::string>& meta = {});
TrainedModel load_model(const std::string& path,
                        std::map<std::string, std::string>* meta = nullptr);

}  // namespace nids

#endif  // NIDS_MODEL_IO_HPP_
