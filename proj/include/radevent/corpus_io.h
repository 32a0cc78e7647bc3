// Copyright 2026 The radevent Authors.
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

#ifndef RADEVENT_CORPUS_IO_H_
#define RADEVENT_CORPUS_IO_H_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "radevent/document.h"
#include "radevent/schema.h"

namespace radevent {

// Name of the optional per-corpus metadata file:
//   {"tool_version": "...",
//    "documents": {"<id>": {"modality": "CT", "split": "train",
//                           "synthetic": true}}}
inline constexpr const char kManifestFile[] = "manifest.json";

std::string ReadFile(const std::filesystem::path &path);
void WriteFile(const std::filesystem::path &path, std::string_view content);

// Reads every <id>.txt / <id>.ann pair in `dir` (a .txt without .ann is an
// unannotated document; an .ann without .txt is an error), applies
// manifest.json if present and returns the documents sorted by id. Errors
// carry the offending file name.
std::vector<Document> ReadCorpusDir(const std::filesystem::path &dir);

// Writes <id>.txt / <id>.ann for every document, plus manifest.json when any
// document carries metadata. Creates `dir` if needed.
void WriteCorpusDir(const std::filesystem::path &dir,
                    std::span<const Document> docs);

// Corpus in the JSON interchange form:
//   {"tool_version": "...", "documents": [<document>, ...]}
std::vector<Document> ReadJsonCorpus(const std::filesystem::path &path,
                                     const Schema &schema);
void WriteJsonCorpus(const std::filesystem::path &path,
                     std::span<const Document> docs);

}  // namespace radevent

#endif  // RADEVENT_CORPUS_IO_H_
