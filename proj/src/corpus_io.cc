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

#include "radevent/corpus_io.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "radevent/errors.h"
#include "radevent/event_graph.h"
#include "radevent/standoff.h"
#include "radevent/version.h"

namespace radevent {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const fs::path &path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

namespace {

// Re-raises a library error with the file name prepended, keeping its type.
[[noreturn]] void Rethrow(const fs::path &file) {
  const std::string where = file.string() + ": ";
  try {
    throw;
  } catch (const ParseError &e) {
    throw ParseError(where + e.what());
  } catch (const ReferenceError &e) {
    throw ReferenceError(where + e.what(), e.missing_id());
  } catch (const AlignmentError &e) {
    throw AlignmentError(where + e.what());
  } catch (const StructuralError &e) {
    throw StructuralError(where + e.what());
  }
}

void ApplyManifest(const fs::path &path, std::vector<Document> &docs) {
  json root;
  try {
    root = json::parse(ReadFile(path));
  } catch (const json::parse_error &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  auto it = root.find("documents");
  if (!root.is_object() || it == root.end() || !it->is_object()) {
    throw ParseError(path.string() + ": expected an object with 'documents'");
  }
  for (const auto &[id, meta] : it->items()) {
    auto doc = std::find_if(docs.begin(), docs.end(),
                            [&](const Document &d) { return d.id == id; });
    if (doc == docs.end()) {
      throw ParseError(path.string() + ": unknown document '" + id + "'");
    }
    try {
      doc->metadata = MetadataFromJson(meta);
    } catch (const ParseError &e) {
      throw ParseError(path.string() + ": " + id + ": " + e.what());
    }
  }
}

}  // namespace

std::vector<Document> ReadCorpusDir(const fs::path &dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoError(dir.string() + " is not a directory");
  }
  std::map<std::string, std::pair<bool, bool>> stems;  // has .txt, has .ann
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    const std::string stem = entry.path().stem().string();
    if (ext == ".txt") stems[stem].first = true;
    if (ext == ".ann") stems[stem].second = true;
  }
  std::vector<Document> docs;
  for (const auto &[stem, has] : stems) {
    const fs::path txt = dir / (stem + ".txt");
    const fs::path ann = dir / (stem + ".ann");
    if (!has.first) throw IoError(ann.string() + " has no matching .txt file");
    const std::string text = ReadFile(txt);
    const std::string annotations = has.second ? ReadFile(ann) : std::string();
    try {
      docs.push_back(ParseDocument(text, annotations, stem));
    } catch (const Error &) {
      Rethrow(has.second ? ann : txt);
    }
  }
  if (fs::exists(dir / kManifestFile)) ApplyManifest(dir / kManifestFile, docs);
  return docs;
}

void WriteCorpusDir(const fs::path &dir, std::span<const Document> docs) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  ordered_json manifest_docs = ordered_json::object();
  std::vector<const Document *> sorted;
  for (const auto &d : docs) sorted.push_back(&d);
  std::sort(sorted.begin(), sorted.end(),
            [](const Document *a, const Document *b) { return a->id < b->id; });
  for (const Document *d : sorted) {
    const StandoffFiles files = SerializeDocument(*d);
    WriteFile(dir / (d->id + ".txt"), files.text);
    WriteFile(dir / (d->id + ".ann"), files.ann);
    if (d->metadata != DocumentMetadata{}) {
      manifest_docs[d->id] = MetadataToJson(d->metadata);
    }
  }
  if (!manifest_docs.empty()) {
    ordered_json manifest;
    manifest["tool_version"] = kToolVersion;
    manifest["documents"] = std::move(manifest_docs);
    WriteFile(dir / kManifestFile, manifest.dump(2) + "\n");
  }
}

std::vector<Document> ReadJsonCorpus(const fs::path &path,
                                     const Schema &schema) {
  json root;
  try {
    root = json::parse(ReadFile(path));
  } catch (const json::parse_error &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  auto it = root.find("documents");
  if (!root.is_object() || it == root.end() || !it->is_array()) {
    throw ParseError(path.string() + ": expected an object with a 'documents' list");
  }
  std::vector<Document> docs;
  for (const auto &dj : *it) {
    try {
      docs.push_back(DocumentFromJson(dj, schema));
    } catch (const Error &) {
      Rethrow(path);
    }
  }
  std::sort(docs.begin(), docs.end(),
            [](const Document &a, const Document &b) { return a.id < b.id; });
  return docs;
}

void WriteJsonCorpus(const fs::path &path, std::span<const Document> docs) {
  ordered_json root;
  root["tool_version"] = kToolVersion;
  ordered_json list = ordered_json::array();
  std::vector<const Document *> sorted;
  for (const auto &d : docs) sorted.push_back(&d);
  std::sort(sorted.begin(), sorted.end(),
            [](const Document *a, const Document *b) { return a->id < b->id; });
  for (const Document *d : sorted) list.push_back(DocumentToJson(*d));
  root["documents"] = std::move(list);
  WriteFile(path, root.dump(2) + "\n");
}

}  // namespace radevent
