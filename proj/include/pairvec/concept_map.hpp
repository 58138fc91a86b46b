#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

namespace pairvec {

// word -> set of concept identifiers (CUIs). Stands in for a UMLS MRCON
// extraction; the file format is two-column delimited (word, CUI),
// many-to-many, lowercase words.
class ConceptMap {
 public:
  ConceptMap() = default;

  static ConceptMap load(const std::filesystem::path& path, char delim = '\t');

  void add(const std::string& word, const std::string& cui);

  // CUIs for a word, deduplicated and sorted; empty when unmapped.
  const std::vector<std::string>* find(const std::string& word) const;

  size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> map_;
};

}  // namespace pairvec
