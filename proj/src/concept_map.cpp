#include "pairvec/concept_map.hpp"

#include <algorithm>

#include "pairvec/errors.hpp"
#include "pairvec/io_util.hpp"

namespace pairvec {

ConceptMap ConceptMap::load(const std::filesystem::path& path, char delim) {
  ConceptMap m;
  for_each_line(path, [&](std::string_view line, size_t lineno) {
    if (line.empty()) return;
    auto pos = line.find(delim);
    if (pos == std::string_view::npos) {
      throw DataError(path.string() + ":" + std::to_string(lineno) +
                      ": expected `word<delim>cui`");
    }
    std::string word = trim(line.substr(0, pos));
    std::string cui = trim(line.substr(pos + 1));
    if (word.empty() || cui.empty()) {
      throw DataError(path.string() + ":" + std::to_string(lineno) +
                      ": empty word or concept id");
    }
    m.add(word, cui);
  });
  return m;
}

void ConceptMap::add(const std::string& word, const std::string& cui) {
  auto& cuis = map_[word];
  auto it = std::lower_bound(cuis.begin(), cuis.end(), cui);
  if (it == cuis.end() || *it != cui) cuis.insert(it, cui);
}

const std::vector<std::string>* ConceptMap::find(const std::string& word) const {
  auto it = map_.find(word);
  if (it == map_.end()) return nullptr;
  return &it->second;
}

}  // namespace pairvec
