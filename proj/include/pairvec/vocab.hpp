#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pairvec {

struct VocabEntry {
  std::string symbol;
  uint64_t count = 0;
};

// Dense symbol table with frequency counts. Ids are 0..n-1 in a fixed,
// deterministic order: descending count, ties by symbol. The toolkit keeps
// two independent instances, one for words and one for contexts.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Drops symbols with count < min_count, sorts the rest. Throws DataError
  // when nothing survives.
  static Vocabulary from_counts(const std::unordered_map<std::string, uint64_t>& counts,
                                uint64_t min_count);

  // `symbol<TAB>count` lines in id order.
  void save(const std::filesystem::path& path) const;
  static Vocabulary load(const std::filesystem::path& path);

  std::optional<uint32_t> id_of(const std::string& symbol) const;
  const VocabEntry& entry(uint32_t id) const { return entries_[id]; }
  const std::string& symbol(uint32_t id) const { return entries_[id].symbol; }
  uint64_t count(uint32_t id) const { return entries_[id].count; }

  size_t size() const { return entries_.size(); }
  uint64_t total_count() const { return total_count_; }
  const std::vector<VocabEntry>& entries() const { return entries_; }
  std::vector<std::string> symbols() const;

  // Probability mass of one symbol among all retained occurrences.
  double frequency(uint32_t id) const {
    return static_cast<double>(entries_[id].count) / static_cast<double>(total_count_);
  }

 private:
  void build_index();

  std::vector<VocabEntry> entries_;
  std::unordered_map<std::string, uint32_t> index_;
  uint64_t total_count_ = 0;
};

// Counts whitespace-separated tokens in a one-document-per-line corpus file
// and keeps those occurring at least min_count times.
Vocabulary build_vocab(const std::filesystem::path& corpus, uint64_t min_count);

}  // namespace pairvec
