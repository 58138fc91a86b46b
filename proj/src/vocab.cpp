#include "pairvec/vocab.hpp"

#include <algorithm>

#include "pairvec/errors.hpp"
#include "pairvec/io_util.hpp"

namespace pairvec {

Vocabulary Vocabulary::from_counts(const std::unordered_map<std::string, uint64_t>& counts,
                                   uint64_t min_count) {
  Vocabulary v;
  v.entries_.reserve(counts.size());
  for (const auto& [symbol, count] : counts) {
    if (count >= min_count && count > 0) v.entries_.push_back({symbol, count});
  }
  if (v.entries_.empty()) {
    throw DataError("empty vocabulary: no symbol reaches min_count " + std::to_string(min_count));
  }
  std::sort(v.entries_.begin(), v.entries_.end(), [](const VocabEntry& a, const VocabEntry& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.symbol < b.symbol;
  });
  v.build_index();
  return v;
}

void Vocabulary::build_index() {
  index_.clear();
  index_.reserve(entries_.size());
  total_count_ = 0;
  for (uint32_t i = 0; i < entries_.size(); ++i) {
    auto [it, inserted] = index_.emplace(entries_[i].symbol, i);
    if (!inserted) throw DataError("duplicate vocabulary symbol: " + entries_[i].symbol);
    total_count_ += entries_[i].count;
  }
}

void Vocabulary::save(const std::filesystem::path& path) const {
  AtomicWriter w(path);
  for (const auto& e : entries_) {
    w.stream() << e.symbol << '\t' << e.count << '\n';
  }
  w.commit();
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
  Vocabulary v;
  for_each_line(path, [&](std::string_view line, size_t lineno) {
    if (line.empty()) return;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw DataError(path.string() + ":" + std::to_string(lineno) +
                      ": expected `symbol<TAB>count`");
    }
    std::string symbol(line.substr(0, tab));
    uint64_t count = 0;
    try {
      count = std::stoull(std::string(line.substr(tab + 1)));
    } catch (const std::exception&) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": bad count field");
    }
    if (symbol.empty() || count == 0) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": bad vocabulary entry");
    }
    v.entries_.push_back({std::move(symbol), count});
  });
  if (v.entries_.empty()) throw DataError("empty vocabulary file: " + path.string());
  v.build_index();
  return v;
}

std::optional<uint32_t> Vocabulary::id_of(const std::string& symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Vocabulary::symbols() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.symbol);
  return out;
}

Vocabulary build_vocab(const std::filesystem::path& corpus, uint64_t min_count) {
  std::unordered_map<std::string, uint64_t> counts;
  counts.reserve(1 << 16);
  for_each_line(corpus, [&](std::string_view line, size_t) {
    size_t i = 0;
    const size_t n = line.size();
    while (i < n) {
      while (i < n && (line[i] == ' ' || line[i] == '\t')) ++i;
      size_t start = i;
      while (i < n && line[i] != ' ' && line[i] != '\t') ++i;
      if (i > start) ++counts[std::string(line.substr(start, i - start))];
    }
  });
  return Vocabulary::from_counts(counts, min_count);
}

}  // namespace pairvec
