#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>

#include "pairvec/concept_map.hpp"
#include "pairvec/vocab.hpp"

namespace pairvec {

struct PairGenConfig {
  uint64_t min_count = 5;
  double subsample_t = 1e-4;
  uint32_t max_window = 8;
  uint64_t seed = 1;
  bool inject_ontology = false;

  void validate() const;  // throws UsageError on an out-of-range field
};

// Keep probability for a token whose corpus frequency is `word_frequency`:
// min(1, sqrt(t / f)). Frequencies are relative to the retained vocabulary.
double subsample_keep_probability(double word_frequency, double t);

// OOV tokens are removed first, then each remaining token survives
// independently with its keep probability. Removed positions are deleted
// outright, so context windows generated later span the gaps.
std::vector<uint32_t> filter_tokens(std::span<const std::string> tokens,
                                    const Vocabulary& vocab, double subsample_t,
                                    std::mt19937_64& rng);

// Receives one training pair per call, both sides as symbols.
using PairSink = std::function<void(std::string_view word, std::string_view context)>;

// Per-position window width in [1, max_window].
using WindowDraw = std::function<uint32_t()>;

WindowDraw uniform_window_draw(std::mt19937_64& rng, uint32_t max_window);

// For each position i, draws a width b and emits (word_i, word_j) for every
// j != i with |i - j| <= b, clipped to the sequence bounds. Context symbols
// are the word strings themselves.
void gen_positional_pairs(std::span<const uint32_t> ids, const Vocabulary& vocab,
                          const WindowDraw& draw, const PairSink& sink);

// Emits one (word, CUI:<id>) pair per mapped concept for every surviving
// occurrence. Emission is per occurrence, not per vocabulary type, so
// frequent words weight their concepts accordingly.
void inject_ontology_pairs(std::span<const uint32_t> ids, const Vocabulary& vocab,
                           const ConceptMap& concepts, const PairSink& sink);

struct PairStreamResult {
  Vocabulary word_vocab;
  Vocabulary context_vocab;
  uint64_t word_pairs = 0;
  uint64_t ontology_pairs = 0;

  uint64_t total_pairs() const { return word_pairs + ontology_pairs; }
};

// Full pipeline over a one-document-per-line corpus: vocabulary, rare-word
// removal, subsampling, dynamic windows, optional ontology pairs interleaved
// at their source positions. Document boundaries truncate windows. The pair
// stream is a deterministic function of (corpus, config, seed).
PairStreamResult generate_pairs(const std::filesystem::path& corpus,
                                const ConceptMap* concepts, const PairGenConfig& config,
                                const PairSink& sink);

// Sidecar layout produced next to a pair file and recorded in its manifest.
struct PairManifest {
  std::string pairs_file;
  std::string word_vocab_file;
  std::string context_vocab_file;
  uint64_t word_vocab_size = 0;
  uint64_t context_vocab_size = 0;
  uint64_t word_pairs = 0;
  uint64_t ontology_pairs = 0;
  PairGenConfig config;

  uint64_t total_pairs() const { return word_pairs + ontology_pairs; }

  void save(const std::filesystem::path& path) const;
  // Loads and resolves the recorded file names against the manifest's
  // directory, so the manifest can travel with its sidecars.
  static PairManifest load(const std::filesystem::path& path);

  std::filesystem::path pairs_path;
  std::filesystem::path word_vocab_path;
  std::filesystem::path context_vocab_path;
};

inline std::filesystem::path manifest_path_for(const std::filesystem::path& pairs_out) {
  std::filesystem::path p = pairs_out;
  p += ".manifest.json";
  return p;
}

// Writes `word<TAB>context` lines to pairs_out plus the vocabulary sidecars
// (<out>.wv, <out>.cv) and <out>.manifest.json. All writes are atomic.
PairManifest write_pair_files(const std::filesystem::path& corpus, const ConceptMap* concepts,
                              const PairGenConfig& config,
                              const std::filesystem::path& pairs_out);

}  // namespace pairvec
