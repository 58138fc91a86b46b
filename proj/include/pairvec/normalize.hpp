#pragma once

#include <filesystem>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

namespace pairvec {

// Rule set for turning raw clinical note text into a normalized token
// stream. Every rule can be toggled, and the two pattern-driven rules can be
// overridden, so the normalizer also works on non-clinical corpora.
//
// The rules run in a fixed order: PHI-tag deletion, age replacement,
// all-caps collapsing, lowercasing, non-alphanumeric stripping, digit-run
// normalization. Age and all-caps matching depend on the original casing and
// punctuation, so they must run before the lowercase/strip steps.
struct NormalizationRules {
  bool strip_phi = true;
  bool age_tokens = true;
  bool collapse_allcaps = true;
  bool numbers_to_zero = true;

  // De-identification placeholder spans, `[** ... **]`. The whole span is
  // deleted.
  std::string phi_pattern = R"(\[\*\*[\s\S]*?\*\*\])";

  // Age expressions like "67 yo", "67-year-old", "67 y.o.". Capture group 1
  // must be the age digits; the match is replaced by `age_<decade>s`.
  // A standalone "0" is never an age so that normalized number tokens cannot
  // re-trigger this rule (keeps normalization idempotent).
  std::string age_pattern =
      R"(\b(?!0(?!\d))(\d{1,3})[\s-]*(?:years?[\s-]*old\b|y\s*[./]\s*o\b\.?|yo\b))";

  // Maximal runs of all-caps words (each >= 2 chars, A-Z only) collapse to a
  // single `allcaps_<w1>_<w2>...` token. 0 = no limit on the run length.
  size_t allcaps_max_run = 0;

  static NormalizationRules load(const std::filesystem::path& config);
};

// Compiled form of NormalizationRules; reusable across documents and safe to
// share between threads once built.
class Normalizer {
 public:
  explicit Normalizer(NormalizationRules rules = {});

  // Applies the full rule pipeline to one document and returns its tokens.
  // Degenerate input yields an empty stream. Every returned token matches
  // [a-z0-9_]+.
  std::vector<std::string> normalize(std::string_view text) const;

  const NormalizationRules& rules() const { return rules_; }

 private:
  std::string strip_phi(const std::string& text) const;
  std::string replace_ages(const std::string& text) const;
  std::string collapse_allcaps(const std::string& text) const;

  NormalizationRules rules_;
  std::regex phi_re_;
  std::regex age_re_;
  std::regex allcaps_re_;
};

struct RawDocument {
  std::string id;
  std::string text;
};

inline std::vector<std::string> normalize_document(const RawDocument& doc,
                                                   const Normalizer& n) {
  return n.normalize(doc.text);
}

}  // namespace pairvec
