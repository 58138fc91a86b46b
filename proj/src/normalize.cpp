#include "pairvec/normalize.hpp"

#include <algorithm>
#include <cctype>

#include "pairvec/errors.hpp"
#include "pairvec/kv_file.hpp"

namespace pairvec {

namespace {

bool is_token_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

bool has_reserved_prefix(std::string_view tok) {
  return tok.rfind("age_", 0) == 0 || tok.rfind("allcaps_", 0) == 0;
}

// Replaces each maximal digit run in a token with a single "0". Tokens with
// a reserved prefix pass through untouched; their digits (the decade in
// age_60s) were produced by an earlier rule.
std::string zero_digits(std::string_view tok) {
  if (has_reserved_prefix(tok)) return std::string(tok);
  std::string out;
  out.reserve(tok.size());
  size_t i = 0;
  while (i < tok.size()) {
    if (std::isdigit(static_cast<unsigned char>(tok[i]))) {
      out.push_back('0');
      while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    } else {
      out.push_back(tok[i]);
      ++i;
    }
  }
  return out;
}

std::regex compile(const std::string& pattern, std::regex::flag_type flags,
                   const char* what) {
  try {
    return std::regex(pattern, flags);
  } catch (const std::regex_error& e) {
    throw DataError(std::string("invalid ") + what + " pattern: " + e.what());
  }
}

}  // namespace

NormalizationRules NormalizationRules::load(const std::filesystem::path& config) {
  KeyValueFile kv = KeyValueFile::parse_file(config);
  static const char* known[] = {"strip_phi",   "age_tokens", "collapse_allcaps",
                                "numbers_to_zero", "phi_pattern", "age_pattern",
                                "allcaps_max_run"};
  for (const auto& [key, _] : kv.values()) {
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* k) { return key == k; }) == std::end(known)) {
      throw DataError(config.string() + ": unknown rule key `" + key + "`");
    }
  }
  NormalizationRules r;
  r.strip_phi = kv.get_bool("strip_phi", r.strip_phi);
  r.age_tokens = kv.get_bool("age_tokens", r.age_tokens);
  r.collapse_allcaps = kv.get_bool("collapse_allcaps", r.collapse_allcaps);
  r.numbers_to_zero = kv.get_bool("numbers_to_zero", r.numbers_to_zero);
  r.phi_pattern = kv.get_or("phi_pattern", r.phi_pattern);
  r.age_pattern = kv.get_or("age_pattern", r.age_pattern);
  auto max_run = kv.get_int("allcaps_max_run", static_cast<int64_t>(r.allcaps_max_run));
  if (max_run < 0) throw DataError(config.string() + ": allcaps_max_run must be >= 0");
  r.allcaps_max_run = static_cast<size_t>(max_run);
  return r;
}

Normalizer::Normalizer(NormalizationRules rules)
    : rules_(std::move(rules)),
      phi_re_(compile(rules_.phi_pattern, std::regex::ECMAScript, "PHI")),
      age_re_(compile(rules_.age_pattern, std::regex::ECMAScript | std::regex::icase, "age")),
      allcaps_re_(compile(R"(\b[A-Z]{2,}(?:[ \t]+[A-Z]{2,})*\b)", std::regex::ECMAScript,
                          "all-caps")) {}

std::string Normalizer::strip_phi(const std::string& text) const {
  return std::regex_replace(text, phi_re_, "");
}

std::string Normalizer::replace_ages(const std::string& text) const {
  std::string out;
  out.reserve(text.size());
  auto begin = std::sregex_iterator(text.begin(), text.end(), age_re_);
  auto end = std::sregex_iterator();
  size_t last = 0;
  for (auto it = begin; it != end; ++it) {
    const std::smatch& m = *it;
    out.append(text, last, static_cast<size_t>(m.position(0)) - last);
    int age = std::stoi(m.str(1));
    int decade = std::min(age / 10 * 10, 90);
    out += "age_" + std::to_string(decade) + "s";
    last = static_cast<size_t>(m.position(0) + m.length(0));
  }
  out.append(text, last, text.size() - last);
  return out;
}

std::string Normalizer::collapse_allcaps(const std::string& text) const {
  std::string out;
  out.reserve(text.size());
  auto begin = std::sregex_iterator(text.begin(), text.end(), allcaps_re_);
  auto end = std::sregex_iterator();
  size_t last = 0;
  for (auto it = begin; it != end; ++it) {
    const std::smatch& m = *it;
    out.append(text, last, static_cast<size_t>(m.position(0)) - last);
    std::string run = m.str(0);
    // Words of the run, joined by underscores, lowercased.
    std::string collapsed = "allcaps_";
    size_t words = 0;
    bool prev_sep = true;
    for (char c : run) {
      if (c == ' ' || c == '\t') {
        prev_sep = true;
        continue;
      }
      if (prev_sep) {
        if (words > 0) collapsed.push_back('_');
        ++words;
        prev_sep = false;
      }
      collapsed.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (rules_.allcaps_max_run > 0 && words > rules_.allcaps_max_run) {
      out += run;  // over the configured limit: leave the run alone
    } else {
      out += collapsed;
    }
    last = static_cast<size_t>(m.position(0) + m.length(0));
  }
  out.append(text, last, text.size() - last);
  return out;
}

std::vector<std::string> Normalizer::normalize(std::string_view text) const {
  std::string s(text);
  if (rules_.strip_phi) s = strip_phi(s);
  if (rules_.age_tokens) s = replace_ages(s);
  if (rules_.collapse_allcaps) s = collapse_allcaps(s);

  // Lowercase + strip in one pass: ASCII alphanumerics and '_' are token
  // characters, everything else is a boundary. '_' must survive so the
  // age_/allcaps_ tokens injected above stay intact.
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    tokens.push_back(rules_.numbers_to_zero ? zero_digits(cur) : cur);
    cur.clear();
  };
  for (char raw : s) {
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(raw)));
    if (is_token_char(c)) {
      cur.push_back(c);
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

}  // namespace pairvec
