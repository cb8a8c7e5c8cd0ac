#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace fakenews {

using TokenSequence = std::vector<std::string>;

inline constexpr std::string_view kDefaultStopwordList = "english";

// Saved verbatim inside every model bundle so prediction replays the exact
// training pipeline. custom_stopwords is only used when stopword_list_id does
// not name a built-in list.
struct PipelineConfig {
  bool lowercase = true;
  bool stopwords_enabled = true;
  std::string stopword_list_id{kDefaultStopwordList};
  std::vector<std::string> custom_stopwords;
  bool stemming_enabled = true;
  std::size_t min_token_length = 2;

  // Throws ConfigError.
  void validate() const;

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

class StopwordList {
 public:
  StopwordList(std::string id, std::vector<std::string> words);

  // Built-in lists by id; throws ConfigError for unknown ids.
  static const StopwordList& builtin(std::string_view id);
  static bool is_builtin(std::string_view id) noexcept;
  // Newline-delimited UTF-8 file; blank lines and lines starting with '#' are skipped.
  static StopwordList from_file(const std::filesystem::path& path, std::string id);

  const std::string& id() const noexcept { return id_; }
  bool contains(std::string_view word) const;
  std::size_t size() const noexcept { return words_.size(); }
  // Sorted word list.
  std::vector<std::string> words() const;

 private:
  std::string id_;
  std::unordered_set<std::string> words_;
};

// Maximal runs of letters/digits; everything else separates. Tokens are
// lowercased when `lowercase` is set.
TokenSequence tokenize(std::string_view text, bool lowercase = true);

TokenSequence remove_stopwords(const TokenSequence& seq, const StopwordList& list);
// Built-in list by id; throws ConfigError for unknown ids.
TokenSequence remove_stopwords(const TokenSequence& seq, std::string_view list_id);

// Stage order is fixed: tokenize -> remove stopwords -> Porter stem each
// token -> drop tokens shorter than min_token_length code points.
class Preprocessor {
 public:
  explicit Preprocessor(PipelineConfig config);

  TokenSequence operator()(std::string_view text) const;
  const PipelineConfig& config() const noexcept { return config_; }

 private:
  PipelineConfig config_;
  std::shared_ptr<const StopwordList> stopwords_;
};

TokenSequence preprocess(std::string_view text, const PipelineConfig& config);

}  // namespace fakenews
