#include "fakenews/preprocess.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "fakenews/error.hpp"
#include "fakenews/porter.hpp"
#include "utf8.hpp"

namespace fakenews {

namespace detail {
extern const std::string_view kStopwordsEnglish;
}

namespace {

std::vector<std::string> parse_word_lines(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    words.push_back(line);
  }
  return words;
}

const std::map<std::string, StopwordList, std::less<>>& builtin_lists() {
  static const auto lists = [] {
    std::map<std::string, StopwordList, std::less<>> m;
    std::istringstream in{std::string(detail::kStopwordsEnglish)};
    m.emplace("english", StopwordList("english", parse_word_lines(in)));
    return m;
  }();
  return lists;
}

}  // namespace

void PipelineConfig::validate() const {
  if (min_token_length < 1) throw ConfigError("min_token_length must be at least 1");
  if (stopwords_enabled && !StopwordList::is_builtin(stopword_list_id) && custom_stopwords.empty()) {
    throw ConfigError("unknown stopword list '" + stopword_list_id + "'");
  }
}

StopwordList::StopwordList(std::string id, std::vector<std::string> words)
    : id_(std::move(id)), words_(std::make_move_iterator(words.begin()),
                                 std::make_move_iterator(words.end())) {}

const StopwordList& StopwordList::builtin(std::string_view id) {
  const auto& lists = builtin_lists();
  const auto it = lists.find(id);
  if (it == lists.end()) throw ConfigError("unknown stopword list '" + std::string(id) + "'");
  return it->second;
}

bool StopwordList::is_builtin(std::string_view id) noexcept {
  return builtin_lists().contains(id);
}

StopwordList StopwordList::from_file(const std::filesystem::path& path, std::string id) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open stopword file '" + path.string() + "'");
  return StopwordList(std::move(id), parse_word_lines(in));
}

bool StopwordList::contains(std::string_view word) const {
  return words_.contains(std::string(word));
}

std::vector<std::string> StopwordList::words() const {
  std::vector<std::string> out(words_.begin(), words_.end());
  std::sort(out.begin(), out.end());
  return out;
}

TokenSequence tokenize(std::string_view text, bool lowercase) {
  TokenSequence tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp = detail::decode_utf8(text, pos);
    if (detail::is_word_char(cp)) {
      if (lowercase) cp = detail::to_lower(cp);
      detail::append_utf8(current, cp);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

TokenSequence remove_stopwords(const TokenSequence& seq, const StopwordList& list) {
  TokenSequence out;
  out.reserve(seq.size());
  std::copy_if(seq.begin(), seq.end(), std::back_inserter(out),
               [&](const std::string& t) { return !list.contains(t); });
  return out;
}

TokenSequence remove_stopwords(const TokenSequence& seq, std::string_view list_id) {
  return remove_stopwords(seq, StopwordList::builtin(list_id));
}

Preprocessor::Preprocessor(PipelineConfig config) : config_(std::move(config)) {
  config_.validate();
  if (!config_.stopwords_enabled) return;
  if (StopwordList::is_builtin(config_.stopword_list_id)) {
    stopwords_ = std::shared_ptr<const StopwordList>(
        std::shared_ptr<const StopwordList>{}, &StopwordList::builtin(config_.stopword_list_id));
  } else {
    stopwords_ = std::make_shared<const StopwordList>(config_.stopword_list_id,
                                                      config_.custom_stopwords);
  }
}

TokenSequence Preprocessor::operator()(std::string_view text) const {
  TokenSequence tokens = tokenize(text, config_.lowercase);
  if (stopwords_) tokens = remove_stopwords(tokens, *stopwords_);
  TokenSequence out;
  out.reserve(tokens.size());
  for (auto& token : tokens) {
    std::string t = config_.stemming_enabled ? porter_stem(token) : std::move(token);
    if (detail::code_point_count(t) >= config_.min_token_length) out.push_back(std::move(t));
  }
  return out;
}

TokenSequence preprocess(std::string_view text, const PipelineConfig& config) {
  return Preprocessor(config)(text);
}

}  // namespace fakenews
