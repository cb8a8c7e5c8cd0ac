#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fakenews/bundle.hpp"
#include "fakenews/corpus.hpp"
#include "fakenews/eval.hpp"
#include "fakenews/features.hpp"

namespace fakenews::cli {

enum class Format { Table, Json, Csv };

std::optional<Format> parse_format(std::string_view text);

void write_distribution(std::ostream& out, Format format, const Corpus& corpus,
                        const ClassHistogram& histogram);

void write_metrics(std::ostream& out, Format format, const Evaluation& evaluation);

void write_comparison(std::ostream& out, Format format, const Comparison& comparison);

// `per_class` empty means a global ranking only.
void write_top_terms(std::ostream& out, Format format, const std::vector<TermCount>& global,
                     const std::map<Label, std::vector<TermCount>>& per_class);

struct PredictionRecord {
  std::string id;
  TextPrediction prediction;
};

void write_predictions(std::ostream& out, Format format,
                       const std::vector<PredictionRecord>& records, bool diagnostics);

}  // namespace fakenews::cli
