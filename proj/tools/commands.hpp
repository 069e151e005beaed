#pragma once

#include <optional>
#include <string>

#include "blades/combinatorics.hpp"

namespace blades::cli {

enum Exit : int { kOk = 0, kNotMember = 1, kInputError = 2 };

struct Options {
  std::optional<int> frame;  // n
  std::optional<int> k;
  std::optional<Subset> face;
  std::optional<int> j;
  std::optional<Subset> J;
  std::string test = "z";  // x, y or z
  bool plucker = false;
  bool anchored = false;
  bool multisplits = false;
  bool closure = false;
  bool expand = false;
  bool count_only = false;
  std::string goldens;
};

struct Outcome {
  int status = kOk;
  std::string out;  // JSON, or JSON lines
  std::string err;
};

bool is_verb(const std::string& verb);

/// Runs one verb on the (possibly empty) input text.
Outcome run(const std::string& verb, const std::string& input, const Options& options);

/// "6,11", "[6,11]" or "" (empty set).
Subset parse_subset_flag(const std::string& text);

/// Re-executes the worked examples listed in a goldens file.
Outcome replay_paper_examples(const std::string& goldens_path);

}  // namespace blades::cli
