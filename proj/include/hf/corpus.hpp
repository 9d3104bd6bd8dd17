#pragma once

// Formula corpora: one formula per line. Blank lines and lines whose first
// non-blank character is `#` followed by a space (or nothing) are comments,
// so `#12 in x` is still a formula. A line may start with a `[tag]`.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hf {

struct CorpusEntry {
  std::string id;  // file stem and line number, e.g. arith:12
  std::string tag;
  std::string text;
};

// Throws std::runtime_error when the file cannot be read.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& file);

// The shipped corpus directory; HF_CORPUS_DIR in the environment overrides it.
std::filesystem::path corpus_dir();
std::filesystem::path corpus_file(std::string_view name);

}  // namespace hf
