#include "hf/corpus.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace hf {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read corpus file " + file.string());
  std::vector<CorpusEntry> out;
  std::string line;
  std::size_t lineno = 0;
  const std::string stem = file.stem().string();
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = trim(line);
    if (s.empty()) continue;
    if (s[0] == '#' && (s.size() == 1 || s[1] == ' ' || s[1] == '#')) continue;
    CorpusEntry e;
    e.id = stem + ":" + std::to_string(lineno);
    if (s[0] == '[') {
      const auto close = s.find(']');
      if (close == std::string_view::npos) throw std::runtime_error(e.id + ": unterminated tag");
      e.tag = std::string(trim(s.substr(1, close - 1)));
      s = trim(s.substr(close + 1));
    }
    e.text = std::string(s);
    out.push_back(std::move(e));
  }
  return out;
}

std::filesystem::path corpus_dir() {
  if (const char* env = std::getenv("HF_CORPUS_DIR"); env && *env) return env;
  return HF_CORPUS_DIR;
}

std::filesystem::path corpus_file(std::string_view name) { return corpus_dir() / name; }

}  // namespace hf
