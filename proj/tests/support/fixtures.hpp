#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "document.hpp"

namespace testing_support {

inline std::vector<std::filesystem::path> fixture_files(const std::string& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

inline fockop::cli::SymbolDocument load(const std::filesystem::path& p) {
  return fockop::cli::read_symbol_document(p.string());
}

}  // namespace testing_support
