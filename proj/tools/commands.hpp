#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "document.hpp"
#include "fockop/linalg.hpp"
#include "fockop/multi_index.hpp"

namespace fockop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUnbounded = 2;

/// N = 20 for n = 1, 10 for n = 2, 6 otherwise.
std::size_t default_degree(std::size_t n);

/// FOCKOP_DIM_CAP if set to a positive integer, else the library default.
std::size_t dimension_cap_from_env();

struct AnalyzeOptions {
  std::optional<std::size_t> degree;
  double tolerance = kUnitTolerance;
  bool text = false;
  std::size_t spectrum_degree = 3;
  std::size_t cap = kDefaultDimensionCap;
};

struct SpectrumOptions {
  std::size_t max_degree = 4;
  std::optional<std::size_t> verify_degree;
  double tolerance = kUnitTolerance;
  double dedup_tolerance = 1e-10;
  std::size_t cap = kDefaultDimensionCap;
};

struct TruncateOptions {
  std::optional<std::size_t> degree;
  std::optional<std::string> dump_path;
  std::string format = "csv";
  bool exact = false;
  std::size_t cap = kDefaultDimensionCap;
};

struct CyclicOptionsCli {
  std::int64_t max_coeff = 1000000;
  double tolerance = kUnitTolerance;
};

/// Each command writes its document to `out` and returns the exit code.
/// Library errors propagate to the caller.
int cmd_analyze(const SymbolDocument& doc, const AnalyzeOptions& opt, std::ostream& out);
int cmd_spectrum(const SymbolDocument& doc, const SpectrumOptions& opt, std::ostream& out);
int cmd_truncate(const SymbolDocument& doc, const TruncateOptions& opt, std::ostream& out);
int cmd_cyclic(const SymbolDocument& doc, const CyclicOptionsCli& opt, std::ostream& out);

/// Full analysis document (what cmd_analyze prints in JSON mode).
Json analysis_document(const SymbolDocument& doc, const AnalyzeOptions& opt, bool& unbounded, bool& certified);

}  // namespace fockop::cli
