#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fockop/dynamics.hpp"
#include "fockop/gaussian_rational.hpp"
#include "fockop/symbol.hpp"
#include "json.hpp"

namespace fockop::cli {

using Json = nlohmann::ordered_json;

/// One complex entry as written in the document. Components given as
/// rational strings keep that spelling on output.
struct ScalarEntry {
  Complex value;
  GaussianRational exact;
  bool re_text = false;
  bool im_text = false;
};

struct SymbolDocument {
  std::size_t n = 0;
  std::vector<ScalarEntry> a;  // row-major
  std::vector<ScalarEntry> b;
  /// Empty when the document has "anglesExact": null or omits it.
  std::vector<std::optional<PiFraction>> angles_exact;

  AffineSymbol symbol() const;
  ExactAffineSymbol exact_symbol() const;
};

/// Throws Error(ParseError) on malformed input, including exact angle
/// tags that disagree with the eigenvalues of A by more than 1e-9.
SymbolDocument parse_symbol_document(const std::string& text);
/// "-" reads standard input.
SymbolDocument read_symbol_document(const std::string& path);

Json to_json(const SymbolDocument& doc);

Json complex_json(Complex z);
Json vector_json(const ComplexVector& v);

/// Two-space indented JSON with every float printed as %.17g. Non-finite
/// numbers are rejected.
std::string canonical_dump(const Json& j);

}  // namespace fockop::cli
