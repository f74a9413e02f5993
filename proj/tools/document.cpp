#include "document.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>

#include "fockop/error.hpp"
#include "fockop/spectrum.hpp"

namespace fockop::cli {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

mpq_class component(const Json& j, const char* name, bool& textual, double& value) {
  if (!j.contains(name)) parse_fail(std::string("complex entry lacks \"") + name + "\"");
  const Json& c = j.at(name);
  if (c.is_number()) {
    textual = false;
    value = c.get<double>();
    if (!std::isfinite(value)) parse_fail("non-finite number");
    mpq_class q;
    q = value;
    return q;
  }
  if (c.is_string()) {
    textual = true;
    mpq_class q;
    try {
      q = GaussianRational::parse_rational(c.get<std::string>());
    } catch (const Error& e) {
      parse_fail(e.what());
    }
    value = q.get_d();
    return q;
  }
  parse_fail(std::string("\"") + name + "\" must be a number or a rational string");
}

ScalarEntry parse_entry(const Json& j) {
  if (!j.is_object()) parse_fail("complex entries must be {re, im} objects");
  ScalarEntry e;
  double re = 0.0;
  double im = 0.0;
  mpq_class qre = component(j, "re", e.re_text, re);
  mpq_class qim = component(j, "im", e.im_text, im);
  e.value = Complex(re, im);
  e.exact = GaussianRational(std::move(qre), std::move(qim));
  return e;
}

Json component_json(double v, const mpq_class& q, bool textual) {
  if (textual) return q.get_str();
  return v;
}

double circular_distance(double x, double y) {
  const double two_pi = 2.0 * std::numbers::pi;
  double d = std::fmod(std::abs(x - y), two_pi);
  return std::min(d, two_pi - d);
}

}  // namespace

AffineSymbol SymbolDocument::symbol() const {
  const auto k = static_cast<Eigen::Index>(n);
  ComplexMatrix am(k, k);
  ComplexVector bv(k);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) am(r, c) = a[static_cast<std::size_t>(r * k + c)].value;
    bv(r) = b[static_cast<std::size_t>(r)].value;
  }
  return AffineSymbol(am, bv);
}

ExactAffineSymbol SymbolDocument::exact_symbol() const {
  std::vector<GaussianRational> ea;
  std::vector<GaussianRational> eb;
  for (const auto& e : a) ea.push_back(e.exact);
  for (const auto& e : b) eb.push_back(e.exact);
  return ExactAffineSymbol(n, std::move(ea), std::move(eb));
}

SymbolDocument parse_symbol_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) parse_fail("symbol document must be a JSON object");
  if (!j.contains("n") || !j.at("n").is_number_unsigned() || j.at("n").get<std::size_t>() == 0) {
    parse_fail("\"n\" must be a positive integer");
  }
  SymbolDocument doc;
  doc.n = j.at("n").get<std::size_t>();
  if (!j.contains("A") || !j.at("A").is_array() || j.at("A").size() != doc.n) {
    parse_fail("\"A\" must be an array of n rows");
  }
  for (const Json& row : j.at("A")) {
    if (!row.is_array() || row.size() != doc.n) parse_fail("each row of \"A\" must have n entries");
    for (const Json& e : row) doc.a.push_back(parse_entry(e));
  }
  if (!j.contains("B") || !j.at("B").is_array() || j.at("B").size() != doc.n) {
    parse_fail("\"B\" must be an array of n entries");
  }
  for (const Json& e : j.at("B")) doc.b.push_back(parse_entry(e));

  if (j.contains("anglesExact") && !j.at("anglesExact").is_null()) {
    const Json& tags = j.at("anglesExact");
    if (!tags.is_array() || tags.size() != doc.n) parse_fail("\"anglesExact\" must be null or have n entries");
    for (const Json& t : tags) {
      if (t.is_null()) {
        doc.angles_exact.emplace_back();
        continue;
      }
      if (!t.is_object() || !t.contains("num") || !t.contains("den") || !t.at("num").is_number_integer() ||
          !t.at("den").is_number_integer()) {
        parse_fail("angle tags must be {\"num\": int, \"den\": int}");
      }
      try {
        doc.angles_exact.push_back(PiFraction::reduced(t.at("num").get<std::int64_t>(), t.at("den").get<std::int64_t>()));
      } catch (const Error& e) {
        parse_fail(e.what());
      }
    }
  }

  AffineSymbol sym = [&] {
    try {
      return doc.symbol();
    } catch (const Error& e) {
      parse_fail(e.what());
    }
  }();
  if (!doc.angles_exact.empty()) {
    const auto eig = eigenvalues(sym.matrix());
    for (std::size_t i = 0; i < doc.n; ++i) {
      if (!doc.angles_exact[i]) continue;
      const double gap = circular_distance(positive_arg(eig[i]), doc.angles_exact[i]->radians());
      if (gap > 1e-9) {
        parse_fail("angle tag " + std::to_string(i) + " is " + std::to_string(gap) +
                   " rad away from the eigenvalue argument");
      }
    }
  }
  return doc;
}

SymbolDocument read_symbol_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_symbol_document(text);
}

Json to_json(const SymbolDocument& doc) {
  auto entry = [](const ScalarEntry& e) {
    Json j = Json::object();
    j["re"] = component_json(e.value.real(), e.exact.real(), e.re_text);
    j["im"] = component_json(e.value.imag(), e.exact.imag(), e.im_text);
    return j;
  };
  Json j = Json::object();
  j["n"] = doc.n;
  Json a = Json::array();
  for (std::size_t r = 0; r < doc.n; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < doc.n; ++c) row.push_back(entry(doc.a[r * doc.n + c]));
    a.push_back(std::move(row));
  }
  j["A"] = std::move(a);
  Json b = Json::array();
  for (const auto& e : doc.b) b.push_back(entry(e));
  j["B"] = std::move(b);
  if (doc.angles_exact.empty()) {
    j["anglesExact"] = nullptr;
  } else {
    Json tags = Json::array();
    for (const auto& t : doc.angles_exact) {
      if (t) {
        tags.push_back(Json{{"num", t->num}, {"den", t->den}});
      } else {
        tags.push_back(nullptr);
      }
    }
    j["anglesExact"] = std::move(tags);
  }
  return j;
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json vector_json(const ComplexVector& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(complex_json(v(i)));
  return j;
}

namespace {

void emit(const Json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(key).dump() + ": ";
        emit(value, out, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ",\n";
        out += pad;
        emit(j[i], out, depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) throw Error(ErrorCode::IdentityViolation, "refusing to serialize a non-finite number");
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string canonical_dump(const Json& j) {
  std::string out;
  emit(j, out, 0);
  out += "\n";
  return out;
}

}  // namespace fockop::cli
