#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>

#include "fockop/analysis.hpp"
#include "fockop/classify.hpp"
#include "fockop/error.hpp"
#include "fockop/spectrum.hpp"
#include "fockop/truncation.hpp"

#ifndef FOCKOP_VERSION
#define FOCKOP_VERSION "unknown"
#endif

namespace fockop::cli {

std::size_t default_degree(std::size_t n) {
  if (n == 1) return 20;
  if (n == 2) return 10;
  return 6;
}

std::size_t dimension_cap_from_env() {
  const char* v = std::getenv("FOCKOP_DIM_CAP");
  if (v == nullptr || *v == '\0') return kDefaultDimensionCap;
  char* end = nullptr;
  const unsigned long long cap = std::strtoull(v, &end, 10);
  if (*end != '\0' || cap == 0) throw Error(ErrorCode::ParseError, "FOCKOP_DIM_CAP must be a positive integer");
  return static_cast<std::size_t>(cap);
}

namespace {

Json tool_json() { return Json{{"name", "fockop"}, {"version", FOCKOP_VERSION}}; }

Json bounded_json(const BoundednessVerdict& v) {
  Json j = Json::object();
  j["bounded"] = v.bounded;
  j["normA"] = v.norm_a;
  j["witness"] = v.witness ? vector_json(*v.witness) : Json(nullptr);
  return j;
}

Json relation_json(const std::optional<std::vector<std::int64_t>>& r) {
  if (!r) return nullptr;
  Json j = Json::array();
  for (auto k : *r) j.push_back(k);
  return j;
}

Json independence_json(const IndependenceVerdict& v) {
  Json j = Json::object();
  j["verdict"] = std::string(to_string(v.independent));
  j["relation"] = relation_json(v.relation);
  j["residual"] = v.residual;
  j["method"] = v.method;
  return j;
}

Json cyclic_json(const CyclicityVerdict& v) {
  Json j = Json::object();
  j["verdict"] = std::string(to_string(v.verdict));
  j["relation"] = relation_json(v.relation);
  j["rootOrder"] = v.root_order ? Json(*v.root_order) : Json(nullptr);
  j["rationale"] = v.rationale;
  return j;
}

Json gamma_json(const MultiIndex& g) {
  Json j = Json::array();
  for (auto e : g.exponents()) j.push_back(e);
  return j;
}

Json enumeration_json(const SpectrumEnumeration& e, std::size_t degree) {
  Json j = Json::object();
  Json eig = Json::array();
  for (const Complex& l : e.eigenvalues_of_a) eig.push_back(complex_json(l));
  j["eigenvaluesOfA"] = std::move(eig);
  j["maxDegree"] = degree;
  Json products = Json::array();
  for (const auto& p : e.products) products.push_back(Json{{"gamma", gamma_json(p.gamma)}, {"value", complex_json(p.value)}});
  j["products"] = std::move(products);
  j["closureContainsZero"] = e.closure_contains_zero;
  j["unimodularAnglesIndependent"] = independence_json(e.unimodular_angles);
  return j;
}

// Every lambda^gamma with |gamma| <= N, with multiplicity.
std::vector<Complex> product_multiset(const std::vector<Complex>& eig, std::size_t n, std::size_t degree) {
  std::vector<Complex> out;
  for (std::size_t d = 0; d <= degree; ++d) {
    for (const MultiIndex& g : indices_of_degree(n, static_cast<unsigned>(d))) {
      Complex v = 1.0;
      for (std::size_t i = 0; i < n; ++i)
        for (unsigned k = 0; k < g[i]; ++k) v *= eig[i];
      out.push_back(v);
    }
  }
  return out;
}

void print_text(const Json& j, std::ostream& out) {
  const Json& b = j.at("bounded");
  out << "fockop " << j.at("tool").at("version").get<std::string>() << "\n";
  out << "dimension n        " << j.at("symbol").at("n").get<std::size_t>() << "\n";
  out << "||A||              " << b.at("normA").get<double>() << "\n";
  out << "bounded            " << (b.at("bounded").get<bool>() ? "yes" : "no") << "\n";
  if (!b.at("bounded").get<bool>()) {
    if (!b.at("witness").is_null()) out << "witness            " << b.at("witness").dump() << "\n";
    out << "truncated norm     " << j.at("truncation").at("truncatedNorm").get<double>() << " (N = "
        << j.at("truncation").at("degree").get<std::size_t>() << ")\n";
    return;
  }
  auto yn = [&](const char* key) { return j.at(key).get<bool>() ? "yes" : "no"; };
  out << "compact            " << yn("compact") << "\n";
  out << "norm               " << j.at("norm").get<double>() << "\n";
  out << "essential norm     " << j.at("essentialNorm").at("value").get<double>() << "\n";
  out << "normal             " << yn("normal") << "\n";
  out << "hyponormal         " << yn("hyponormal") << "\n";
  out << "essentially normal " << yn("essentiallyNormal") << "\n";
  out << "Schatten, all p    " << yn("schattenAllP") << "\n";
  out << "supercyclic        " << yn("supercyclic") << "\n";
  out << "cyclic             " << j.at("cyclic").at("verdict").get<std::string>() << " ("
      << j.at("cyclic").at("rationale").get<std::string>() << ")\n";
  const Json& t = j.at("truncation");
  out << "truncated norm     " << t.at("truncatedNorm").get<double>() << " (N = " << t.at("degree").get<std::size_t>()
      << ", gap " << t.at("gap").get<double>() << ")\n";
  const Json& hs = j.at("hilbertSchmidt");
  if (hs.at("finite").get<bool>()) out << "HS norm^2          " << hs.at("closedForm").get<double>() << "\n";
}

}  // namespace

Json analysis_document(const SymbolDocument& doc, const AnalyzeOptions& opt, bool& unbounded, bool& certified) {
  const AffineSymbol sym = doc.symbol();
  const std::size_t degree = opt.degree.value_or(default_degree(doc.n));
  Json j = Json::object();
  j["tool"] = tool_json();
  j["symbol"] = to_json(doc);
  j["options"] = Json{{"degree", degree}, {"tolerance", opt.tolerance}, {"spectrumDegree", opt.spectrum_degree}};

  CyclicOptions copt;
  copt.tol_unit = opt.tolerance;
  copt.exact_angles = doc.angles_exact;
  const ClassificationReport r = classify(sym, copt);
  j["bounded"] = bounded_json(r.bounded);

  const TruncatedOperator t = build_truncation(sym, degree, opt.cap);
  const double tn = truncated_norm(t);
  unbounded = !r.bounded.bounded;
  certified = true;
  if (unbounded) {
    j["truncation"] = Json{{"degree", degree}, {"dimension", t.basis.size()}, {"truncatedNorm", tn}};
    return j;
  }

  j["compact"] = r.compact;
  j["z0"] = vector_json(*r.z0);
  j["norm"] = *r.norm;
  j["essentialNorm"] = Json{{"value", r.essential_norm->value},
                            {"normExpression", r.essential_norm->norm_expression},
                            {"pairingExpression", r.essential_norm->pairing_expression},
                            {"pairingImag", r.essential_norm->pairing_imag}};
  j["normal"] = r.normal;
  j["hyponormal"] = r.hyponormal;
  j["essentiallyNormal"] = r.essentially_normal;
  j["schattenAllP"] = r.schatten_all_p;
  j["supercyclic"] = r.supercyclic;
  j["cyclic"] = cyclic_json(*r.cyclic);

  if (r.compact) {
    const HilbertSchmidtEstimate est = hilbert_schmidt_estimate(sym, 0, opt.tolerance);
    const double closed = hilbert_schmidt_closed_form(sym, opt.tolerance);
    Json hs = Json::object();
    hs["finite"] = std::isfinite(est.value);
    hs["closedForm"] = closed;
    if (std::isfinite(est.value)) {
      hs["truncationLimit"] = est.value;
      hs["relativeGap"] = std::abs(est.value - closed) / closed;
    }
    hs["degree"] = est.degree;
    j["hilbertSchmidt"] = std::move(hs);
  } else {
    j["hilbertSchmidt"] = Json{{"finite", false}};
  }

  const SpectrumEnumeration e = enumerate_spectrum(sym, opt.spectrum_degree, kDefaultDedupTolerance,
                                                   doc.angles_exact, opt.tolerance);
  j["spectrum"] = enumeration_json(e, opt.spectrum_degree);

  const double gap = *r.norm - tn;
  certified = tn <= *r.norm + 1e-10;
  j["truncation"] = Json{{"degree", degree},
                         {"dimension", t.basis.size()},
                         {"truncatedNorm", tn},
                         {"closedFormNorm", *r.norm},
                         {"gap", gap},
                         {"withinClosedForm", certified}};
  return j;
}

int cmd_analyze(const SymbolDocument& doc, const AnalyzeOptions& opt, std::ostream& out) {
  bool unbounded = false;
  bool certified = true;
  const Json j = analysis_document(doc, opt, unbounded, certified);
  if (opt.text) {
    print_text(j, out);
  } else {
    out << canonical_dump(j);
  }
  if (unbounded) return kExitUnbounded;
  return certified ? kExitOk : kExitFailure;
}

int cmd_spectrum(const SymbolDocument& doc, const SpectrumOptions& opt, std::ostream& out) {
  const AffineSymbol sym = doc.symbol();
  Json j = Json::object();
  j["tool"] = tool_json();
  j["symbol"] = to_json(doc);
  const BoundednessVerdict bv = check_bounded(sym, opt.tolerance);
  j["bounded"] = bounded_json(bv);
  if (!bv.bounded) {
    out << canonical_dump(j);
    return kExitUnbounded;
  }
  const SpectrumEnumeration e = enumerate_spectrum(sym, opt.max_degree, opt.dedup_tolerance, doc.angles_exact,
                                                   opt.tolerance);
  j["spectrum"] = enumeration_json(e, opt.max_degree);
  if (opt.verify_degree) {
    const TruncatedOperator t = build_truncation(sym, *opt.verify_degree, opt.cap);
    const double dist = multiset_distance(product_multiset(e.eigenvalues_of_a, doc.n, *opt.verify_degree),
                                          truncated_spectrum(t));
    j["verify"] = Json{{"degree", *opt.verify_degree}, {"dimension", t.basis.size()}, {"multisetDistance", dist}};
  }
  out << canonical_dump(j);
  return kExitOk;
}

int cmd_truncate(const SymbolDocument& doc, const TruncateOptions& opt, std::ostream& out) {
  if (opt.format != "csv" && opt.format != "bin") throw Error(ErrorCode::ParseError, "--format must be csv or bin");
  const AffineSymbol sym = doc.symbol();
  const std::size_t degree = opt.degree.value_or(default_degree(doc.n));
  const TruncatedOperator t = build_truncation(sym, degree, opt.cap);
  const RealVector sv = truncated_singular_values(t);

  Json j = Json::object();
  j["tool"] = tool_json();
  j["degree"] = degree;
  j["dimension"] = t.basis.size();
  j["truncatedNorm"] = sv(0);
  Json top = Json::array();
  for (Eigen::Index k = 0; k < std::min<Eigen::Index>(5, sv.size()); ++k) top.push_back(sv(k));
  j["topSingularValues"] = std::move(top);
  if (opt.exact) {
    const ExactTruncation et = build_exact_truncation(doc.exact_symbol(), degree, opt.cap);
    j["exact"] = Json{{"maxEntryGap", (et.to_matrix() - t.matrix).cwiseAbs().maxCoeff()}};
  } else {
    j["exact"] = nullptr;
  }
  if (opt.dump_path) {
    std::ofstream f(*opt.dump_path, std::ios::binary);
    if (!f) throw Error(ErrorCode::IoError, "cannot open " + *opt.dump_path + " for writing");
    if (opt.format == "csv") {
      write_matrix_csv(t.matrix, f);
    } else {
      write_matrix_binary(t.matrix, f);
    }
    f.close();
    if (!f) throw Error(ErrorCode::IoError, "failed writing " + *opt.dump_path);
    j["dump"] = Json{{"path", *opt.dump_path}, {"format", opt.format}};
  } else {
    j["dump"] = nullptr;
  }
  out << canonical_dump(j);
  return kExitOk;
}

int cmd_cyclic(const SymbolDocument& doc, const CyclicOptionsCli& opt, std::ostream& out) {
  const AffineSymbol sym = doc.symbol();
  Json j = Json::object();
  j["tool"] = tool_json();
  j["symbol"] = to_json(doc);
  const BoundednessVerdict bv = check_bounded(sym, opt.tolerance);
  j["bounded"] = bounded_json(bv);
  if (!bv.bounded) {
    out << canonical_dump(j);
    return kExitUnbounded;
  }
  CyclicOptions copt;
  copt.max_coeff = opt.max_coeff;
  copt.tol_unit = opt.tolerance;
  copt.exact_angles = doc.angles_exact;
  j["cyclic"] = cyclic_json(check_cyclic(sym, copt));
  j["supercyclic"] = check_supercyclic(sym, opt.tolerance);
  out << canonical_dump(j);
  return kExitOk;
}

}  // namespace fockop::cli
