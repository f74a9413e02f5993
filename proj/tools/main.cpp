#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "fockop/error.hpp"

int main(int argc, char** argv) {
  using namespace fockop::cli;
  CLI::App app{"Composition operators z -> Az + B on the Fock space F^2(C^n)"};
  app.require_subcommand(1);
  std::string input;

  AnalyzeOptions analyze;
  std::size_t analyze_degree = 0;
  bool json_flag = false;
  auto* a = app.add_subcommand("analyze", "classify the operator and certify closed forms against a truncation");
  a->add_option("input", input, "symbol document, or - for stdin")->required();
  a->add_option("--degree,-N", analyze_degree, "truncation degree (default depends on n)");
  a->add_option("--tolerance", analyze.tolerance, "band around 1 for singular values and moduli");
  a->add_option("--spectrum-degree", analyze.spectrum_degree, "max |gamma| for the listed eigenvalue products");
  auto* text_flag = a->add_flag("--text", analyze.text, "human-readable summary");
  a->add_flag("--json", json_flag, "JSON report (default)")->excludes(text_flag);

  SpectrumOptions spectrum;
  std::size_t verify_degree = 0;
  auto* s = app.add_subcommand("spectrum", "enumerate eigenvalue products");
  s->add_option("input", input, "symbol document, or - for stdin")->required();
  s->add_option("--max-degree", spectrum.max_degree, "max |gamma|");
  s->add_option("--verify", verify_degree, "compare with the spectrum of the degree-N truncation");
  s->add_option("--tolerance", spectrum.tolerance, "band around 1 for moduli");

  TruncateOptions truncate;
  std::size_t truncate_degree = 0;
  std::string dump;
  auto* t = app.add_subcommand("truncate", "build the truncated matrix and optionally dump it");
  t->add_option("input", input, "symbol document, or - for stdin")->required();
  t->add_option("--degree,-N", truncate_degree, "truncation degree (default depends on n)");
  t->add_option("--dump", dump, "output path for the matrix");
  t->add_option("--format", truncate.format, "csv or bin")->check(CLI::IsMember({"csv", "bin"}));
  t->add_flag("--exact", truncate.exact, "also build the rational-mode matrix and report the largest entry gap");

  CyclicOptionsCli cyclic;
  auto* c = app.add_subcommand("cyclic", "cyclicity and supercyclicity verdicts");
  c->add_option("input", input, "symbol document, or - for stdin")->required();
  c->add_option("--max-coeff", cyclic.max_coeff, "coefficient bound for the integer relation search");
  c->add_option("--tolerance", cyclic.tolerance, "band around 1 for moduli");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitFailure;
  }

  try {
    const std::size_t cap = dimension_cap_from_env();
    const SymbolDocument doc = read_symbol_document(input);
    if (a->parsed()) {
      if (a->count("--degree") > 0) analyze.degree = analyze_degree;
      analyze.cap = cap;
      return cmd_analyze(doc, analyze, std::cout);
    }
    if (s->parsed()) {
      if (s->count("--verify") > 0) spectrum.verify_degree = verify_degree;
      spectrum.cap = cap;
      return cmd_spectrum(doc, spectrum, std::cout);
    }
    if (t->parsed()) {
      if (t->count("--degree") > 0) truncate.degree = truncate_degree;
      if (t->count("--dump") > 0) truncate.dump_path = dump;
      truncate.cap = cap;
      return cmd_truncate(doc, truncate, std::cout);
    }
    return cmd_cyclic(doc, cyclic, std::cout);
  } catch (const fockop::Error& e) {
    std::cerr << "fockop: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "fockop: " << e.what() << "\n";
    return kExitFailure;
  }
}
