#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "g2fp/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Fixed-point data of circle actions with n+2 isolated fixed points"};
  app.require_subcommand(1);

  std::string b_csv;
  std::string out_path;
  auto* gen = app.add_subcommand("generate", "write the standard data for rotation speeds b");
  gen->add_option("--b", b_csv, "comma-separated distinct integers, e.g. 2,1")->required();
  gen->add_option("--out", out_path, "output file (default: stdout)");

  std::string verify_in;
  g2fp::VerifyOptions verify_opts;
  bool verify_json = false;
  auto* ver = app.add_subcommand("verify", "check fixed-point data and report its invariants");
  ver->add_option("input", verify_in, "data file")->required();
  ver->add_flag("--chern", verify_opts.chern, "expand Chern classes in the basis");
  ver->add_flag("--basis", verify_opts.basis, "print the basis restrictions");
  ver->add_flag("--pairing", verify_opts.pairing, "compute the intersection pairing");
  ver->add_flag("--json", verify_json, "machine-readable report");

  std::string classify_in;
  std::string bound;
  bool classify_json = false;
  auto* cls = app.add_subcommand("classify", "enumerate weight data for a moment profile");
  cls->add_option("input", classify_in, "profile file")->required();
  cls->add_option("--bound", bound, "largest weight magnitude (default: moment spread)");
  cls->add_flag("--json", classify_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return g2fp::kExitUsage;
  }

  if (gen->parsed()) {
    return g2fp::cmd_generate(b_csv, out_path.empty() ? std::nullopt : std::optional(out_path),
                              std::cout, std::cerr);
  }
  if (ver->parsed()) {
    return g2fp::cmd_verify(verify_in, verify_opts, verify_json, std::cout, std::cerr);
  }
  return g2fp::cmd_classify(classify_in, bound.empty() ? std::nullopt : std::optional(bound),
                            classify_json, std::cout, std::cerr);
}
