#include "spinops/classification.hpp"
#include "spinops/commutator.hpp"
#include "spinops/conversion.hpp"
#include "spinops/frames.hpp"
#include "spinops/identities.hpp"
#include "spinops/io.hpp"
#include "spinops/rng.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace spinops;

constexpr int kExitPass = 0;
constexpr int kExitVerdictNegative = 1;
constexpr int kExitInputError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw ParseError("ParseError: cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

FrameContext load_context(const std::string& frame) {
  if (frame == "canonical") return canonical_context();
  return apply_frame_change(parse_frame_change(read_input(frame)));
}

int cmd_verify(const std::string& frame, std::uint64_t trials, std::uint64_t seed, double tol) {
  std::vector<FrameContext> contexts;
  contexts.push_back(load_context(frame));
  SplitMix64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t)
    contexts.push_back(apply_frame_change(random_frame_change(rng)));

  // One aggregated line per identity: max residual over all trial contexts.
  std::map<std::string, double> worst;
  for (const auto& ctx : contexts)
    for (const auto& report : run_all(ctx, tol))
      worst[report.name] = std::max(worst[report.name], report.residual);

  bool all_pass = true;
  for (const auto& report : run_all(contexts.front(), tol)) {
    const double residual = worst[report.name];
    const bool pass = residual <= tol;
    all_pass = all_pass && pass;
    std::cout << "identity=" << report.name << " contexts=" << contexts.size()
              << " max_residual=" << residual << " tol=" << tol
              << " status=" << (pass ? "pass" : "fail") << "\n";
  }
  return all_pass ? kExitPass : kExitVerdictNegative;
}

int cmd_decompose(const std::string& input, const std::string& frame) {
  const FrameContext ctx = load_context(frame);
  const Matrix4c f = parse_operator(read_input(input));
  std::cout << serialize_decomposition(decompose(f, ctx));
  return kExitPass;
}

int cmd_reconstruct(const std::string& input, const std::string& frame) {
  const FrameContext ctx = load_context(frame);
  const OperatorDecomposition dec = parse_decomposition(read_input(input));
  std::cout << serialize_operator(reconstruct(dec, ctx));
  return kExitPass;
}

int cmd_classify(const std::string& input, const std::string& frame, double tol) {
  const FrameContext ctx = load_context(frame);
  const Matrix4c f = parse_operator(read_input(input));

  const SymmetryVerdict sym = classify_symmetry(f, ctx, tol);
  const HermiticityVerdict herm = classify_hermiticity(f, ctx, tol);
  const OperatorDecomposition dec = decompose(f, ctx);
  const bool agree = symmetry_criterion(dec, tol) == sym.classification &&
                     hermiticity_criterion(dec, tol) == herm.classification;

  nlohmann::json doc;
  doc["kind"] = "classification";
  doc["symmetry"] = {{"classification", to_string(sym.classification)},
                     {"symmetric_residual", sym.symmetric_residual},
                     {"skew_residual", sym.skew_residual}};
  doc["hermiticity"] = {{"classification", to_string(herm.classification)},
                        {"hermitian_residual", herm.hermitian_residual},
                        {"antihermitian_residual", herm.antihermitian_residual}};
  doc["criteria_agree"] = agree;
  doc["tol"] = tol;
  std::cout << doc.dump(2) << "\n";

  if (!agree) {
    std::cerr << "matrix-level and coefficient-level verdicts disagree\n";
    return kExitVerdictNegative;
  }
  return kExitPass;
}

int cmd_solve(const std::string& input, const std::string& frame, double tol) {
  const FrameContext ctx = load_context(frame);
  const CommutatorRHS rhs = make_commutator_rhs(parse_rhs(read_input(input)), ctx);
  const SolveResult result = solve(rhs, ctx, tol);

  if (result.f0) {
    std::cout << serialize_operator(*result.f0, SolveResult::family_note);
    return kExitPass;
  }

  nlohmann::json doc;
  doc["kind"] = "solvability-report";
  doc["solvable"] = false;
  nlohmann::json residuals;
  for (const auto& [name, value] : result.report.named_residuals()) residuals[name] = value;
  doc["residuals"] = residuals;
  doc["tol"] = tol;
  std::cout << doc.dump(2) << "\n";
  return kExitVerdictNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operator fields on the Dirac spinor fiber: identity verification, "
               "operator/tensor conversion, symmetry and hermiticity classification, "
               "and the commutator-equation solver."};
  app.require_subcommand(1);

  std::string frame = "canonical";
  std::string input = "-";
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  double tol = 1e-9;

  auto add_frame = [&](CLI::App* cmd) {
    cmd->add_option("--frame", frame, "Frame-change file or \"canonical\"")
        ->capture_default_str();
  };
  auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol, "Residual tolerance")->capture_default_str();
  };
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "Input file (\"-\" for stdin)")->capture_default_str();
  };

  CLI::App* verify = app.add_subcommand("verify", "Run every identity check");
  add_frame(verify);
  add_tol(verify);
  verify->add_option("--trials", trials, "Number of random frame trials")
      ->capture_default_str();
  verify->add_option("--seed", seed, "PRNG seed")->capture_default_str();

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "Operator file -> decomposition");
  add_input(decompose_cmd);
  add_frame(decompose_cmd);

  CLI::App* reconstruct_cmd =
      app.add_subcommand("reconstruct", "Decomposition file -> operator");
  add_input(reconstruct_cmd);
  add_frame(reconstruct_cmd);

  CLI::App* classify = app.add_subcommand("classify", "Symmetry and hermiticity verdicts");
  add_input(classify);
  add_frame(classify);
  add_tol(classify);

  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve [F, gamma_m] = V_m");
  add_input(solve_cmd);
  add_frame(solve_cmd);
  add_tol(solve_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(frame, trials, seed, tol);
    if (decompose_cmd->parsed()) return cmd_decompose(input, frame);
    if (reconstruct_cmd->parsed()) return cmd_reconstruct(input, frame);
    if (classify->parsed()) return cmd_classify(input, frame, tol);
    if (solve_cmd->parsed()) return cmd_solve(input, frame, tol);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInputError;
  } catch (const SingularFrameChange& e) {
    std::cerr << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitVerdictNegative;
  }
  return kExitInputError;
}
