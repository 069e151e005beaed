#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

std::string read_input(const std::string& arg) {
  if (arg.empty()) return {};
  if (arg == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  std::ifstream file(arg);
  if (!file) throw std::invalid_argument("cannot open input file '" + arg + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace blades::cli;

  CLI::App app{"Weighted blade arrangements on hypersimplices"};
  app.require_subcommand(1);
  Options options;
  std::string input;
  std::string face;
  std::string support;
  options.goldens = BLADES_GOLDENS_PATH;

  const auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "JSON file, inline JSON, or - for stdin");
  };
  const auto with_frame = [&](CLI::App* sub) {
    sub->add_option("--frame,-n", options.frame, "ground set size n");
    sub->add_option("--k", options.k, "rank k");
  };

  auto* boundary = app.add_subcommand("boundary", "Boundary d, d_j or d_L of an arrangement");
  with_input(boundary);
  with_frame(boundary);
  boundary->add_option("--face", face, "apply d_L for this face label");
  boundary->add_option("--j", options.j, "apply the single map d_j");

  auto* check = app.add_subcommand("check", "Membership in X, Y or Z (exit 1 with a witness when not a member)");
  with_input(check);
  with_frame(check);
  check->add_flag_callback("--x", [&] { options.test = "x"; }, "test weak separation of face supports");
  check->add_flag_callback("--y", [&] { options.test = "y"; }, "test nonnegative face weights");
  check->add_flag_callback("--z", [&] { options.test = "z"; }, "test both (default)");
  check->add_flag("--plucker", options.plucker, "input is a Plucker vector: check the positive relations too");

  auto* to_blades = app.add_subcommand("to-blades", "Blade arrangement of a Plucker vector");
  with_input(to_blades);
  with_frame(to_blades);

  auto* faces = app.add_subcommand("faces", "Face weights on one face, or the per-face split report");
  with_input(faces);
  with_frame(faces);
  faces->add_option("--face", face, "face label L with |L| = k-2");

  auto* eta = app.add_subcommand("eta", "Planar basis values of a kinematic vector");
  with_input(eta);
  with_frame(eta);
  eta->add_option("--J", support, "evaluate a single eta_J");
  eta->add_flag("--expand", options.expand, "expand the input functional in the planar basis");

  auto* tau = app.add_subcommand("tau", "Building block tau_{e_J,e_I}; without I_blocks, list all of them");
  with_input(tau);
  with_frame(tau);
  tau->add_flag("--closure", options.closure, "check closure under the boundary maps");

  auto* enumerate = app.add_subcommand("enumerate", "Decorated ordered set partitions of type (k,n)");
  with_frame(enumerate);
  enumerate->add_flag("--anchored", options.anchored, "only those with 1 in the first block");
  enumerate->add_flag("--multisplits", options.multisplits, "nontrivial classes modulo block rotation");
  enumerate->add_flag("--count", options.count_only, "print only the summary");

  auto* catalog = app.add_subcommand("catalog", "Rays of Z_{3,n} up to dihedral relabeling");
  catalog->add_option("--n,--frame", options.frame, "ground set size, 6..9")->required();

  auto* replay = app.add_subcommand("replay-paper-examples", "Re-run the stored worked examples against goldens");
  replay->add_option("--goldens", options.goldens, "goldens file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  Outcome outcome;
  try {
    if (!face.empty()) options.face = parse_subset_flag(face);
    if (!support.empty()) options.J = parse_subset_flag(support);
    outcome = run(app.get_subcommands().front()->get_name(), read_input(input), options);
  } catch (const std::exception& e) {
    outcome = Outcome{kInputError, {}, e.what()};
  }
  std::cout << outcome.out << std::flush;
  if (!outcome.err.empty()) std::cerr << "error: " << outcome.err << "\n";
  return outcome.status;
}
