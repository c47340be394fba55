#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "massey/errors.hpp"

using namespace massey;
using namespace massey::cli;

namespace {

int fail(bool machine, int code, const std::string& kind, const std::string& message) {
  if (machine) {
    Json j;
    j["error"] = kind;
    j["message"] = message;
    j["exit_code"] = code;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "massey: " << message << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Obstruction tensors and formality of rational DGA models"};
  app.require_subcommand(1);
  app.fallthrough();
  bool machine = false;
  app.add_flag("--machine", machine, "Structured JSON output");

  std::string file, file_y, iso, classes;
  std::optional<int> through;
  std::optional<std::string> times, out;
  int rank = 0, h3 = 0, conn = 0;
  bool vanish = false, canonical = false;

  auto* cohomology = app.add_subcommand("cohomology", "Betti numbers, class labels and space dimensions");
  cohomology->add_option("file", file, "Model file")->required();
  cohomology->add_option("--through", through, "Degree bound for the tensor domains");

  auto* repdim = app.add_subcommand("repdim", "Dimension of R(V) against the formula and the Weyl module");
  repdim->add_option("--rank", rank, "dim V")->required();

  auto* bianchi = app.add_subcommand("bianchi", "Bianchi-Massey tensor");
  bianchi->add_option("file", file, "Model file")->required();

  auto* triple = app.add_subcommand("triple", "Uniform triple Massey product");
  triple->add_option("file", file, "Model file")->required();
  triple->add_flag("--vanish", vanish, "Use a cochain choice with vanishing uniform triple product");

  auto* pent = app.add_subcommand("pentagonal", "Pentagonal Massey tensor");
  pent->add_option("file", file, "Model file")->required();
  pent->add_flag("--canonical", canonical, "Use the canonical cochain choice even if a vanishing one exists");
  pent->add_option("--through", through, "Degree bound for the domain");

  auto* m4 = app.add_subcommand("massey4", "Fourfold Massey product of cohomology classes");
  m4->add_option("file", file, "Model file")->required();
  m4->add_option("--classes", classes, "Four classes a,b,c,d")->required();
  m4->add_option("--times", times, "Multiply the result by this class");

  auto* formality = app.add_subcommand("formality", "Formality verdict for a Poincaré duality model");
  formality->add_option("file", file, "Model file")->required();
  formality->add_option("--conn", conn, "n such that the model is (n-1)-connected")->required();

  auto* p3 = app.add_subcommand("p3", "Export the model of the third Postnikov stage of a wedge of 2-spheres");
  p3->add_option("--rank", rank, "Number of spheres")->required();
  p3->add_option("--h3", h3, "Extra closed degree-3 generators");
  p3->add_option("--out", out, "Output file (default stdout)");

  auto* disc = app.add_subcommand("discrepancy", "Pentagonal discrepancy of a cohomology isomorphism");
  disc->add_option("fileX", file, "Source model")->required();
  disc->add_option("fileY", file_y, "Target model")->required();
  disc->add_option("--iso", iso, "Map file with lines 'h2_0 -> expr'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(machine, InputError, "usage", e.what());
  }

  try {
    Report r;
    if (*cohomology) r = cohomology_command(file, through);
    else if (*repdim) r = repdim_command(rank);
    else if (*bianchi) r = bianchi_command(file);
    else if (*triple) r = triple_command(file, vanish);
    else if (*pent) r = pentagonal_command(file, canonical, through);
    else if (*m4) r = massey4_command(file, classes, times);
    else if (*formality) r = formality_command(file, conn);
    else if (*p3) r = p3_command(rank, h3, out);
    else r = discrepancy_command(file, file_y, iso);
    if (machine) r.data["exit_code"] = r.exit_code;
    std::cout << r.render(machine);
    return r.exit_code;
  } catch (const NotDefined& e) {
    return fail(machine, Undefined, "NotDefined", e.what());
  } catch (const NotOrdinary& e) {
    return fail(machine, Undefined, "NotOrdinary", e.what());
  } catch (const NoIntertwiningChoices& e) {
    return fail(machine, Undefined, "NoIntertwiningChoices", e.what());
  } catch (const MissingOrientation& e) {
    return fail(machine, Undefined, "MissingOrientation", e.what());
  } catch (const SyntaxError& e) {
    return fail(machine, InputError, "SyntaxError", e.what());
  } catch (const DegreeMismatch& e) {
    return fail(machine, InputError, "DegreeMismatch", e.what());
  } catch (const NotASquareZeroDifferential& e) {
    return fail(machine, InputError, "NotASquareZeroDifferential", e.what());
  } catch (const NotAnIsomorphism& e) {
    return fail(machine, InputError, "NotAnIsomorphism", e.what());
  } catch (const DegreeCapExceeded& e) {
    return fail(machine, InputError, "DegreeCapExceeded", e.what());
  } catch (const MasseyError& e) {
    return fail(machine, InputError, "Error", e.what());
  } catch (const std::exception& e) {
    return fail(machine, InputError, "InputError", e.what());
  }
}
