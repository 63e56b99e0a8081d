#pragma once

#include "lagblow/blowup/blowup.hpp"
#include "lagblow/model/homology_result.hpp"
#include "lagblow/pearl/pearl.hpp"
#include "lagblow/workbench/workspace.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lagblow::workbench {

enum class Command { Check, Qh, Blowup, Hf, HfBlowup };

std::string_view to_string(Command command);
/// Throws Error(ParseError) for an unknown command name.
Command parse_command(std::string_view name);

struct LagrangianSection {
  std::string name;
  blowup::AdmissibilityVerdict admissibility;
  int min_maslov = 0;           // N_L, 0 when no class has nonzero index
  int min_maslov_blowup = 0;
  int ring_min_maslov = 0;      // grading of the complex that was computed
  std::optional<HomologyResult> homology;
  std::optional<bool> differential_zero;
  std::string differential;     // rendered matrix, shown with --verbose
  std::vector<pearl::BlowupCorrection> corrections;
  bool refused = false;
};

struct FloerSection {
  std::string name;
  std::size_t generators = 0;
  std::size_t differential_rank = 0;
  std::size_t rank = 0;
  std::string differential;
  bool refused = false;
};

struct Report {
  Command command = Command::Check;
  std::string source;
  model::ManifoldData manifold;
  Rational rho_sq{0};
  std::optional<blowup::AdmissibilityVerdict> collection;  // `check` only
  std::vector<LagrangianSection> lagrangians;
  std::vector<FloerSection> floer;
  std::vector<std::string> diagnostics;

  /// True when some requested computation was refused (inadmissible input).
  bool refused() const;
};

/// Runs one pipeline over the workspace. Inadmissible inputs are reported as
/// refusals; other library errors propagate with the command name prefixed.
Report run_report(const Workspace& workspace, Command command, std::string source);

std::string render_text(const Report& report, bool verbose);
std::string render_json(const Report& report, bool verbose);

}  // namespace lagblow::workbench
