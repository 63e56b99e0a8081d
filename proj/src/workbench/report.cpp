#include "lagblow/workbench/report.hpp"

#include "lagblow/error.hpp"
#include "lagblow/floer/floer.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lagblow::workbench {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::pair<Command, std::string_view> kCommands[] = {
    {Command::Check, "check"},
    {Command::Qh, "qh"},
    {Command::Blowup, "blowup"},
    {Command::Hf, "hf"},
    {Command::HfBlowup, "hf-blowup"},
};

int base_min_maslov(const model::LagrangianData& l) {
  int g = 0;
  for (const auto& c : l.classes) g = std::gcd(g, std::abs(c.maslov));
  return g;
}

LagrangianSection section_for(const Workspace& w, const model::LagrangianData& l) {
  LagrangianSection s;
  s.name = l.name;
  s.admissibility = blowup::check_admissible(w.manifold, std::span(&l, 1));
  s.min_maslov = base_min_maslov(l);
  s.min_maslov_blowup = blowup::blowup_min_maslov(l, w.blowup());
  return s;
}

std::vector<int> reference_for(const model::LagrangianData& l) {
  return l.betti_mod2 ? *l.betti_mod2 : pearl::default_reference_betti(l);
}

void fill_homology(LagrangianSection& s, const pearl::ChainComplex& c,
                   const model::LagrangianData& l) {
  s.ring_min_maslov = c.ring_min_maslov;
  s.differential_zero = c.differential.is_zero();
  s.differential = c.differential.to_string();
  s.homology = pearl::quantum_homology(c, reference_for(l));
}

FloerSection floer_section(const floer::FloerComplex& c, const std::string& name) {
  const auto h = floer::floer_homology(c);
  FloerSection s;
  s.name = name;
  s.generators = h.generators;
  s.differential_rank = h.differential_rank;
  s.rank = h.rank;
  s.differential = c.differential.to_string();
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (const auto& i : items) out += (out.empty() ? "" : sep) + i;
  return out;
}

std::string torsion_text(const std::vector<algebra::NovikovScalar>& torsion) {
  if (torsion.empty()) return "-";
  std::vector<std::string> parts;
  for (const auto& f : torsion) parts.push_back("Lambda/(" + f.to_string() + ")");
  return join(parts, " + ");
}

ordered_json verdict_json(const blowup::AdmissibilityVerdict& v) {
  ordered_json j;
  j["admissible"] = v.admissible;
  j["monotone_ok"] = v.monotone_ok;
  j["same_lambda_ok"] = v.same_lambda_ok;
  j["width_asserted"] = v.width_asserted;
  j["min_maslov_blowup"] = v.min_maslov_blowup;
  j["diagnostics"] = v.diagnostics;
  return j;
}

void verdict_text(std::ostringstream& out, const blowup::AdmissibilityVerdict& v,
                  const char* indent) {
  out << indent << "admissible: " << yes_no(v.admissible) << " (monotone " << yes_no(v.monotone_ok)
      << ", same lambda " << yes_no(v.same_lambda_ok) << ", width asserted "
      << yes_no(v.width_asserted) << ", blow-up N = " << v.min_maslov_blowup << ")\n";
  for (const auto& d : v.diagnostics) out << indent << "  ! " << d << "\n";
}

}  // namespace

std::string_view to_string(Command command) {
  for (const auto& [c, name] : kCommands) {
    if (c == command) return name;
  }
  return "check";
}

Command parse_command(std::string_view name) {
  for (const auto& [c, text] : kCommands) {
    if (text == name) return c;
  }
  throw Error(ErrorKind::ParseError, "unknown command \"" + std::string(name) + "\"",
              {"commands: check, qh, blowup, hf, hf-blowup"});
}

bool Report::refused() const {
  return std::any_of(lagrangians.begin(), lagrangians.end(),
                     [](const LagrangianSection& s) { return s.refused; }) ||
         std::any_of(floer.begin(), floer.end(), [](const FloerSection& s) { return s.refused; });
}

Report run_report(const Workspace& w, Command command, std::string source) {
  Report r;
  r.command = command;
  r.source = std::move(source);
  r.manifold = w.manifold;
  r.rho_sq = blowup::monotone_weight(w.manifold);
  const auto params = w.blowup();

  try {
    switch (command) {
      case Command::Check: {
        r.collection = blowup::check_admissible(w.manifold, w.lagrangians);
        for (const auto& l : w.lagrangians) r.lagrangians.push_back(section_for(w, l));
        break;
      }
      case Command::Qh: {
        for (const auto& l : w.lagrangians) {
          auto s = section_for(w, l);
          fill_homology(s, pearl::assemble_pearl_complex(w.manifold, l), l);
          r.lagrangians.push_back(std::move(s));
        }
        break;
      }
      case Command::Blowup: {
        for (const auto& l : w.lagrangians) {
          auto s = section_for(w, l);
          if (!s.admissibility.admissible) {
            s.refused = true;
            r.diagnostics.push_back(l.name + ": not admissible, blow-up homology not computed");
          } else {
            auto result = pearl::blowup_pearl_complex(w.manifold, l, params);
            fill_homology(s, result.complex, l);
            s.corrections = std::move(result.corrections);
          }
          r.lagrangians.push_back(std::move(s));
        }
        break;
      }
      case Command::Hf:
      case Command::HfBlowup: {
        if (w.floer_pairs.empty()) r.diagnostics.push_back("workspace has no floer pairs");
        for (const auto& pair : w.floer_pairs) {
          if (command == Command::Hf) {
            r.floer.push_back(floer_section(floer::assemble_floer_complex(pair), pair.name));
            continue;
          }
          const auto verdict = blowup::check_admissible_pair(w.manifold, pair);
          if (!verdict.admissible) {
            FloerSection s;
            s.name = pair.name;
            s.refused = true;
            r.floer.push_back(s);
            for (const auto& d : verdict.diagnostics) r.diagnostics.push_back(pair.name + ": " + d);
            continue;
          }
          r.floer.push_back(
              floer_section(floer::blowup_floer_complex(w.manifold, pair, params), pair.name));
        }
        break;
      }
    }
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(to_string(command)) + ": " + e.what(), e.diagnostics());
  }
  return r;
}

std::string render_text(const Report& r, bool verbose) {
  std::ostringstream out;
  out << "command: " << to_string(r.command) << "\n";
  out << "source: " << r.source << "\n";
  out << "manifold: n = " << r.manifold.half_dim << ", lambda_pi = " << lagblow::to_string(r.manifold.lambda_pi)
      << ", rho^2 = " << lagblow::to_string(r.rho_sq) << "\n";
  if (r.collection) {
    out << "collection:\n";
    verdict_text(out, *r.collection, "  ");
  }
  for (const auto& s : r.lagrangians) {
    out << "\nlagrangian " << s.name << "\n";
    out << "  N = " << s.min_maslov << ", blow-up N = " << s.min_maslov_blowup << "\n";
    verdict_text(out, s.admissibility, "  ");
    if (s.refused) {
      out << "  homology: refused (inadmissible)\n";
      continue;
    }
    if (!s.homology) continue;
    if (s.ring_min_maslov == 0) {
      out << "  ring: Z2[t, 1/t], ungraded (no class of nonzero index)\n";
    } else {
      out << "  ring: Z2[t, 1/t], deg t = -" << s.ring_min_maslov << "\n";
    }
    out << "  differential: " << (*s.differential_zero ? "identically zero" : "nonzero") << "\n";
    if (verbose) out << "    " << s.differential << "\n";
    out << "  homology:\n    degree  free_rank  torsion\n";
    for (const auto& d : s.homology->degrees) {
      out << "    " << d.degree << "       " << d.free_rank << "          "
          << torsion_text(d.torsion) << "\n";
    }
    out << "  reference betti:";
    for (int b : s.homology->reference_betti) out << " " << b;
    out << "\n  verdict: " << to_string(s.homology->verdict) << "\n";
    if (r.command == Command::Blowup) {
      out << "  corrections:" << (s.corrections.empty() ? " none" : "") << "\n";
      for (const auto& c : s.corrections) {
        out << "    " << c.from << " -> " << c.to << "  k = " << c.k << " ("
            << (c.parity() == 0 ? "even" : "odd") << ")  classes: " << join(c.classes, ", ")
            << "\n";
      }
    }
  }
  for (const auto& f : r.floer) {
    out << "\nfloer pair " << f.name << "\n";
    if (f.refused) {
      out << "  homology: refused (inadmissible)\n";
      continue;
    }
    out << "  generators: " << f.generators << ", rank(d) = " << f.differential_rank
        << ", HF rank = " << f.rank << "\n";
    if (verbose) out << "    " << f.differential << "\n";
  }
  if (!r.diagnostics.empty()) {
    out << "\ndiagnostics:\n";
    for (const auto& d : r.diagnostics) out << "  " << d << "\n";
  }
  return out.str();
}

std::string render_json(const Report& r, bool verbose) {
  ordered_json root;
  root["command"] = std::string(to_string(r.command));
  root["source"] = r.source;
  root["manifold"] = {{"n", r.manifold.half_dim},
                      {"lambda_pi", lagblow::to_string(r.manifold.lambda_pi)},
                      {"width_asserted", r.manifold.width_asserted},
                      {"rho_sq", lagblow::to_string(r.rho_sq)}};
  if (r.collection) root["collection"] = verdict_json(*r.collection);
  root["lagrangians"] = ordered_json::array();
  for (const auto& s : r.lagrangians) {
    ordered_json j;
    j["name"] = s.name;
    j["min_maslov"] = s.min_maslov;
    j["min_maslov_blowup"] = s.min_maslov_blowup;
    j["admissibility"] = verdict_json(s.admissibility);
    j["refused"] = s.refused;
    if (s.homology) {
      j["ring_min_maslov"] = s.ring_min_maslov;
      j["differential_zero"] = *s.differential_zero;
      if (verbose) j["differential"] = s.differential;
      ordered_json rows = ordered_json::array();
      for (const auto& d : s.homology->degrees) {
        std::vector<std::string> torsion;
        for (const auto& f : d.torsion) torsion.push_back(f.to_string());
        rows.push_back({{"degree", d.degree}, {"free_rank", d.free_rank}, {"torsion", torsion}});
      }
      j["homology"] = rows;
      j["reference_betti"] = s.homology->reference_betti;
      j["verdict"] = std::string(to_string(s.homology->verdict));
    }
    if (r.command == Command::Blowup && !s.refused) {
      ordered_json corr = ordered_json::array();
      for (const auto& c : s.corrections) {
        corr.push_back({{"from", c.from}, {"to", c.to}, {"classes", c.classes}, {"k", c.k},
                        {"parity", c.parity()}});
      }
      j["corrections"] = corr;
    }
    root["lagrangians"].push_back(std::move(j));
  }
  root["floer"] = ordered_json::array();
  for (const auto& f : r.floer) {
    ordered_json j;
    j["name"] = f.name;
    j["refused"] = f.refused;
    if (!f.refused) {
      j["generators"] = f.generators;
      j["differential_rank"] = f.differential_rank;
      j["rank"] = f.rank;
      if (verbose) j["differential"] = f.differential;
    }
    root["floer"].push_back(std::move(j));
  }
  root["diagnostics"] = r.diagnostics;
  return root.dump(2) + "\n";
}

}  // namespace lagblow::workbench
