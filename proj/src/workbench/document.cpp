#include "lagblow/error.hpp"
#include "lagblow/workbench/workspace.hpp"

#include <nlohmann/json.hpp>

#include <set>

namespace lagblow::workbench {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

// Schema reader that records every problem with its JSON path instead of
// stopping at the first.
class Reader {
public:
  std::vector<std::string> errors;

  const json* member(const json& obj, const std::string& path, const char* key, bool required) {
    if (!obj.is_object()) {
      errors.push_back(path + ": expected an object");
      return nullptr;
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) errors.push_back(path + "/" + key + ": missing");
      return nullptr;
    }
    return &*it;
  }

  std::string text(const json& obj, const std::string& path, const char* key) {
    const json* v = member(obj, path, key, true);
    if (!v) return {};
    if (!v->is_string()) {
      errors.push_back(path + "/" + key + ": expected a string");
      return {};
    }
    return v->get<std::string>();
  }

  std::int64_t integer(const json& obj, const std::string& path, const char* key,
                       std::optional<std::int64_t> fallback = std::nullopt) {
    const json* v = member(obj, path, key, !fallback);
    if (!v) return fallback.value_or(0);
    if (!v->is_number_integer()) {
      errors.push_back(path + "/" + key + ": expected an integer");
      return 0;
    }
    return v->get<std::int64_t>();
  }

  bool boolean(const json& obj, const std::string& path, const char* key,
               std::optional<bool> fallback = std::nullopt) {
    const json* v = member(obj, path, key, !fallback);
    if (!v) return fallback.value_or(false);
    if (!v->is_boolean()) {
      errors.push_back(path + "/" + key + ": expected true or false");
      return false;
    }
    return v->get<bool>();
  }

  Rational rational(const json& obj, const std::string& path, const char* key) {
    const json* v = member(obj, path, key, true);
    if (!v) return Rational{0};
    if (v->is_number_integer()) return Rational{v->get<std::int64_t>()};
    if (!v->is_string()) {
      errors.push_back(path + "/" + key + ": expected a \"p/q\" string");
      return Rational{0};
    }
    try {
      return parse_rational(v->get<std::string>());
    } catch (const Error& e) {
      errors.push_back(path + "/" + key + ": " + e.what());
      return Rational{0};
    }
  }

  // Calls fn(element, element_path) for each array element.
  template <typename Fn>
  void each(const json& obj, const std::string& path, const char* key, bool required, Fn fn) {
    const json* v = member(obj, path, key, required);
    if (!v) return;
    if (!v->is_array()) {
      errors.push_back(path + "/" + key + ": expected an array");
      return;
    }
    for (std::size_t i = 0; i < v->size(); ++i) {
      fn((*v)[i], path + "/" + key + "/" + std::to_string(i));
    }
  }

  model::DiskClass disk_class(const json& j, const std::string& path) {
    model::DiskClass c;
    c.name = text(j, path, "name");
    c.maslov = static_cast<int>(integer(j, path, "maslov"));
    c.area_over_pi = rational(j, path, "area_over_pi");
    c.through_point = boolean(j, path, "through_point", false);
    c.exc_mult = static_cast<int>(integer(j, path, "exc_mult", 0));
    c.point_multiplicity =
        static_cast<int>(integer(j, path, "point_multiplicity", c.through_point ? 1 : 0));
    return c;
  }

  model::TrajectoryCount count(const json& j, const std::string& path, bool class_required) {
    model::TrajectoryCount tc;
    tc.from = text(j, path, "from");
    tc.to = text(j, path, "to");
    if (class_required || j.contains("class")) tc.class_name = text(j, path, "class");
    const auto n = integer(j, path, "count");
    if (n < 0) errors.push_back(path + "/count: must be non-negative");
    tc.count = static_cast<std::uint64_t>(std::max<std::int64_t>(n, 0));
    return tc;
  }

  model::LagrangianData lagrangian(const json& j, const std::string& path) {
    model::LagrangianData l;
    l.name = text(j, path, "name");
    l.dim = static_cast<int>(integer(j, path, "dim"));
    each(j, path, "critical_points", true, [&](const json& p, const std::string& at) {
      l.critical_points.push_back({text(p, at, "name"), static_cast<int>(integer(p, at, "index"))});
    });
    each(j, path, "classes", true,
         [&](const json& c, const std::string& at) { l.classes.push_back(disk_class(c, at)); });
    each(j, path, "morse_counts", true, [&](const json& c, const std::string& at) {
      l.morse_counts.push_back(count(c, at, false));
    });
    each(j, path, "quantum_counts", true, [&](const json& c, const std::string& at) {
      l.quantum_counts.push_back(count(c, at, true));
    });
    if (j.contains("betti_mod2")) {
      std::vector<int> betti;
      const json& b = j["betti_mod2"];
      if (!b.is_array()) errors.push_back(path + "/betti_mod2: expected an array");
      for (std::size_t i = 0; b.is_array() && i < b.size(); ++i) {
        if (!b[i].is_number_integer() || b[i].get<std::int64_t>() < 0) {
          errors.push_back(path + "/betti_mod2/" + std::to_string(i) + ": expected a natural");
          continue;
        }
        betti.push_back(b[i].get<int>());
      }
      l.betti_mod2 = std::move(betti);
    }
    return l;
  }

  model::FloerPairData floer_pair(const json& j, const std::string& path) {
    model::FloerPairData f;
    f.name = j.contains("name") ? text(j, path, "name") : std::string{};
    each(j, path, "points", true, [&](const json& p, const std::string& at) {
      if (!p.is_string()) {
        errors.push_back(at + ": expected a string");
        return;
      }
      f.intersection_points.push_back(p.get<std::string>());
    });
    each(j, path, "strip_classes", true, [&](const json& c, const std::string& at) {
      f.strip_classes.push_back(disk_class(c, at));
    });
    each(j, path, "strip_counts", true, [&](const json& c, const std::string& at) {
      f.strip_counts.push_back(count(c, at, true));
    });
    f.min_maslov_assertion = static_cast<int>(integer(j, path, "min_maslov_assertion"));
    f.hamiltonian_isotopic = boolean(j, path, "hamiltonian_isotopic", false);
    return f;
  }
};

ordered_json class_json(const model::DiskClass& c) {
  ordered_json j;
  j["name"] = c.name;
  j["maslov"] = c.maslov;
  j["area_over_pi"] = to_string(c.area_over_pi);
  j["through_point"] = c.through_point;
  j["exc_mult"] = c.exc_mult;
  j["point_multiplicity"] = c.point_multiplicity;
  return j;
}

ordered_json count_json(const model::TrajectoryCount& tc) {
  ordered_json j;
  j["from"] = tc.from;
  j["to"] = tc.to;
  if (!tc.class_name.empty()) j["class"] = tc.class_name;
  j["count"] = tc.count;
  return j;
}

}  // namespace

Workspace parse_spec(std::string_view document) {
  json root;
  try {
    root = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "malformed JSON at " + line_col(document, e.byte),
                {std::string("at ") + line_col(document, e.byte) + ": " + e.what()});
  }
  if (!root.is_object()) throw Error(ErrorKind::ParseError, "document root must be an object");

  Reader r;
  Workspace w;
  if (const json* m = r.member(root, "", "manifold", true)) {
    w.manifold.half_dim = static_cast<int>(r.integer(*m, "/manifold", "n"));
    w.manifold.lambda_pi = r.rational(*m, "/manifold", "lambda_pi");
    w.manifold.width_asserted = r.boolean(*m, "/manifold", "width_asserted");
  }
  r.each(root, "", "lagrangians", true, [&](const json& j, const std::string& at) {
    w.lagrangians.push_back(r.lagrangian(j, at));
  });
  r.each(root, "", "floer_pairs", false, [&](const json& j, const std::string& at) {
    w.floer_pairs.push_back(r.floer_pair(j, at));
  });
  if (root.contains("metadata")) {
    const json& meta = root["metadata"];
    if (!meta.is_object()) r.errors.push_back("/metadata: expected an object");
    for (auto it = meta.begin(); meta.is_object() && it != meta.end(); ++it) {
      if (!it.value().is_string()) {
        r.errors.push_back("/metadata/" + it.key() + ": expected a string");
        continue;
      }
      w.metadata[it.key()] = it.value().get<std::string>();
    }
  }
  if (!r.errors.empty()) {
    throw Error(ErrorKind::ParseError, "document does not match the input schema", r.errors);
  }

  std::vector<std::string> problems;
  std::set<std::string> names;
  for (const auto& l : w.lagrangians) {
    if (!names.insert(l.name).second) problems.push_back("duplicate lagrangian " + l.name);
    for (auto& v : model::validate_lagrangian(w.manifold, l).violations) problems.push_back(v);
  }
  for (const auto& f : w.floer_pairs) {
    for (auto& v : model::validate_floer_pair(f).violations) problems.push_back(v);
  }
  if (!problems.empty()) {
    throw Error(ErrorKind::ValidationError, std::to_string(problems.size()) + " validation problem(s)",
                problems);
  }
  return w;
}

std::string serialize(const Workspace& w) {
  ordered_json root;
  root["manifold"] = {{"n", w.manifold.half_dim},
                      {"lambda_pi", to_string(w.manifold.lambda_pi)},
                      {"width_asserted", w.manifold.width_asserted}};
  root["lagrangians"] = ordered_json::array();
  for (const auto& l : w.lagrangians) {
    ordered_json j;
    j["name"] = l.name;
    j["dim"] = l.dim;
    j["critical_points"] = ordered_json::array();
    for (const auto& p : l.critical_points) {
      j["critical_points"].push_back({{"name", p.name}, {"index", p.index}});
    }
    j["classes"] = ordered_json::array();
    for (const auto& c : l.classes) j["classes"].push_back(class_json(c));
    j["morse_counts"] = ordered_json::array();
    for (const auto& tc : l.morse_counts) j["morse_counts"].push_back(count_json(tc));
    j["quantum_counts"] = ordered_json::array();
    for (const auto& tc : l.quantum_counts) j["quantum_counts"].push_back(count_json(tc));
    if (l.betti_mod2) j["betti_mod2"] = *l.betti_mod2;
    root["lagrangians"].push_back(std::move(j));
  }
  if (!w.floer_pairs.empty()) {
    root["floer_pairs"] = ordered_json::array();
    for (const auto& f : w.floer_pairs) {
      ordered_json j;
      j["name"] = f.name;
      j["points"] = f.intersection_points;
      j["strip_classes"] = ordered_json::array();
      for (const auto& c : f.strip_classes) j["strip_classes"].push_back(class_json(c));
      j["strip_counts"] = ordered_json::array();
      for (const auto& tc : f.strip_counts) j["strip_counts"].push_back(count_json(tc));
      j["min_maslov_assertion"] = f.min_maslov_assertion;
      j["hamiltonian_isotopic"] = f.hamiltonian_isotopic;
      root["floer_pairs"].push_back(std::move(j));
    }
  }
  if (!w.metadata.empty()) {
    root["metadata"] = ordered_json::object();
    for (const auto& [k, v] : w.metadata) root["metadata"][k] = v;
  }
  return root.dump(2) + "\n";
}

}  // namespace lagblow::workbench
