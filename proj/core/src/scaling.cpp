#include <algorithm>
#include <cmath>

#include "cayleylab/errors.hpp"
#include "cayleylab/families.hpp"
#include "cayleylab/verifier.hpp"

namespace cayleylab::verifier {

std::string scaling_family_name(ScalingFamily family) {
  switch (family) {
    case ScalingFamily::cyclic: return "CYCLIC";
    case ScalingFamily::dihedral: return "DIHEDRAL";
    case ScalingFamily::wreath: return "WREATH";
    case ScalingFamily::sl2: return "SL2";
    case ScalingFamily::elemab: return "ELEMAB";
  }
  return "?";
}

std::optional<ScalingFamily> scaling_family_from_name(const std::string& name) {
  std::string upper = name;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (ScalingFamily f : {ScalingFamily::cyclic, ScalingFamily::dihedral,
                          ScalingFamily::wreath, ScalingFamily::sl2, ScalingFamily::elemab})
    if (scaling_family_name(f) == upper) return f;
  return std::nullopt;
}

ScalingTable scaling_experiment(ScalingFamily family,
                                const std::vector<std::uint64_t>& parameters) {
  ScalingTable table;
  table.family = family;

  for (std::uint64_t p : parameters) {
    GroupSpec spec;
    switch (family) {
      case ScalingFamily::cyclic:
        spec.family = Family::cyclic;
        spec.params = {p};
        break;
      case ScalingFamily::dihedral:
        spec.family = Family::dihedral;
        spec.params = {p};
        break;
      case ScalingFamily::wreath:
        spec.family = Family::wreath;
        spec.params = {p};
        break;
      case ScalingFamily::sl2:
        spec.family = Family::sl2;
        spec.params = {p};
        break;
      case ScalingFamily::elemab:
        spec.family = Family::elemab;
        spec.params = {2, p};
        break;
    }
    FiniteGroup G = construct(spec);
    GeneratingSet S = GeneratingSet::make(G, G.generators(), "standard");
    std::optional<std::uint64_t> diam = cayley::diameter(G, S);
    if (!diam)
      throw PreconditionError("standard generators do not generate " + spec.to_string());

    ScalingRow row;
    row.parameter = p;
    row.group_order = G.order();
    row.diameter = *diam;
    row.log_order = std::log(static_cast<double>(row.group_order));
    table.rows.push_back(row);
  }

  std::sort(table.rows.begin(), table.rows.end(),
            [](const ScalingRow& a, const ScalingRow& b) {
              return a.group_order < b.group_order;
            });

  // Least-squares slope of log diam against log |G|.
  double sx = 0, sy = 0;
  std::size_t n = 0;
  for (const auto& row : table.rows) {
    if (row.diameter == 0) continue;
    sx += row.log_order;
    sy += std::log(static_cast<double>(row.diameter));
    ++n;
  }
  if (n >= 2) {
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (const auto& row : table.rows) {
      if (row.diameter == 0) continue;
      const double dx = row.log_order - mx;
      sxy += dx * (std::log(static_cast<double>(row.diameter)) - my);
      sxx += dx * dx;
    }
    table.fit_exponent = sxx > 0 ? sxy / sxx : 0.0;
  }
  for (auto& row : table.rows) row.fit_exponent = table.fit_exponent;

  if (family == ScalingFamily::wreath) {
    double worst = 0;
    for (const auto& row : table.rows)
      worst = std::max(worst, static_cast<double>(row.diameter) /
                                  static_cast<double>(row.parameter));
    table.extras["max_diam_over_n"] = worst;
  }
  return table;
}

}  // namespace cayleylab::verifier
