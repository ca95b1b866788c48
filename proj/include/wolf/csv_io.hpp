#pragma once

#include "wolf/sweep.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wolf {

// Number formatting shared by all CSV writers: enough digits that
// parsing the text recovers the exact double.
std::string format_double(double v);

// Heat map layout, one block per indicator:
//   x_label,<name>
//   y_label,<name>
//   xs,<nx values>
//   ys,<ny values>
//   indicator,J_wolf     (then ny rows of nx cells)
//   indicator,J_sustain  ...
//   indicator,J_fidelity ...
// Failed cells are empty fields. Writing a parsed map back produces a
// byte-identical file.
void write_heatmap_csv(const HeatMap& hm, const std::string& path);
HeatMap read_heatmap_csv(const std::string& path);

// Two-column file with a header row; NaN values become empty fields.
void write_curve_csv(std::span<const std::pair<double, double>> points,
                     const std::string& x_name, const std::string& y_name,
                     const std::string& path);

} // namespace wolf
