#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace sagvne {

struct Series {
  std::string label;
  std::vector<double> xs;
  std::vector<double> ys;
};

struct Panel {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

// Line charts stacked vertically in one SVG file.
void write_svg_panels(const std::filesystem::path& file, const std::string& title,
                      const std::vector<Panel>& panels);

}  // namespace sagvne
