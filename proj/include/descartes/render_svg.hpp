#pragma once

#include <string>
#include <vector>

#include "descartes/disk_geometry.hpp"
#include "descartes/tessellation.hpp"

namespace descartes {

struct RenderOptions {
  int width_px = 512;  // >= 64
  bool show_labels = true;
  bool show_midcircles = false;
  bool show_spinor_arrows = false;  // tessellation only: draws a, b, c from the origin

  /// Throws std::invalid_argument when width_px < 64.
  void validate() const;
};

/// Fill colour of a tile class.
std::string palette(TileClass cls);

/// One polygon per tile in world coordinates (12 decimals); negative-area
/// tiles are hatched. Byte-deterministic.
std::string render_tessellation(const Tessellation& t, const RenderOptions& o = {});

/// Solid circles for disks (labelled with their curvature), dashed circles for
/// mid-circles. Negative-curvature disks are drawn as the enclosing circle.
std::string render_configuration(const std::vector<PlacedDisk>& disks, const std::vector<PlacedDisk>& midcircles,
                                 const RenderOptions& o = {});

/// Fixed 12-decimal formatting used for every coordinate.
std::string format_coordinate(double value);

}  // namespace descartes
