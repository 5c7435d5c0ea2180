#pragma once

#include "core/types.hpp"

namespace vsrchart {

// Round-half-to-even; keeps anchor placement deterministic and matches the
// integer pixel coordinates the rest of the pipeline expects.
int round_half_even(double v);

// Value -> pixel under the calibration's affine map. Pixel y decreases
// upward. Throws OutOfRangeError when the point lies outside the axis
// ranges (categorical index outside [-0.5, slots-0.5]).
PixelPoint chart_to_pixel(const AxisCalibration& cal, const ChartPoint& p);

// Inverse of chart_to_pixel; categorical x snaps to the nearest slot index.
// Accepts pixels up to 2 px outside the plot area, throws beyond that.
ChartPoint pixel_to_chart(const AxisCalibration& cal, const PixelPoint& px);

// Continuous inverse of the categorical column map (no snapping); used by
// the renderer to store exact fractional slot positions for bar anchors.
double x_value_at_column(const AxisCalibration& cal, double column);

}  // namespace vsrchart
