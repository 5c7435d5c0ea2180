#pragma once

#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "core/types.hpp"
#include "render/image.hpp"

namespace vsrchart {

struct Confirm {};
struct Corrected {
  std::vector<PixelPoint> points;
};
using VerifyResult = std::variant<Confirm, Corrected>;

// The three model roles of the refine/decode pipeline. Every invocation of
// any role counts as exactly one inference call.
class ModelClient {
 public:
  virtual ~ModelClient() = default;

  virtual std::vector<PixelPoint> localize(const Image& image) = 0;

  // Receives both the original image and the marker-overlaid variant plus
  // the localizations the overlay was drawn from.
  virtual VerifyResult verify(const Image& original, const Image& overlaid,
                              std::span<const PixelPoint> current) = 0;

  virtual ParseResult decode(const Image& image,
                             std::span<const PixelPoint> localizations) = 0;
};

}  // namespace vsrchart
