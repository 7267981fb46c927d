#ifndef PDATTACK_IDX_HPP
#define PDATTACK_IDX_HPP

#include <string>

#include "pdattack/dataset.hpp"

namespace pdattack {

// IDX image/label containers (big-endian magics 0x00000803 / 0x00000801),
// the format MNIST ships in. Pixel bytes are scaled into [0,1].

/// Load an image file paired with a label file into a dataset; images are
/// flattened row-major. `limit` = 0 means all records.
Dataset load_idx_dataset(const std::string& images_path,
                         const std::string& labels_path,
                         std::size_t limit = 0);

}  // namespace pdattack

#endif  // PDATTACK_IDX_HPP
