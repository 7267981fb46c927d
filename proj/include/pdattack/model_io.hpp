#ifndef PDATTACK_MODEL_IO_HPP
#define PDATTACK_MODEL_IO_HPP

#include <string>

#include "pdattack/classifier.hpp"

namespace pdattack {

/// Flat text model format: kind and layer dimensions, then whitespace
/// separated weight values in layer order (weights row-major, then bias).
/// Doubles are written at 17 significant digits so save/load round-trips
/// bit-exactly.
void save_model(const Classifier& model, const std::string& path);
Classifier load_model(const std::string& path);

}  // namespace pdattack

#endif  // PDATTACK_MODEL_IO_HPP
