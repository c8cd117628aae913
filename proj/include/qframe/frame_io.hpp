#pragma once

#include <string>

#include "qframe/frames.hpp"

namespace qf {

/// A frame plus the optional label carried by its file form.
struct FrameDocument {
  Frame frame;
  std::string label;
};

/// Frame file schema: a JSON object with
///   "dimension": n >= 1,
///   "vectors":   m >= 1 rows, each a list of n quaternions, each
///                quaternion a list of exactly four finite reals
///                [x0, x1, x2, x3],
///   "label":     optional string.
/// Numbers are emitted with 17 significant digits, so a formatted frame
/// parses back to bit-identical components.
std::string format_frame(const FrameDocument& doc);

/// Throws SchemaError with position diagnostics on malformed input.
FrameDocument parse_frame_text(const std::string& text,
                               const std::string& origin = "<string>");

/// Throws IoError when the file cannot be read, SchemaError when it does
/// not match the schema.
FrameDocument read_frame_file(const std::string& path);

void write_frame_file(const FrameDocument& doc, const std::string& path);

}  // namespace qf
