#include "qframe/frame_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qf {

namespace {

using nlohmann::json;

/// Shortest form of %.17g round-trips every double exactly.
std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double finite_number(const json& j, const std::string& where) {
  if (!j.is_number())
    throw SchemaError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v))
    throw SchemaError(where + ": number is not finite");
  return v;
}

Quaternion parse_quaternion(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) {
    std::ostringstream os;
    os << where << ": expected 4 components, got "
       << (j.is_array() ? std::to_string(j.size()) : std::string("a non-array"));
    throw SchemaError(os.str());
  }
  return Quaternion(finite_number(j[0], where), finite_number(j[1], where),
                    finite_number(j[2], where), finite_number(j[3], where));
}

}  // namespace

std::string format_frame(const FrameDocument& doc) {
  const Frame& f = doc.frame;
  std::ostringstream os;
  os << "{\n  \"dimension\": " << f.dim() << ",\n";
  if (!doc.label.empty())
    os << "  \"label\": " << json(doc.label).dump() << ",\n";
  os << "  \"vectors\": [\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    os << "    [";
    const QVector& v = f.vector(i);
    for (std::size_t r = 0; r < v.size(); ++r) {
      const Quaternion& q = v[r];
      os << (r ? ", [" : "[") << format_double(q.x0()) << ", "
         << format_double(q.x1()) << ", " << format_double(q.x2()) << ", "
         << format_double(q.x3()) << "]";
    }
    os << (i + 1 < f.size() ? "],\n" : "]\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

FrameDocument parse_frame_text(const std::string& text,
                               const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    // parse_error carries line and column; out_of_range covers numeric
    // overflow such as 1e999
    throw SchemaError(origin + ": " + e.what());
  }
  if (!j.is_object())
    throw SchemaError(origin + ": top level must be an object");
  if (!j.contains("dimension") || !j["dimension"].is_number_unsigned())
    throw SchemaError(origin + ": \"dimension\" must be a positive integer");
  const std::size_t n = j["dimension"].get<std::size_t>();
  if (n == 0) throw SchemaError(origin + ": \"dimension\" must be at least 1");

  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string())
      throw SchemaError(origin + ": \"label\" must be a string");
    label = j["label"].get<std::string>();
  }

  if (!j.contains("vectors") || !j["vectors"].is_array() ||
      j["vectors"].empty())
    throw SchemaError(origin + ": \"vectors\" must be a non-empty array");

  std::vector<QVector> vectors;
  vectors.reserve(j["vectors"].size());
  std::size_t index = 0;
  for (const auto& row : j["vectors"]) {
    std::ostringstream wos;
    wos << origin << ": vectors[" << index << "]";
    const std::string where = wos.str();
    if (!row.is_array() || row.size() != n) {
      std::ostringstream os;
      os << where << ": expected " << n << " quaternions, got "
         << (row.is_array() ? std::to_string(row.size())
                            : std::string("a non-array"));
      throw SchemaError(os.str());
    }
    QVector v(n);
    for (std::size_t r = 0; r < n; ++r) {
      std::ostringstream eos;
      eos << where << "[" << r << "]";
      v[r] = parse_quaternion(row[r], eos.str());
    }
    vectors.push_back(std::move(v));
    ++index;
  }
  return FrameDocument{Frame(std::move(vectors)), std::move(label)};
}

FrameDocument read_frame_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed while reading '" + path + "'");
  return parse_frame_text(buffer.str(), path);
}

void write_frame_file(const FrameDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << format_frame(doc);
  out.flush();
  if (!out) throw IoError("failed while writing '" + path + "'");
}

}  // namespace qf
