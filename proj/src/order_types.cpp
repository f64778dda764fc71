#include "chiro/order_types.hpp"

#include <string>

namespace chiro {

std::size_t record_bytes(int n, int width) {
  if (width != 8 && width != 16) fail(Errc::OutOfRange, "coordinate width must be 8 or 16 bits");
  if (n < 3) fail(Errc::OutOfRange, "records need at least 3 points");
  return static_cast<std::size_t>(n) * 2 * static_cast<std::size_t>(width / 8);
}

namespace {

OrderTypeRecord decode(const std::uint8_t* p, std::size_t index, int n, int width) {
  OrderTypeRecord rec;
  rec.index = index;
  rec.coords.resize(static_cast<std::size_t>(n));
  for (auto& xy : rec.coords)
    for (auto& c : xy) {
      if (width == 8) {
        c = *p++;
      } else {
        c = static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8);
        p += 2;
      }
    }
  return rec;
}

}  // namespace

std::vector<OrderTypeRecord> parse_order_types(std::span<const std::uint8_t> bytes, int n, int width) {
  const std::size_t rb = record_bytes(n, width);
  if (bytes.size() % rb != 0)
    fail(Errc::MalformedFile, std::to_string(bytes.size()) + " bytes is not a multiple of the record size " +
                                  std::to_string(rb));
  std::vector<OrderTypeRecord> out;
  for (std::size_t i = 0; i * rb < bytes.size(); ++i) out.push_back(decode(bytes.data() + i * rb, i, n, width));
  return out;
}

std::vector<std::uint8_t> write_order_types(std::span<const OrderTypeRecord> records, int width) {
  if (width != 8 && width != 16) fail(Errc::OutOfRange, "coordinate width must be 8 or 16 bits");
  const std::uint32_t limit = width == 8 ? 0xFFu : 0xFFFFu;
  std::vector<std::uint8_t> out;
  for (const auto& rec : records)
    for (const auto& xy : rec.coords)
      for (std::uint32_t c : xy) {
        if (c > limit) fail(Errc::OutOfRange, "coordinate does not fit the width");
        out.push_back(static_cast<std::uint8_t>(c & 0xFF));
        if (width == 16) out.push_back(static_cast<std::uint8_t>(c >> 8));
      }
  return out;
}

PointSet to_point_set(const OrderTypeRecord& rec) {
  std::vector<Point> pts;
  for (const auto& xy : rec.coords) pts.push_back({Rational(xy[0]), Rational(xy[1])});
  PointSet ps(std::move(pts));
  try {
    require_general_position(ps);
  } catch (const Error& e) {
    fail(e.code(), "record " + std::to_string(rec.index) + ": " + e.what());
  }
  return ps;
}

OrderTypeReader::OrderTypeReader(const std::filesystem::path& path, int n, int width)
    : in_(path, std::ios::binary), n_(n), width_(width) {
  const std::size_t rb = record_bytes(n, width);
  if (!in_) fail(Errc::IoError, "cannot open '" + path.string() + "'");
  std::error_code ec;
  const auto size = std::filesystem::file_size(path, ec);
  if (ec) fail(Errc::IoError, "cannot stat '" + path.string() + "'");
  if (size % rb != 0)
    fail(Errc::MalformedFile, "'" + path.string() + "' holds " + std::to_string(size) +
                                  " bytes, not a multiple of the record size " + std::to_string(rb));
  count_ = static_cast<std::size_t>(size / rb);
  buf_.resize(rb);
}

std::optional<OrderTypeRecord> OrderTypeReader::next() {
  if (read_ == count_) return std::nullopt;
  if (!in_.read(reinterpret_cast<char*>(buf_.data()), static_cast<std::streamsize>(buf_.size())))
    fail(Errc::IoError, "short read at record " + std::to_string(read_));
  return decode(buf_.data(), read_++, n_, width_);
}

LoadedPointSets load_order_types(const std::filesystem::path& path, int n, int width, bool lenient) {
  OrderTypeReader reader(path, n, width);
  LoadedPointSets out;
  while (auto rec = reader.next()) {
    try {
      out.valid.emplace_back(rec->index, to_point_set(*rec));
    } catch (const Error& e) {
      if (!lenient || e.code() != Errc::GeneralPositionViolation) throw;
      out.rejected.emplace_back(rec->index, e.what());
    }
  }
  return out;
}

}  // namespace chiro
