#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chiro/geometry.hpp"

namespace chiro {

// Binary order-type database: records of n points, each point two unsigned
// coordinates of `width` bits (16-bit little-endian), no header.
struct OrderTypeRecord {
  std::size_t index = 0;
  std::vector<std::array<std::uint32_t, 2>> coords;

  friend bool operator==(const OrderTypeRecord&, const OrderTypeRecord&) = default;
};

/// Record size in bytes; OutOfRange unless width is 8 or 16 and n >= 3.
std::size_t record_bytes(int n, int width);

/// MalformedFile if the byte count is not a whole number of records.
std::vector<OrderTypeRecord> parse_order_types(std::span<const std::uint8_t> bytes, int n, int width);
std::vector<std::uint8_t> write_order_types(std::span<const OrderTypeRecord> records, int width);

/// Exact points; GeneralPositionViolation names the record index.
PointSet to_point_set(const OrderTypeRecord& rec);

/// Streams a database file record by record.
class OrderTypeReader {
 public:
  /// IoError if unreadable, MalformedFile on a partial trailing record.
  OrderTypeReader(const std::filesystem::path& path, int n, int width);

  std::size_t record_count() const noexcept { return count_; }
  std::optional<OrderTypeRecord> next();

 private:
  std::ifstream in_;
  int n_;
  int width_;
  std::size_t count_ = 0;
  std::size_t read_ = 0;
  std::vector<std::uint8_t> buf_;
};

struct LoadedPointSets {
  std::vector<std::pair<std::size_t, PointSet>> valid;  // (record index, points)
  std::vector<std::pair<std::size_t, std::string>> rejected;
};

/// Reads and validates every record. Degenerate records are collected in
/// `rejected` when lenient, otherwise the first one throws.
LoadedPointSets load_order_types(const std::filesystem::path& path, int n, int width, bool lenient);

}  // namespace chiro
