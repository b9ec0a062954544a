#pragma once

#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lacdhva::cli {

/// Scientific notation, 12 significant digits, lowercase 'e'. Independent of
/// the C locale. Non-finite values render as "nan", "inf" or "-inf".
[[nodiscard]] std::string format_sci(double value);

/// Writes a CSV file with a header row; each row must have header.size()
/// columns. Throws IoError on failure.
void write_csv(const std::filesystem::path& path, std::span<const std::string_view> header,
               const std::vector<std::vector<std::string>>& rows);

/// Minimal JSON emitter with fixed number formatting, so outputs are
/// byte-stable. Keys are written in insertion order.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view name);
  JsonWriter& number(double value);  // null when non-finite
  JsonWriter& integer(long long value);
  JsonWriter& string(std::string_view text);
  JsonWriter& boolean(bool value);
  JsonWriter& null();
  JsonWriter& numbers(std::span<const double> values);

  [[nodiscard]] std::string str() const { return out_ + "\n"; }

 private:
  void before_value();
  void append_quoted(std::string_view text);
  void newline();

  std::string out_;
  std::vector<bool> has_items_;  // per open container
  bool after_key_ = false;
};

/// Writes text to a file in binary mode. Throws IoError on failure.
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace lacdhva::cli
