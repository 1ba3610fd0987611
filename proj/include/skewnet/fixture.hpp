#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "skewnet/net.hpp"

namespace skewnet {

/// Unreadable or malformed input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {n, two_m, field, matrices: [[upper triangle, row-major]]}. Entries are
/// integers when possible, otherwise strings in FieldElement text form.
nlohmann::ordered_json net_to_json(const ANet& net);
ANet net_from_json(const nlohmann::json& j);

/// Canonical fixture bytes: one matrix per line, trailing newline.
std::string fixture_text(const ANet& net);
/// SHA-256 of fixture_text, lowercase hex.
std::string fingerprint(const ANet& net);
std::string sha256_hex(const std::string& bytes);

/// "-" reads stdin / writes stdout.
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);
ANet read_fixture(const std::string& path);

}  // namespace skewnet
