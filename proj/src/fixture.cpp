#include "skewnet/fixture.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <openssl/evp.h>

namespace skewnet {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json entry_json(const FieldElement& x) {
  if (x.field().is_rational()) {
    const mpq_class& q = x.rational();
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return x.to_string();
  }
  const auto c = x.coefficients();
  bool prime = true;
  for (std::size_t i = 1; i < c.size(); ++i) prime = prime && c[i] == 0;
  if (prime) return c[0];
  return x.to_string();
}

FieldElement entry_from_json(const json& j, const Field& f) {
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  if (j.is_string()) return FieldElement::parse(j.get<std::string>(), f);
  throw InputError("matrix entries must be integers or strings");
}

}  // namespace

ordered_json net_to_json(const ANet& net) {
  ordered_json j;
  j["n"] = net.n();
  j["two_m"] = net.two_m();
  j["field"] = net.field().name();
  ordered_json mats = ordered_json::array();
  for (const auto& m : net.matrices()) {
    ordered_json row = ordered_json::array();
    for (std::size_t r = 0; r < net.two_m(); ++r)
      for (std::size_t c = r + 1; c < net.two_m(); ++c) row.push_back(entry_json(m(r, c)));
    mats.push_back(std::move(row));
  }
  j["matrices"] = std::move(mats);
  return j;
}

ANet net_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InputError("fixture must be a JSON object");
    for (const char* key : {"n", "two_m", "field", "matrices"})
      if (!j.contains(key)) throw InputError(std::string("fixture is missing \"") + key + "\"");
    const auto n = j.at("n").get<std::int64_t>();
    const auto dim = j.at("two_m").get<std::int64_t>();
    if (n < 1 || dim < 2 || dim % 2 || dim > 12) throw InputError("fixture needs n >= 1 and even 2 <= two_m <= 12");
    const Field f = Field::parse(j.at("field").get<std::string>());
    const auto& mats = j.at("matrices");
    if (!mats.is_array() || mats.size() != static_cast<std::size_t>(n)) throw InputError("fixture needs n matrices");
    const std::size_t len = static_cast<std::size_t>(dim * (dim - 1) / 2);
    std::vector<ExactMatrix> out;
    for (const auto& upper : mats) {
      if (!upper.is_array() || upper.size() != len)
        throw InputError("each matrix needs " + std::to_string(len) + " upper-triangle entries");
      ExactMatrix m(f, static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
      std::size_t k = 0;
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = r + 1; c < m.cols(); ++c) {
          m(r, c) = entry_from_json(upper[k++], f);
          m(c, r) = -m(r, c);
        }
      out.push_back(std::move(m));
    }
    return ANet(f, std::move(out));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid fixture: ") + e.what());
  }
}

std::string fixture_text(const ANet& net) {
  const ordered_json j = net_to_json(net);
  std::ostringstream os;
  os << "{\n";
  os << "  \"n\": " << j["n"].dump() << ",\n";
  os << "  \"two_m\": " << j["two_m"].dump() << ",\n";
  os << "  \"field\": " << j["field"].dump() << ",\n";
  os << "  \"matrices\": [\n";
  const auto& mats = j["matrices"];
  for (std::size_t i = 0; i < mats.size(); ++i) {
    os << "    [";
    for (std::size_t k = 0; k < mats[i].size(); ++k) os << (k ? ", " : "") << mats[i][k].dump();
    os << "]" << (i + 1 < mats.size() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr)) throw std::runtime_error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string fingerprint(const ANet& net) { return sha256_hex(fixture_text(net)); }

std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

ANet read_fixture(const std::string& path) {
  const std::string text = read_text(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return net_from_json(j);
}

}  // namespace skewnet
