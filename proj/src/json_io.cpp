#include "nelson/json_io.hpp"

#include <fstream>
#include <istream>

#include "../vendor/json.hpp"

namespace nelson {
namespace {

using json = nlohmann::ordered_json;

json parse_document(std::istream& in, const std::string& origin) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw format_error(cat(origin, ": ", e.what()));
  }
}

[[noreturn]] void fail(const std::string& origin, const std::string& message) {
  throw format_error(cat(origin, ": ", message));
}

void check_fields(const json& doc, const std::string& origin,
                  std::initializer_list<const char*> fields) {
  if (!doc.is_object()) fail(origin, "top level must be a JSON object");
  for (const char* field : fields)
    if (!doc.contains(field)) fail(origin, cat("missing field \"", field, "\""));
  for (auto& [key, value] : doc.items()) {
    (void)value;
    bool known = false;
    for (const char* field : fields) known = known || key == field;
    if (!known) fail(origin, cat("unknown field \"", key, "\""));
  }
}

std::uint32_t read_size(const json& doc, const std::string& origin, std::uint32_t max) {
  const json& v = doc["size"];
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
    fail(origin, "\"size\" must be a positive integer");
  std::uint64_t size = v.get<std::uint64_t>();
  if (size > max) fail(origin, cat("\"size\" ", size, " exceeds the supported maximum ", max));
  return static_cast<std::uint32_t>(size);
}

std::uint32_t read_entry(const json& v, const std::string& origin, const std::string& path,
                         std::uint64_t size) {
  if (!v.is_number_integer() && !v.is_number_unsigned())
    fail(origin, cat(path, " must be an integer"));
  std::int64_t value = v.get<std::int64_t>();
  if (value < 0 || static_cast<std::uint64_t>(value) >= size)
    fail(origin, cat(path, " is ", value, ", outside 0..", size - 1));
  return static_cast<std::uint32_t>(value);
}

std::vector<elem> read_unary(const json& doc, const char* field, const std::string& origin,
                             std::uint32_t size) {
  const json& v = doc[field];
  if (!v.is_array() || v.size() != size)
    fail(origin, cat("\"", field, "\" must be an array of ", size, " entries"));
  std::vector<elem> out(size);
  for (std::uint32_t i = 0; i < size; ++i)
    out[i] = static_cast<elem>(read_entry(v[i], origin, cat("\"", field, "\"[", i, "]"), size));
  return out;
}

std::vector<elem> read_binary(const json& doc, const char* field, const std::string& origin,
                              std::uint32_t size) {
  const json& v = doc[field];
  if (!v.is_array() || v.size() != size)
    fail(origin, cat("\"", field, "\" must be an array of ", size, " rows"));
  std::vector<elem> out(static_cast<std::size_t>(size) * size);
  for (std::uint32_t i = 0; i < size; ++i) {
    const json& row = v[i];
    if (!row.is_array() || row.size() != size)
      fail(origin, cat("\"", field, "\"[", i, "] must be an array of ", size, " entries"));
    for (std::uint32_t j = 0; j < size; ++j)
      out[static_cast<std::size_t>(i) * size + j] = static_cast<elem>(
          read_entry(row[j], origin, cat("\"", field, "\"[", i, "][", j, "]"), size));
  }
  return out;
}

}  // namespace

FiniteNelsonAlgebra read_algebra_json(std::istream& in, const std::string& origin) {
  json doc = parse_document(in, origin);
  check_fields(doc, origin, {"size", "top", "neg", "meet", "join", "imp"});
  std::uint32_t size = read_size(doc, origin, kMaxCarrier + 1u);
  elem top = static_cast<elem>(read_entry(doc["top"], origin, "\"top\"", size));
  return FiniteNelsonAlgebra(size, top, read_unary(doc, "neg", origin, size),
                             read_binary(doc, "meet", origin, size),
                             read_binary(doc, "join", origin, size),
                             read_binary(doc, "imp", origin, size));
}

FiniteNelsonAlgebra read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw format_error(cat("cannot open ", path));
  return read_algebra_json(in, path);
}

NelsonSpace read_space_json(std::istream& in, const std::string& origin) {
  json doc = parse_document(in, origin);
  check_fields(doc, origin, {"size", "leq", "phi"});
  std::uint32_t size = read_size(doc, origin, 65536);

  NelsonSpace s;
  s.size = size;
  const json& leq = doc["leq"];
  if (!leq.is_array() || leq.size() != size)
    fail(origin, cat("\"leq\" must be an array of ", size, " rows"));
  s.leq_table.assign(static_cast<std::size_t>(size) * size, false);
  for (std::uint32_t i = 0; i < size; ++i) {
    const json& row = leq[i];
    if (!row.is_array() || row.size() != size)
      fail(origin, cat("\"leq\"[", i, "] must be an array of ", size, " entries"));
    for (std::uint32_t j = 0; j < size; ++j) {
      if (!row[j].is_boolean())
        fail(origin, cat("\"leq\"[", i, "][", j, "] must be true or false"));
      s.leq_table[static_cast<std::size_t>(i) * size + j] = row[j].get<bool>();
    }
  }
  const json& phi = doc["phi"];
  if (!phi.is_array() || phi.size() != size)
    fail(origin, cat("\"phi\" must be an array of ", size, " entries"));
  s.phi.resize(size);
  for (std::uint32_t i = 0; i < size; ++i)
    s.phi[i] = read_entry(phi[i], origin, cat("\"phi\"[", i, "]"), size);
  return s;
}

NelsonSpace read_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw format_error(cat("cannot open ", path));
  return read_space_json(in, path);
}

std::string algebra_to_json(const FiniteNelsonAlgebra& a) {
  json doc;
  doc["size"] = a.size();
  doc["top"] = a.top();
  doc["neg"] = a.neg_table();
  auto rows = [&](const std::vector<elem>& table) {
    json out = json::array();
    for (std::uint32_t i = 0; i < a.size(); ++i) {
      json row = json::array();
      for (std::uint32_t j = 0; j < a.size(); ++j)
        row.push_back(table[static_cast<std::size_t>(i) * a.size() + j]);
      out.push_back(std::move(row));
    }
    return out;
  };
  doc["meet"] = rows(a.meet_table());
  doc["join"] = rows(a.join_table());
  doc["imp"] = rows(a.imp_table());
  return doc.dump(2);
}

std::string space_to_json(const NelsonSpace& s) {
  json doc;
  doc["size"] = s.size;
  json leq = json::array();
  for (std::uint32_t i = 0; i < s.size; ++i) {
    json row = json::array();
    for (std::uint32_t j = 0; j < s.size; ++j) row.push_back(s.leq(i, j));
    leq.push_back(std::move(row));
  }
  doc["leq"] = std::move(leq);
  doc["phi"] = s.phi;
  return doc.dump(2);
}

}  // namespace nelson
