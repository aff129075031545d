#include "factorinv/cli.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace factorinv::cli {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

struct Problems {
  std::vector<std::string> malformed, semantic;

  [[noreturn]] void raise() const {
    if (!malformed.empty()) throw SpecError(SpecError::Category::Malformed, malformed);
    throw SpecError(SpecError::Category::Semantic, semantic);
  }
  void check() const {
    if (!malformed.empty() || !semantic.empty()) raise();
  }
};

std::optional<Integer> read_integer(const json& v, const std::string& where, Problems& p) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(v.get<std::uint64_t>()) : Integer(v.get<std::int64_t>());
  if (v.is_string())
    if (auto parsed = parse_integer(v.get<std::string>())) return parsed;
  if (v.is_number_float())
    p.malformed.push_back(where + " is not an exact integer (write large values as decimal strings)");
  else
    p.malformed.push_back(where + " must be an integer");
  return std::nullopt;
}

std::optional<IntVector> read_vector(const json& v, const std::string& where, Problems& p) {
  if (!v.is_array()) {
    p.malformed.push_back(where + " must be a list of integers");
    return std::nullopt;
  }
  IntVector out(v.size());
  bool ok = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto x = read_integer(v[i], where + "[" + std::to_string(i) + "]", p);
    if (x) out[i] = *x;
    ok = ok && x;
  }
  if (!ok) return std::nullopt;
  return out;
}

std::vector<IntVector> read_vectors(const json& v, const std::string& where, Problems& p) {
  std::vector<IntVector> out;
  if (!v.is_array()) {
    p.malformed.push_back(where + " must be a list");
    return out;
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    if (auto x = read_vector(v[i], where + "[" + std::to_string(i) + "]", p)) out.push_back(std::move(*x));
  return out;
}

void require_same_size(const std::vector<IntVector>& vs, const std::string& where, Problems& p) {
  for (std::size_t i = 1; i < vs.size(); ++i)
    if (vs[i].size() != vs[0].size()) {
      p.malformed.push_back(where + " have different lengths");
      return;
    }
}

void validate(const SemigroupSpec& s, Problems& p) {
  using Kind = SemigroupSpec::Kind;
  switch (s.kind) {
    case Kind::Numerical: {
      if (s.generators.empty()) p.semantic.push_back("a numerical semigroup needs at least one generator");
      Integer g = 0;
      for (const auto& v : s.generators) {
        if (v[0] <= 0) p.semantic.push_back("generator " + to_string(v[0]) + " is not positive");
        if (v[0] > std::numeric_limits<std::int64_t>::max())
          p.semantic.push_back("generator " + to_string(v[0]) + " does not fit in 64 bits");
        g = gcd(g, v[0]);
      }
      if (!s.generators.empty() && g != 1) p.semantic.push_back("the generators have gcd " + to_string(g) + ", not 1");
      break;
    }
    case Kind::Affine:
      if (s.generators.empty()) p.semantic.push_back("an affine semigroup needs at least one generator");
      require_same_size(s.generators, "generators", p);
      for (const auto& v : s.generators) {
        if (v.empty()) p.malformed.push_back("generators must not be empty vectors");
        else if (!v.is_nonnegative()) p.semantic.push_back("generator " + to_string(v) + " has a negative entry");
        else if (v.is_zero()) p.semantic.push_back("generator " + to_string(v) + " is zero");
      }
      break;
    case Kind::Equations:
      if (s.matrix.empty()) p.malformed.push_back("matrix needs at least one row");
      require_same_size(s.matrix, "matrix rows", p);
      if (!s.matrix.empty() && s.matrix[0].empty()) p.malformed.push_back("matrix needs at least one column");
      if (s.moduli.size() != s.matrix.size())
        p.malformed.push_back("moduli has " + std::to_string(s.moduli.size()) + " entries for " +
                              std::to_string(s.matrix.size()) + " rows");
      for (const auto& d : s.moduli)
        if (d && *d < 2) p.semantic.push_back("modulus " + to_string(*d) + " is below 2");
      break;
    case Kind::Block:
      if (s.group.empty()) p.malformed.push_back("moduli needs at least one entry");
      for (const auto& d : s.group)
        if (d < 2) p.semantic.push_back("modulus " + to_string(d) + " is below 2");
      if (s.elements.empty()) p.semantic.push_back("a block monoid needs at least one element");
      for (const auto& e : s.elements) {
        if (e.size() != s.group.size()) {
          p.malformed.push_back("element " + to_string(e) + " does not have " + std::to_string(s.group.size()) +
                                " entries");
          continue;
        }
        for (std::size_t i = 0; i < e.size(); ++i)
          if (e[i] < 0 || (s.group[i] >= 2 && e[i] >= s.group[i])) {
            p.semantic.push_back("element " + to_string(e) + " has an entry outside [0, " + to_string(s.group[i]) + ")");
            break;
          }
      }
      break;
  }
}

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(v));
  return json(to_string(v));
}

json vector_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

std::string trim(std::string_view s) {
  std::string out;
  for (const char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Comma separated integers; nullopt on any bad entry.
std::optional<IntVector> parse_list(std::string_view text) {
  std::vector<Integer> entries;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    auto v = parse_integer(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (!v) return std::nullopt;
    entries.push_back(std::move(*v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return IntVector(std::move(entries));
}

}  // namespace

SpecError::SpecError(Category category, std::vector<std::string> problems)
    : Error(join(problems)), category_(category), problems_(std::move(problems)) {}

SemigroupSpec parse_spec_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(SpecError::Category::Malformed, {std::string("not valid JSON: ") + e.what()});
  }
  Problems p;
  if (!doc.is_object()) throw SpecError(SpecError::Category::Malformed, {"a semigroup definition must be a JSON object"});
  if (!doc.contains("type") || !doc["type"].is_string())
    throw SpecError(SpecError::Category::Malformed, {"missing string field \"type\""});

  const std::string type = doc["type"];
  SemigroupSpec s;
  std::set<std::string> fields;
  if (type == "numerical") {
    s.kind = SemigroupSpec::Kind::Numerical;
    fields = {"generators"};
  } else if (type == "affine") {
    s.kind = SemigroupSpec::Kind::Affine;
    fields = {"generators"};
  } else if (type == "equations") {
    s.kind = SemigroupSpec::Kind::Equations;
    fields = {"matrix", "moduli"};
  } else if (type == "block") {
    s.kind = SemigroupSpec::Kind::Block;
    fields = {"moduli", "elements"};
  } else {
    throw SpecError(SpecError::Category::Malformed,
                    {"unknown type \"" + type + "\" (expected numerical, affine, equations or block)"});
  }
  for (const auto& [key, value] : doc.items())
    if (key != "type" && !fields.count(key)) p.malformed.push_back("unexpected field \"" + key + "\" for type " + type);
  for (const auto& f : fields)
    if (!doc.contains(f)) p.malformed.push_back("missing field \"" + f + "\" for type " + type);
  if (!p.malformed.empty()) p.raise();

  switch (s.kind) {
    case SemigroupSpec::Kind::Numerical:
      if (!doc["generators"].is_array()) {
        p.malformed.push_back("generators must be a list of integers");
        break;
      }
      for (std::size_t i = 0; i < doc["generators"].size(); ++i)
        if (auto v = read_integer(doc["generators"][i], "generators[" + std::to_string(i) + "]", p))
          s.generators.push_back(IntVector{*v});
      break;
    case SemigroupSpec::Kind::Affine:
      s.generators = read_vectors(doc["generators"], "generators", p);
      break;
    case SemigroupSpec::Kind::Equations: {
      s.matrix = read_vectors(doc["matrix"], "matrix", p);
      const json& moduli = doc["moduli"];
      if (!moduli.is_array()) {
        p.malformed.push_back("moduli must be a list of integers or nulls");
        break;
      }
      for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (moduli[i].is_null()) {
          s.moduli.emplace_back();
        } else if (auto v = read_integer(moduli[i], "moduli[" + std::to_string(i) + "]", p)) {
          s.moduli.emplace_back(*v);
        }
      }
      break;
    }
    case SemigroupSpec::Kind::Block: {
      if (auto v = read_vector(doc["moduli"], "moduli", p)) s.group = v->entries();
      s.elements = read_vectors(doc["elements"], "elements", p);
      break;
    }
  }
  if (p.malformed.empty()) validate(s, p);
  p.check();
  return s;
}

SemigroupSpec parse_spec(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw SpecError(SpecError::Category::Malformed, {"cannot read " + file.string()});
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_text(buffer.str());
}

SemigroupSpec parse_gens(std::string_view raw) {
  const std::string text = trim(raw);
  SemigroupSpec s;
  Problems p;
  if (text.find('(') == std::string::npos) {
    s.kind = SemigroupSpec::Kind::Numerical;
    auto list = text.empty() ? std::nullopt : parse_list(text);
    if (!list) throw SpecError(SpecError::Category::Malformed, {"cannot read generators \"" + std::string(raw) + "\""});
    for (const auto& v : *list) s.generators.push_back(IntVector{v});
  } else {
    s.kind = SemigroupSpec::Kind::Affine;
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (text[pos] != '(') break;
      const std::size_t close = text.find(')', pos);
      if (close == std::string::npos) break;
      auto v = parse_list(std::string_view(text).substr(pos + 1, close - pos - 1));
      if (!v) break;
      s.generators.push_back(std::move(*v));
      pos = close + 1;
      if (pos < text.size() && text[pos] == ',') ++pos;
      if (pos == text.size() && text.back() == ',') break;
    }
    if (pos != text.size() || text.back() == ',')
      throw SpecError(SpecError::Category::Malformed,
                      {"cannot read generators \"" + std::string(raw) + "\" (expected \"(a,b),(c,d),...\")"});
  }
  validate(s, p);
  p.check();
  return s;
}

std::string spec_to_json(const SemigroupSpec& s) {
  json doc;
  switch (s.kind) {
    case SemigroupSpec::Kind::Numerical:
      doc["type"] = "numerical";
      doc["generators"] = json::array();
      for (const auto& v : s.generators) doc["generators"].push_back(integer_json(v[0]));
      break;
    case SemigroupSpec::Kind::Affine:
      doc["type"] = "affine";
      doc["generators"] = json::array();
      for (const auto& v : s.generators) doc["generators"].push_back(vector_json(v));
      break;
    case SemigroupSpec::Kind::Equations:
      doc["type"] = "equations";
      doc["matrix"] = json::array();
      for (const auto& r : s.matrix) doc["matrix"].push_back(vector_json(r));
      doc["moduli"] = json::array();
      for (const auto& d : s.moduli) doc["moduli"].push_back(d ? integer_json(*d) : json(nullptr));
      break;
    case SemigroupSpec::Kind::Block:
      doc["type"] = "block";
      doc["moduli"] = vector_json(IntVector(s.group));
      doc["elements"] = json::array();
      for (const auto& e : s.elements) doc["elements"].push_back(vector_json(e));
      break;
  }
  return doc.dump();
}

IntVector parse_element(std::string_view raw) {
  std::string text = trim(raw);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  auto v = text.empty() ? std::nullopt : parse_list(text);
  if (!v) throw SpecError(SpecError::Category::Malformed, {"cannot read element \"" + std::string(raw) + "\""});
  return *v;
}

}  // namespace factorinv::cli
