#include "relex/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace relex {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& name, std::size_t line,
                       const std::string& what) {
  throw IoError(name + ":" + std::to_string(line) + ": " + what);
}

json parse_json_line(const std::string& name, std::size_t line,
                     const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(name, line, "invalid JSON");
  if (!j.is_object()) fail(name, line, "expected a JSON object");
  return j;
}

void check_format(const json& j, const std::string& name, std::size_t line) {
  if (!j.contains("format") || j["format"] != 1)
    fail(name, line, "missing or unsupported \"format\" (expected 1)");
}

Signature parse_sig(const json& j, const std::string& name, std::size_t line) {
  if (!j.is_array()) fail(name, line, "\"sig\" must be an array of arities");
  std::vector<int> arities;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      fail(name, line, "\"sig\" entries must be integers");
    arities.push_back(v.get<int>());
  }
  try {
    return Signature(arities);
  } catch (const std::exception& e) {
    fail(name, line, e.what());
  }
}

Structure parse_rels(const json& j, const std::string& name,
                     std::size_t line) {
  if (!j.is_array()) fail(name, line, "\"rels\" must be an array of slots");
  std::vector<Structure::Slot> slots;
  for (const auto& slot : j) {
    if (!slot.is_array()) fail(name, line, "each slot must be an array");
    Structure::Slot tuples;
    for (const auto& tuple : slot) {
      if (!tuple.is_array()) fail(name, line, "each tuple must be an array");
      Structure::Tuple t;
      for (const auto& v : tuple) {
        if (!v.is_number_integer())
          fail(name, line, "tuple components must be integers");
        t.push_back(v.get<Id>());
      }
      tuples.push_back(std::move(t));
    }
    slots.push_back(std::move(tuples));
  }
  return Structure(std::move(slots));
}

}  // namespace

RelSequence parse_sequence(std::istream& in, const std::string& name) {
  std::string text;
  std::size_t line = 0;
  if (!std::getline(in, text)) fail(name, 1, "missing header line");
  ++line;
  json header = parse_json_line(name, line, text);
  check_format(header, name, line);
  if (!header.contains("n") || !header["n"].is_number_integer() ||
      header["n"].get<long long>() < 0)
    fail(name, line, "header needs a non-negative integer \"n\"");
  if (!header.contains("sig")) fail(name, line, "header needs \"sig\"");
  RelSequence x;
  x.sig = parse_sig(header["sig"], name, line);
  const std::size_t n = header["n"].get<std::size_t>();

  for (std::size_t k = 1; k <= n; ++k) {
    if (!std::getline(in, text))
      fail(name, line + 1, "expected item " + std::to_string(k) +
                               ", found end of input");
    ++line;
    json item = parse_json_line(name, line, text);
    if (!item.contains("i") || !item["i"].is_number_integer() ||
        item["i"].get<std::size_t>() != k)
      fail(name, line, "positions must run 1.." + std::to_string(n) +
                           " in order");
    if (!item.contains("rels")) fail(name, line, "item needs \"rels\"");
    Structure a = parse_rels(item["rels"], name, line);
    ValidationReport report = validate(a, x.sig);
    if (!report.ok()) fail(name, line, report.to_string());
    x.items.push_back(std::move(a));
  }
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty()) fail(name, line, "unexpected content after last item");
  }
  return x;
}

RelSequence parse_sequence_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string() + ": cannot open");
  return parse_sequence(in, path.string());
}

void write_sequence(std::ostream& out, const RelSequence& x) {
  require_valid(x);
  json header;
  header["format"] = 1;
  header["n"] = x.items.size();
  header["sig"] = x.sig.arities();
  out << header.dump() << '\n';
  for (std::size_t k = 0; k < x.items.size(); ++k) {
    json item;
    item["i"] = k + 1;
    json rels = json::array();
    for (const auto& slot : x.items[k].slots()) {
      json tuples = json::array();
      for (const auto& tuple : slot) tuples.push_back(tuple);
      rels.push_back(std::move(tuples));
    }
    item["rels"] = std::move(rels);
    out << item.dump() << '\n';
  }
}

void write_sequence_file(const std::filesystem::path& path,
                         const RelSequence& x) {
  std::ofstream out(path);
  if (!out) throw IoError(path.string() + ": cannot open for writing");
  write_sequence(out, x);
  if (!out) throw IoError(path.string() + ": write failed");
}

RelSequence parse_edge_list(std::istream& in, bool directed,
                            const std::string& name) {
  RelSequence x;
  x.sig = pair_signature();
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::istringstream ss(text);
    long long src = 0, dst = 0;
    std::string probe;
    if (!(ss >> probe)) continue;  // skip blank lines
    ss.clear();
    ss.seekg(0);
    if (!(ss >> src >> dst)) fail(name, line, "expected \"src dst\"");
    std::string extra;
    if (ss >> extra) fail(name, line, "unexpected trailing token");
    if (src <= 0 || dst <= 0) fail(name, line, "ids must be positive");
    if (src == dst) fail(name, line, "self-loop");
    std::vector<Structure::Tuple> tuples{{src, dst}};
    if (!directed) tuples.push_back({dst, src});
    x.items.push_back(make_structure<Id>(1, std::move(tuples)));
  }
  return x;
}

RelSequence parse_edge_list_file(const std::filesystem::path& path,
                                 bool directed) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string() + ": cannot open");
  return parse_edge_list(in, directed, path.string());
}

namespace {

Rational parse_weight(const json& j, const std::string& name) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw IoError(name + ": " + e.what());
    }
  }
  if (j.is_number()) return rational_from_double(j.get<double>());
  throw IoError(name + ": weight must be a number or a \"p/q\" string");
}

SimplexPoint parse_simplex(const json& doc, const std::string& name) {
  if (!doc.contains("sig")) throw IoError(name + ": model needs \"sig\"");
  Signature sig = parse_sig(doc["sig"], name, 1);
  if (!doc.contains("support") || !doc["support"].is_array())
    throw IoError(name + ": model needs a \"support\" array");
  std::vector<std::pair<Structure, Rational>> entries;
  for (const auto& e : doc["support"]) {
    if (!e.is_object() || !e.contains("code") || !e["code"].is_string() ||
        !e.contains("weight"))
      throw IoError(name +
                    ": support entries need \"code\" text and \"weight\"");
    Structure code;
    try {
      code = decode(e["code"].get<std::string>());
    } catch (const std::exception& ex) {
      throw IoError(name + ": " + ex.what());
    }
    entries.emplace_back(std::move(code), parse_weight(e["weight"], name));
  }
  try {
    return SimplexPoint(std::move(sig), entries);
  } catch (const std::exception& e) {
    throw IoError(name + ": " + e.what());
  }
}

}  // namespace

Model parse_model(std::istream& in, const std::string& name) {
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw IoError(name + ": invalid JSON model");
  if (!doc.contains("format") || doc["format"] != 1)
    throw IoError(name + ": missing or unsupported \"format\" (expected 1)");
  if (doc.contains("components")) {
    if (!doc["components"].is_array())
      throw IoError(name + ": \"components\" must be an array");
    std::vector<std::pair<Rational, SimplexPoint>> components;
    for (const auto& c : doc["components"]) {
      if (!c.is_object() || !c.contains("weight") || !c.contains("model"))
        throw IoError(name + ": components need \"weight\" and \"model\"");
      components.emplace_back(parse_weight(c["weight"], name),
                              parse_simplex(c["model"], name));
    }
    try {
      return MixingMeasure(std::move(components));
    } catch (const std::exception& e) {
      throw IoError(name + ": " + e.what());
    }
  }
  return parse_simplex(doc, name);
}

Model parse_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string() + ": cannot open");
  return parse_model(in, path.string());
}

void write_model(std::ostream& out, const SimplexPoint& f) {
  json doc;
  doc["format"] = 1;
  doc["sig"] = f.sig().arities();
  json support = json::array();
  for (const auto& [key, entry] : f.support()) {
    json e;
    e["code"] = key;
    e["weight"] = format_rational(entry.weight);
    support.push_back(std::move(e));
  }
  doc["support"] = std::move(support);
  out << doc.dump() << '\n';
}

void write_model_file(const std::filesystem::path& path,
                      const SimplexPoint& f) {
  std::ofstream out(path);
  if (!out) throw IoError(path.string() + ": cannot open for writing");
  write_model(out, f);
  if (!out) throw IoError(path.string() + ": write failed");
}

std::string to_json(const ExchangeabilityReport& report) {
  json doc;
  doc["max_tv"] = format_rational(report.max_tv);
  json per = json::array();
  for (const auto& [sigma, tv] : report.per_sigma) {
    json e;
    e["sigma"] = sigma;
    e["tv"] = format_rational(tv);
    per.push_back(std::move(e));
  }
  doc["per_sigma"] = std::move(per);
  return doc.dump();
}

std::string to_json(const Chi2Report& report) {
  json doc;
  doc["chi2"] = report.chi2;
  doc["dof"] = report.dof;
  doc["p"] = report.p_value;
  if (report.uninformative) doc["uninformative"] = true;
  return doc.dump();
}

}  // namespace relex
