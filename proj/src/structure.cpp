#include "relex/structure.hpp"

#include <cstdlib>
#include <sstream>

namespace relex {

std::string ValidationReport::to_string() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

ValidationReport validate(const Structure& a, const Signature& sig) {
  ValidationReport report;
  const auto& slots = a.slots();
  for (std::size_t j = 1; j <= slots.size(); ++j) {
    const auto& slot = slots[j - 1];
    if (slot.empty()) continue;
    int arity = sig.arity(j);
    if (arity == 0) {
      report.violations.push_back("slot " + std::to_string(j) +
                                  " is non-empty but has zero arity");
      continue;
    }
    for (const auto& tuple : slot) {
      if (tuple.size() != static_cast<std::size_t>(arity)) {
        std::ostringstream msg;
        msg << "slot " << j << " tuple of arity " << tuple.size()
            << " (expected " << arity << ")";
        report.violations.push_back(msg.str());
      }
    }
  }
  return report;
}

void require_valid(const Structure& a, const Signature& sig) {
  ValidationReport report = validate(a, sig);
  if (!report.ok())
    throw std::invalid_argument("invalid structure: " + report.to_string());
}

std::string encode(const Structure& a) {
  std::string out = "{";
  bool first_slot = true;
  const auto& slots = a.slots();
  for (std::size_t j = 1; j <= slots.size(); ++j) {
    const auto& slot = slots[j - 1];
    if (slot.empty()) continue;
    if (!first_slot) out += ";";
    first_slot = false;
    out += std::to_string(j);
    out += ":[";
    for (std::size_t t = 0; t < slot.size(); ++t) {
      if (t > 0) out += ";";
      out += "(";
      for (std::size_t c = 0; c < slot[t].size(); ++c) {
        if (c > 0) out += ",";
        out += std::to_string(slot[t][c]);
      }
      out += ")";
    }
    out += "]";
  }
  out += "}";
  return out;
}

namespace {

class EncodingScanner {
 public:
  explicit EncodingScanner(const std::string& text) : text_(text) {}

  Structure parse() {
    expect('{');
    std::vector<Structure::Slot> slots;
    std::size_t last_slot = 0;
    if (peek() != '}') {
      for (;;) {
        std::size_t j = parse_slot_index();
        if (j <= last_slot) fail("slot indices must increase");
        last_slot = j;
        expect(':');
        expect('[');
        Structure::Slot tuples;
        for (;;) {
          tuples.push_back(parse_tuple());
          if (peek() == ';') {
            ++pos_;
            continue;
          }
          break;
        }
        expect(']');
        if (slots.size() < j) slots.resize(j);
        slots[j - 1] = std::move(tuples);
        if (peek() == ';') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect('}');
    if (pos_ != text_.size()) fail("trailing characters");
    return Structure(std::move(slots));
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("bad structure encoding at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  char peek() {
    if (pos_ >= text_.size()) fail("unexpected end");
    return text_[pos_];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t parse_slot_index() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected slot index");
    return static_cast<std::size_t>(
        std::strtoull(text_.substr(start, pos_ - start).c_str(), nullptr, 10));
  }

  Id parse_id() {
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    std::size_t digits_start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits_start) fail("expected integer");
    return std::strtoll(text_.substr(start, pos_ - start).c_str(), nullptr, 10);
  }

  Structure::Tuple parse_tuple() {
    expect('(');
    Structure::Tuple tuple;
    for (;;) {
      tuple.push_back(parse_id());
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    expect(')');
    return tuple;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Structure decode(const std::string& text) {
  return EncodingScanner(text).parse();
}

}  // namespace relex
