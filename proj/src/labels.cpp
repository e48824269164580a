#include "quasipf/labels.hpp"

#include <charconv>

namespace qpf {

std::string to_string(const Label& l) {
  switch (l.kind) {
    case Label::Kind::Body: return std::to_string(l.index);
    case Label::Kind::C: return "c" + std::to_string(l.index);
    case Label::Kind::D: return "d" + std::to_string(l.index);
    case Label::Kind::X: return "x";
    case Label::Kind::B: return "b";
  }
  return "?";
}

Label parse_label(std::string_view text) {
  auto bad = [&] { return Error(ErrorCode::BadInput, "malformed label '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  if (text == "x") return Label::x();
  if (text == "b") return Label::b();
  Label::Kind kind = Label::Kind::Body;
  std::string_view digits = text;
  if (text.front() == 'c' || text.front() == 'd') {
    kind = text.front() == 'c' ? Label::Kind::C : Label::Kind::D;
    digits.remove_prefix(1);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || value < 0) {
    throw bad();
  }
  return {kind, value};
}

std::vector<Label> body_range(int first, int count) {
  std::vector<Label> v;
  v.reserve(count);
  for (int k = 0; k < count; ++k) v.push_back(Label::body(first + k));
  return v;
}

}  // namespace qpf
