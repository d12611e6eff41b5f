#include "dposet/text.hpp"

#include <cctype>

#include "dposet/errors.hpp"

namespace dposet {

namespace detail {

TextReader::TextReader(std::string_view text) {
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }
}

bool TextReader::peek(std::string_view token) const { return std::string_view(text_).substr(pos_).starts_with(token); }

void TextReader::fail(const std::string& what, const char* production) const {
  throw ParseError("parse error in production '" + std::string(production) + "': " + what + " at offset " +
                   std::to_string(pos_));
}

void TextReader::expect(std::string_view token, const char* production) {
  if (!peek(token)) fail("expected '" + std::string(token) + "'", production);
  pos_ += token.size();
}

int TextReader::integer(const char* production) {
  std::size_t end = pos_;
  while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
  if (end == pos_) fail("expected INT", production);
  if (end - pos_ > 6) fail("INT too large", production);
  const int value = std::stoi(text_.substr(pos_, end - pos_));
  pos_ = end;
  return value;
}

std::vector<std::pair<int, int>> TextReader::pairs(const char* production) {
  std::vector<std::pair<int, int>> out;
  if (peek("}")) return out;
  while (true) {
    expect("(", "pair");
    const int a = integer("pair");
    expect(",", "pair");
    const int b = integer("pair");
    expect(")", "pair");
    out.emplace_back(a, b);
    if (!peek(",")) break;
    expect(",", production);
  }
  return out;
}

void TextReader::finish(const char* production) {
  if (!at_end()) fail("trailing input", production);
}

std::string pairs_to_string(const DoublePoset& p, Order o) {
  std::string out;
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (!p.less(o, x, y)) continue;
      if (!out.empty()) out += ',';
      out += '(' + std::to_string(x + 1) + ',' + std::to_string(y + 1) + ')';
    }
  }
  return out;
}

}  // namespace detail

DoublePoset parse_poset(std::string_view text) {
  detail::TextReader in(text);
  in.expect("dp", "poset");
  const int n = in.integer("poset");
  in.expect("h{", "poset");
  const auto h = in.pairs("pairs");
  in.expect("}", "poset");
  in.expect("r{", "poset");
  const auto r = in.pairs("pairs");
  in.expect("}", "poset");
  in.finish("poset");
  return DoublePoset::from_generators(n, h, r);
}

SinglePoset parse_single_poset(std::string_view text) {
  detail::TextReader in(text);
  in.expect("sp", "single");
  const int n = in.integer("single");
  in.expect("le{", "single");
  const auto le = in.pairs("pairs");
  in.expect("}", "single");
  in.finish("single");
  return SinglePoset::from_generators(n, le);
}

std::string to_string(const DoublePoset& p) {
  return "dp " + std::to_string(p.size()) + " h{" + detail::pairs_to_string(p, Order::h) + "} r{" +
         detail::pairs_to_string(p, Order::r) + "}";
}

std::string to_string(const SinglePoset& p) {
  return "sp " + std::to_string(p.size()) + " le{" + detail::pairs_to_string(p.as_first_order(), Order::h) + "}";
}

}  // namespace dposet
