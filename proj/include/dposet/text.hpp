#pragma once

// Text forms:
//   poset  := "dp" INT "h{" pairs "}" "r{" pairs "}"
//   single := "sp" INT "le{" pairs "}"
//   pairs  := empty | pair ("," pair)*      pair := "(" INT "," INT ")"
// Whitespace is ignored. Input pairs are generators; printing always lists
// the full strict relations, sorted, with 1-based vertices.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dposet/poset.hpp"

namespace dposet {

DoublePoset parse_poset(std::string_view text);
SinglePoset parse_single_poset(std::string_view text);

std::string to_string(const DoublePoset& p);
std::string to_string(const SinglePoset& p);

namespace detail {

// Recursive-descent reader over whitespace-stripped input. Errors name the
// production that failed.
class TextReader {
 public:
  explicit TextReader(std::string_view text);

  bool at_end() const { return pos_ == text_.size(); }
  bool peek(std::string_view token) const;
  void expect(std::string_view token, const char* production);
  int integer(const char* production);
  std::vector<std::pair<int, int>> pairs(const char* production);
  void finish(const char* production);

 private:
  [[noreturn]] void fail(const std::string& what, const char* production) const;

  std::string text_;
  std::size_t pos_ = 0;
};

std::string pairs_to_string(const DoublePoset& p, Order o);

}  // namespace detail

}  // namespace dposet
