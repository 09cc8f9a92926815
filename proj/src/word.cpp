#include "delorder/word.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "delorder/errors.hpp"

namespace delorder {

namespace {

void check_letter(int letter) {
  if (letter < 1) {
    throw InputError("letter index must be >= 1, got " + std::to_string(letter));
  }
}

}  // namespace

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int a : letters_) check_letter(a);
}

Word::Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

void Word::push_back(int letter) {
  check_letter(letter);
  letters_.push_back(letter);
}

Word Word::reversed() const {
  Word out = *this;
  std::reverse(out.letters_.begin(), out.letters_.end());
  return out;
}

Word Word::concat(const Word& tail) const {
  Word out = *this;
  out.letters_.insert(out.letters_.end(), tail.letters_.begin(), tail.letters_.end());
  return out;
}

int Word::max_letter() const {
  int top = 0;
  for (int a : letters_) top = std::max(top, a);
  return top;
}

int Word::count(int letter) const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), letter));
}

Word Word::parse(std::string_view text) {
  std::vector<int> letters;
  std::size_t i = 0;
  auto at_boundary = [&](std::size_t pos) {
    return pos >= text.size() || std::isspace(static_cast<unsigned char>(text[pos]));
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == 'e' || c == 'E') {
      if (!at_boundary(i + 1)) {
        throw InputError("bad word syntax near 'e' in \"" + std::string(text) + "\"");
      }
      ++i;  // the empty word contributes nothing
      continue;
    }
    if (c == 'a' || c == 'A' || c == 's' || c == 'S') {
      ++i;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw InputError("expected a digit after '" + std::string(1, c) + "' in \"" +
                         std::string(text) + "\"");
      }
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      check_letter(value);
      letters.push_back(value);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // compact form: one letter per digit
      if (c == '0') {
        throw InputError("letter digit must be 1..9 in \"" + std::string(text) + "\"");
      }
      letters.push_back(c - '0');
      ++i;
      continue;
    }
    throw InputError("bad word syntax at '" + std::string(1, c) + "' in \"" +
                     std::string(text) + "\"");
  }
  return Word(std::move(letters));
}

std::string Word::str(char prefix) const {
  if (letters_.empty()) return "e";
  std::string out;
  for (int a : letters_) {
    out.push_back(prefix);
    out += std::to_string(a);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

}  // namespace delorder
