#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace delorder {

/// A word over the ordered alphabet a_1 < a_2 < ..., stored as a sequence of
/// 1-based letter indices. The empty word prints and parses as "e".
///
/// operator<=> is the plain lexicographic order on the index sequence; it
/// exists so words can sit in ordered containers deterministically and has no
/// mathematical role here.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);
  Word(std::initializer_list<int> letters);

  /// Accepts "a1a2a3", "a1 a2 a3", "s3s1", compact digit strings like "312"
  /// (one letter per digit, so alphabets of at most nine letters), "e" for
  /// the empty word, and whitespace-separated mixtures of these.
  static Word parse(std::string_view text);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& letters() const { return letters_; }
  std::span<const int> span() const { return letters_; }

  void push_back(int letter);
  Word reversed() const;
  Word concat(const Word& tail) const;
  int max_letter() const;  // 0 for the empty word
  int count(int letter) const;

  /// Compact text form, e.g. "a1a2a1"; "e" when empty. prefix selects the
  /// letter name ('a' for abstract words, 's' for Coxeter generators).
  std::string str(char prefix = 'a') const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace delorder
