#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fcrs {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One signed generator occurrence. The code packs (generator << 1) | sign,
/// so a letter and its inverse differ only in the low bit and inversion never
/// needs the alphabet.
struct Letter {
  int32_t code = 0;

  Letter() = default;
  constexpr explicit Letter(int32_t c) : code(c) {}

  static constexpr Letter make(int generator, int sign) {
    return Letter(static_cast<int32_t>(generator) * 2 + (sign < 0 ? 1 : 0));
  }

  constexpr int generator() const { return code >> 1; }
  constexpr int sign() const { return (code & 1) ? -1 : +1; }
  constexpr bool negative() const { return (code & 1) != 0; }
  constexpr Letter inverse() const { return Letter(code ^ 1); }

  friend constexpr bool operator==(Letter a, Letter b) = default;
  friend constexpr auto operator<=>(Letter a, Letter b) = default;
};

/// A finite sequence of letters. The empty word is the monoid identity and
/// prints as "1".
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Letter operator[](size_t i) const { return letters_[i]; }
  Letter& operator[](size_t i) { return letters_[i]; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void clear() { letters_.clear(); }
  void push_back(Letter l) { letters_.push_back(l); }
  void append(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  }

  Word subword(size_t pos, size_t len) const {
    return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::vector<Letter>& letters() { return letters_; }

  friend bool operator==(const Word& a, const Word& b) = default;
  friend auto operator<=>(const Word& a, const Word& b) = default;

 private:
  std::vector<Letter> letters_;
};

Word concat(const Word& a, const Word& b);

/// Reverses the word and flips every sign; an involution and an
/// anti-homomorphism of the free monoid with involution.
Word formal_inverse(const Word& w);

/// |exponent| copies of the letter, inverted when the exponent is negative.
Word letter_power(Letter l, long long exponent);

struct WordHash {
  size_t operator()(const Word& w) const {
    uint64_t h = 1469598103934665603ull;
    for (Letter l : w) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(l.code));
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

/// The set of generator tokens. Inverse letters are implicit: the token `g`
/// yields letters `g` and `g^-1`. Tokens keep their declaration order, which
/// downstream code uses as a tie-break.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> generator_tokens);

  /// Returns the index of the new generator. Throws ParseError on duplicates
  /// or malformed tokens (empty, containing whitespace, '#' or '^').
  int add_generator(std::string token);

  size_t generator_count() const { return tokens_.size(); }
  size_t letter_count() const { return tokens_.size() * 2; }

  bool has_generator(std::string_view token) const;
  int generator_index(std::string_view token) const;  // -1 when absent

  const std::string& token(int generator) const { return tokens_[generator]; }
  const std::vector<std::string>& tokens() const { return tokens_; }

  Letter positive(int generator) const { return Letter::make(generator, +1); }

  /// Parses "tok" or "tok^-1"; throws ParseError for unknown generators.
  Letter parse_letter(std::string_view token) const;
  std::optional<Letter> try_parse_letter(std::string_view token) const;

  /// Whitespace-separated letter tokens. The token "1" contributes the empty
  /// word, so both "1" and "a b" parse.
  Word parse_word(std::string_view text) const;

  std::string print(Letter l) const;
  std::string print(const Word& w) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace fcrs
