#include "fcrs/word.hpp"

#include <algorithm>
#include <cctype>

namespace fcrs {

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out));
}

Word formal_inverse(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (size_t i = w.size(); i > 0; --i) out.push_back(w[i - 1].inverse());
  return Word(std::move(out));
}

Word letter_power(Letter l, long long exponent) {
  Letter base = exponent < 0 ? l.inverse() : l;
  long long count = exponent < 0 ? -exponent : exponent;
  std::vector<Letter> out(static_cast<size_t>(count), base);
  return Word(std::move(out));
}

namespace {

bool valid_token(std::string_view token) {
  if (token.empty()) return false;
  if (token == "1") return false;  // reserved for the empty word
  for (char c : token) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (c == '#' || c == '^') return false;
  }
  return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> generator_tokens) {
  for (auto& t : generator_tokens) add_generator(std::move(t));
}

int Alphabet::add_generator(std::string token) {
  if (!valid_token(token))
    throw ParseError("invalid generator token '" + token + "'");
  if (index_.count(token))
    throw ParseError("duplicate generator token '" + token + "'");
  int idx = static_cast<int>(tokens_.size());
  index_.emplace(token, idx);
  tokens_.push_back(std::move(token));
  return idx;
}

bool Alphabet::has_generator(std::string_view token) const {
  return index_.count(std::string(token)) != 0;
}

int Alphabet::generator_index(std::string_view token) const {
  auto it = index_.find(std::string(token));
  return it == index_.end() ? -1 : it->second;
}

std::optional<Letter> Alphabet::try_parse_letter(std::string_view token) const {
  int sign = +1;
  static constexpr std::string_view kInverseSuffix = "^-1";
  if (token.size() > kInverseSuffix.size() &&
      token.substr(token.size() - kInverseSuffix.size()) == kInverseSuffix) {
    sign = -1;
    token.remove_suffix(kInverseSuffix.size());
  }
  int idx = generator_index(token);
  if (idx < 0) return std::nullopt;
  return Letter::make(idx, sign);
}

Letter Alphabet::parse_letter(std::string_view token) const {
  auto l = try_parse_letter(token);
  if (!l) throw ParseError("unknown letter '" + std::string(token) + "'");
  return *l;
}

Word Alphabet::parse_word(std::string_view text) const {
  Word out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view token = text.substr(i, j - i);
    if (token != "1") out.push_back(parse_letter(token));
    i = j;
  }
  return out;
}

std::string Alphabet::print(Letter l) const {
  std::string out = tokens_[static_cast<size_t>(l.generator())];
  if (l.negative()) out += "^-1";
  return out;
}

std::string Alphabet::print(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += print(w[i]);
  }
  return out;
}

}  // namespace fcrs
