#pragma once

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "su2k/errors.hpp"

namespace su2k {

/// Braid word as (generator index, nonzero exponent) letters, read left to right.
class BraidWord {
 public:
  struct Letter {
    int generator;
    int exponent;
    friend bool operator==(const Letter&, const Letter&) = default;
  };

  BraidWord() = default;
  BraidWord(std::initializer_list<Letter> letters) {
    for (const auto& l : letters) append(l.generator, l.exponent);
  }

  /// Parses "s1^2 s2^-4 s1"; an empty or blank string is the empty word.
  static BraidWord parse(const std::string& text) {
    BraidWord w;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
      if (token.size() < 2 || (token[0] != 's' && token[0] != 'S')) throw DomainError("bad braid letter '" + token + "'");
      const auto caret = token.find('^');
      const std::string index = token.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
      const std::string power = caret == std::string::npos ? "1" : token.substr(caret + 1);
      int g = 0, e = 0;
      try {
        std::size_t used = 0;
        g = std::stoi(index, &used);
        if (used != index.size()) throw std::invalid_argument(index);
        e = std::stoi(power, &used);
        if (used != power.size()) throw std::invalid_argument(power);
      } catch (const std::logic_error&) {
        throw DomainError("bad braid letter '" + token + "'");
      }
      if (g < 1) throw DomainError("braid generator index must be >= 1 in '" + token + "'");
      if (e == 0) throw DomainError("zero exponent in '" + token + "'");
      w.letters_.push_back({g, e});
    }
    return w;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& l : letters_) {
      if (!out.empty()) out += ' ';
      out += "s" + std::to_string(l.generator);
      if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
    }
    return out;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  /// Appends s_g^e, merging with a trailing letter on the same generator.
  BraidWord& append(int generator, int exponent) {
    if (generator < 1) throw DomainError("braid generator index must be >= 1");
    if (exponent == 0) return *this;
    if (!letters_.empty() && letters_.back().generator == generator) {
      letters_.back().exponent += exponent;
      if (letters_.back().exponent == 0) letters_.pop_back();
    } else {
      letters_.push_back({generator, exponent});
    }
    return *this;
  }

  /// Every exponent even.
  bool is_double_braid() const {
    for (const auto& l : letters_)
      if (l.exponent % 2 != 0) return false;
    return true;
  }

  int max_generator() const {
    int m = 0;
    for (const auto& l : letters_) m = std::max(m, l.generator);
    return m;
  }

  /// Sum of |exponent|.
  int length() const {
    int n = 0;
    for (const auto& l : letters_) n += l.exponent < 0 ? -l.exponent : l.exponent;
    return n;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<Letter> letters_;
};

}  // namespace su2k
