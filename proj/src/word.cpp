#include "tbraid/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>

namespace tbraid {

StrandCount::StrandCount(int n) : n_(n) {
  if (n < 2 || n > kMaxStrands) {
    throw InvalidStrands("strand count must lie in [2, " +
                         std::to_string(kMaxStrands) + "], got " +
                         std::to_string(n));
  }
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v]) {
      throw BraidError("Permutation: images are not a bijection of 1..n");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) {
    im[i] = i + 1;
  }
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(Permutation const& other) const {
  if (size() != other.size()) {
    throw StrandMismatch("Permutation: size mismatch");
  }
  std::vector<int> im(images_.size());
  for (int p = 1; p <= size(); ++p) {
    im[p - 1] = (*this)(other(p));
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int p = 1; p <= size(); ++p) {
    im[(*this)(p) - 1] = p;
  }
  return Permutation(std::move(im));
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size() + 1, false);
  std::vector<int> out;
  for (int p = 1; p <= size(); ++p) {
    if (seen[p]) {
      continue;
    }
    int len = 0;
    for (int q = p; !seen[q]; q = (*this)(q)) {
      seen[q] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

BraidWord::BraidWord(StrandCount n, std::vector<int> letters)
    : n_(n), letters_(std::move(letters)) {
  for (int l : letters_) {
    if (l == 0 || std::abs(l) > n_.generators()) {
      throw InvalidLetter("letter " + std::to_string(l) +
                          " is not a generator of B_" +
                          std::to_string(n_.value()));
    }
  }
}

bool BraidWord::is_positive_word() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](int l) { return l > 0; });
}

BraidWord& BraidWord::operator*=(BraidWord const& rhs) {
  if (rhs.n_ != n_) {
    throw StrandMismatch("concat: words on " + std::to_string(n()) + " and " +
                         std::to_string(rhs.n()) + " strands");
  }
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

std::vector<int> parse_letters(std::string_view text) {
  std::vector<int> letters;
  std::size_t i = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',';
  };
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) {
      ++j;
    }
    auto token = text.substr(i, j - i);
    if (token.front() == '+') {
      token.remove_prefix(1);
    }
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() ||
        value == 0) {
      throw ParseError("invalid letter '" + std::string(text.substr(i, j - i)) +
                       "'");
    }
    letters.push_back(value);
    i = j;
  }
  return letters;
}

BraidWord parse_word(StrandCount n, std::string_view text) {
  return BraidWord(n, parse_letters(text));
}

BraidWord parse_word(int n, std::string_view text) {
  return parse_word(StrandCount(n), text);
}

std::string to_string(BraidWord const& w) {
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += std::to_string(l);
  }
  return out;
}

BraidWord concat(BraidWord const& a, BraidWord const& b) { return a * b; }

BraidWord invert_word(BraidWord const& x) {
  std::vector<int> out(x.letters().rbegin(), x.letters().rend());
  for (int& l : out) {
    l = -l;
  }
  return BraidWord(x.strands(), std::move(out));
}

BraidWord reverse_word(BraidWord const& x) {
  return BraidWord(x.strands(),
                   std::vector<int>(x.letters().rbegin(), x.letters().rend()));
}

BraidWord eps_word(BraidWord const& x) {
  std::vector<int> out = x.letters();
  for (int& l : out) {
    l = -l;
  }
  return BraidWord(x.strands(), std::move(out));
}

BraidWord free_reduce(BraidWord const& x) {
  std::vector<int> out;
  out.reserve(x.size());
  for (int l : x.letters()) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return BraidWord(x.strands(), std::move(out));
}

BraidWord power(BraidWord const& x, int k) {
  BraidWord base = k >= 0 ? x : invert_word(x);
  BraidWord out(x.strands());
  for (int i = 0; i < std::abs(k); ++i) {
    out *= base;
  }
  return out;
}

int exponent_sum(BraidWord const& x) {
  int s = 0;
  for (int l : x.letters()) {
    s += l > 0 ? 1 : -1;
  }
  return s;
}

Permutation underlying_permutation(BraidWord const& x) {
  std::vector<int> im(x.n());
  for (int i = 0; i < x.n(); ++i) {
    im[i] = i + 1;
  }
  for (int l : x.letters()) {
    int i = std::abs(l) - 1;
    std::swap(im[i], im[i + 1]);
  }
  return Permutation(std::move(im));
}

}  // namespace tbraid
