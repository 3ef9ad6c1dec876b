#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "flag_system.hpp"
#include "perm.hpp"

namespace monocover {

/**
 * A word over the involutory generators a = r0, b = r1, c = r2.
 *
 * No inverse letters exist: every generator is its own inverse, so the
 * inverse of a word is its reversal and a negative power (xy)^-k is the
 * positive power (yx)^k.
 */
class Word
{
public:
  Word() = default;

  /// Throws std::invalid_argument on letters outside "abc".
  explicit Word(std::string_view letters) : letters_(letters)
  {
    for (char ch : letters_)
      if (ch < 'a' || ch > 'c')
        throw std::invalid_argument("word letter must be one of a, b, c: '" + std::string(letters) + "'");
  }

  std::string const &str() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Generator index (0, 1, 2) of the i-th letter.
  int gen(std::size_t i) const { return letters_[i] - 'a'; }

  Word operator*(Word const &rhs) const
  {
    Word w;
    w.letters_ = letters_ + rhs.letters_;
    return w;
  }
  Word &operator*=(Word const &rhs)
  {
    letters_ += rhs.letters_;
    return *this;
  }

  Word pow(int k) const
  {
    if (k < 0)
      return inverse().pow(-k);
    Word w;
    for (int i = 0; i < k; ++i)
      w.letters_ += letters_;
    return w;
  }

  Word inverse() const
  {
    Word w;
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    return w;
  }

  /// Cancels adjacent equal letters until none remain.
  Word reduced() const
  {
    Word w;
    for (char ch : letters_) {
      if (!w.letters_.empty() && w.letters_.back() == ch)
        w.letters_.pop_back();
      else
        w.letters_.push_back(ch);
    }
    return w;
  }

  friend bool operator==(Word const &, Word const &) = default;
  friend auto operator<=>(Word const &, Word const &) = default;

private:
  std::string letters_;
};

inline Word free_reduce(Word const &w) { return w.reduced(); }
inline Word word_inverse(Word const &w) { return w.inverse(); }

namespace words {

inline Word a() { return Word("a"); }
inline Word b() { return Word("b"); }
inline Word c() { return Word("c"); }
inline Word ab() { return Word("ab"); }
inline Word ba() { return Word("ba"); }

} // namespace words

/// Right action of w on points: letters act left to right.
inline Perm evaluate(Word const &w, std::array<Perm, 3> const &gens)
{
  std::size_t const n = gens[0].degree();
  std::vector<Point> img(n);
  for (Point x = 0; x < n; ++x) {
    Point y = x;
    for (char ch : w.str())
      y = gens[static_cast<std::size_t>(ch - 'a')][y];
    img[x] = y;
  }
  return Perm(std::move(img));
}

inline Perm evaluate(Word const &w, FlagSystem const &fs) { return evaluate(w, fs.involutions()); }

/// Image of a single flag under w.
inline Point act(Word const &w, FlagSystem const &fs, Point flag)
{
  for (char ch : w.str())
    flag = fs.r(ch - 'a')[flag];
  return flag;
}

} // namespace monocover
