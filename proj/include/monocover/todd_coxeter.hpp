#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

#include "perm.hpp"
#include "presentation.hpp"

namespace monocover {

inline constexpr std::size_t default_coset_cap = 1000000;

struct CosetTable
{
  enum class Status { closed, cap_exceeded };

  Status status = Status::cap_exceeded;
  std::vector<std::array<std::int32_t, 3>> rows; // rows[coset][generator]
  std::size_t coset_count = 0;
  std::size_t total_defined = 0; // cosets defined over the whole run
  std::size_t max_live = 0;

  bool closed() const noexcept { return status == Status::closed; }

  /// Action of generator g on the cosets (the table must be closed).
  Perm column(int g) const
  {
    if (!closed())
      throw std::logic_error("coset table is not closed");
    std::vector<Point> img(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      img[i] = static_cast<Point>(rows[i][static_cast<std::size_t>(g)]);
    return Perm(std::move(img));
  }
};

namespace detail {

// HLT coset enumeration specialised to three involutory generators: the
// entry table[k][x] = l always comes with table[l][x] = k.
class CosetEnumerator
{
public:
  CosetEnumerator(std::vector<Word> const &relators, std::size_t cap) : cap_(cap)
  {
    for (auto const &w : relators) {
      std::vector<int> r;
      for (std::size_t i = 0; i < w.size(); ++i)
        r.push_back(w.gen(i));
      rels_.push_back(std::move(r));
    }
    new_coset();
  }

  CosetTable run(std::vector<Word> const &subgroup_gens)
  {
    for (auto const &w : subgroup_gens) {
      auto r = w.reduced();
      std::vector<int> s;
      for (std::size_t i = 0; i < r.size(); ++i)
        s.push_back(r.gen(i));
      if (!s.empty() && !fill_with_lookahead(0, s))
        return finish(false);
    }

    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!alive(c))
        continue;
      if (dead_ > live_ && dead_ > 1024)
        c = compact(c);
      for (auto const &r : rels_) {
        if (!fill_with_lookahead(c, r))
          return finish(false);
        if (!alive(c))
          break;
      }
      for (int x = 0; x < 3 && alive(c); ++x) {
        if (table_[c][static_cast<std::size_t>(x)] >= 0)
          continue;
        if (live_ >= cap_ && !lookahead())
          return finish(false);
        if (alive(c) && table_[c][static_cast<std::size_t>(x)] < 0)
          define(c, x);
      }
    }
    return finish(true);
  }

private:
  bool alive(std::size_t k) const { return parent_[k] == static_cast<std::int32_t>(k); }

  std::int32_t new_coset()
  {
    auto k = static_cast<std::int32_t>(table_.size());
    table_.push_back({-1, -1, -1});
    parent_.push_back(k);
    ++live_;
    ++total_;
    max_live_ = std::max(max_live_, live_);
    return k;
  }

  void define(std::size_t k, int x)
  {
    auto l = new_coset();
    table_[k][static_cast<std::size_t>(x)] = l;
    table_[static_cast<std::size_t>(l)][static_cast<std::size_t>(x)] = static_cast<std::int32_t>(k);
  }

  std::int32_t rep(std::int32_t k)
  {
    std::int32_t r = k;
    while (parent_[static_cast<std::size_t>(r)] != r)
      r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(k)] != r) {
      auto next = parent_[static_cast<std::size_t>(k)];
      parent_[static_cast<std::size_t>(k)] = r;
      k = next;
    }
    return r;
  }

  void merge(std::int32_t k, std::int32_t l)
  {
    k = rep(k);
    l = rep(l);
    if (k == l)
      return;
    if (k > l)
      std::swap(k, l);
    parent_[static_cast<std::size_t>(l)] = k;
    queue_.push_back(l);
    --live_;
    ++dead_;
  }

  void coincidence(std::int32_t k, std::int32_t l)
  {
    merge(k, l);
    while (!queue_.empty()) {
      auto e = queue_.front();
      queue_.pop_front();
      for (std::size_t x = 0; x < 3; ++x) {
        auto f = table_[static_cast<std::size_t>(e)][x];
        if (f < 0)
          continue;
        if (table_[static_cast<std::size_t>(f)][x] == e)
          table_[static_cast<std::size_t>(f)][x] = -1;
        auto e1 = rep(e), f1 = rep(f);
        auto &row_e = table_[static_cast<std::size_t>(e1)];
        auto &row_f = table_[static_cast<std::size_t>(f1)];
        if (row_e[x] >= 0) {
          merge(f1, row_e[x]);
        } else if (row_f[x] >= 0) {
          merge(e1, row_f[x]);
        } else {
          row_e[x] = f1;
          row_f[x] = e1;
        }
      }
    }
  }

  // Scans relator r at coset c. With fill, gaps longer than one are closed
  // by defining cosets; returns false only when that would exceed the cap.
  bool scan(std::size_t c, std::vector<int> const &r, bool fill)
  {
    auto const len = static_cast<std::ptrdiff_t>(r.size());
    auto const start = static_cast<std::int32_t>(c);
    std::int32_t f = start;
    std::ptrdiff_t i = 0;
    for (;;) {
      while (i < len && table_[static_cast<std::size_t>(f)][static_cast<std::size_t>(r[static_cast<std::size_t>(i)])] >= 0) {
        f = table_[static_cast<std::size_t>(f)][static_cast<std::size_t>(r[static_cast<std::size_t>(i)])];
        ++i;
      }
      if (i == len) {
        if (f != start)
          coincidence(f, start);
        return true;
      }
      std::int32_t b = start;
      std::ptrdiff_t j = len - 1;
      while (j >= i && table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(r[static_cast<std::size_t>(j)])] >= 0) {
        b = table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(r[static_cast<std::size_t>(j)])];
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      auto const x = static_cast<std::size_t>(r[static_cast<std::size_t>(i)]);
      if (j == i) {
        table_[static_cast<std::size_t>(f)][x] = b;
        table_[static_cast<std::size_t>(b)][x] = f;
        return true;
      }
      if (!fill)
        return true;
      if (live_ >= cap_)
        return false;
      define(static_cast<std::size_t>(f), static_cast<int>(x));
    }
  }

  bool fill_with_lookahead(std::size_t c, std::vector<int> const &r)
  {
    while (!scan(c, r, true)) {
      if (!lookahead())
        return false;
      if (!alive(c))
        return true;
    }
    return true;
  }

  // Scans every live coset against every relator without defining; true
  // when this freed at least one coset.
  bool lookahead()
  {
    auto const before = live_;
    for (std::size_t k = 0; k < table_.size(); ++k) {
      for (auto const &r : rels_) {
        if (!alive(k))
          break;
        scan(k, r, false);
      }
    }
    return live_ < before;
  }

  // Renumbers live cosets in order; returns the new index of coset c.
  std::size_t compact(std::size_t c)
  {
    std::vector<std::int32_t> newidx(table_.size(), -1);
    std::int32_t next = 0;
    for (std::size_t k = 0; k < table_.size(); ++k)
      if (alive(k))
        newidx[k] = next++;
    std::vector<std::array<std::int32_t, 3>> t;
    t.reserve(static_cast<std::size_t>(next));
    for (std::size_t k = 0; k < table_.size(); ++k) {
      if (!alive(k))
        continue;
      auto row = table_[k];
      for (auto &e : row)
        if (e >= 0)
          e = newidx[static_cast<std::size_t>(e)];
      t.push_back(row);
    }
    table_ = std::move(t);
    parent_.resize(table_.size());
    for (std::size_t k = 0; k < parent_.size(); ++k)
      parent_[k] = static_cast<std::int32_t>(k);
    dead_ = 0;
    return static_cast<std::size_t>(newidx[c]);
  }

  CosetTable finish(bool closed)
  {
    CosetTable out;
    out.total_defined = total_;
    out.max_live = max_live_;
    if (!closed) {
      out.status = CosetTable::Status::cap_exceeded;
      out.coset_count = live_;
      return out;
    }
    compact(0);
    out.status = CosetTable::Status::closed;
    out.rows = std::move(table_);
    out.coset_count = out.rows.size();
    return out;
  }

  std::size_t cap_;
  std::vector<std::vector<int>> rels_;
  std::vector<std::array<std::int32_t, 3>> table_;
  std::vector<std::int32_t> parent_;
  std::deque<std::int32_t> queue_;
  std::size_t live_ = 0, dead_ = 0, total_ = 0, max_live_ = 0;
};

} // namespace detail

/**
 * Enumerates the cosets of the subgroup generated by `subgroup_gens` in the
 * group presented by `p`. With no subgroup generators and a closed result,
 * coset_count is the order of the presented group.
 */
inline CosetTable todd_coxeter(Presentation const &p, std::vector<Word> const &subgroup_gens = {},
                               std::size_t cap = default_coset_cap)
{
  if (cap < 1)
    throw std::invalid_argument("coset cap must be positive");
  detail::CosetEnumerator en(p.relators(), cap);
  return en.run(subgroup_gens);
}

} // namespace monocover
