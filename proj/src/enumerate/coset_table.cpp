#include "meridian/enumerate/coset_table.hpp"

#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>

#include "meridian/error.hpp"

namespace meridian {

SubgroupSpec SubgroupSpec::generated_by(std::vector<Word> words) {
  SubgroupSpec h;
  h.generators = std::move(words);
  return h;
}

SubgroupSpec SubgroupSpec::kernel(std::vector<long> target, std::vector<std::vector<long>> images) {
  for (long d : target)
    if (d < 1) throw InvalidArgument("kernel target factors must be positive");
  for (const auto& img : images)
    if (img.size() != target.size())
      throw InvalidArgument("kernel image has the wrong number of coordinates");
  SubgroupSpec h;
  h.mode = Mode::kernel;
  h.target = std::move(target);
  h.images = std::move(images);
  return h;
}

CosetTable::CosetTable(int generator_count, std::vector<std::uint32_t> entries,
                       SubgroupSpec subgroup)
    : gens_(generator_count),
      index_(generator_count ? entries.size() / (2 * static_cast<std::size_t>(generator_count)) : 1),
      entries_(std::move(entries)),
      subgroup_(std::move(subgroup)) {}

namespace {

std::size_t column(int letter) {
  return letter > 0 ? 2 * static_cast<std::size_t>(letter - 1)
                    : 2 * static_cast<std::size_t>(-letter - 1) + 1;
}

}  // namespace

std::size_t CosetTable::act(std::size_t coset, int letter) const {
  if (letter == 0 || std::abs(letter) > gens_) throw MalformedWord("letter out of range");
  return entries_[coset * 2 * static_cast<std::size_t>(gens_) + column(letter)];
}

std::size_t CosetTable::trace(std::size_t coset, const Word& w) const {
  for (int l : w) coset = act(coset, l);
  return coset;
}

std::vector<std::size_t> CosetTable::permutation(int generator) const {
  std::vector<std::size_t> out(index_);
  for (std::size_t c = 0; c < index_; ++c) out[c] = act(c, generator);
  return out;
}

std::size_t default_max_cosets() {
  if (const char* env = std::getenv("MERIDIAN_MAX_COSETS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

namespace {

constexpr std::int64_t undefined = -1;

struct TableFull {};

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t max_cosets)
      : cols_(2 * static_cast<std::size_t>(p.generator_count())), max_(max_cosets) {
    for (const Word& r : p.relators()) relators_.push_back(to_cols(r));
    new_coset();
  }

  EnumerationResult run(const std::vector<Word>& subgroup_gens, const SubgroupSpec& spec) {
    EnumerationResult result;
    try {
      for (const Word& h : subgroup_gens) with_room([&] { scan_and_fill(0, to_cols(h)); });
      for (std::size_t c = 0; c < parent_.size(); ++c) {
        if (!alive(c)) continue;
        with_room([&] {
          for (const auto& r : relators_) {
            scan_and_fill(c, r);
            if (!alive(c)) return;
          }
          for (std::size_t x = 0; x < cols_; ++x)
            if (alive(c) && at(c, x) == undefined) define(c, x);
        });
      }
    } catch (const TableFull&) {
      result.status = EnumerationStatus::overflow;
      result.peak_cosets = peak_;
      result.defined_cosets = parent_.size();
      return result;
    }
    result.status = EnumerationStatus::complete;
    result.peak_cosets = peak_;
    result.defined_cosets = parent_.size();
    result.table = standardize(spec);
    return result;
  }

 private:
  static std::vector<std::size_t> to_cols(const Word& w) {
    std::vector<std::size_t> out;
    for (int l : w) out.push_back(column(l));
    return out;
  }

  std::int64_t& at(std::size_t c, std::size_t x) { return table_[c * cols_ + x]; }
  bool alive(std::size_t c) const { return parent_[c] == c; }

  // Runs f; on a full table performs a lookahead and retries while it frees
  // cosets. Rethrows TableFull when it does not.
  template <class F>
  bool with_room(F&& f) {
    while (true) {
      try {
        f();
        return true;
      } catch (const TableFull&) {
        const std::size_t before = live_;
        lookahead();
        if (live_ >= before) throw;
      }
    }
  }

  std::size_t new_coset() {
    if (live_ >= max_) throw TableFull{};
    const std::size_t c = parent_.size();
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, undefined);
    ++live_;
    peak_ = std::max(peak_, live_);
    return c;
  }

  void define(std::size_t c, std::size_t x) {
    const std::size_t d = new_coset();
    at(c, x) = static_cast<std::int64_t>(d);
    at(d, x ^ 1) = static_cast<std::int64_t>(c);
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::size_t a, std::size_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    queue_.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    merge(a, b);
    while (!queue_.empty()) {
      const std::size_t e = queue_.front();
      queue_.pop_front();
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::int64_t fv = at(e, x);
        if (fv == undefined) continue;
        const auto f = static_cast<std::size_t>(fv);
        at(f, x ^ 1) = undefined;
        const std::size_t e1 = rep(e), f1 = rep(f);
        if (at(e1, x) != undefined) {
          merge(f1, static_cast<std::size_t>(at(e1, x)));
        } else if (at(f1, x ^ 1) != undefined) {
          merge(e1, static_cast<std::size_t>(at(f1, x ^ 1)));
        } else {
          at(e1, x) = static_cast<std::int64_t>(f1);
          at(f1, x ^ 1) = static_cast<std::int64_t>(e1);
        }
      }
    }
  }

  // Scans w at c; defines new cosets when `fill` is set.
  void scan(std::size_t c, const std::vector<std::size_t>& w, bool fill) {
    if (w.empty()) return;
    std::size_t f = c, b = c;
    std::size_t i = 0;
    std::size_t j = w.size();  // one past the last unscanned letter
    while (true) {
      while (i < j && at(f, w[i]) != undefined) f = static_cast<std::size_t>(at(f, w[i++]));
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, w[j - 1] ^ 1) != undefined)
        b = static_cast<std::size_t>(at(b, w[--j] ^ 1));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = static_cast<std::int64_t>(b);
        at(b, w[i] ^ 1) = static_cast<std::int64_t>(f);
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) { scan(c, w, true); }

  void lookahead() {
    for (std::size_t c = 0; c < parent_.size(); ++c)
      for (const auto& r : relators_) {
        if (!alive(c)) break;
        scan(c, r, false);
      }
  }

  CosetTable standardize(const SubgroupSpec& spec) {
    std::vector<std::int64_t> number(parent_.size(), -1);
    std::vector<std::size_t> order{0};
    number[0] = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::int64_t dv = at(order[k], x);
        if (dv == undefined) throw std::logic_error("coset enumeration left a gap");
        const auto d = static_cast<std::size_t>(dv);
        if (number[d] < 0) {
          number[d] = static_cast<std::int64_t>(order.size());
          order.push_back(d);
        }
      }
    std::vector<std::uint32_t> entries;
    entries.reserve(order.size() * cols_);
    for (std::size_t c : order)
      for (std::size_t x = 0; x < cols_; ++x)
        entries.push_back(static_cast<std::uint32_t>(number[static_cast<std::size_t>(at(c, x))]));
    return CosetTable(static_cast<int>(cols_ / 2), std::move(entries), spec);
  }

  std::size_t cols_;
  std::size_t max_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::int64_t> table_;
  std::vector<std::size_t> parent_;
  std::deque<std::size_t> queue_;
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
};

long mod(long a, long d) {
  const long r = a % d;
  return r < 0 ? r + d : r;
}

EnumerationResult enumerate_kernel(const Presentation& p, const SubgroupSpec& h,
                                   std::size_t max_cosets) {
  const std::size_t n = static_cast<std::size_t>(p.generator_count());
  const std::size_t k = h.target.size();
  if (h.images.size() != n)
    throw InvalidArgument("kernel map needs one image per generator");
  auto apply = [&](std::vector<long> v, int letter) {
    const auto& img = h.images[static_cast<std::size_t>(std::abs(letter) - 1)];
    for (std::size_t j = 0; j < k; ++j) v[j] = mod(v[j] + (letter > 0 ? img[j] : -img[j]), h.target[j]);
    return v;
  };
  const std::vector<long> zero(k, 0);
  for (const Word& r : p.relators()) {
    std::vector<long> v = zero;
    for (int l : r) v = apply(v, l);
    if (v != zero) throw InvalidArgument("relator does not lie in the kernel");
  }
  std::map<std::vector<long>, std::uint32_t> number{{zero, 0}};
  std::vector<std::vector<long>> order{zero};
  std::vector<std::uint32_t> entries;
  EnumerationResult result;
  for (std::size_t c = 0; c < order.size(); ++c)
    for (std::size_t x = 0; x < 2 * n; ++x) {
      const int letter = (x % 2 == 0) ? static_cast<int>(x / 2) + 1 : -(static_cast<int>(x / 2) + 1);
      auto v = apply(order[c], letter);
      auto [it, inserted] = number.emplace(v, static_cast<std::uint32_t>(order.size()));
      if (inserted) {
        if (order.size() >= max_cosets) {
          result.peak_cosets = result.defined_cosets = order.size();
          return result;
        }
        order.push_back(std::move(v));
      }
      entries.push_back(it->second);
    }
  result.status = EnumerationStatus::complete;
  result.peak_cosets = result.defined_cosets = order.size();
  if (n == 0) entries.clear();
  result.table = CosetTable(static_cast<int>(n), std::move(entries), h);
  return result;
}

}  // namespace

EnumerationResult todd_coxeter(const Presentation& p, const SubgroupSpec& h, std::size_t max_cosets) {
  if (max_cosets == 0) throw InvalidArgument("max_cosets must be at least 1");
  if (h.mode == SubgroupSpec::Mode::kernel) return enumerate_kernel(p, h, max_cosets);
  for (const Word& w : h.generators)
    if (w.max_generator() > p.generator_count())
      throw MalformedWord("subgroup generator uses an unknown generator");
  if (p.generator_count() == 0) {
    EnumerationResult r;
    r.status = EnumerationStatus::complete;
    r.peak_cosets = r.defined_cosets = 1;
    r.table = CosetTable(0, {}, h);
    return r;
  }
  return Enumerator(p, max_cosets).run(h.generators, h);
}

}  // namespace meridian
