#include "meridian/fpgroups/tietze.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <tuple>

namespace meridian {

namespace {

struct State {
  std::vector<std::string> names;
  std::vector<Word> relators;

  std::size_t total_length() const {
    std::size_t n = 0;
    for (const auto& r : relators) n += r.size();
    return n;
  }
};

// Cyclic reduction, identity and duplicate removal. Returns relators removed.
std::size_t normalize(State& s) {
  Presentation p(s.names, {});
  std::size_t before = s.relators.size();
  for (const auto& r : s.relators) p.add_relator(r);
  p.remove_duplicate_relators();
  s.relators = p.relators();
  return before - s.relators.size();
}

// Attempts the elimination of generator g using relator index ri.
State eliminate(const State& s, std::size_t ri, int g) {
  const Word& r = s.relators[ri];
  std::size_t pos = 0;
  while (std::abs(r[pos]) != g) ++pos;
  std::vector<int> rest;
  for (std::size_t k = 1; k < r.size(); ++k) rest.push_back(r[(pos + k) % r.size()]);
  // r ~ g^e * rest, so g = rest^-1 when e = +1 and g = rest when e = -1.
  Word image(rest);
  if (r[pos] > 0) image = image.inverse();

  const int n = static_cast<int>(s.names.size());
  std::vector<Word> renumber(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    if (k != g) renumber[static_cast<std::size_t>(k - 1)] = Word::generator(k < g ? k : k - 1);
  const Word g_image = substitute(image, renumber);
  renumber[static_cast<std::size_t>(g - 1)] = g_image;

  State out;
  out.names = s.names;
  out.names.erase(out.names.begin() + (g - 1));
  for (std::size_t k = 0; k < s.relators.size(); ++k) {
    if (k == ri) continue;
    Word w = substitute(s.relators[k], renumber).cyclically_reduced();
    if (!w.empty()) out.relators.push_back(std::move(w));
  }
  return out;
}

std::optional<State> best_elimination(const State& s) {
  std::vector<std::tuple<std::size_t, int, std::size_t>> candidates;
  for (std::size_t ri = 0; ri < s.relators.size(); ++ri) {
    const Word& r = s.relators[ri];
    for (int g = 1; g <= static_cast<int>(s.names.size()); ++g)
      if (r.occurrences(g) == 1) candidates.emplace_back(r.size(), g, ri);
  }
  std::sort(candidates.begin(), candidates.end());
  const std::size_t old_total = s.total_length();
  for (const auto& [len, g, ri] : candidates) {
    State next = eliminate(s, ri, g);
    if (next.total_length() <= old_total) return next;
  }
  return std::nullopt;
}

// Longest subword u of the cyclic word `target` that is a prefix of a cyclic
// conjugate u*v of `rel` (or its inverse) with |u| > |v|; returns target with
// u replaced by v^-1.
std::optional<Word> shorten(const Word& target, const Word& rel) {
  const std::size_t m_len = target.size();
  const std::size_t l_len = rel.size();
  if (l_len == 0 || m_len == 0) return std::nullopt;
  std::size_t best = 0;
  std::vector<int> best_rot;
  std::size_t best_pos = 0;
  for (const Word& base : {rel, rel.inverse()}) {
    const auto& b = base.letters();
    std::vector<int> rot(l_len);
    for (std::size_t s = 0; s < l_len; ++s) {
      for (std::size_t t = 0; t < l_len; ++t) rot[t] = b[(s + t) % l_len];
      for (std::size_t p = 0; p < m_len; ++p) {
        std::size_t m = 0;
        const std::size_t cap = std::min(l_len, m_len);
        while (m < cap && target[(p + m) % m_len] == rot[m]) ++m;
        if (2 * m > l_len && m > best) {
          best = m;
          best_rot = rot;
          best_pos = p;
        }
      }
    }
  }
  if (best == 0) return std::nullopt;
  std::vector<int> letters;
  for (std::size_t t = l_len; t-- > best;) letters.push_back(-best_rot[t]);
  for (std::size_t t = best; t < m_len; ++t) letters.push_back(target[(best_pos + t) % m_len]);
  return Word(letters).cyclically_reduced();
}

bool shorten_any(State& s) {
  for (std::size_t i = 0; i < s.relators.size(); ++i)
    for (std::size_t j = 0; j < s.relators.size(); ++j) {
      if (i == j || s.relators[j].size() > 2 * s.relators[i].size() + 1) continue;
      if (auto w = shorten(s.relators[i], s.relators[j])) {
        s.relators[i] = std::move(*w);
        return true;
      }
    }
  return false;
}

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, std::size_t budget) {
  State s{p.generator_names(), p.relators()};
  TietzeResult result;
  normalize(s);
  const std::size_t start_relators = p.relators().size();
  const int start_generators = p.generator_count();

  while (true) {
    State next = s;
    bool moved = false;
    if (auto eliminated = best_elimination(s)) {
      next = std::move(*eliminated);
      moved = true;
    } else {
      moved = shorten_any(next);
    }
    if (!moved) break;
    if (result.steps >= budget) {
      result.budget_exhausted = true;
      break;
    }
    s = std::move(next);
    ++result.steps;
    normalize(s);
  }
  result.generators_eliminated =
      static_cast<std::size_t>(start_generators) - s.names.size();
  result.relators_removed = start_relators - s.relators.size();
  result.presentation = Presentation(std::move(s.names), std::move(s.relators));
  return result;
}

}  // namespace meridian
