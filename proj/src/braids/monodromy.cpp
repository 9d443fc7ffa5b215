#include "meridian/braids/monodromy.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "braids/braid_reader.hpp"
#include "fpgroups/word_reader.hpp"
#include "meridian/error.hpp"
#include "text/scanner.hpp"

namespace meridian {

void PathTable::add(std::string name, BraidWord braid) {
  if (braid.strands() != strands_)
    throw InvalidArgument("path '" + name + "' has " + std::to_string(braid.strands()) +
                          " strands, table has " + std::to_string(strands_));
  if (contains(name)) throw InvalidArgument("duplicate path name '" + name + "'");
  entries_.emplace_back(std::move(name), std::move(braid));
}

bool PathTable::contains(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const auto& e) { return e.first == name; });
}

const BraidWord& PathTable::at(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.first == name) return e.second;
  throw InvalidArgument("unknown path name '" + std::string(name) + "'");
}

BraidWord compose_path_monodromy(const PathTable& table, const std::vector<PathStep>& path) {
  BraidWord out(table.strands());
  for (const auto& step : path) {
    const BraidWord& b = table.at(step.name);
    out *= step.inverse ? b.inverse() : b;
  }
  return out;
}

namespace {

void append_relators(const BraidWord& beta, int n, Reduction reduction,
                     std::vector<Word>& out) {
  const auto& l = beta.letters();
  std::vector<int> strands;
  std::vector<int> c_letters;
  if (reduction == Reduction::block) {
    std::size_t lo = 0, hi = l.size();
    while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
      c_letters.push_back(l[lo]);
      ++lo;
      --hi;
    }
    std::set<int> used;
    for (std::size_t k = lo; k < hi; ++k) used.insert(std::abs(l[k]));
    // Each maximal run a..b of sigma indices is a block on strands a..b+1;
    // the relator of the last strand follows from the others.
    strands.assign(used.begin(), used.end());
  } else {
    for (int i = 1; i <= n; ++i) strands.push_back(i);
  }
  const BraidWord c_inv = BraidWord(n, c_letters).inverse();
  for (int k : strands) {
    const Word h = artin_action(c_inv, Word::generator(k));
    out.push_back(artin_action(beta, h) * h.inverse());
  }
}

}  // namespace

Presentation zvk_presentation(const MonodromyData& m, Reduction reduction) {
  std::vector<Word> relators;
  for (const auto& [name, beta] : m.braids) {
    if (beta.strands() != m.strands)
      throw InvalidArgument("braid '" + name + "' has the wrong strand count");
    append_relators(beta, m.strands, reduction, relators);
  }
  if (m.infinity_meridian) relators.push_back(*m.infinity_meridian);
  Presentation p = Presentation::with_generators(m.strands, "g");
  return p.with_relators(relators);
}

MonodromyFile parse_monodromy(std::string_view source) {
  text::Scanner sc(source);
  MonodromyFile file;
  std::set<std::string> entry_names;
  bool have_strands = false;
  std::vector<std::string> gnames;

  auto need_strands = [&]() {
    if (!have_strands) sc.fail("'strands n;' must come first");
  };
  auto entry_name = [&]() {
    const text::Token t = sc.peek();
    std::string name = sc.expect_identifier();
    if (!entry_names.insert(name).second) sc.fail_at(t, "duplicate monodromy entry '" + name + "'");
    return name;
  };

  while (!sc.at_end()) {
    const text::Token head = sc.peek();
    const std::string kw = sc.expect_identifier();
    if (kw == "strands") {
      if (have_strands) sc.fail_at(head, "repeated 'strands' statement");
      const long n = sc.expect_integer();
      if (n < 1 || n > 1000) sc.fail_at(head, "strand count out of range");
      have_strands = true;
      file.paths = PathTable(static_cast<int>(n));
      file.data.strands = static_cast<int>(n);
      for (long i = 1; i <= n; ++i) gnames.push_back("g" + std::to_string(i));
    } else if (kw == "path") {
      need_strands();
      const text::Token t = sc.peek();
      std::string name = sc.expect_identifier();
      sc.expect_punct(':');
      BraidWord b = detail::read_braid(sc, file.data.strands);
      if (file.paths.contains(name)) sc.fail_at(t, "duplicate path name '" + name + "'");
      file.paths.add(std::move(name), std::move(b));
    } else if (kw == "loop") {
      need_strands();
      std::string name = entry_name();
      sc.expect_punct(':');
      std::vector<PathStep> steps;
      while (true) {
        const text::Token t = sc.peek();
        PathStep step{sc.expect_identifier(), false};
        if (!file.paths.contains(step.name))
          sc.fail_at(t, "unknown path name '" + step.name + "'");
        if (sc.at_punct('^')) {
          sc.next();
          if (sc.expect_signed_integer() != -1) sc.fail("path exponent must be -1");
          step.inverse = true;
        }
        steps.push_back(std::move(step));
        if (!sc.at_punct('*')) break;
        sc.next();
      }
      file.data.braids.emplace_back(name, compose_path_monodromy(file.paths, steps));
      file.loops.emplace_back(std::move(name), std::move(steps));
    } else if (kw == "braid") {
      need_strands();
      std::string name = entry_name();
      sc.expect_punct(':');
      file.data.braids.emplace_back(std::move(name), detail::read_braid(sc, file.data.strands));
    } else if (kw == "infinity") {
      need_strands();
      if (file.data.infinity_meridian) sc.fail_at(head, "repeated 'infinity' statement");
      sc.expect_punct(':');
      file.data.infinity_meridian = detail::read_word(sc, gnames);
    } else {
      sc.fail_at(head, "unknown statement '" + kw + "'");
    }
    sc.expect_punct(';');
  }
  if (!have_strands) sc.fail("missing 'strands n;' statement");
  return file;
}

}  // namespace meridian
