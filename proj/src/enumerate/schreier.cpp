#include <cstdlib>
#include <map>

#include "fpgroups/word_reader.hpp"
#include "meridian/enumerate/coset_table.hpp"
#include "meridian/error.hpp"
#include "meridian/fpgroups/tietze.hpp"
#include "text/scanner.hpp"

namespace meridian {

namespace {

std::vector<long> read_image(text::Scanner& sc, std::size_t k) {
  std::vector<long> v;
  if (sc.at_punct('(')) {
    sc.next();
    v.push_back(sc.expect_signed_integer());
    while (sc.at_punct(',')) {
      sc.next();
      v.push_back(sc.expect_signed_integer());
    }
    sc.expect_punct(')');
  } else {
    v.push_back(sc.expect_signed_integer());
  }
  if (v.size() != k) sc.fail("image needs " + std::to_string(k) + " coordinates");
  return v;
}

bool at_factor(const text::Scanner& sc) {
  if (!sc.at_identifier("Z")) return false;
  text::Scanner look = sc;
  look.next();
  return look.at_punct('/');
}

}  // namespace

SubgroupSpec parse_subgroup_spec(std::string_view source, const Presentation& p) {
  text::Scanner sc(source);
  const text::Token head = sc.peek();
  const std::string kw = sc.expect_identifier();
  SubgroupSpec h;
  if (kw == "gens") {
    std::vector<Word> words;
    while (!sc.at_punct(';')) {
      words.push_back(detail::read_word(sc, p.generator_names()));
      if (sc.at_punct(',')) sc.next();
    }
    h = SubgroupSpec::generated_by(std::move(words));
  } else if (kw == "kernel") {
    std::vector<long> target;
    do {
      if (!target.empty()) sc.next();  // the "x" separator
      if (!at_factor(sc)) sc.fail("expected a factor Z/d");
      sc.next();
      sc.expect_punct('/');
      const long d = sc.expect_integer();
      if (d < 1) sc.fail("factor order must be positive");
      target.push_back(d);
    } while (sc.at_identifier("x") && [&] {
      text::Scanner look = sc;
      look.next();
      return at_factor(look);
    }());
    std::vector<std::vector<long>> images(static_cast<std::size_t>(p.generator_count()),
                                          std::vector<long>(target.size(), 0));
    std::vector<bool> given(images.size(), false);
    while (!sc.at_punct(';')) {
      const text::Token t = sc.peek();
      const std::string name = sc.expect_identifier();
      const int g = p.generator_index(name);
      if (g == 0) sc.fail_at(t, "undeclared generator '" + name + "'");
      if (given[static_cast<std::size_t>(g - 1)]) sc.fail_at(t, "generator '" + name + "' mapped twice");
      given[static_cast<std::size_t>(g - 1)] = true;
      sc.expect_punct('-');
      sc.expect_punct('>');
      images[static_cast<std::size_t>(g - 1)] = read_image(sc, target.size());
    }
    h = SubgroupSpec::kernel(std::move(target), std::move(images));
  } else {
    sc.fail_at(head, "expected 'gens' or 'kernel'");
  }
  sc.expect_punct(';');
  if (!sc.at_end()) sc.fail("unexpected trailing input");
  return h;
}

Presentation reidemeister_schreier(const Presentation& p, const CosetTable& table, std::size_t budget) {
  const std::size_t m = table.index();
  const int n = p.generator_count();
  if (table.generator_count() != n) throw InvalidArgument("coset table does not match the presentation");
  // Breadth-first Schreier transversal: tree edge into d is (parent, letter).
  std::vector<std::pair<std::size_t, int>> parent(m, {m, 0});
  parent[0] = {0, 0};
  std::vector<std::size_t> order{0};
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int g = 1; g <= n; ++g)
      for (int l : {g, -g}) {
        const std::size_t d = table.act(order[k], l);
        if (parent[d].first == m) {
          parent[d] = {order[k], l};
          order.push_back(d);
        }
      }
  if (order.size() != m) throw InvalidArgument("coset table is not connected");

  auto is_tree = [&](std::size_t c, int g) {
    const std::size_t d = table.act(c, g);
    return (d != 0 && parent[d] == std::pair<std::size_t, int>{c, g}) ||
           (c != 0 && parent[c] == std::pair<std::size_t, int>{d, -g});
  };
  // Schreier generator numbering in (coset, generator) order.
  std::map<std::pair<std::size_t, int>, int> number;
  std::vector<std::string> names;
  for (std::size_t c = 0; c < m; ++c)
    for (int g = 1; g <= n; ++g)
      if (!is_tree(c, g)) {
        number[{c, g}] = static_cast<int>(names.size()) + 1;
        names.push_back(p.generator_name(g) + "_" + std::to_string(c + 1));
      }

  std::vector<Word> relators;
  for (const Word& r : p.relators())
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<int> letters;
      std::size_t a = c;
      for (int l : r) {
        if (l > 0) {
          const auto it = number.find({a, l});
          if (it != number.end()) letters.push_back(it->second);
          a = table.act(a, l);
        } else {
          const std::size_t b = table.act(a, l);
          const auto it = number.find({b, -l});
          if (it != number.end()) letters.push_back(-it->second);
          a = b;
        }
      }
      if (a != c) throw InvalidArgument("relator does not close up in the coset table");
      relators.emplace_back(letters);
    }
  Presentation sub(std::move(names), {});
  for (const Word& w : relators) sub.add_relator(w);
  sub.remove_duplicate_relators();
  return tietze_simplify(sub, budget).presentation;
}

}  // namespace meridian
