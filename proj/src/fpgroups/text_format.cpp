#include "meridian/fpgroups/text_format.hpp"

#include <cstdlib>
#include <set>

#include "meridian/error.hpp"
#include "fpgroups/word_reader.hpp"
#include "text/scanner.hpp"

namespace meridian {

namespace {

class WordReader {
 public:
  WordReader(text::Scanner& sc, const std::vector<std::string>& names)
      : sc_(sc), names_(names) {}

  Word word() {
    Word w = factor();
    while (sc_.at_punct('*')) {
      sc_.next();
      w *= factor();
    }
    return w;
  }

 private:
  Word factor() {
    Word a = atom();
    if (sc_.at_punct('^')) {
      sc_.next();
      a = a.pow(sc_.expect_signed_integer());
    }
    return a;
  }

  Word atom() {
    if (sc_.at_punct('(')) {
      sc_.next();
      Word w = word();
      sc_.expect_punct(')');
      return w;
    }
    if (sc_.at_punct('[')) {
      sc_.next();
      Word a = word();
      sc_.expect_punct(',');
      Word b = word();
      sc_.expect_punct(']');
      return commutator(a, b);
    }
    if (sc_.peek().kind == text::TokenKind::integer && sc_.peek().text == "1") {
      sc_.next();
      return {};
    }
    if (sc_.peek().kind != text::TokenKind::identifier)
      sc_.fail("expected generator, '(' or '['");
    const text::Token t = sc_.next();
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == t.text) return Word::generator(static_cast<int>(i) + 1);
    sc_.fail_at(t, "undeclared generator '" + t.text + "'");
  }

  text::Scanner& sc_;
  const std::vector<std::string>& names_;
};

}  // namespace

namespace detail {

Word read_word(text::Scanner& sc, const std::vector<std::string>& names) {
  return WordReader(sc, names).word();
}

}  // namespace detail

Presentation parse_presentation(std::string_view source,
                                ParseDiagnostics* diagnostics) {
  text::Scanner sc(source);
  std::vector<std::string> names;
  std::set<std::string> declared;
  std::vector<Word> relators;
  std::set<Word> seen;
  ParseDiagnostics diag;

  while (!sc.at_end()) {
    if (sc.at_identifier("gens")) {
      sc.next();
      if (sc.peek().kind != text::TokenKind::identifier)
        sc.fail("expected at least one generator name");
      while (sc.peek().kind == text::TokenKind::identifier) {
        const text::Token t = sc.next();
        if (t.text == "gens" || t.text == "rel")
          sc.fail_at(t, "reserved word used as generator name");
        if (!declared.insert(t.text).second)
          sc.fail_at(t, "generator '" + t.text + "' declared twice");
        names.push_back(t.text);
      }
      sc.expect_punct(';');
    } else if (sc.at_identifier("rel")) {
      const text::Token start = sc.next();
      WordReader reader(sc, names);
      Word lhs = reader.word();
      if (sc.at_punct('=')) {
        sc.next();
        lhs *= reader.word().inverse();
      }
      sc.expect_punct(';');
      Word r = lhs.cyclically_reduced();
      if (r.empty()) {
        ++diag.dropped_empty;
        diag.warnings.push_back("line " + std::to_string(start.line) +
                                ": relator reduces to the identity; dropped");
      } else if (!seen.insert(cyclic_canonical(r)).second) {
        ++diag.dropped_duplicate;
      } else {
        relators.push_back(std::move(r));
      }
    } else {
      sc.fail("expected 'gens' or 'rel'");
    }
  }
  if (diagnostics) *diagnostics = std::move(diag);
  return Presentation(std::move(names), std::move(relators));
}

Word parse_word(std::string_view source, const std::vector<std::string>& names) {
  text::Scanner sc(source);
  WordReader reader(sc, names);
  Word w = reader.word();
  if (!sc.at_end()) sc.fail("unexpected trailing input");
  return w;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    const int l = w[i];
    out += names.at(static_cast<std::size_t>(std::abs(l)) - 1);
    if (l < 0) out += "^-1";
  }
  return out;
}

std::string format_word_compact(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long run = static_cast<long>(j - i) * (w[i] > 0 ? 1 : -1);
    if (!out.empty()) out += '*';
    out += names.at(static_cast<std::size_t>(std::abs(w[i])) - 1);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::string format_presentation(const Presentation& p) {
  std::string out;
  if (p.generator_count() > 0) {
    out += "gens";
    for (const auto& n : p.generator_names()) out += " " + n;
    out += ";\n";
  }
  for (const auto& r : p.relators())
    out += "rel " + format_word(r, p.generator_names()) + ";\n";
  return out;
}

}  // namespace meridian
