#include "meridian/fpgroups/presentation.hpp"

#include <set>

#include "meridian/error.hpp"

namespace meridian {

Presentation::Presentation(std::vector<std::string> generator_names,
                           std::vector<Word> relators)
    : names_(std::move(generator_names)) {
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second)
      throw InvalidArgument("generator '" + n + "' declared twice");
  for (const auto& r : relators) add_relator(r);
}

Presentation Presentation::with_generators(int count, const std::string& prefix) {
  std::vector<std::string> names;
  for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return Presentation(std::move(names), {});
}

int Presentation::generator_index(const std::string& name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i) + 1;
  return 0;
}

bool Presentation::add_relator(const Word& w) {
  if (w.max_generator() > generator_count())
    throw MalformedWord("relator uses generator " +
                        std::to_string(w.max_generator()) + " but only " +
                        std::to_string(generator_count()) + " are declared");
  Word r = w.cyclically_reduced();
  if (r.empty()) return false;
  relators_.push_back(std::move(r));
  return true;
}

Presentation Presentation::with_relators(const std::vector<Word>& extra) const {
  Presentation p = *this;
  for (const auto& w : extra) p.add_relator(w);
  return p;
}

std::size_t Presentation::remove_duplicate_relators() {
  std::set<Word> seen;
  std::vector<Word> kept;
  for (auto& r : relators_)
    if (seen.insert(cyclic_canonical(r)).second) kept.push_back(std::move(r));
  const std::size_t removed = relators_.size() - kept.size();
  relators_ = std::move(kept);
  return removed;
}

std::size_t Presentation::total_relator_length() const noexcept {
  std::size_t n = 0;
  for (const auto& r : relators_) n += r.size();
  return n;
}

}  // namespace meridian
