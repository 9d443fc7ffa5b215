#include "meridian/orbifold/orbifold.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "meridian/charvar/charvar.hpp"
#include "meridian/enumerate/coset_table.hpp"
#include "meridian/error.hpp"
#include "meridian/nilpotent/lcs.hpp"

namespace meridian {

OrbifoldSignature::OrbifoldSignature(int g, int k, std::vector<long> m)
    : genus(g), punctures(k), multiplicities(std::move(m)) {
  if (genus < 0) throw InvalidArgument("genus must be nonnegative");
  if (punctures < 0) throw InvalidArgument("number of punctures must be nonnegative");
  for (long v : multiplicities)
    if (v < 2) throw InvalidArgument("multiplicities must be at least 2");
  std::sort(multiplicities.begin(), multiplicities.end());
}

mpq_class OrbifoldSignature::euler_characteristic() const {
  mpq_class chi = 2 - 2 * genus - punctures;
  for (long m : multiplicities) chi -= 1 - mpq_class(1, m);
  return chi;
}

std::string OrbifoldSignature::to_string() const {
  std::string s = "g=" + std::to_string(genus) + " k=" + std::to_string(punctures) + " m=";
  for (std::size_t i = 0; i < multiplicities.size(); ++i) s += (i ? "," : "") + std::to_string(multiplicities[i]);
  return s;
}

std::string OrbifoldSignature::short_name() const {
  if (genus != 0 || punctures != 0) return to_string();
  std::string s = "(";
  for (std::size_t i = 0; i < multiplicities.size(); ++i) s += (i ? "," : "") + std::to_string(multiplicities[i]);
  return s + ")";
}

OrbifoldSignature parse_signature(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string field;
  int g = 0, k = 0;
  std::vector<long> m;
  std::set<char> seen;
  auto number = [](const std::string& s, const std::string& what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw InvalidArgument("bad " + what + " '" + s + "' in orbifold signature");
    return std::stol(s);
  };
  while (in >> field) {
    const auto eq = field.find('=');
    if (eq != 1 || field.size() < 2) throw InvalidArgument("bad orbifold signature field '" + field + "'");
    const char key = field[0];
    if (!seen.insert(key).second) throw InvalidArgument(std::string("repeated field '") + key + "'");
    const std::string value = field.substr(2);
    if (key == 'g') {
      g = static_cast<int>(number(value, "genus"));
    } else if (key == 'k') {
      k = static_cast<int>(number(value, "puncture count"));
    } else if (key == 'm') {
      std::size_t start = 0;
      while (start <= value.size() && !value.empty()) {
        const auto comma = value.find(',', start);
        m.push_back(number(value.substr(start, comma - start), "multiplicity"));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    } else {
      throw InvalidArgument("unknown orbifold signature field '" + field + "'");
    }
  }
  return OrbifoldSignature(g, k, std::move(m));
}

Presentation orbifold_presentation(const OrbifoldSignature& sig) {
  const std::size_t s = sig.multiplicities.size();
  const bool eliminate = sig.genus == 0 && sig.punctures == 0 && s > 0;
  const std::size_t cones = eliminate ? s - 1 : s;
  std::vector<std::string> names;
  for (int i = 1; i <= sig.genus; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  const int free_loops = sig.punctures > 0 ? sig.punctures - 1 : 0;
  for (int i = 1; i <= free_loops; ++i) names.push_back("u" + std::to_string(i));
  const int first_cone = static_cast<int>(names.size()) + 1;
  static const char* letters[] = {"x", "y", "z", "w"};
  const bool short_names = names.empty() && cones <= 4;
  for (std::size_t j = 0; j < cones; ++j) names.push_back(short_names ? letters[j] : "c" + std::to_string(j + 1));
  Presentation p(names, {});
  auto cone = [&](std::size_t j) { return Word::generator(first_cone + static_cast<int>(j)); };
  for (std::size_t j = 0; j < cones; ++j) p.add_relator(cone(j).pow(sig.multiplicities[j]));
  if (eliminate) {
    // The last cone generator is the inverse of the product of the others.
    Word prod;
    for (std::size_t j = 0; j < cones; ++j) prod *= cone(j);
    p.add_relator(prod.pow(sig.multiplicities[s - 1]));
  } else if (sig.punctures == 0) {
    Word lhs;
    for (int i = 0; i < sig.genus; ++i)
      lhs *= commutator(Word::generator(2 * i + 1), Word::generator(2 * i + 2));
    Word rhs;
    for (std::size_t j = 0; j < cones; ++j) rhs *= cone(j);
    p.add_relator(lhs * rhs.inverse());
  }
  return p;
}

std::string to_string(Geometry g) {
  switch (g) {
    case Geometry::spherical: return "spherical";
    case Geometry::euclidean: return "euclidean";
    case Geometry::hyperbolic: return "hyperbolic";
    case Geometry::bad: return "bad";
    case Geometry::elementary: return "elementary";
  }
  return "?";
}

Classification classify(const OrbifoldSignature& sig) {
  const mpq_class chi = sig.euler_characteristic();
  Classification c{Geometry::hyperbolic, std::nullopt, chi};
  if (chi > 0) {
    if (sig.punctures > 0) {
      c.geometry = Geometry::elementary;
      return c;
    }
    const auto& m = sig.multiplicities;
    bool listed = false;
    if (m.empty()) listed = true;
    else if (m.size() == 2) listed = m[0] == m[1];
    else if (m.size() == 3) listed = (m[0] == 2 && m[1] == 2) || (m[0] == 2 && m[1] == 3 && m[2] <= 5);
    if (listed) {
      const mpq_class order = 2 / chi;
      c.geometry = Geometry::spherical;
      c.order = mpz_class(order.get_num()).get_si();
    } else {
      c.geometry = Geometry::bad;
    }
    return c;
  }
  c.geometry = chi == 0 ? Geometry::euclidean : Geometry::hyperbolic;
  return c;
}

std::string ObstructionCandidate::reason() const {
  if (!order_divides) return "order " + std::to_string(order) + " does not divide the group order";
  if (!abelianization_surjects) return "abelianization does not surject onto " + abelianization.to_string();
  return "order divides and abelianization surjects onto " + abelianization.to_string();
}

std::vector<OrbifoldSignature> ObstructionReport::candidates() const {
  std::vector<OrbifoldSignature> out;
  for (const auto& c : considered)
    if (c.survives()) out.push_back(c.signature);
  return out;
}

ObstructionReport obstruct_finite(long order, const AbelianGroup& ab) {
  if (order < 1) throw InvalidArgument("group order must be positive");
  if (!ab.is_finite()) throw InvalidArgument("abelianization of a finite group must be finite");
  std::vector<OrbifoldSignature> sigs;
  // Dihedral (2,2,n) with n >= 3; (2,2,2) is abelian.
  for (long n = 3; 2 * n <= order; ++n)
    if (order % (2 * n) == 0) sigs.emplace_back(0, 0, std::vector<long>{2, 2, n});
  for (long n : {3L, 4L, 5L}) sigs.emplace_back(0, 0, std::vector<long>{2, 3, n});
  ObstructionReport report;
  for (const auto& sig : sigs) {
    ObstructionCandidate c;
    c.signature = sig;
    c.order = *classify(sig).order;
    c.abelianization = abelianization(orbifold_presentation(sig));
    c.order_divides = order % c.order == 0;
    c.abelianization_surjects = admits_surjection(ab, c.abelianization);
    report.considered.push_back(std::move(c));
  }
  return report;
}

bool TargetVerdict::excluded() const {
  return std::any_of(comparisons.begin(), comparisons.end(), [](const auto& c) { return !c.compatible; });
}

bool InfiniteObstructionReport::no_surjection() const {
  return std::all_of(targets.begin(), targets.end(), [](const auto& t) { return t.excluded(); });
}

namespace {

// Images in Z/10 of the generators under some surjection from the
// abelianization, if there is one.
std::optional<std::vector<long>> onto_z10(const AbelianGroup& a) {
  const std::size_t k = a.coordinate_count();
  std::vector<long> coef(k, 0);
  auto divisible = [&](std::size_t j, long q) {
    const mpz_class d = a.coordinate_order(j);
    return d == 0 || d % q == 0;
  };
  std::optional<std::size_t> j10, j2, j5;
  for (std::size_t j = 0; j < k; ++j) {
    if (!j10 && divisible(j, 10)) j10 = j;
    if (!j2 && divisible(j, 2)) j2 = j;
    if (!j5 && divisible(j, 5)) j5 = j;
  }
  if (j10) coef[*j10] = 1;
  else if (j2 && j5) {
    coef[*j2] = 5;
    coef[*j5] = 2;
  } else {
    return std::nullopt;
  }
  std::vector<long> images;
  for (const auto& img : a.gen_images) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < k; ++j) s += img[j] * coef[j];
    mpz_class r = s % 10;
    if (r < 0) r += 10;
    images.push_back(r.get_si());
  }
  return images;
}

Presentation kernel_z10(const Presentation& p, const std::vector<long>& images) {
  std::vector<std::vector<long>> im;
  for (long v : images) im.push_back({v});
  const auto r = todd_coxeter(p, SubgroupSpec::kernel({10}, im));
  if (r.status != EnumerationStatus::complete) throw LimitExceeded("coset enumeration of the index-10 kernel overflowed");
  return reidemeister_schreier(p, *r.table);
}

struct SourceVariety {
  std::optional<CharVariety> v;
  bool rank_one = false;

  bool has(long order, std::size_t k) const {
    if (rank_one) return rank_one_depth(*v, order, order == 1 ? 0 : 1) >= k;
    return std::any_of(v->characters.begin(), v->characters.end(),
                       [&](const CharacterDepth& c) { return c.order == order && c.depth >= k; });
  }
};

}  // namespace

InfiniteObstructionReport obstruct_infinite_rank_one(const Presentation& p) {
  const AbelianGroup ab = abelianization(p);
  SourceVariety src;
  if (ab.rank == 1 && ab.torsion.empty()) {
    src.rank_one = true;
    src.v = charvar_rank_one(p);
  } else if (ab.is_finite()) {
    src.v = charvar_finite_torus(p);
  } else {
    throw WrongMode("abelianization " + ab.to_string() + " is neither Z nor finite");
  }
  const auto images = onto_z10(ab);
  std::optional<Presentation> source_kernel;

  InfiniteObstructionReport report;
  for (const auto& sig : {OrbifoldSignature(0, 0, {2, 5, 10}), OrbifoldSignature(0, 0, {2, 2, 5, 5})}) {
    TargetVerdict t{sig, {}};
    const Presentation h = orbifold_presentation(sig);
    const AbelianGroup hab = abelianization(h);
    t.comparisons.push_back({"abelianization surjects", ab.to_string(), hab.to_string(), admits_surjection(ab, hab)});

    const CharVariety hv = charvar_finite_torus(h);
    for (std::size_t k = 1; k <= hv.max_depth(); ++k) {
      std::set<long> orders;
      for (const auto& c : hv.characters)
        if (c.depth >= k) orders.insert(c.order);
      bool ok = true;
      for (long d : orders) ok = ok && src.has(d, k);
      t.comparisons.push_back({"V" + std::to_string(k) + " contains target", src.v->describe(k), hv.describe(k), ok});
    }

    if (sig.multiplicities.size() == 3 && images) {
      if (!source_kernel) source_kernel = kernel_z10(p, *images);
      const Presentation hk = kernel_z10(h, *onto_z10(hab));
      const AbelianGroup ka = abelianization(*source_kernel), kb = abelianization(hk);
      t.comparisons.push_back({"kernel abelianization", ka.to_string(), kb.to_string(), admits_surjection(ka, kb)});
      const GradedQuotient qa = lcs_quotients(*source_kernel), qb = lcs_quotients(hk);
      for (int d = 2; d <= 3; ++d)
        t.comparisons.push_back({"kernel gamma_" + std::to_string(d) + "/gamma_" + std::to_string(d + 1),
                                 qa.degree(d).to_string(), qb.degree(d).to_string(),
                                 admits_surjection(qa.degree(d), qb.degree(d))});
    }
    report.targets.push_back(std::move(t));
  }
  return report;
}

}  // namespace meridian
