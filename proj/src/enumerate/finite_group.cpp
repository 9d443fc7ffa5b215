#include "meridian/enumerate/finite_group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

#include "meridian/error.hpp"
#include "text/scanner.hpp"

namespace meridian {

MultTable::MultTable(std::size_t order, std::vector<std::uint32_t> products, std::size_t identity,
                     std::vector<std::size_t> generators)
    : order_(order),
      products_(std::move(products)),
      identity_(identity),
      generators_(std::move(generators)),
      inverses_(order, 0) {
  if (order_ == 0) throw InvalidArgument("a group has at least one element");
  if (products_.size() != order_ * order_) throw InvalidArgument("multiplication table has the wrong size");
  if (identity_ >= order_) throw InvalidArgument("identity out of range");
  for (std::size_t g : generators_)
    if (g >= order_) throw InvalidArgument("generator out of range");
  for (std::uint32_t v : products_)
    if (v >= order_) throw InvalidArgument("table entry out of range");
  for (std::size_t a = 0; a < order_; ++a) {
    std::vector<bool> row(order_, false), col(order_, false);
    for (std::size_t b = 0; b < order_; ++b) {
      const std::size_t r = product(a, b), c = product(b, a);
      if (row[r] || col[c]) throw InvalidArgument("multiplication table is not a Latin square");
      row[r] = col[c] = true;
      if (r == identity_) inverses_[a] = static_cast<std::uint32_t>(b);
    }
    if (product(identity_, a) != a || product(a, identity_) != a)
      throw InvalidArgument("identity law fails");
  }
}

std::size_t MultTable::inverse(std::size_t a) const { return inverses_.at(a); }

std::size_t MultTable::power(std::size_t a, long n) const {
  if (n < 0) {
    a = inverse(a);
    n = -n;
  }
  std::size_t r = identity_;
  while (n > 0) {
    if (n & 1) r = product(r, a);
    a = product(a, a);
    n >>= 1;
  }
  return r;
}

std::size_t MultTable::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = product(x, a)) ++k;
  return k;
}

std::vector<std::size_t> MultTable::generated_subgroup(const std::vector<std::size_t>& elements) const {
  std::vector<bool> seen(order_, false);
  std::vector<std::size_t> out{identity_};
  seen[identity_] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (std::size_t g : elements) {
      const std::size_t x = product(out[k], g);
      if (!seen[x]) {
        seen[x] = true;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t MultTable::evaluate(const Word& w, const std::vector<std::size_t>& assignment) const {
  std::size_t r = identity_;
  for (int l : w) {
    const std::size_t g = assignment.at(static_cast<std::size_t>(std::abs(l) - 1));
    r = product(r, l > 0 ? g : inverse(g));
  }
  return r;
}

MultTable regular_representation(const CosetTable& table) {
  if (!table.subgroup().is_trivial())
    throw InvalidArgument("the regular representation needs a trivial-subgroup table");
  const std::size_t m = table.index();
  if (m > max_regular_order)
    throw LimitExceeded("group order " + std::to_string(m) + " exceeds the multiplication-table cap " +
                        std::to_string(max_regular_order));
  const int n = table.generator_count();
  // Breadth-first transversal word of every element.
  std::vector<std::pair<std::size_t, int>> parent(m, {m, 0});
  std::vector<std::size_t> order{0};
  parent[0] = {0, 0};
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int g = 1; g <= n; ++g)
      for (int l : {g, -g}) {
        const std::size_t d = table.act(order[k], l);
        if (parent[d].first == m) {
          parent[d] = {order[k], l};
          order.push_back(d);
        }
      }
  std::vector<std::uint32_t> products(m * m);
  // Row i: trace the transversal of each j from i, reusing its parent's entry.
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::uint32_t> row(m);
    row[0] = static_cast<std::uint32_t>(i);
    for (std::size_t k = 1; k < order.size(); ++k) {
      const std::size_t j = order[k];
      row[j] = static_cast<std::uint32_t>(table.act(row[parent[j].first], parent[j].second));
    }
    std::copy(row.begin(), row.end(), products.begin() + static_cast<long>(i * m));
  }
  std::vector<std::size_t> gens;
  for (int g = 1; g <= n; ++g) gens.push_back(table.act(0, g));
  return MultTable(m, std::move(products), 0, std::move(gens));
}

AbelianGroup abelian_invariants(const MultTable& t, const std::vector<std::size_t>& elements) {
  const std::size_t size = elements.size();
  std::map<std::size_t, std::size_t> prime_power;  // p -> exponent in size
  std::size_t s = size;
  for (std::size_t p = 2; p * p <= s; ++p)
    while (s % p == 0) {
      ++prime_power[p];
      s /= p;
    }
  if (s > 1) ++prime_power[s];
  std::vector<mpz_class> factors;
  for (const auto& [p, e] : prime_power) {
    // count[j] = #{x : x^(p^j) = 1}; p^{sum_i min(j, lambda_i)}.
    std::vector<std::size_t> logs{0};
    std::size_t q = 1;
    for (std::size_t j = 1; j <= e; ++j) {
      q *= p;
      std::size_t count = 0;
      for (std::size_t x : elements)
        if (t.power(x, static_cast<long>(q)) == t.identity()) ++count;
      std::size_t l = 0;
      while (count > 1) {
        count /= p;
        ++l;
      }
      logs.push_back(l);
    }
    // parts >= j: logs[j] - logs[j-1]
    std::vector<std::size_t> at_least(e + 2, 0);
    for (std::size_t j = 1; j <= e; ++j) at_least[j] = logs[j] - logs[j - 1];
    for (std::size_t j = 1; j <= e; ++j) {
      const std::size_t exactly = at_least[j] - at_least[j + 1];
      mpz_class pj;
      mpz_ui_pow_ui(pj.get_mpz_t(), p, j);
      for (std::size_t k = 0; k < exactly; ++k) factors.push_back(pj);
    }
  }
  return abelian_group(0, factors);
}

CenterInfo center(const MultTable& t) {
  CenterInfo info;
  for (std::size_t z = 0; z < t.order(); ++z)
    if (std::all_of(t.generators().begin(), t.generators().end(),
                    [&](std::size_t g) { return t.commutes(z, g); }))
      info.elements.push_back(z);
  info.structure = abelian_invariants(t, info.elements);
  return info;
}

RegularAndCenter regular_rep_and_center(const CosetTable& table) {
  MultTable t = regular_representation(table);
  CenterInfo c = center(t);
  return {std::move(t), std::move(c)};
}

std::vector<std::vector<std::size_t>> find_epimorphisms(const Presentation& p, const MultTable& t,
                                                        double cap) {
  const std::size_t n = static_cast<std::size_t>(p.generator_count());
  const double space = std::pow(static_cast<double>(t.order()), static_cast<double>(n));
  if (space > cap)
    throw LimitExceeded("search space " + std::to_string(t.order()) + "^" + std::to_string(n) +
                        " exceeds the cap");
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> a(n, 0);
  while (true) {
    bool ok = true;
    for (const Word& r : p.relators())
      if (t.evaluate(r, a) != t.identity()) {
        ok = false;
        break;
      }
    if (ok && t.generated_subgroup(a).size() == t.order()) out.push_back(a);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (++a[j] < t.order()) break;
      a[j] = 0;
      if (j == 0) return out;
    }
    if (n == 0) return out;
  }
}

MultTable cyclic_table(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic group order must be positive");
  std::vector<std::uint32_t> prod(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) prod[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
  return MultTable(n, std::move(prod), 0, {n > 1 ? 1u : 0u});
}

MultTable dihedral_table(std::size_t n) {
  if (n == 0) throw InvalidArgument("dihedral group parameter must be positive");
  // Element (s, k) = reflection^s rotation^k, index s*n + k.
  const std::size_t m = 2 * n;
  std::vector<std::uint32_t> prod(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t sa = a / n, ka = a % n, sb = b / n, kb = b % n;
      // r^ka s^sb = s^sb r^(+-ka)
      const std::size_t k = ((sb ? n - ka : ka) + kb) % n;
      prod[a * m + b] = static_cast<std::uint32_t>(((sa + sb) % 2) * n + k);
    }
  return MultTable(m, std::move(prod), 0, {n, n > 1 ? 1u : 0u});
}

MultTable parse_mult_table(std::string_view source) {
  text::Scanner sc(source);
  std::optional<std::size_t> order, identity;
  std::vector<std::size_t> gens;
  std::vector<std::uint32_t> prod;
  std::size_t rows = 0;
  while (!sc.at_end()) {
    const text::Token head = sc.peek();
    const std::string kw = sc.expect_identifier();
    if (kw == "order") {
      const long m = sc.expect_integer();
      if (m < 1 || m > static_cast<long>(max_regular_order)) sc.fail_at(head, "order out of range");
      order = static_cast<std::size_t>(m);
    } else if (kw == "identity") {
      identity = static_cast<std::size_t>(sc.expect_integer());
    } else if (kw == "generators") {
      while (!sc.at_punct(';')) gens.push_back(static_cast<std::size_t>(sc.expect_integer()));
    } else if (kw == "row") {
      if (!order) sc.fail_at(head, "'order' must precede the rows");
      for (std::size_t j = 0; j < *order; ++j) prod.push_back(static_cast<std::uint32_t>(sc.expect_integer()));
      ++rows;
    } else {
      sc.fail_at(head, "unknown statement '" + kw + "'");
    }
    sc.expect_punct(';');
  }
  if (!order || !identity) sc.fail("missing 'order' or 'identity'");
  if (rows != *order) sc.fail("expected " + std::to_string(*order) + " rows");
  return MultTable(*order, std::move(prod), *identity, std::move(gens));
}

std::string format_mult_table(const MultTable& t) {
  std::string out = "order " + std::to_string(t.order()) + ";\nidentity " +
                    std::to_string(t.identity()) + ";\ngenerators";
  for (std::size_t g : t.generators()) out += " " + std::to_string(g);
  out += ";\n";
  for (std::size_t a = 0; a < t.order(); ++a) {
    out += "row";
    for (std::size_t b = 0; b < t.order(); ++b) out += " " + std::to_string(t.product(a, b));
    out += ";\n";
  }
  return out;
}

}  // namespace meridian
