#include "a2cli/verify.hpp"

#include <functional>

#include "a2/cocycle.hpp"
#include "a2/reference.hpp"
#include "a2/section.hpp"

namespace a2::cli {

namespace {

std::string count_failures(std::size_t bad, std::size_t total) {
  return std::to_string(bad) + " of " + std::to_string(total) + " failed";
}

CheckResult pascal(const Braiding& br) {
  const auto& binom = br.qbinom();
  std::size_t total = 0, bad = 0;
  for (unsigned n = 0; n < 12; ++n)
    for (unsigned k = 1; k <= n; ++k) {
      ++total;
      const Cyclotomic& lhs = binom(n + 1, k);
      bool ok = lhs == binom(n, k - 1) + br.q().pow(k) * binom(n, k) &&
                lhs == br.q().pow(n + 1 - k) * binom(n, k - 1) + binom(n, k);
      if (!ok) ++bad;
    }
  return {"q-binomial Pascal identities (n <= 12)", bad == 0, count_failures(bad, total)};
}

CheckResult coalgebra(const Lifting& L) {
  std::size_t bad = 0;
  for (const auto& n : L.basis()) {
    bool ok = delta_two(L.braiding(), n) == delta_two_right(L.braiding(), n);
    Element left, right;
    for (const auto& [key, c] : L.delta(n)) {
      if (key.first.is_one()) left.add(key.second, c);
      if (key.second.is_one()) right.add(key.first, c);
    }
    if (!ok || !(left == Element(n)) || !(right == Element(n))) ++bad;
  }
  return {"coassociativity and counit", bad == 0, count_failures(bad, L.dim())};
}

CheckResult confluence(const Lifting& L) {
  std::size_t total = 0, bad = 0;
  for_each_word(6, [&](const Word& w) {
    ++total;
    if (!locally_confluent(L.cleft(), w) || !locally_confluent(L.nichols(), w)) ++bad;
  });
  return {"confluence of the rewriting systems (words of length <= 6)", bad == 0, count_failures(bad, total)};
}

CheckResult per_basis(const Lifting& L, std::string name, const std::function<bool(const Monomial&)>& ok) {
  std::size_t bad = 0;
  for (const auto& b : L.basis())
    if (!ok(b)) ++bad;
  return {std::move(name), bad == 0, count_failures(bad, L.dim())};
}

CheckResult from_failures(std::string name, bool ok, std::size_t failures, std::size_t total) {
  return {std::move(name), ok, count_failures(failures, total)};
}

CheckResult first_rows(const Lifting& L, const CocycleTable& sigma) {
  const auto rows = L.kind() == Case::Generic ? reference::generic_first_rows(L.braiding(), L.params())
                                              : reference::atypical_first_rows(L.braiding(), L.params());
  std::size_t bad = 0;
  for (const auto& e : rows)
    if (!(sigma(e.a, e.b) == e.value)) ++bad;
  return {"first-row table regression", bad == 0, count_failures(bad, rows.size())};
}

}  // namespace

std::vector<CheckResult> run_checks(const Lifting& L) {
  std::vector<CheckResult> out;
  out.push_back(pascal(L.braiding()));
  out.push_back(coalgebra(L));
  out.push_back(confluence(L));
  out.push_back(per_basis(L, "hypothesis H1", [&](const Monomial& b) { return check_H1(L, b); }));
  out.push_back(per_basis(L, "hypothesis H2", [&](const Monomial& b) { return check_H2(L, b); }));

  SectionMap gamma = build_section(L);
  std::vector<Monomial> failures;
  bool ok = verify_comodule(L, gamma, &failures);
  out.push_back(from_failures("section comodule law", ok, failures.size(), L.dim()));
  failures.clear();
  ok = verify_counit(L, gamma, &failures);
  out.push_back(from_failures("section counit", ok, failures.size(), L.dim()));
  failures.clear();
  ok = verify_h_linear(L, gamma, &failures);
  out.push_back(from_failures("section H-linearity", ok, failures.size(), L.dim()));

  out.push_back(per_basis(L, "closed-form section", [&](const Monomial& b) {
    const Element closed =
        L.kind() == Case::Generic ? section_generic_closed(L, b) : section_atypical_closed(L, b);
    return gamma(b) == closed;
  }));

  CocycleTable sigma = sigma_table(L, gamma);
  std::vector<std::pair<Monomial, Monomial>> pair_failures;
  ok = verify_reconstruction(L, gamma, sigma, &pair_failures);
  out.push_back(from_failures("reconstruction identity", ok, pair_failures.size(), L.dim() * L.dim()));
  out.push_back(first_rows(L, sigma));
  return out;
}

}  // namespace a2::cli
