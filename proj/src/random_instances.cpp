#include "multispinal/random_instances.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "multispinal/errors.hpp"

namespace multispinal {

namespace {

struct Combo {
  std::vector<int> a_orders;
  std::vector<int> b_orders;
  int max_orbits;  // |X| = orbits * |B| stays <= 4
};

// Faithfulness over a group of order <= 4 (always abelian) forces A abelian
// with exponent dividing exp(B); these are all such cyclic products with
// |A| <= 16.
const std::vector<Combo>& catalog() {
  static const std::vector<Combo> combos = {
      {{2}, {2}, 2},
      {{2, 2}, {2}, 2},
      {{2, 2, 2}, {2}, 2},
      {{2, 2, 2, 2}, {2}, 2},
      {{3}, {3}, 1},
      {{3, 3}, {3}, 1},
      {{2}, {4}, 1},
      {{4}, {4}, 1},
      {{2, 2}, {4}, 1},
      {{2, 4}, {4}, 1},
      {{4, 4}, {4}, 1},
      {{2, 2, 2}, {4}, 1},
      {{2, 2, 4}, {4}, 1},
      {{2, 2, 2, 2}, {4}, 1},
      {{2}, {2, 2}, 1},
      {{2, 2}, {2, 2}, 1},
      {{2, 2, 2}, {2, 2}, 1},
      {{2, 2, 2, 2}, {2, 2}, 1},
  };
  return combos;
}

// Group pair plus its enumerated map pools, built once per combo.
struct Pool {
  GroupPtr a;
  GroupPtr b;
  std::vector<Homomorphism> homs;
  std::vector<Homomorphism> auts;
};

int pick(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

// Disjoint union of regular orbits: letter o*|B|+j maps to o*|B|+(b*j).
FiniteAction regular_orbits(const GroupPtr& b, int orbits) {
  const int n = b->order();
  std::vector<std::string> alphabet;
  alphabet.reserve(static_cast<size_t>(orbits) * n);
  for (int i = 0; i < orbits * n; ++i) alphabet.push_back(std::to_string(i));
  std::vector<std::vector<int>> perms(static_cast<size_t>(n));
  for (int e = 0; e < n; ++e) {
    auto& perm = perms[static_cast<size_t>(e)];
    perm.resize(alphabet.size());
    for (int o = 0; o < orbits; ++o)
      for (int j = 0; j < n; ++j)
        perm[static_cast<size_t>(o * n + j)] = o * n + b->mul(e, j);
  }
  return FiniteAction(b, std::move(alphabet), std::move(perms));
}

}  // namespace

std::vector<MultispinalInstance> random_instances(int count, std::uint64_t seed) {
  if (count < 0) throw Error("BadDimension", "instance count must be nonnegative");
  std::mt19937_64 rng(seed);
  std::vector<Pool> pools(catalog().size());
  std::vector<MultispinalInstance> out;
  out.reserve(static_cast<size_t>(count));
  long attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 200000)
      throw Defect("GenerationStalled", "rejection sampling made no progress");
    const int ci = pick(rng, static_cast<int>(catalog().size()));
    const Combo& combo = catalog()[static_cast<size_t>(ci)];
    Pool& pool = pools[static_cast<size_t>(ci)];
    if (!pool.a) {
      pool.a = cyclic_product(combo.a_orders);
      pool.b = cyclic_product(combo.b_orders);
      pool.homs = enumerate_homomorphisms(pool.a, pool.b);
      pool.auts = enumerate_automorphisms(pool.a);
    }
    const int orbits = 1 + pick(rng, combo.max_orbits);
    FiniteAction action = regular_orbits(pool.b, orbits);
    const int x = action.alphabet_size();
    // 1 <= hom letters <= x-1 keeps both parts nonempty.
    const int hom_count = 1 + pick(rng, x - 1);
    std::vector<int> letters(static_cast<size_t>(x));
    for (int i = 0; i < x; ++i) letters[static_cast<size_t>(i)] = i;
    for (int i = x - 1; i > 0; --i)
      std::swap(letters[static_cast<size_t>(i)], letters[static_cast<size_t>(pick(rng, i + 1))]);
    std::vector<bool> hom_letter(static_cast<size_t>(x), false);
    for (int i = 0; i < hom_count; ++i) hom_letter[static_cast<size_t>(letters[static_cast<size_t>(i)])] = true;
    std::vector<PsiEntry> psi;
    psi.reserve(static_cast<size_t>(x));
    for (int l = 0; l < x; ++l) {
      if (hom_letter[static_cast<size_t>(l)])
        psi.push_back({PsiKind::Hom, pool.homs[static_cast<size_t>(pick(rng, static_cast<int>(pool.homs.size())))]});
      else
        psi.push_back({PsiKind::Aut, pool.auts[static_cast<size_t>(pick(rng, static_cast<int>(pool.auts.size())))]});
    }
    try {
      out.push_back(MultispinalInstance::build(pool.a, pool.b, std::move(action), std::move(psi)));
    } catch (const Defect&) {
      throw;  // never swallow a broken internal invariant
    } catch (const Error&) {
      continue;  // unfaithful draw; resample
    }
  }
  return out;
}

}  // namespace multispinal
