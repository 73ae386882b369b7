#include "multispinal/group.hpp"

#include <algorithm>
#include <numeric>

namespace multispinal {

namespace {

std::string triple(int i, int j, int k) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
}

}  // namespace

GroupPtr FiniteGroup::validate(std::vector<std::string> elements,
                               std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(elements.size());
  if (n == 0) throw Error("NotAGroup", "no elements declared");
  if (static_cast<int>(table.size()) != n)
    throw Error("NotAGroup", "table has " + std::to_string(table.size()) + " rows, expected " +
                                 std::to_string(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[static_cast<size_t>(i)].size()) != n)
      throw Error("NotAGroup", "row " + std::to_string(i) + " is not length " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      int v = table[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (v < 0 || v >= n)
        throw Error("NotAGroup", "entry out of range at (" + std::to_string(i) + ", " +
                                     std::to_string(j) + ")");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (elements[static_cast<size_t>(i)] == elements[static_cast<size_t>(j)] && i != j)
        throw Error("NotAGroup", "duplicate element label \"" + elements[static_cast<size_t>(i)] + "\"");
    }
  }

  // Latin square: every row and column hits each index once.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(static_cast<size_t>(n), false), col(static_cast<size_t>(n), false);
    for (int j = 0; j < n; ++j) {
      int r = table[static_cast<size_t>(i)][static_cast<size_t>(j)];
      int c = table[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (row[static_cast<size_t>(r)])
        throw Error("NotAGroup", "row " + std::to_string(i) + " repeats index " + std::to_string(r));
      if (col[static_cast<size_t>(c)])
        throw Error("NotAGroup", "column " + std::to_string(i) + " repeats index " + std::to_string(c));
      row[static_cast<size_t>(r)] = col[static_cast<size_t>(c)] = true;
    }
  }

  // Identity: a two-sided unit must exist.
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool unit = true;
    for (int g = 0; g < n; ++g) {
      if (table[static_cast<size_t>(e)][static_cast<size_t>(g)] != g ||
          table[static_cast<size_t>(g)][static_cast<size_t>(e)] != g) {
        unit = false;
        break;
      }
    }
    if (unit) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw Error("NotAGroup", "no two-sided identity element");

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        int ij = table[static_cast<size_t>(i)][static_cast<size_t>(j)];
        int jk = table[static_cast<size_t>(j)][static_cast<size_t>(k)];
        if (table[static_cast<size_t>(ij)][static_cast<size_t>(k)] !=
            table[static_cast<size_t>(i)][static_cast<size_t>(jk)])
          throw Error("NotAGroup", "associativity fails at " + triple(i, j, k));
      }
    }
  }

  std::vector<int> inverse(static_cast<size_t>(n), -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (table[static_cast<size_t>(g)][static_cast<size_t>(h)] == identity &&
          table[static_cast<size_t>(h)][static_cast<size_t>(g)] == identity) {
        inverse[static_cast<size_t>(g)] = h;
        break;
      }
    }
    if (inverse[static_cast<size_t>(g)] < 0)
      throw Error("NotAGroup", "element " + std::to_string(g) + " has no two-sided inverse");
  }

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->labels_ = std::move(elements);
  group->table_ = std::move(table);
  group->inverse_ = std::move(inverse);
  group->identity_ = identity;
  return group;
}

int FiniteGroup::index_of(const std::string& label) const {
  for (int i = 0; i < order(); ++i) {
    if (labels_[static_cast<size_t>(i)] == label) return i;
  }
  return -1;
}

GroupPtr cyclic_product(const std::vector<int>& orders) {
  if (orders.empty()) throw Error("NotAGroup", "cyclic product needs at least one factor");
  for (int n : orders) {
    if (n < 1) throw Error("NotAGroup", "cyclic factor order must be >= 1");
  }
  long long total = 1;
  for (int n : orders) {
    total *= n;
    if (total > 4096) throw Error("NotAGroup", "cyclic product too large");
  }
  const int size = static_cast<int>(total);
  const int k = static_cast<int>(orders.size());

  auto decode = [&](int index) {
    std::vector<int> comps(static_cast<size_t>(k));
    for (int c = k - 1; c >= 0; --c) {
      comps[static_cast<size_t>(c)] = index % orders[static_cast<size_t>(c)];
      index /= orders[static_cast<size_t>(c)];
    }
    return comps;
  };
  auto encode = [&](const std::vector<int>& comps) {
    int index = 0;
    for (int c = 0; c < k; ++c)
      index = index * orders[static_cast<size_t>(c)] + comps[static_cast<size_t>(c)];
    return index;
  };

  std::vector<std::string> labels(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) {
    auto comps = decode(i);
    std::string label;
    for (int c = 0; c < k; ++c) {
      if (c) label += ",";
      label += std::to_string(comps[static_cast<size_t>(c)]);
    }
    labels[static_cast<size_t>(i)] = label;
  }

  std::vector<std::vector<int>> table(static_cast<size_t>(size),
                                      std::vector<int>(static_cast<size_t>(size)));
  for (int i = 0; i < size; ++i) {
    auto a = decode(i);
    for (int j = 0; j < size; ++j) {
      auto b = decode(j);
      std::vector<int> sum(static_cast<size_t>(k));
      for (int c = 0; c < k; ++c)
        sum[static_cast<size_t>(c)] =
            (a[static_cast<size_t>(c)] + b[static_cast<size_t>(c)]) % orders[static_cast<size_t>(c)];
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] = encode(sum);
    }
  }
  return FiniteGroup::validate(std::move(labels), std::move(table));
}

Homomorphism::Homomorphism(GroupPtr source, GroupPtr target, std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (!source_ || !target_) throw Error("NotAHomomorphism", "null group");
  const int n = source_->order();
  if (static_cast<int>(map_.size()) != n)
    throw Error("NotAHomomorphism", "map length " + std::to_string(map_.size()) +
                                        " does not match source order " + std::to_string(n));
  for (int v : map_) {
    if (v < 0 || v >= target_->order())
      throw Error("NotAHomomorphism", "map value out of target range");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int lhs = map_[static_cast<size_t>(source_->mul(x, y))];
      int rhs = target_->mul(map_[static_cast<size_t>(x)], map_[static_cast<size_t>(y)]);
      if (lhs != rhs)
        throw Error("NotAHomomorphism", "map(xy) != map(x)map(y) at (x, y) = (" +
                                            std::to_string(x) + ", " + std::to_string(y) + ")");
    }
  }
}

Homomorphism identity_hom(const GroupPtr& g) {
  std::vector<int> map(static_cast<size_t>(g->order()));
  std::iota(map.begin(), map.end(), 0);
  return Homomorphism(g, g, std::move(map));
}

bool is_automorphism(const Homomorphism& h) {
  if (!(*h.source() == *h.target())) return false;
  std::vector<bool> hit(h.map().size(), false);
  for (int v : h.map()) {
    if (hit[static_cast<size_t>(v)]) return false;
    hit[static_cast<size_t>(v)] = true;
  }
  return true;
}

Homomorphism compose(const Homomorphism& h1, const Homomorphism& h2) {
  if (!(*h2.target() == *h1.source()))
    throw Error("DomainMismatch", "inner target does not match outer source");
  std::vector<int> map(h2.map().size());
  for (size_t i = 0; i < map.size(); ++i) map[i] = h1(h2.map()[i]);
  return Homomorphism(h2.source(), h1.target(), std::move(map));
}

std::vector<int> kernel(const Homomorphism& h) {
  std::vector<int> ker;
  const int id = h.target()->identity();
  for (int g = 0; g < h.source()->order(); ++g) {
    if (h(g) == id) ker.push_back(g);
  }
  // A verified homomorphism's kernel is a subgroup; anything else is a defect.
  const auto& src = *h.source();
  for (int g : ker) {
    if (std::find(ker.begin(), ker.end(), src.inv(g)) == ker.end())
      throw Defect("KernelNotSubgroup", "kernel not closed under inverse");
    for (int g2 : ker) {
      if (std::find(ker.begin(), ker.end(), src.mul(g, g2)) == ker.end())
        throw Defect("KernelNotSubgroup", "kernel not closed under product");
    }
  }
  return ker;
}

namespace {

// Greedy generating set: repeatedly adjoin the first element outside the
// current span. span_words[i] records one expression of element i as a
// sequence of generator indices (empty for the identity).
std::vector<int> generating_set(const FiniteGroup& g, std::vector<std::vector<int>>* span_words) {
  const int n = g.order();
  std::vector<int> gens;
  std::vector<std::vector<int>> words(static_cast<size_t>(n));
  std::vector<bool> in_span(static_cast<size_t>(n), false);
  in_span[static_cast<size_t>(g.identity())] = true;
  int covered = 1;
  while (covered < n) {
    int next = -1;
    for (int e = 0; e < n; ++e) {
      if (!in_span[static_cast<size_t>(e)]) {
        next = e;
        break;
      }
    }
    gens.push_back(next);
    const int gen_index = static_cast<int>(gens.size()) - 1;
    // close the span under right multiplication by the new generator
    bool grew = true;
    while (grew) {
      grew = false;
      for (int e = 0; e < n; ++e) {
        if (!in_span[static_cast<size_t>(e)]) continue;
        for (int gi = 0; gi <= gen_index; ++gi) {
          int to = g.mul(e, gens[static_cast<size_t>(gi)]);
          if (!in_span[static_cast<size_t>(to)]) {
            in_span[static_cast<size_t>(to)] = true;
            words[static_cast<size_t>(to)] = words[static_cast<size_t>(e)];
            words[static_cast<size_t>(to)].push_back(gi);
            ++covered;
            grew = true;
          }
        }
      }
    }
  }
  if (span_words) *span_words = std::move(words);
  return gens;
}

}  // namespace

std::vector<Homomorphism> enumerate_homomorphisms(const GroupPtr& source,
                                                  const GroupPtr& target) {
  std::vector<std::vector<int>> words;
  std::vector<int> gens = generating_set(*source, &words);
  const int n = source->order();
  const int m = target->order();
  const int k = static_cast<int>(gens.size());

  std::vector<Homomorphism> result;
  std::vector<int> images(static_cast<size_t>(k), 0);
  while (true) {
    // candidate map determined by generator images via the recorded words
    std::vector<int> map(static_cast<size_t>(n));
    for (int e = 0; e < n; ++e) {
      int acc = target->identity();
      for (int gi : words[static_cast<size_t>(e)]) acc = target->mul(acc, images[static_cast<size_t>(gi)]);
      map[static_cast<size_t>(e)] = acc;
    }
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n; ++y) {
        if (map[static_cast<size_t>(source->mul(x, y))] !=
            target->mul(map[static_cast<size_t>(x)], map[static_cast<size_t>(y)])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) result.emplace_back(source, target, std::move(map));

    int pos = k - 1;
    while (pos >= 0 && images[static_cast<size_t>(pos)] == m - 1) {
      images[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++images[static_cast<size_t>(pos)];
  }
  return result;
}

std::vector<Homomorphism> enumerate_automorphisms(const GroupPtr& g) {
  std::vector<Homomorphism> result;
  for (auto& h : enumerate_homomorphisms(g, g)) {
    if (is_automorphism(h)) result.push_back(std::move(h));
  }
  return result;
}

FiniteAction::FiniteAction(GroupPtr group, std::vector<std::string> alphabet,
                           std::vector<std::vector<int>> perms)
    : group_(std::move(group)), alphabet_(std::move(alphabet)), perms_(std::move(perms)) {
  if (!group_) throw Error("NotAnAction", "null group");
  const int n = group_->order();
  const int x = static_cast<int>(alphabet_.size());
  if (x == 0) throw Error("NotAnAction", "empty alphabet");
  for (int i = 0; i < x; ++i) {
    for (int j = i + 1; j < x; ++j) {
      if (alphabet_[static_cast<size_t>(i)] == alphabet_[static_cast<size_t>(j)])
        throw Error("NotAnAction", "duplicate letter \"" + alphabet_[static_cast<size_t>(i)] + "\"");
    }
  }
  if (static_cast<int>(perms_.size()) != n)
    throw Error("NotAnAction", "need one permutation per group element");
  for (int b = 0; b < n; ++b) {
    const auto& p = perms_[static_cast<size_t>(b)];
    if (static_cast<int>(p.size()) != x)
      throw Error("NotAnAction", "permutation " + std::to_string(b) + " has wrong length");
    std::vector<bool> hit(static_cast<size_t>(x), false);
    for (int v : p) {
      if (v < 0 || v >= x || hit[static_cast<size_t>(v)])
        throw Error("NotAnAction", "element " + std::to_string(b) + " does not permute the alphabet");
      hit[static_cast<size_t>(v)] = true;
    }
  }
  for (int b1 = 0; b1 < n; ++b1) {
    for (int b2 = 0; b2 < n; ++b2) {
      int prod = group_->mul(b1, b2);
      for (int letter = 0; letter < x; ++letter) {
        if (apply(prod, letter) != apply(b1, apply(b2, letter)))
          throw Error("NotAnAction", "not a homomorphism at elements (" + std::to_string(b1) +
                                         ", " + std::to_string(b2) + "), letter " +
                                         std::to_string(letter));
      }
    }
  }
  for (int b = 0; b < n; ++b) {
    if (b == group_->identity()) continue;
    for (int letter = 0; letter < x; ++letter) {
      if (apply(b, letter) == letter)
        throw Error("NotFree", "element \"" + group_->label(b) + "\" fixes letter \"" +
                                   alphabet_[static_cast<size_t>(letter)] + "\"");
    }
  }

  // transitivity of the identity-generated orbit of letter 0
  std::vector<bool> reached(static_cast<size_t>(x), false);
  int count = 0;
  std::vector<int> queue = {0};
  reached[0] = true;
  ++count;
  while (!queue.empty()) {
    int letter = queue.back();
    queue.pop_back();
    for (int b = 0; b < n; ++b) {
      int to = apply(b, letter);
      if (!reached[static_cast<size_t>(to)]) {
        reached[static_cast<size_t>(to)] = true;
        ++count;
        queue.push_back(to);
      }
    }
  }
  transitive_ = (count == x);
}

}  // namespace multispinal
