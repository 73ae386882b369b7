#include "multispinal/action.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace multispinal {

namespace {

void check_letter(const MultispinalInstance& instance, int letter) {
  if (letter < 0 || letter >= instance.alphabet_size())
    throw Error("BadWord", "letter index " + std::to_string(letter) + " outside alphabet of size " +
                               std::to_string(instance.alphabet_size()));
}

void check_word(const MultispinalInstance& instance, const Word& u) {
  for (int letter : u) check_letter(instance, letter);
}

}  // namespace

StepResult step(const MultispinalInstance& instance, Agent g, int letter) {
  check_letter(instance, letter);
  switch (g.side) {
    case Side::Identity:
      return {letter, Agent::identity()};
    case Side::Aut: {
      const auto& entry = instance.psi_at(letter);
      int image = entry.map(g.element);
      Agent next = (entry.kind == PsiKind::Aut) ? instance.a_agent(image) : instance.b_agent(image);
      return {letter, next};
    }
    case Side::Perm:
      return {instance.action().apply(g.element, letter), Agent::identity()};
  }
  return {letter, Agent::identity()};
}

WordResult apply_word(const MultispinalInstance& instance, Agent g, const Word& u) {
  WordResult result{Word{}, g};
  result.image.reserve(u.size());
  for (int letter : u) {
    StepResult s = step(instance, result.restriction, letter);
    result.image.push_back(s.letter);
    result.restriction = s.next;
  }
  return result;
}

ProductResult apply_product(const MultispinalInstance& instance, const std::vector<Agent>& gs,
                            const Word& u) {
  check_word(instance, u);
  ProductResult result;
  result.restrictions.assign(gs.size(), Agent::identity());
  Word w = u;
  for (size_t i = gs.size(); i-- > 0;) {
    WordResult r = apply_word(instance, gs[i], w);
    result.restrictions[i] = r.restriction;
    w = std::move(r.image);
  }
  result.image = std::move(w);
  return result;
}

BigInt fixed_count(const MultispinalInstance& instance, Agent g, int depth) {
  if (depth < 0) throw Error("BadDepth", "depth must be nonnegative");
  const int start = instance.index_of_agent(g);
  if (start < 0) throw Error("UnknownAgent", "agent outside the instance universe");

  const std::vector<Agent> universe = instance.agent_universe();
  const int agents = static_cast<int>(universe.size());
  const int x = instance.alphabet_size();

  // transitions[i][letter]: target agent index, or -1 when the letter moves
  struct Edge {
    int target = -1;
  };
  std::vector<std::vector<Edge>> transitions(static_cast<size_t>(agents),
                                             std::vector<Edge>(static_cast<size_t>(x)));
  for (int i = 0; i < agents; ++i) {
    for (int letter = 0; letter < x; ++letter) {
      StepResult s = step(instance, universe[static_cast<size_t>(i)], letter);
      if (s.letter == letter)
        transitions[static_cast<size_t>(i)][static_cast<size_t>(letter)].target =
            instance.index_of_agent(s.next);
    }
  }

  std::vector<BigInt> prev(static_cast<size_t>(agents), 1);  // every agent fixes the empty word
  std::vector<BigInt> cur(static_cast<size_t>(agents));
  for (int d = 1; d <= depth; ++d) {
    for (int i = 0; i < agents; ++i) {
      BigInt total = 0;
      for (int letter = 0; letter < x; ++letter) {
        int target = transitions[static_cast<size_t>(i)][static_cast<size_t>(letter)].target;
        if (target >= 0) total += prev[static_cast<size_t>(target)];
      }
      cur[static_cast<size_t>(i)] = total;
    }
    std::swap(prev, cur);
  }
  return prev[static_cast<size_t>(start)];
}

Agent agent_inverse(const MultispinalInstance& instance, Agent g) {
  switch (g.side) {
    case Side::Identity:
      return g;
    case Side::Aut:
      return instance.a_agent(instance.A()->inv(g.element));
    case Side::Perm:
      return instance.b_agent(instance.B()->inv(g.element));
  }
  return g;
}

Agent agent_product(const MultispinalInstance& instance, Agent g, Agent h) {
  if (g.is_identity()) return h;
  if (h.is_identity()) return g;
  if (g.side != h.side)
    throw Error("SideMismatch", "cannot multiply an A agent by a B agent");
  if (g.side == Side::Aut) return instance.a_agent(instance.A()->mul(g.element, h.element));
  return instance.b_agent(instance.B()->mul(g.element, h.element));
}

namespace {

// A nontrivial agent must move some finite word (wordwise faithfulness).
// Nontrivial Perm agents move the first letter outright; for Aut agents we
// require a nontrivial Perm agent among the reachable restrictions, which
// the trivial hom-closure intersection guarantees.
void assert_moves_somewhere(const MultispinalInstance& instance, Agent g) {
  if (g.side != Side::Aut) return;
  std::set<Agent> seen{g};
  std::vector<Agent> queue{g};
  while (!queue.empty()) {
    Agent cur = queue.back();
    queue.pop_back();
    for (int letter = 0; letter < instance.alphabet_size(); ++letter) {
      StepResult s = step(instance, cur, letter);
      if (s.next.side == Side::Perm) return;
      if (!s.next.is_identity() && seen.insert(s.next).second) queue.push_back(s.next);
    }
  }
  throw Defect("FaithfulnessViolated",
               "agent " + instance.agent_label(g) + " never reaches a letter-moving restriction");
}

}  // namespace

GermVerdict decide_germ(const MultispinalInstance& instance, Agent g, Agent h,
                        const EventuallyPeriodicWord& w) {
  if (w.period.empty()) throw Error("BadWord", "period must be nonempty");
  check_word(instance, w.preperiod);
  check_word(instance, w.period);

  Agent k = agent_product(instance, agent_inverse(instance, h), g);
  if (k.is_identity()) return {GermVerdict::Kind::Equal, 0};

  const int m = static_cast<int>(w.preperiod.size());
  const int period_len = static_cast<int>(w.period.size());
  std::set<std::pair<Agent, int>> seen;
  int pos = 0;
  while (true) {
    if (pos >= m) {
      int phase = (pos - m) % period_len;
      if (!seen.insert({k, phase}).second) {
        assert_moves_somewhere(instance, k);
        return {GermVerdict::Kind::DifferentGerm, pos};
      }
    }
    int letter = (pos < m) ? w.preperiod[static_cast<size_t>(pos)]
                           : w.period[static_cast<size_t>((pos - m) % period_len)];
    StepResult s = step(instance, k, letter);
    if (s.letter != letter) return {GermVerdict::Kind::DifferentImage, pos};
    k = s.next;
    ++pos;
    if (k.is_identity()) return {GermVerdict::Kind::Equal, pos};
    if (pos > m + (instance.agent_count() + 1) * period_len)
      throw Defect("GermWalkDiverged", "state never repeated within the pigeonhole bound");
  }
}

bool agrees_on_cylinder(const MultispinalInstance& instance, Agent g, Agent h, const Word& u) {
  check_word(instance, u);
  Agent k = agent_product(instance, agent_inverse(instance, h), g);
  WordResult r = apply_word(instance, k, u);
  return r.image == u && r.restriction.is_identity();
}

std::optional<NonHausdorffWitness> find_nonhausdorff_witness(const MultispinalInstance& instance,
                                                             const WitnessBounds& bounds) {
  if (bounds.max_period < 1) return std::nullopt;
  const auto& aut_letters = instance.aut_letters();
  const auto& a = *instance.A();

  for (int period_len = 1; period_len <= bounds.max_period; ++period_len) {
    // lexicographic enumeration of periods over the aut letters
    std::vector<int> choice(static_cast<size_t>(period_len), 0);
    while (true) {
      Word period(static_cast<size_t>(period_len));
      for (int i = 0; i < period_len; ++i)
        period[static_cast<size_t>(i)] = aut_letters[static_cast<size_t>(choice[static_cast<size_t>(i)])];

      for (int start = 0; start < a.order(); ++start) {
        if (start == a.identity()) continue;

        // walk the restriction sequence until an (element, phase) state repeats
        std::map<std::pair<int, int>, int> first_seen;  // state -> position
        std::vector<int> elements;                      // element at each position
        int element = start;
        int pos = 0;
        int cycle_begin = -1;
        while (true) {
          auto state = std::make_pair(element, pos % period_len);
          auto [it, inserted] = first_seen.try_emplace(state, pos);
          if (!inserted) {
            cycle_begin = it->second;
            break;
          }
          elements.push_back(element);
          element = instance.psi_at(period[static_cast<size_t>(pos % period_len)]).map(element);
          ++pos;
        }
        if (cycle_begin > bounds.max_preperiod * period_len) continue;
        const int cycle_len = pos - cycle_begin;  // a multiple of period_len

        for (int y : instance.y_letters()) {
          const auto& lambda = instance.psi_at(y).map;
          const int b_id = instance.B()->identity();
          int anchor = -1;
          for (int i = 0; i < cycle_len; ++i) {
            if (lambda(elements[static_cast<size_t>(cycle_begin + i)]) == b_id) {
              anchor = i;
              break;
            }
          }
          if (anchor < 0) continue;

          NonHausdorffWitness witness;
          witness.agent = Agent{Side::Aut, elements[static_cast<size_t>(cycle_begin + anchor)]};
          witness.escape_letter = y;
          const int shift = (cycle_begin + anchor) % period_len;
          witness.period.resize(static_cast<size_t>(period_len));
          for (int i = 0; i < period_len; ++i)
            witness.period[static_cast<size_t>(i)] = period[static_cast<size_t>((shift + i) % period_len)];
          for (int i = 0; i < cycle_len; ++i) {
            int idx = cycle_begin + (anchor + i) % cycle_len;
            if (lambda(elements[static_cast<size_t>(idx)]) == b_id) witness.phases.push_back(i);
          }
          return witness;
        }
      }

      // next period choice, lexicographic
      int i = period_len - 1;
      while (i >= 0 && choice[static_cast<size_t>(i)] == static_cast<int>(aut_letters.size()) - 1) {
        choice[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++choice[static_cast<size_t>(i)];
    }
  }
  return std::nullopt;
}

std::vector<Agent> nucleus_fixpoint(const MultispinalInstance& instance) {
  std::set<Agent> current;
  for (const Agent& g : instance.agent_universe()) current.insert(g);

  for (int round = 0; round <= instance.agent_count() + 1; ++round) {
    std::set<Agent> next;
    for (const Agent& g : current) {
      for (int letter = 0; letter < instance.alphabet_size(); ++letter)
        next.insert(step(instance, g, letter).next);
    }
    if (next == current) return {current.begin(), current.end()};
    current = std::move(next);
  }
  throw Defect("NucleusMismatch", "restriction iteration failed to stabilize");
}

}  // namespace multispinal
