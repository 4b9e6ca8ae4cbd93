#include "mckay/tripod.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace mckay {

std::vector<Monomial> Tripod::basis() const {
  std::vector<Monomial> b = chosen;
  std::sort(b.begin(), b.end());
  return b;
}

bool Tripod::contains(const Monomial& m) const { return std::find(chosen.begin(), chosen.end(), m) != chosen.end(); }

void validate_tripod(const Tripod& t, const GroupSpec& g) {
  if (t.chosen.size() != g.order()) throw VerificationError("tripod size differs from |G|");
  std::set<Monomial> basis(t.chosen.begin(), t.chosen.end());
  if (basis.size() != t.chosen.size()) throw VerificationError("tripod repeats a monomial");
  for (std::size_t a = 0; a < t.chosen.size(); ++a) {
    const auto& m = t.chosen[a];
    if (g.char_index_of(m.exps()) != a) throw VerificationError("tripod monomial " + m.to_string() + " has the wrong character");
    for (int i = 0; i < t.n; ++i) {
      if (m.e[i] >= g.exponent()) throw VerificationError("tripod exponent outside the box");
      if (m.e[i] == 0) continue;
      Monomial d = m;
      --d.e[i];
      if (!basis.count(d)) throw VerificationError("tripod is not downward closed at " + m.to_string());
    }
  }
}

namespace {

// Every basis monomial of a tripod is a minimal generator of its character,
// and all of its divisors are basis monomials of their own characters. So a
// tripod is a choice b(a) in L(a) for every character such that choosing
// b(a) = l forces b(char d) = d for every divisor d of l. The search branches
// on the character with the fewest consistent generators.
struct Candidate {
  Monomial m;
  std::vector<std::pair<std::size_t, Monomial>> divisors;  // (character, divisor), including m
};

class Search {
 public:
  explicit Search(const GroupSpec& g) : n_(g.dim()), order_(g.order()), assigned_(order_), value_(order_) {
    auto modules = all_minimal_generators(g);
    cands_.resize(order_);
    for (std::size_t a = 0; a < order_; ++a) {
      for (const auto& l : modules[a].generators()) {
        Candidate c{l, {}};
        std::vector<std::uint8_t> seen(order_, 0);
        bool ok = true;
        for (int i = 0; i <= l.e[0] && ok; ++i)
          for (int j = 0; j <= l.e[1] && ok; ++j)
            for (int k = 0; k <= l.e[2] && ok; ++k) {
              Monomial d(n_, {i, j, k});
              std::size_t ch = g.char_index_of(d.exps());
              ok = !seen[ch] && modules[ch].contains(d);
              seen[ch] = 1;
              c.divisors.emplace_back(ch, d);
            }
        if (ok) cands_[a].push_back(std::move(c));
      }
    }
  }

  void reset() {
    std::fill(assigned_.begin(), assigned_.end(), 0);
    trail_.clear();
    assign(0, cands_[0].front());
  }

  void run(std::vector<Tripod>& found, std::size_t split_depth = 0,
           std::vector<std::vector<std::pair<std::size_t, std::size_t>>>* frontier = nullptr) {
    std::size_t best = order_, best_count = SIZE_MAX;
    for (std::size_t a = 0; a < order_; ++a) {
      if (assigned_[a]) continue;
      std::size_t cnt = 0;
      for (const auto& c : cands_[a]) cnt += consistent(c);
      if (cnt < best_count) {
        best = a;
        best_count = cnt;
        if (cnt == 0) return;
      }
    }
    if (best == order_) {
      Tripod t;
      t.n = n_;
      t.chosen = value_;
      found.push_back(std::move(t));
      return;
    }
    if (frontier && path_.size() == split_depth) {
      frontier->push_back(path_);
      return;
    }
    for (std::size_t i = 0; i < cands_[best].size(); ++i) {
      const auto& c = cands_[best][i];
      if (!consistent(c)) continue;
      std::size_t mark = trail_.size();
      assign(best, c);
      path_.emplace_back(best, i);
      run(found, split_depth, frontier);
      path_.pop_back();
      undo(mark);
    }
  }

  void replay(const std::vector<std::pair<std::size_t, std::size_t>>& path) {
    reset();
    for (auto [a, i] : path) assign(a, cands_[a][i]);
    path_ = path;
  }

 private:
  bool consistent(const Candidate& c) const {
    for (const auto& [ch, d] : c.divisors)
      if (assigned_[ch] && !(value_[ch] == d)) return false;
    return true;
  }

  void assign(std::size_t, const Candidate& c) {
    for (const auto& [ch, d] : c.divisors) {
      if (assigned_[ch]) continue;
      assigned_[ch] = 1;
      value_[ch] = d;
      trail_.push_back(ch);
    }
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      assigned_[trail_.back()] = 0;
      trail_.pop_back();
    }
  }

  int n_;
  std::size_t order_;
  std::vector<std::vector<Candidate>> cands_;
  std::vector<std::uint8_t> assigned_;
  std::vector<Monomial> value_;
  std::vector<std::size_t> trail_;
  std::vector<std::pair<std::size_t, std::size_t>> path_;
};

void check_input(const GroupSpec& g, std::size_t max_order) {
  if (g.dim() != 2 && g.dim() != 3) throw DomainError("tripod search requires n = 2 or 3");
  if (g.order() > max_order)
    throw DomainError("group order " + std::to_string(g.order()) + " exceeds the bound " + std::to_string(max_order));
}

}  // namespace

std::vector<Tripod> enumerate_tripods(const GroupSpec& g, const TripodSearchOptions& opts) {
  check_input(g, opts.max_order);
  unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;

  Search root(g);
  root.reset();
  std::vector<Tripod> found;
  if (threads == 1) {
    root.run(found);
  } else {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> prefixes;
    root.run(found, 3, &prefixes);
    std::vector<std::vector<Tripod>> parts(prefixes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      Search s = root;
      for (std::size_t i = next++; i < prefixes.size(); i = next++) {
        s.replay(prefixes[i]);
        s.run(parts[i]);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(found));
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Tripod> enumerate_tripods_oracle(const GroupSpec& g, std::size_t max_order) {
  check_input(g, max_order);
  const int n = g.dim();
  using Key = std::vector<Monomial>;  // sorted basis
  std::set<Key> level{Key{Monomial::one(n)}};
  for (std::size_t size = 1; size < g.order(); ++size) {
    std::set<Key> next;
    for (const auto& s : level) {
      std::vector<std::uint8_t> used(g.order(), 0);
      for (const auto& m : s) used[g.char_index_of(m.exps())] = 1;
      for (const auto& base : s)
        for (int i = 0; i < n; ++i) {
          Monomial m = base;
          ++m.e[i];
          if (std::binary_search(s.begin(), s.end(), m)) continue;
          if (used[g.char_index_of(m.exps())]) continue;
          bool closed = true;
          for (int j = 0; j < n && closed; ++j) {
            if (m.e[j] == 0) continue;
            Monomial d = m;
            --d.e[j];
            closed = std::binary_search(s.begin(), s.end(), d);
          }
          if (!closed) continue;
          Key k = s;
          k.insert(std::upper_bound(k.begin(), k.end(), m), m);
          next.insert(std::move(k));
        }
    }
    level = std::move(next);
  }
  std::vector<Tripod> out;
  for (const auto& s : level) {
    Tripod t;
    t.n = n;
    t.chosen.assign(g.order(), Monomial::one(n));
    for (const auto& m : s) t.chosen[g.char_index_of(m.exps())] = m;
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Tripod> tripod_at_weight(const std::vector<Int>& v, const GroupSpec& g,
                                       const std::vector<CharacterModule>& modules) {
  Tripod t;
  t.n = g.dim();
  t.chosen.reserve(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) {
    auto mm = marked_minimum(modules.at(a), v);
    if (mm.is_tie()) return std::nullopt;
    t.chosen.push_back(mm.minimizers.front());
  }
  try {
    validate_tripod(t, g);
  } catch (const VerificationError&) {
    return std::nullopt;
  }
  return t;
}

}  // namespace mckay
