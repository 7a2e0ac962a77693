#ifndef LISA_HOM_SEARCH_HPP
#define LISA_HOM_SEARCH_HPP

#include "lisa/carrier.hpp"

namespace lisa {

struct HomSearchConfig {
  bool require_mul = false;   // demand f(xy) = f(x)f(y) as well
  bool require_zero = true;   // map carrier zero to carrier zero when both exist
  size_t max_solutions = 64;
  uint64_t max_steps = 100000000;
};

/// Every linear map (additive, scalar-compatible over the shared scalar
/// pool, optionally multiplicative) between two finite carriers that
/// extends the given seed assignments, as full tables source index ->
/// target index. Depth-first search with constraint propagation; the
/// propagation closes assignments under x+y, a.x (and xy when requested),
/// so underdetermined slots are branched over the whole target.
template <class SC, class TC>
class HomSearch {
public:
  static_assert(std::same_as<typename SC::Field, typename TC::Field>,
                "hom search needs a shared scalar field");

  HomSearch(const FiniteOps<SC>& s, const FiniteOps<TC>& t, HomSearchConfig cfg = {})
      : s_(s), t_(t), cfg_(cfg) {}

  std::vector<std::vector<int>> run(const std::vector<std::pair<int, int>>& seeds) {
    std::vector<int> assign(s_.n(), -1);
    for (auto [i, v] : seeds) {
      if (assign[i] >= 0 && assign[i] != v) return {};
      assign[i] = v;
    }
    if (cfg_.require_zero) {
      auto sz = s_.zero();
      auto tz = t_.zero();
      if (sz && tz) {
        if (assign[*sz] >= 0 && assign[*sz] != *tz) return {};
        assign[*sz] = *tz;
      }
    }
    solutions_.clear();
    steps_ = 0;
    search(assign);
    return solutions_;
  }

private:
  // returns false on contradiction
  bool propagate(std::vector<int>& a) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < s_.n(); ++i) {
        if (a[i] < 0) continue;
        for (const auto& sc : s_.scalars()) {
          if (++steps_ > cfg_.max_steps) throw Error("hom search step limit exceeded");
          int k = s_.smul(sc, i);
          int v = t_.smul(sc, a[i]);
          if (a[k] < 0) {
            a[k] = v;
            changed = true;
          } else if (a[k] != v) {
            return false;
          }
        }
        for (int j = 0; j < s_.n(); ++j) {
          if (a[j] < 0) continue;
          if (++steps_ > cfg_.max_steps) throw Error("hom search step limit exceeded");
          int k = s_.add(i, j);
          int v = t_.add(a[i], a[j]);
          if (a[k] < 0) {
            a[k] = v;
            changed = true;
          } else if (a[k] != v) {
            return false;
          }
          if (cfg_.require_mul) {
            k = s_.mul(i, j);
            v = t_.mul(a[i], a[j]);
            if (a[k] < 0) {
              a[k] = v;
              changed = true;
            } else if (a[k] != v) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  void search(std::vector<int> a) {
    if (solutions_.size() >= cfg_.max_solutions) return;
    if (!propagate(a)) return;
    int hole = -1;
    for (int i = 0; i < s_.n(); ++i)
      if (a[i] < 0) {
        hole = i;
        break;
      }
    if (hole < 0) {
      solutions_.push_back(a);
      return;
    }
    for (int v = 0; v < t_.n(); ++v) {
      auto next = a;
      next[hole] = v;
      search(std::move(next));
      if (solutions_.size() >= cfg_.max_solutions) return;
    }
  }

  const FiniteOps<SC>& s_;
  const FiniteOps<TC>& t_;
  HomSearchConfig cfg_;
  std::vector<std::vector<int>> solutions_;
  uint64_t steps_ = 0;
};

}  // namespace lisa

#endif
