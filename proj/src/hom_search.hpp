#pragma once

// Backtracking over generator images, shared by isomorphism testing,
// endomorphism enumeration and surjection search.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kschmidt/error.hpp"
#include "kschmidt/group.hpp"

namespace kschmidt::detail {

class HomSearch {
 public:
  // Receives the full image vector of a homomorphism; return true to stop.
  using Visit = std::function<bool(const std::vector<Element>&)>;
  // Called after generator `depth` has been assigned consistently; return
  // true to cut the branch.
  using Prune = std::function<bool(std::size_t depth, std::span<const Element> generator_images)>;

  HomSearch(const FiniteGroup& source, const FiniteGroup& target, std::vector<Element> generators,
            std::vector<std::vector<Element>> candidates, bool injective, std::uint64_t node_budget)
      : source_(source),
        target_(target),
        generators_(std::move(generators)),
        candidates_(std::move(candidates)),
        injective_(injective),
        budget_(node_budget),
        images_(source.order(), kUnset),
        used_(target.order(), 0),
        generator_images_(generators_.size(), 0) {}

  // Returns true if the visitor asked to stop.
  bool run(const Visit& visit, const Prune& prune = {}) {
    images_.assign(source_.order(), kUnset);
    used_.assign(target_.order(), 0);
    images_[0] = 0;
    used_[0] = 1;
    reached_.assign(1, 0);
    return descend(0, visit, prune);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  static constexpr Element kUnset = ~Element{0};

  bool descend(std::size_t depth, const Visit& visit, const Prune& prune) {
    if (depth == generators_.size()) {
      if (reached_.size() != source_.order()) return false;
      return visit(images_);
    }
    for (const Element h : candidates_[depth]) {
      if (++nodes_ > budget_) {
        throw Error(ErrorKind::kSearchBudgetExceeded,
                    "homomorphism search exceeded " + std::to_string(budget_) + " nodes");
      }
      const std::size_t mark = reached_.size();
      generator_images_[depth] = h;
      const bool ok = extend(depth, mark);
      bool stop = false;
      if (ok && !(prune && prune(depth, std::span<const Element>(generator_images_).first(depth + 1)))) {
        stop = descend(depth + 1, visit, prune);
      }
      for (std::size_t i = mark; i < reached_.size(); ++i) {
        if (injective_) used_[images_[reached_[i]]] = 0;
        images_[reached_[i]] = kUnset;
      }
      reached_.resize(mark);
      if (stop) return true;
    }
    return false;
  }

  // Closes the partial map over <g_0..g_depth>; false on a relation clash
  // (or a collision, when searching injective maps).
  bool extend(std::size_t depth, std::size_t old_size) {
    for (std::size_t i = 0; i < reached_.size(); ++i) {
      const Element x = reached_[i];
      const std::size_t first_gen = i < old_size ? depth : 0;
      for (std::size_t j = first_gen; j <= depth; ++j) {
        const Element y = source_.mul(x, generators_[j]);
        const Element fy = target_.mul(images_[x], generator_images_[j]);
        if (images_[y] == kUnset) {
          if (injective_) {
            if (used_[fy]) return false;
            used_[fy] = 1;
          }
          images_[y] = fy;
          reached_.push_back(y);
        } else if (images_[y] != fy) {
          return false;
        }
      }
    }
    return true;
  }

  const FiniteGroup& source_;
  const FiniteGroup& target_;
  std::vector<Element> generators_;
  std::vector<std::vector<Element>> candidates_;
  bool injective_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Element> images_;
  std::vector<char> used_;
  std::vector<Element> reached_;
  std::vector<Element> generator_images_;
};

}  // namespace kschmidt::detail
