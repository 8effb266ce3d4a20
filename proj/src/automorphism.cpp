#include "ramify/automorphism.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "ramify/error.hpp"

namespace ramify {

bool Homomorphism::is_homomorphism() const {
  const std::size_t n = source->order();
  if (image.size() != n || image[0] != 0) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (image[source->mul(static_cast<Elem>(x), static_cast<Elem>(y))] !=
          target->mul(image[x], image[y])) {
        return false;
      }
    }
  return true;
}

bool Homomorphism::is_bijective() const {
  if (source->order() != target->order()) return false;
  std::vector<bool> hit(target->order(), false);
  for (Elem v : image) {
    if (v >= target->order() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

namespace {

/// Backtracking over images of `basis` in `dst`, defining the map on the
/// subgroup generated so far and checking every edge x -> x*s_j.
class ImageSearch {
 public:
  ImageSearch(const GroupTable& src, const GroupTable& dst, std::vector<Elem> basis,
              std::vector<std::vector<Elem>> candidates)
      : src_(src), dst_(dst), basis_(std::move(basis)), candidates_(std::move(candidates)),
        img_(src.order(), -1), used_(dst.order(), false), chosen_(basis_.size()) {
    img_[0] = 0;
    used_[0] = true;
    defined_.push_back(0);
  }

  const std::vector<std::vector<Elem>>& candidates() const { return candidates_; }

  /// Runs the search below a fixed first image. `visit` returns false to stop.
  void run_from(std::size_t first_candidate, const std::function<bool(const std::vector<Elem>&)>& visit) {
    if (basis_.empty()) {
      visit(image_vector());
      return;
    }
    visit_ = &visit;
    stop_ = false;
    const std::size_t mark = defined_.size();
    if (extend(0, candidates_[0][first_candidate])) descend(1);
    undo(mark);
  }

 private:
  std::vector<Elem> image_vector() const {
    std::vector<Elem> out(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out[i] = static_cast<Elem>(img_[i]);
    return out;
  }

  void descend(std::size_t k) {
    if (k == basis_.size()) {
      if (defined_.size() == src_.order() && !(*visit_)(image_vector())) stop_ = true;
      return;
    }
    for (Elem t : candidates_[k]) {
      if (stop_) return;
      if (used_[t]) continue;
      const std::size_t mark = defined_.size();
      if (extend(k, t)) descend(k + 1);
      undo(mark);
    }
  }

  bool extend(std::size_t k, Elem t) {
    chosen_[k] = t;
    const std::size_t old_size = defined_.size();
    for (std::size_t p = 0; p < defined_.size(); ++p) {
      const Elem x = defined_[p];
      const Elem fx = static_cast<Elem>(img_[x]);
      for (std::size_t j = 0; j <= k; ++j) {
        if (p < old_size && j < k) continue;
        const Elem y = src_.mul(x, basis_[j]);
        const Elem v = dst_.mul(fx, chosen_[j]);
        if (img_[y] < 0) {
          if (used_[v]) return false;
          img_[y] = v;
          used_[v] = true;
          defined_.push_back(y);
        } else if (img_[y] != v) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (defined_.size() > mark) {
      Elem y = defined_.back();
      defined_.pop_back();
      used_[img_[y]] = false;
      img_[y] = -1;
    }
  }

  const GroupTable& src_;
  const GroupTable& dst_;
  std::vector<Elem> basis_;
  std::vector<std::vector<Elem>> candidates_;
  std::vector<std::int32_t> img_;
  std::vector<bool> used_;
  std::vector<Elem> defined_;
  std::vector<Elem> chosen_;
  const std::function<bool(const std::vector<Elem>&)>* visit_ = nullptr;
  bool stop_ = false;
};

std::vector<std::vector<Elem>> image_candidates(const GroupTable& src, const GroupTable& dst,
                                                const std::vector<Elem>& basis) {
  std::vector<std::vector<Elem>> out;
  for (Elem s : basis) {
    std::vector<Elem> c;
    for (std::size_t t = 0; t < dst.order(); ++t) {
      if (dst.elem_order(static_cast<Elem>(t)) == src.elem_order(s) &&
          dst.class_size(static_cast<Elem>(t)) == src.class_size(s)) {
        c.push_back(static_cast<Elem>(t));
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string key_of(const std::vector<Elem>& image, const std::vector<Elem>& basis) {
  std::string key;
  key.reserve(basis.size() * 2);
  for (Elem s : basis) {
    key.push_back(static_cast<char>(image[s] & 0xff));
    key.push_back(static_cast<char>(image[s] >> 8));
  }
  return key;
}

std::size_t closure_size(const AutGroup& aut, const std::unordered_map<std::string, std::size_t>& index,
                         const std::vector<std::size_t>& gens, std::vector<bool>& member) {
  member.assign(aut.elements.size(), false);
  std::vector<std::size_t> queue;
  std::vector<Elem> id(aut.base->order());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<Elem>(i);
  std::size_t start = index.at(key_of(id, aut.basis));
  member[start] = true;
  queue.push_back(start);
  std::string key(aut.basis.size() * 2, '\0');
  for (std::size_t p = 0; p < queue.size(); ++p) {
    const auto& m = aut.elements[queue[p]].image;
    for (std::size_t gi : gens) {
      const auto& g = aut.elements[gi].image;
      for (std::size_t i = 0; i < aut.basis.size(); ++i) {
        Elem v = g[m[aut.basis[i]]];
        key[2 * i] = static_cast<char>(v & 0xff);
        key[2 * i + 1] = static_cast<char>(v >> 8);
      }
      std::size_t c = index.at(key);
      if (!member[c]) {
        member[c] = true;
        queue.push_back(c);
      }
    }
  }
  return queue.size();
}

}  // namespace

AutGroup automorphisms(const GroupTable& g, unsigned jobs) {
  AutGroup aut;
  aut.base = &g;
  aut.basis = greedy_generating_set(g);
  auto candidates = image_candidates(g, g, aut.basis);
  std::vector<std::vector<std::vector<Elem>>> per_first;
  std::atomic<std::size_t> total{0};
  std::atomic<bool> overflow{false};

  if (aut.basis.empty()) {
    std::vector<Elem> id{0};
    aut.elements.push_back(Homomorphism{&g, &g, id});
  } else {
    const std::size_t firsts = candidates[0].size();
    per_first.resize(firsts);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      ImageSearch search(g, g, aut.basis, candidates);
      for (std::size_t i = next++; i < firsts && !overflow; i = next++) {
        auto& out = per_first[i];
        search.run_from(i, [&](const std::vector<Elem>& image) {
          out.push_back(image);
          if (++total > kMaxAutomorphisms) {
            overflow = true;
            return false;
          }
          return true;
        });
      }
    };
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, firsts));
    if (jobs <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    if (overflow) throw BoundExceeded("automorphism group exceeds " + std::to_string(kMaxAutomorphisms) + " elements");
    aut.elements.reserve(total);
    for (auto& bucket : per_first)
      for (auto& image : bucket) aut.elements.push_back(Homomorphism{&g, &g, std::move(image)});
  }

  std::unordered_map<std::string, std::size_t> index;
  index.reserve(aut.elements.size());
  for (std::size_t i = 0; i < aut.elements.size(); ++i) index.emplace(key_of(aut.elements[i].image, aut.basis), i);
  std::vector<bool> member;
  std::size_t covered = closure_size(aut, index, aut.generators, member);
  for (std::size_t i = 0; i < aut.elements.size() && covered < aut.elements.size(); ++i) {
    if (member[i]) continue;
    aut.generators.push_back(i);
    covered = closure_size(aut, index, aut.generators, member);
  }
  return aut;
}

bool same_invariants(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return false;
  if (a.is_abelian() != b.is_abelian()) return false;
  auto stats = [](const GroupTable& g) {
    std::vector<std::pair<unsigned, std::size_t>> v;
    for (std::size_t x = 0; x < g.order(); ++x)
      v.emplace_back(g.elem_order(static_cast<Elem>(x)), g.class_size(static_cast<Elem>(x)));
    std::sort(v.begin(), v.end());
    return v;
  };
  if (stats(a) != stats(b)) return false;
  if (center(a).size() != center(b).size()) return false;
  if (commutator_subgroup(a).size() != commutator_subgroup(b).size()) return false;
  if (abelianization(a) != abelianization(b)) return false;
  return index_two_subgroups(a).size() == index_two_subgroups(b).size();
}

std::optional<Homomorphism> find_isomorphism(const GroupTable& a, const GroupTable& b) {
  if (!same_invariants(a, b)) return std::nullopt;
  auto basis = greedy_generating_set(a);
  if (basis.empty()) return Homomorphism{&a, &b, {0}};
  ImageSearch search(a, b, basis, image_candidates(a, b, basis));
  std::optional<Homomorphism> found;
  for (std::size_t i = 0; i < search.candidates()[0].size() && !found; ++i) {
    search.run_from(i, [&](const std::vector<Elem>& image) {
      found = Homomorphism{&a, &b, image};
      return false;
    });
  }
  return found;
}

bool is_isomorphic(const GroupTable& a, const GroupTable& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace ramify
