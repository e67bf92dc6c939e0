#include "permchain/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace permchain {

// --- StabChain -------------------------------------------------------------

std::pair<Perm, std::size_t> StabChain::sift(const Perm& g, std::size_t from) const {
  Perm h = g;
  for (std::size_t lev = from; lev < levels_.size(); ++lev) {
    if (h.is_identity()) return {h, lev};
    Point image = h[levels_[lev].base];
    auto it = levels_[lev].transversal.find(image);
    if (it == levels_[lev].transversal.end()) return {h, lev};
    h = h * it->second.inverse();
  }
  return {h, levels_.size()};
}

std::vector<const Perm*> StabChain::gens_at(std::size_t lev) const {
  std::vector<const Perm*> gens;
  for (std::size_t j = lev; j < levels_.size(); ++j)
    for (const Perm& g : levels_[j].gens) gens.push_back(&g);
  return gens;
}

void StabChain::rebuild_orbit(std::size_t lev) {
  Level& level = levels_[lev];
  auto gens = gens_at(lev);
  level.transversal.clear();
  level.transversal.emplace(level.base, Perm(degree_));
  std::deque<Point> queue{level.base};
  while (!queue.empty()) {
    Point p = queue.front();
    queue.pop_front();
    for (const Perm* s : gens) {
      Point q = (*s)[p];
      if (!level.transversal.count(q)) {
        level.transversal.emplace(q, level.transversal.at(p) * *s);
        queue.push_back(q);
      }
    }
  }
}

void StabChain::place(Perm h, std::size_t lev) {
  if (lev == levels_.size()) levels_.push_back(Level{h.smallest_moved_point(), {}, {}});
  levels_[lev].gens.push_back(std::move(h));
}

void StabChain::verify_level(std::size_t lev) {
  for (;;) {
    rebuild_orbit(lev);
    std::vector<Point> orbit;
    orbit.reserve(levels_[lev].transversal.size());
    for (const auto& [p, u] : levels_[lev].transversal) orbit.push_back(p);
    std::sort(orbit.begin(), orbit.end());
    auto gens = gens_at(lev);

    bool added = false;
    for (Point p : orbit) {
      for (const Perm* s : gens) {
        const Perm& u = levels_[lev].transversal.at(p);
        const Perm& v = levels_[lev].transversal.at((*s)[p]);
        Perm schreier = u * *s * v.inverse();
        auto [h, depth] = sift(schreier, lev + 1);
        if (h.is_identity()) continue;
        place(std::move(h), depth);
        // The new strong generator also feeds every level between; re-verify
        // bottom-up, then restart this level with the grown orbit.
        for (std::size_t j = depth; j > lev; --j) verify_level(j);
        added = true;
        break;
      }
      if (added) break;
    }
    if (!added) return;
  }
}

void StabChain::extend(const Perm& g) {
  if (g.degree() != degree_) throw domain_violation("generator degree mismatch");
  auto [h, lev] = sift(g, 0);
  if (h.is_identity()) return;
  place(std::move(h), lev);
  for (std::size_t j = lev + 1; j-- > 0;) verify_level(j);
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) throw domain_violation("membership query degree mismatch");
  auto [h, lev] = sift(g, 0);
  return h.is_identity();
}

std::uint64_t StabChain::order() const {
  unsigned __int128 n = 1;
  for (const Level& level : levels_) {
    n *= level.transversal.size();
    if (n > static_cast<unsigned __int128>(UINT64_MAX))
      throw cap_exceeded("group order exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(n);
}

std::vector<Perm> StabChain::elements(std::uint64_t cap) const {
  if (order() > cap) throw cap_exceeded("element enumeration over cap");
  std::vector<Perm> result{Perm(degree_)};
  // Walk levels from the deepest stabilizer outwards: at each level, multiply
  // every accumulated element by every transversal representative.
  for (std::size_t lev = levels_.size(); lev-- > 0;) {
    std::vector<Perm> next;
    next.reserve(result.size() * levels_[lev].transversal.size());
    for (const Perm& tail : result)
      for (const auto& [p, u] : levels_[lev].transversal) next.push_back(tail * u);
    result = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

// --- PermGroup ---------------------------------------------------------------

PermGroup::PermGroup(Point degree) : degree_(degree), chain_(degree), order_(1) {}

PermGroup::PermGroup(Point degree, std::vector<Perm> generators)
    : degree_(degree), chain_(degree) {
  for (const Perm& g : generators) {
    if (g.degree() != degree_) throw domain_violation("mixed degrees in generating set");
    if (g.is_identity()) continue;
    if (std::find(gens_.begin(), gens_.end(), g) != gens_.end()) continue;
    gens_.push_back(g);
    chain_.extend(g);
  }
  order_ = chain_.order();
}

bool PermGroup::contains(const Perm& p) const { return chain_.contains(p); }

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree()) return false;
  for (const Perm& x : gens_)
    if (!g.contains(x)) return false;
  return true;
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const { return chain_.elements(cap); }

// --- free operations ---------------------------------------------------------

bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && a.is_subgroup_of(b);
}

bool is_normal_in(const PermGroup& n, const PermGroup& g) {
  if (!n.is_subgroup_of(g)) return false;
  for (const Perm& x : n.generators())
    for (const Perm& y : g.generators())
      if (!n.contains(x.conjugated_by(y))) return false;
  return true;
}

std::uint64_t index(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g)) throw domain_violation("index: subgroup relation does not hold");
  return g.order() / h.order();
}

namespace {

// Builds a group from a stream of candidate elements, keeping only those not
// already generated. Keeps generating sets small.
class IncrementalGroup {
public:
  explicit IncrementalGroup(Point degree) : degree_(degree), chain_(degree) {}

  bool add(const Perm& p) {
    if (p.is_identity() || chain_.contains(p)) return false;
    gens_.push_back(p);
    chain_.extend(p);
    return true;
  }
  bool contains(const Perm& p) const { return chain_.contains(p); }
  const std::vector<Perm>& gens() const { return gens_; }
  PermGroup finish() const { return PermGroup(degree_, gens_); }

private:
  Point degree_;
  std::vector<Perm> gens_;
  StabChain chain_;
};

}  // namespace

PermGroup intersection(const PermGroup& a, const PermGroup& b, std::uint64_t element_cap) {
  if (a.degree() != b.degree()) throw domain_violation("intersection: degree mismatch");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& other = a.order() <= b.order() ? b : a;
  IncrementalGroup acc(a.degree());
  for (const Perm& x : small.elements(element_cap))
    if (other.contains(x)) acc.add(x);
  return acc.finish();
}

PermGroup join(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw domain_violation("join: degree mismatch");
  std::vector<Perm> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup(a.degree(), std::move(gens));
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& s) {
  IncrementalGroup acc(g.degree());
  std::deque<Perm> queue;
  for (const Perm& x : s) {
    if (!g.contains(x)) throw domain_violation("normal_closure: seed not inside the group");
    if (acc.add(x)) queue.push_back(x);
  }
  while (!queue.empty()) {
    Perm x = queue.front();
    queue.pop_front();
    for (const Perm& y : g.generators()) {
      Perm c = x.conjugated_by(y);
      if (acc.add(c)) queue.push_back(c);
    }
  }
  return acc.finish();
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> comms;
  for (const Perm& a : g.generators())
    for (const Perm& b : g.generators()) {
      Perm c = commutator(a, b);
      if (!c.is_identity()) comms.push_back(c);
    }
  return normal_closure(g, comms);
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h, std::uint64_t element_cap) {
  if (!h.is_subgroup_of(g)) throw domain_violation("normalizer: subgroup relation does not hold");
  IncrementalGroup acc(g.degree());
  for (const Perm& x : g.elements(element_cap)) {
    bool ok = true;
    for (const Perm& y : h.generators())
      if (!h.contains(y.conjugated_by(x))) {
        ok = false;
        break;
      }
    if (ok) acc.add(x);
  }
  return acc.finish();
}

PermGroup centralizer(const PermGroup& g, const PermGroup& h, std::uint64_t element_cap) {
  IncrementalGroup acc(g.degree());
  for (const Perm& x : g.elements(element_cap)) {
    bool ok = true;
    for (const Perm& y : h.generators())
      if (!(x * y == y * x)) {
        ok = false;
        break;
      }
    if (ok) acc.add(x);
  }
  return acc.finish();
}

PermGroup core(const PermGroup& l, const PermGroup& k, std::uint64_t element_cap) {
  if (!k.is_subgroup_of(l)) throw domain_violation("core: subgroup relation does not hold");
  // Orbit of k under conjugation by generators of l, intersecting as we go.
  PermGroup result = k;
  std::vector<PermGroup> orbit{k};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (const Perm& y : l.generators()) {
      std::vector<Perm> conj_gens;
      conj_gens.reserve(orbit[i].generators().size());
      for (const Perm& x : orbit[i].generators()) conj_gens.push_back(x.conjugated_by(y));
      PermGroup conj(l.degree(), std::move(conj_gens));
      bool known = false;
      for (const PermGroup& seen : orbit)
        if (same_group(seen, conj)) {
          known = true;
          break;
        }
      if (!known) {
        result = intersection(result, conj, element_cap);
        orbit.push_back(std::move(conj));
        queue.push_back(orbit.size() - 1);
      }
    }
  }
  return result;
}

CosetAction coset_action(const PermGroup& g, const PermGroup& u, const Caps& caps) {
  if (!u.is_subgroup_of(g)) throw domain_violation("coset_action: subgroup relation does not hold");
  std::uint64_t idx = g.order() / u.order();
  if (idx > caps.coset_degree_cap) throw cap_exceeded("coset action degree over cap");

  std::vector<Perm> u_elements = u.elements(caps.element_cap);
  auto canonical = [&](const Perm& rep) {
    Perm best = u_elements.front() * rep;
    for (std::size_t i = 1; i < u_elements.size(); ++i) {
      Perm cand = u_elements[i] * rep;
      if (cand < best) best = cand;
    }
    return best;
  };

  std::unordered_map<Perm, Point, PermHash> coset_index;
  std::vector<Perm> reps;  // canonical representative per coset
  Perm start = canonical(Perm(g.degree()));
  coset_index.emplace(start, 0);
  reps.push_back(start);
  for (std::size_t head = 0; head < reps.size(); ++head) {
    for (const Perm& s : g.generators()) {
      Perm next = canonical(reps[head] * s);
      if (!coset_index.count(next)) {
        coset_index.emplace(next, static_cast<Point>(reps.size()));
        reps.push_back(std::move(next));
      }
    }
  }
  if (reps.size() != idx) throw domain_violation("coset enumeration mismatch");

  Point n = static_cast<Point>(reps.size());
  std::vector<Perm> image_gens;
  for (const Perm& s : g.generators()) {
    std::vector<Point> img(n);
    for (Point c = 0; c < n; ++c) img[c] = coset_index.at(canonical(reps[c] * s));
    image_gens.emplace_back(std::move(img));
  }
  PermGroup image(n, std::move(image_gens));
  std::uint64_t kernel_order = g.order() / image.order();
  return CosetAction{std::move(image), kernel_order};
}

PermGroup quotient(const PermGroup& g, const PermGroup& n, const Caps& caps) {
  if (!is_normal_in(n, g)) throw domain_violation("quotient: subgroup is not normal");
  if (n.trivial()) return g;
  CosetAction action = coset_action(g, n, caps);
  if (action.image.order() != g.order() / n.order())
    throw domain_violation("quotient image order mismatch");
  return action.image;
}

PermGroup coset_quotient_by_core(const PermGroup& l, const PermGroup& k, const Caps& caps) {
  if (k.trivial()) return l;
  return coset_action(l, k, caps).image;
}

}  // namespace permchain
