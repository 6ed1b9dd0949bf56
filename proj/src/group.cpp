#include "hnp/group.hpp"

#include <algorithm>
#include <deque>

#include "hnp/errors.hpp"

namespace hnp {

std::shared_ptr<const Group> Group::generate(std::vector<Permutation> gens, int degree,
                                             std::size_t cap) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw PreconditionError("generator degree mismatch");

  auto group = std::shared_ptr<Group>(new Group());
  group->degree_ = degree;
  group->generators_ = gens;

  group->index_.reserve(2 * cap);
  group->elements_.push_back(Permutation::identity(degree));
  group->index_.emplace(group->elements_[0], 0);

  // breadth-first closure under right multiplication by the generators,
  // in the order given
  for (std::size_t head = 0; head < group->elements_.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = group->elements_[head] * g;
      auto [it, inserted] = group->index_.emplace(next, static_cast<ElementIndex>(group->elements_.size()));
      if (inserted) {
        if (group->elements_.size() >= cap)
          throw CapExceeded("group order exceeds cap " + std::to_string(cap));
        group->elements_.push_back(std::move(next));
      }
    }
  }

  const std::size_t n = group->elements_.size();
  group->inverse_.resize(n);
  group->element_order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    group->inverse_[i] = group->index_.at(group->elements_[i].inverse());
    group->element_order_[i] = group->elements_[i].order();
  }
  group->generator_indices_.reserve(gens.size());
  for (const auto& g : gens) group->generator_indices_.push_back(group->index_.at(g));
  return group;
}

std::optional<ElementIndex> Group::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementIndex Group::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw PreconditionError("permutation is not a member of the group");
  return it->second;
}

ElementIndex Group::mul(ElementIndex a, ElementIndex b) const {
  const auto& pa = elements_[a].images();
  const auto& pb = elements_[b].images();
  std::vector<Point> img(pa.size());
  for (std::size_t i = 0; i < pa.size(); ++i) img[i] = pb[pa[i]];
  return index_.at(Permutation(std::move(img)));
}

ElementIndex Group::conj(ElementIndex h, ElementIndex x) const {
  // x^-1 h x applied left to right: i -> x(h(x^-1(i)))
  const auto& px = elements_[x].images();
  const auto& ph = elements_[h].images();
  const auto& pxi = elements_[inverse_[x]].images();
  std::vector<Point> img(px.size());
  for (std::size_t i = 0; i < px.size(); ++i) img[i] = px[ph[pxi[i]]];
  return index_.at(Permutation(std::move(img)));
}

ElementIndex Group::comm(ElementIndex a, ElementIndex b) const {
  // a^-1 b^-1 a b applied left to right: i -> b(a(b^-1(a^-1(i))))
  const auto& pa = elements_[a].images();
  const auto& pb = elements_[b].images();
  const auto& pai = elements_[inverse_[a]].images();
  const auto& pbi = elements_[inverse_[b]].images();
  std::vector<Point> img(pa.size());
  for (std::size_t i = 0; i < pa.size(); ++i) img[i] = pb[pa[pbi[pai[i]]]];
  return index_.at(Permutation(std::move(img)));
}

ElementIndex Group::pow(ElementIndex a, long long e) const {
  const int ord = element_order_[a];
  long long r = e % ord;
  if (r < 0) r += ord;
  ElementIndex acc = 0;
  for (long long i = 0; i < r; ++i) acc = mul(acc, a);
  return acc;
}

namespace {

// Closure under right multiplication; `seed` bits must contain the identity.
void close_under_generators(const Group& g, IndexSet& bits, std::vector<ElementIndex>& list,
                            const std::vector<ElementIndex>& gens) {
  for (std::size_t head = 0; head < list.size(); ++head) {
    for (ElementIndex gen : gens) {
      ElementIndex y = g.mul(list[head], gen);
      if (!bits.test(y)) {
        bits.set(y);
        list.push_back(y);
      }
    }
  }
}

std::vector<ElementIndex> closure_list(const Group& g, const std::vector<ElementIndex>& gens,
                                       IndexSet& bits) {
  bits = IndexSet(g.order());
  std::vector<ElementIndex> list{0};
  bits.set(0);
  close_under_generators(g, bits, list, gens);
  return list;
}

// Greedy witness generating set: scan members in index order, keep an element
// whenever it is outside the closure of what has been kept so far.
std::vector<ElementIndex> greedy_generators(const Group& g, const std::vector<ElementIndex>& members) {
  std::vector<ElementIndex> gens;
  IndexSet bits(g.order());
  std::vector<ElementIndex> list{0};
  bits.set(0);
  for (ElementIndex m : members) {
    if (bits.test(m)) continue;
    gens.push_back(m);
    close_under_generators(g, bits, list, gens);
  }
  return gens;
}

std::vector<ElementIndex> bits_to_list(const IndexSet& bits) {
  std::vector<ElementIndex> list;
  bits.for_each([&](std::size_t i) { list.push_back(static_cast<ElementIndex>(i)); });
  return list;
}

}  // namespace

Subgroup subgroup_from_index_generators(GroupPtr parent, std::vector<ElementIndex> gens) {
  IndexSet bits;
  std::vector<ElementIndex> list = closure_list(*parent, gens, bits);
  std::sort(list.begin(), list.end());
  return Subgroup(std::move(parent), std::move(bits), std::move(list), std::move(gens));
}

Subgroup subgroup_from_member_set(GroupPtr parent, const IndexSet& members) {
  std::vector<ElementIndex> list = bits_to_list(members);
  std::vector<ElementIndex> gens = greedy_generators(*parent, list);
  return Subgroup(std::move(parent), members, std::move(list), std::move(gens));
}

Subgroup trivial_subgroup(GroupPtr parent) {
  return subgroup_from_index_generators(std::move(parent), {});
}

Subgroup whole_group(GroupPtr parent) {
  IndexSet bits(parent->order());
  std::vector<ElementIndex> list(parent->order());
  for (std::size_t i = 0; i < parent->order(); ++i) {
    bits.set(i);
    list[i] = static_cast<ElementIndex>(i);
  }
  // drop identity / duplicate generator indices for a clean witness set
  std::vector<ElementIndex> wit;
  for (ElementIndex g : parent->generator_indices())
    if (g != 0 && std::find(wit.begin(), wit.end(), g) == wit.end()) wit.push_back(g);
  if (parent->order() > 1 && wit.empty()) wit = greedy_generators(*parent, list);
  return Subgroup(std::move(parent), std::move(bits), std::move(list), std::move(wit));
}

Subgroup subgroup_from_generators(GroupPtr parent, const std::vector<Permutation>& gens) {
  std::vector<ElementIndex> idx;
  idx.reserve(gens.size());
  for (const auto& g : gens) {
    auto found = parent->find(g);
    if (!found) throw PreconditionError("generator " + g.cycle_string() + " is not in the group");
    idx.push_back(*found);
  }
  return subgroup_from_index_generators(std::move(parent), std::move(idx));
}

Subgroup conjugate_subgroup(const Subgroup& h, ElementIndex g) {
  const Group& grp = *h.parent();
  if (g >= grp.order()) throw PreconditionError("conjugating element outside parent group");
  IndexSet bits(grp.order());
  for (ElementIndex m : h.members_list()) bits.set(grp.conj(m, g));
  std::vector<ElementIndex> gens;
  gens.reserve(h.witness_generators().size());
  for (ElementIndex w : h.witness_generators()) gens.push_back(grp.conj(w, g));
  std::vector<ElementIndex> list = bits_to_list(bits);
  return Subgroup(h.parent(), std::move(bits), std::move(list), std::move(gens));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw PreconditionError("subgroup parents differ");
  IndexSet bits = a.members();
  bits &= b.members();
  return subgroup_from_member_set(a.parent(), bits);
}

namespace {

bool normalizes(const Group& g, const Subgroup& h, ElementIndex x) {
  for (ElementIndex w : h.witness_generators())
    if (!h.contains(g.conj(w, x))) return false;
  return true;
}

}  // namespace

Subgroup normalizer(const Subgroup& h) {
  const Group& g = *h.parent();
  IndexSet bits(g.order());
  for (ElementIndex x = 0; x < g.order(); ++x)
    if (normalizes(g, h, x)) bits.set(x);
  return subgroup_from_member_set(h.parent(), bits);
}

Subgroup normalizer_in(const Subgroup& ambient, const Subgroup& h) {
  if (ambient.parent() != h.parent()) throw PreconditionError("subgroup parents differ");
  const Group& g = *h.parent();
  IndexSet bits(g.order());
  for (ElementIndex x : ambient.members_list())
    if (normalizes(g, h, x)) bits.set(x);
  return subgroup_from_member_set(h.parent(), bits);
}

std::optional<ElementIndex> conjugating_element(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw PreconditionError("subgroup parents differ");
  if (a.order() != b.order()) return std::nullopt;
  if (element_order_histogram(a) != element_order_histogram(b)) return std::nullopt;
  const Group& g = *a.parent();
  for (ElementIndex x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (ElementIndex w : a.witness_generators())
      if (!b.contains(g.conj(w, x))) {
        ok = false;
        break;
      }
    if (ok) return x;  // |A^x| = |B| and A^x <= B
  }
  return std::nullopt;
}

bool contained_in_conjugate(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw PreconditionError("subgroup parents differ");
  if (b.order() % a.order() != 0) return false;
  const Group& g = *a.parent();
  for (ElementIndex x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (ElementIndex w : a.witness_generators())
      if (!b.contains(g.conj(w, x))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

Subgroup normal_closure_in(const Subgroup& ambient, const std::vector<ElementIndex>& seeds) {
  const Group& g = *ambient.parent();
  std::vector<ElementIndex> gens;
  IndexSet bits(g.order());
  std::vector<ElementIndex> list{0};
  bits.set(0);
  auto add = [&](ElementIndex e) {
    if (bits.test(e)) return;
    gens.push_back(e);
    close_under_generators(g, bits, list, gens);
  };
  for (ElementIndex s : seeds) add(s);
  // each added generator at least doubles the closure, so this terminates
  // after at most log2 |ambient| additions
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (ElementIndex w : ambient.witness_generators()) add(g.conj(gens[k], w));
  std::sort(list.begin(), list.end());
  return Subgroup(ambient.parent(), std::move(bits), std::move(list), std::move(gens));
}

Subgroup derived_subgroup(const Subgroup& h) {
  const auto& gens = h.witness_generators();
  std::vector<ElementIndex> seeds;
  const Group& g = *h.parent();
  for (ElementIndex a : gens)
    for (ElementIndex b : gens) {
      ElementIndex c = g.comm(a, b);
      if (c != 0) seeds.push_back(c);
    }
  return normal_closure_in(h, seeds);
}

std::vector<DoubleCoset> double_cosets(const Subgroup& h, const Subgroup& k) {
  if (h.parent() != k.parent()) throw PreconditionError("subgroup parents differ");
  const Group& g = *h.parent();
  IndexSet seen(g.order());
  std::vector<DoubleCoset> out;
  std::vector<ElementIndex> queue;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (seen.test(x)) continue;
    queue.clear();
    queue.push_back(x);
    seen.set(x);
    std::size_t size = 0;
    while (size < queue.size()) {
      ElementIndex y = queue[size++];
      for (ElementIndex hg : h.witness_generators()) {
        ElementIndex z = g.mul(hg, y);
        if (!seen.test(z)) {
          seen.set(z);
          queue.push_back(z);
        }
      }
      for (ElementIndex kg : k.witness_generators()) {
        ElementIndex z = g.mul(y, kg);
        if (!seen.test(z)) {
          seen.set(z);
          queue.push_back(z);
        }
      }
    }
    out.push_back(DoubleCoset{x, queue.size()});
  }
  return out;
}

Subgroup sylow_subgroup(const Subgroup& h, std::uint64_t p) {
  const Group& g = *h.parent();
  std::uint64_t target = 1;
  {
    std::uint64_t n = h.order();
    while (n % p == 0) {
      n /= p;
      target *= p;
    }
  }
  if (target == 1) return trivial_subgroup(h.parent());

  auto is_p_element = [&](ElementIndex e) {
    int o = g.element_order(e);
    if (o == 1) return false;
    while (o % static_cast<int>(p) == 0) o /= static_cast<int>(p);
    return o == 1;
  };

  std::optional<ElementIndex> seed;
  for (ElementIndex m : h.members_list())
    if (is_p_element(m)) {
      seed = m;
      break;
    }
  if (!seed) throw PreconditionError("no p-element found");  // cannot happen when p | |H|

  Subgroup py = subgroup_from_index_generators(h.parent(), {*seed});
  while (py.order() < target) {
    Subgroup n = normalizer_in(h, py);
    bool extended = false;
    for (ElementIndex y : n.members_list()) {
      if (py.contains(y) || !is_p_element(y)) continue;
      // y normalizes P, so <P, y> is again a p-group
      std::vector<ElementIndex> gens = py.witness_generators();
      gens.push_back(y);
      py = subgroup_from_index_generators(h.parent(), std::move(gens));
      extended = true;
      break;
    }
    if (!extended) throw PreconditionError("sylow extension stalled");  // cannot happen
  }
  return py;
}

std::vector<std::pair<int, std::size_t>> element_order_histogram(const Subgroup& h) {
  const Group& g = *h.parent();
  std::vector<std::pair<int, std::size_t>> hist;
  for (ElementIndex m : h.members_list()) {
    int o = g.element_order(m);
    auto it = std::find_if(hist.begin(), hist.end(), [&](const auto& pr) { return pr.first == o; });
    if (it == hist.end())
      hist.emplace_back(o, 1);
    else
      ++it->second;
  }
  std::sort(hist.begin(), hist.end());
  return hist;
}

}  // namespace hnp
