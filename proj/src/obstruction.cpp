#include "hnp/obstruction.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "hnp/parallel.hpp"

namespace hnp {

namespace {

// G^ab and its projection, memoized per group: every context for the same
// parent shares one whole-group abelianization (the derived subgroup of G is
// the expensive part). The cache holds a shared_ptr to the group, so a cache
// key can never be a dangling, reused address.
Abelianization whole_group_abelianization(const GroupPtr& g) {
  static std::mutex mu;
  static std::map<const Group*, std::pair<GroupPtr, Abelianization>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g.get());
  if (it == cache.end())
    it = cache.emplace(g.get(), std::make_pair(g, Abelianization(whole_group(g)))).first;
  return it->second.second;
}

AbHom projection_hom(const Abelianization& dom, const Abelianization& cod,
                     const std::vector<ElementIndex>& images) {
  IntMatrix m(cod.group().rank(), dom.group().rank());
  for (std::size_t j = 0; j < images.size(); ++j) m.set_column(j, cod.project(images[j]));
  return AbHom(dom.group(), cod.group(), std::move(m));
}

}  // namespace

namespace {

SubAb ker_psi1_from(const Abelianization& h_ab) {
  Abelianization g_ab = whole_group_abelianization(h_ab.subgroup().parent());
  std::vector<ElementIndex> lifts;
  for (std::size_t j = 0; j < h_ab.group().rank(); ++j) lifts.push_back(h_ab.group().lift(j));
  return kernel(projection_hom(h_ab, g_ab, lifts));
}

}  // namespace

SubAb first_obstruction_N(const Subgroup& h) { return ker_psi1_from(Abelianization(h)); }

Subgroup phi_G_of_H(const Subgroup& h) {
  const Group& g = *h.parent();
  IndexSet comms(g.order());
  for (ElementIndex x = 0; x < g.order(); ++x) {
    for (ElementIndex m : h.members_list()) {
      ElementIndex y = g.conj(m, x);
      if (h.contains(y)) comms.set(g.mul(g.inv(m), y));  // [m, x] = m^-1 (x^-1 m x)
    }
  }
  // commutator set -> generated subgroup (greedy witness generators)
  std::vector<ElementIndex> seeds;
  comms.for_each([&](std::size_t i) {
    if (i != 0) seeds.push_back(static_cast<ElementIndex>(i));
  });
  IndexSet bits(g.order());
  std::vector<ElementIndex> list{0};
  bits.set(0);
  std::vector<ElementIndex> gens;
  for (ElementIndex s : seeds) {
    if (bits.test(s)) continue;
    gens.push_back(s);
    for (std::size_t head = 0; head < list.size(); ++head)
      for (ElementIndex w : gens) {
        ElementIndex z = g.mul(list[head], w);
        if (!bits.test(z)) {
          bits.set(z);
          list.push_back(z);
        }
      }
  }
  return subgroup_from_member_set(h.parent(), bits);
}

ObstructionContext::ObstructionContext(const Subgroup& h)
    : h_(h),
      h_ab_(h),
      ker_psi1_(ker_psi1_from(h_ab_)),
      phi_(phi_G_of_H(h)),
      dnr_([&] {
        IntMatrix m(h_ab_.group().rank(), phi_.witness_generators().size());
        for (std::size_t j = 0; j < phi_.witness_generators().size(); ++j)
          m.set_column(j, h_ab_.project(phi_.witness_generators()[j]));
        return SubAb(h_ab_.group(), std::move(m));
      }()) {}

SubAb first_obstruction_Dnr(const Subgroup& h) {
  return ObstructionContext(h).dnr();
}

LocalDecomposition local_decomposition(const Subgroup& h, const Subgroup& gv) {
  if (h.parent() != gv.parent()) throw PreconditionError("subgroup parents differ");
  const Group& g = *h.parent();
  LocalDecomposition out{Abelianization(h), Abelianization(gv), {}};
  for (const DoubleCoset& dc : double_cosets(h, gv)) {
    ElementIndex x = dc.representative;
    Subgroup hw = intersect(h, conjugate_subgroup(gv, g.inv(x)));  // H ∩ x Gv x^-1
    Abelianization hw_ab(hw);
    std::vector<ElementIndex> lifts, conj_lifts;
    for (std::size_t j = 0; j < hw_ab.group().rank(); ++j) {
      lifts.push_back(hw_ab.group().lift(j));
      conj_lifts.push_back(g.conj(hw_ab.group().lift(j), x));
    }
    AbHom to_h = projection_hom(hw_ab, out.h_ab, lifts);
    AbHom to_gv = projection_hom(hw_ab, out.gv_ab, conj_lifts);
    out.places.push_back(LocalPlace{x, dc.size, std::move(hw), std::move(hw_ab),
                                    std::move(to_h), std::move(to_gv)});
  }
  return out;
}

namespace {

SubAb dr_from_context(const Abelianization& h_ab, const Subgroup& h, const Subgroup& gv) {
  const Group& g = *h.parent();
  Abelianization gv_ab(gv);

  std::vector<FinAb> parts;
  std::vector<IntMatrix> to_gv_mats, to_h_mats;
  for (const DoubleCoset& dc : double_cosets(h, gv)) {
    ElementIndex x = dc.representative;
    Subgroup hw = intersect(h, conjugate_subgroup(gv, g.inv(x)));
    if (hw.is_trivial()) continue;  // trivial summands contribute nothing
    Abelianization hw_ab(hw);
    const std::size_t m = hw_ab.group().rank();
    IntMatrix mg(gv_ab.group().rank(), m), mh(h_ab.group().rank(), m);
    for (std::size_t j = 0; j < m; ++j) {
      mg.set_column(j, gv_ab.project(g.conj(hw_ab.group().lift(j), x)));
      mh.set_column(j, h_ab.project(hw_ab.group().lift(j)));
    }
    parts.push_back(hw_ab.group());
    to_gv_mats.push_back(std::move(mg));
    to_h_mats.push_back(std::move(mh));
  }

  DirectSum d = direct_sum(parts);
  AbHom psi2 = hom_from_parts(d, gv_ab.group(), to_gv_mats);
  AbHom phi1 = hom_from_parts(d, h_ab.group(), to_h_mats);
  return pushforward(phi1, kernel(psi2));
}

}  // namespace

SubAb ObstructionContext::dr(const Subgroup& gv) const {
  if (gv.parent() != h_.parent()) throw PreconditionError("subgroup parents differ");
  return dr_from_context(h_ab_, h_, gv);
}

SubAb first_obstruction_Dr(const Subgroup& h, const Subgroup& gv) {
  if (h.parent() != gv.parent()) throw PreconditionError("subgroup parents differ");
  return dr_from_context(Abelianization(h), h, gv);
}

std::vector<Subgroup> ngh_orbit_reps(const Subgroup& h, const Subgroup& gv) {
  if (h.parent() != gv.parent()) throw PreconditionError("subgroup parents differ");
  Subgroup nh = normalizer(h);
  Subgroup ngv = normalizer(gv);
  std::vector<Subgroup> out;
  for (const DoubleCoset& dc : double_cosets(ngv, nh))
    out.push_back(conjugate_subgroup(gv, dc.representative));
  return out;
}

std::vector<Int> h1_flabby_invariants(const Subgroup& h, const std::optional<SchurAssertion>& schur) {
  if (!schur)
    throw PreconditionError(
        "refusing to interpret Ker psi1 / Dnr as the full obstruction group: this "
        "requires the Schur multiplier of the parent group to vanish, and no such "
        "assertion was supplied");
  ObstructionContext ctx(h);
  return subquotient_invariants(ctx.ker_psi1(), ctx.dnr());
}

ObstructionResult classify_decomposition_groups(const Subgroup& h,
                                                const std::vector<LabeledClass>& classes,
                                                const std::optional<SchurAssertion>& schur,
                                                int threads) {
  if (!schur)
    throw PreconditionError("classification reports h1 and so requires the Schur multiplier assertion");
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (conjugating_element(classes[i].rep, classes[j].rep))
        throw PreconditionError("classes " + std::to_string(classes[i].id) + " and " +
                                std::to_string(classes[j].id) + " are conjugate");

  ObstructionContext ctx(h);
  Subgroup nh = normalizer(h);

  ObstructionResult result;
  result.ker_psi1 = ctx.ker_psi1().group_invariants();
  for (std::size_t c = 0; c < ctx.ker_psi1().generators().cols(); ++c) {
    // witness element of H for each kernel generator
    const Group& g = *h.parent();
    ElementIndex e = 0;
    std::vector<Int> col = ctx.ker_psi1().generators().column(c);
    for (std::size_t j = 0; j < col.size(); ++j) {
      Int expo = col[j] % g.element_order(ctx.h_ab().group().lift(j));
      if (expo < 0) expo += g.element_order(ctx.h_ab().group().lift(j));
      e = g.mul(e, g.pow(ctx.h_ab().group().lift(j), expo.convert_to<long long>()));
    }
    result.ker_witnesses.push_back(e);
  }
  result.dnr = ctx.dnr().group_invariants();
  result.h1 = subquotient_invariants(ctx.ker_psi1(), ctx.dnr());

  const Int ker_order = ctx.ker_psi1().order();
  result.classes.resize(classes.size());
  parallel_for_index(classes.size(), threads, [&](std::size_t r) {
    const LabeledClass& cls = classes[r];
    if (cls.rep.parent() != h.parent()) throw PreconditionError("class parent differs");
    ClassOutcome out;
    out.id = cls.id;
    out.label = cls.label;
    out.order = cls.rep.order();
    Subgroup ngv = normalizer(cls.rep);
    for (const DoubleCoset& dc : double_cosets(ngv, nh)) {
      Subgroup position = conjugate_subgroup(cls.rep, dc.representative);
      SubAb dr = ctx.dr(position);
      bool covers = join(dr, ctx.dnr()).order() == ker_order;
      out.positions.push_back(PositionOutcome{dc.representative, dr.group_invariants(), covers});
      if (covers) out.verdict = true;
    }
    result.classes[r] = std::move(out);
  });

  result.minimal_true = minimal_true_classes(classes, result.classes);
  return result;
}

std::vector<int> minimal_true_classes(const std::vector<LabeledClass>& classes,
                                      const std::vector<ClassOutcome>& outcomes) {
  std::vector<std::size_t> trues;
  for (std::size_t i = 0; i < outcomes.size(); ++i)
    if (outcomes[i].verdict) trues.push_back(i);
  std::vector<int> out;
  for (std::size_t i : trues) {
    bool minimal = true;
    for (std::size_t j : trues) {
      if (i == j) continue;
      // a strictly smaller true class inside a conjugate of classes[i]?
      if (classes[j].rep.order() < classes[i].rep.order() &&
          contained_in_conjugate(classes[j].rep, classes[i].rep)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(classes[i].id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ScenarioResult evaluate_scenario(const Subgroup& h, const std::vector<Subgroup>& places,
                                 const std::optional<SchurAssertion>& schur,
                                 bool with_ramified_only) {
  if (!schur)
    throw PreconditionError("scenario evaluation requires the Schur multiplier assertion");
  ObstructionContext ctx(h);

  SubAb joined = ctx.dnr();
  SubAb ramified = trivial_subab(ctx.h_ab().group());
  for (const Subgroup& gv : places) {
    if (gv.parent() != h.parent()) throw PreconditionError("place parent differs");
    SubAb dr = ctx.dr(gv);
    joined = join(joined, dr);
    if (with_ramified_only) ramified = join(ramified, dr);
  }

  ScenarioResult out;
  out.h1 = subquotient_invariants(ctx.ker_psi1(), ctx.dnr());
  out.obs = subquotient_invariants(ctx.ker_psi1(), joined);
  out.sha = out.obs;
  out.at = subquotient_invariants(joined, ctx.dnr());
  out.hnp_holds = out.obs.empty();
  out.tamagawa_num = 1;
  out.tamagawa_den = ctx.ker_psi1().order() / joined.order();
  out.has_ramified_only = with_ramified_only;
  if (with_ramified_only) out.obs_ramified_only = subquotient_invariants(ctx.ker_psi1(), ramified);
  return out;
}

}  // namespace hnp
