#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hnp/finab.hpp"
#include "hnp/group.hpp"

namespace hnp {

// Caller-supplied assertion that the Schur multiplier M(G) vanishes, with a
// short provenance note. The first obstruction equals the full obstruction
// only under this hypothesis; operations that rely on it refuse to run when
// the assertion is absent. The toolkit never computes Schur multipliers.
struct SchurAssertion {
  std::string provenance;
};

// One place w | v: a double coset H x Gv with H_w = H intersect x Gv x^-1,
// the conjugation-induced map into Gv^ab and the inclusion-induced map into
// H^ab (both checked well-defined on construction).
struct LocalPlace {
  ElementIndex rep;
  std::size_t coset_size;
  Subgroup hw;
  Abelianization hw_ab;
  AbHom to_h;   // H_w^ab -> H^ab
  AbHom to_gv;  // H_w^ab -> Gv^ab, h -> x^-1 h x
};

struct LocalDecomposition {
  Abelianization h_ab;
  Abelianization gv_ab;
  std::vector<LocalPlace> places;
};

LocalDecomposition local_decomposition(const Subgroup& h, const Subgroup& gv);

// Shared per-(G,H) data: H^ab, Ker psi1 and the unramified term. Building one
// of these up front avoids recomputing H^ab for every decomposition group.
class ObstructionContext {
 public:
  explicit ObstructionContext(const Subgroup& h);

  const Subgroup& subgroup() const { return h_; }
  const Abelianization& h_ab() const { return h_ab_; }
  const SubAb& ker_psi1() const { return ker_psi1_; }
  const Subgroup& phi_gh() const { return phi_; }
  const SubAb& dnr() const { return dnr_; }

  // phi_1(Ker psi_2^v) for the decomposition group gv at its given embedding.
  SubAb dr(const Subgroup& gv) const;

 private:
  Subgroup h_;
  Abelianization h_ab_;
  SubAb ker_psi1_;
  Subgroup phi_;
  SubAb dnr_;
};

// Ker(H^ab -> G^ab); all of H^ab whenever G is perfect.
SubAb first_obstruction_N(const Subgroup& h);

// Phi^G(H) = < [h,x] : h in H intersect x H x^-1, x in G >, by exhaustive
// sweep over (x, h).
Subgroup phi_G_of_H(const Subgroup& h);

// Image of Phi^G(H) in H^ab: the unramified term phi_1(Ker psi_2^nr).
SubAb first_obstruction_Dnr(const Subgroup& h);

// phi_1(Ker psi_2^v) for one decomposition group.
SubAb first_obstruction_Dr(const Subgroup& h, const Subgroup& gv);

// Distinct positions of the conjugacy class of gv relative to H: conjugates
// gv^x for double coset representatives x of N_G(gv) \ G / N_G(H), one per
// orbit of N_G(H) on the class.
std::vector<Subgroup> ngh_orbit_reps(const Subgroup& h, const Subgroup& gv);

// Invariants of Ker psi1 / Dnr. Under M(G) = 0 this equals the full
// obstruction group for unramified extensions, i.e. H^1(k, Pic Xbar).
// Refuses when the Schur assertion is absent.
std::vector<Int> h1_flabby_invariants(const Subgroup& h, const std::optional<SchurAssertion>& schur);

struct LabeledClass {
  int id = 0;  // 1-based position in the provided class list
  std::string label;
  Subgroup rep;
};

struct PositionOutcome {
  ElementIndex rep;               // double coset representative x; the position is gv^x
  std::vector<Int> dr_invariants;  // structure of Dr at this position
  bool covers = false;            // Dr v Dnr = Ker psi1
};

struct ClassOutcome {
  int id = 0;
  std::string label;
  std::uint64_t order = 1;
  std::vector<PositionOutcome> positions;
  bool verdict = false;  // true iff some position covers
};

struct ObstructionResult {
  std::vector<Int> ker_psi1;      // invariants of Ker psi1
  std::vector<ElementIndex> ker_witnesses;
  std::vector<Int> dnr;           // invariants of the unramified term
  std::vector<Int> h1;            // invariants of Ker psi1 / Dnr
  std::vector<ClassOutcome> classes;
  std::vector<int> minimal_true;  // ids minimal under containment-in-a-conjugate
};

// Full classification of candidate decomposition groups: for every class a
// verdict per N_G(H)-orbit position, the overall verdict, and the minimal
// true classes. Classes must be pairwise non-conjugate. Position order is
// fixed by class id and representative index regardless of thread count.
ObstructionResult classify_decomposition_groups(const Subgroup& h,
                                                const std::vector<LabeledClass>& classes,
                                                const std::optional<SchurAssertion>& schur,
                                                int threads = 1);

// True-classes minimal under "is contained in a conjugate of".
std::vector<int> minimal_true_classes(const std::vector<LabeledClass>& classes,
                                      const std::vector<ClassOutcome>& outcomes);

struct ScenarioResult {
  std::vector<Int> h1;   // Ker psi1 / Dnr
  std::vector<Int> obs;  // Ker psi1 / (Dnr v join of Dr over the places)
  std::vector<Int> sha;  // = obs
  std::vector<Int> at;   // (Dnr v join of Dr) / Dnr
  bool hnp_holds = true;
  Int tamagawa_num = 1, tamagawa_den = 1;  // 1 / |Sha|
  bool has_ramified_only = false;           // diagnostic requested
  std::vector<Int> obs_ramified_only;
};

// Evaluates one ramification scenario: the places are decomposition groups
// at fixed embeddings. The unramified term is always joined in (places with
// cyclic decomposition groups are unavoidable); `with_ramified_only`
// additionally reports the diagnostic quotient that omits it.
ScenarioResult evaluate_scenario(const Subgroup& h, const std::vector<Subgroup>& places,
                                 const std::optional<SchurAssertion>& schur,
                                 bool with_ramified_only = false);

}  // namespace hnp
