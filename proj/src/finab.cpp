#include "hnp/finab.hpp"

#include <algorithm>
#include <unordered_map>

#include "hnp/errors.hpp"

namespace hnp {

FinAb::FinAb(std::vector<Int> invariants) : inv_(std::move(invariants)) {
  for (std::size_t i = 0; i < inv_.size(); ++i) {
    if (inv_[i] < 2) throw PreconditionError("invariant factors must be >= 2");
    if (i + 1 < inv_.size() && inv_[i + 1] % inv_[i] != 0)
      throw PreconditionError("invariant factors must form a divisibility chain");
  }
}

FinAb::FinAb(std::vector<Int> invariants, GroupPtr lift_parent, std::vector<ElementIndex> lifts)
    : FinAb(std::move(invariants)) {
  if (lifts.size() != inv_.size()) throw PreconditionError("one lift per generator required");
  lift_parent_ = std::move(lift_parent);
  lifts_ = std::move(lifts);
}

Int FinAb::order() const {
  Int o = 1;
  for (const Int& d : inv_) o *= d;
  return o;
}

std::vector<Int> FinAb::reduce(std::vector<Int> v) const {
  if (v.size() != inv_.size()) throw PreconditionError("coordinate length mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] %= inv_[i];
    if (v[i] < 0) v[i] += inv_[i];
  }
  return v;
}

// ---------------------------------------------------------------------------
// SubAb

struct SubAb::Impl {
  FinAb ambient;
  IntMatrix gens;            // reduced, zero columns dropped
  SmithDecomposition stack;  // SNF of [gens | diag(invariants)]
  Int order;
};

SubAb::SubAb(FinAb ambient, IntMatrix gens) {
  const std::size_t r = ambient.rank();
  if (gens.rows() != r) throw PreconditionError("generator coordinates have wrong length");

  auto impl = std::make_shared<Impl>();
  // reduce generators mod the invariants and drop zero columns
  std::vector<std::vector<Int>> keep;
  for (std::size_t c = 0; c < gens.cols(); ++c) {
    std::vector<Int> col = ambient.reduce(gens.column(c));
    if (std::any_of(col.begin(), col.end(), [](const Int& x) { return x != 0; })) keep.push_back(col);
  }
  IntMatrix reduced(r, keep.size());
  for (std::size_t c = 0; c < keep.size(); ++c) reduced.set_column(c, keep[c]);

  IntMatrix stacked = hstack(reduced, diagonal_matrix(ambient.invariants()));
  impl->stack = smith_normal_form(stacked);
  if (impl->stack.rank != r) throw PreconditionError("generator lattice lost rank");

  Int index = 1;  // [Z^r : lattice]
  for (std::size_t i = 0; i < r; ++i) index *= impl->stack.s.at(i, i);
  impl->order = ambient.order() / index;

  // canonical generating set: the lattice basis Uinv * diag(s), reduced mod
  // the invariants with zero columns dropped; keeps joins from accumulating
  // generator columns and makes the stored generators deterministic
  std::vector<std::vector<Int>> basis;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Int> col(r);
    for (std::size_t row = 0; row < r; ++row) col[row] = impl->stack.uinv.at(row, i) * impl->stack.s.at(i, i);
    col = ambient.reduce(std::move(col));
    if (std::any_of(col.begin(), col.end(), [](const Int& x) { return x != 0; })) basis.push_back(std::move(col));
  }
  IntMatrix canonical(r, basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) canonical.set_column(c, basis[c]);

  impl->ambient = std::move(ambient);
  impl->gens = std::move(canonical);
  impl_ = std::move(impl);
}

const FinAb& SubAb::ambient() const { return impl_->ambient; }
const IntMatrix& SubAb::generators() const { return impl_->gens; }
Int SubAb::order() const { return impl_->order; }

bool SubAb::contains(const std::vector<Int>& v) const {
  const std::size_t r = impl_->ambient.rank();
  if (v.size() != r) throw PreconditionError("coordinate length mismatch");
  std::vector<Int> c = matvec(impl_->stack.u, v);
  for (std::size_t i = 0; i < r; ++i)
    if (c[i] % impl_->stack.s.at(i, i) != 0) return false;
  return true;
}

bool SubAb::contains(const SubAb& other) const {
  if (!(impl_->ambient == other.ambient())) throw PreconditionError("ambient groups differ");
  for (std::size_t c = 0; c < other.generators().cols(); ++c)
    if (!contains(other.generators().column(c))) return false;
  return true;
}

std::vector<Int> SubAb::group_invariants() const {
  return subquotient_invariants(*this, trivial_subab(impl_->ambient));
}

SubAb trivial_subab(FinAb ambient) {
  std::size_t r = ambient.rank();
  return SubAb(std::move(ambient), IntMatrix(r, 0));
}

SubAb full_subab(FinAb ambient) {
  std::size_t r = ambient.rank();
  return SubAb(std::move(ambient), IntMatrix::identity(r));
}

SubAb join(const SubAb& a, const SubAb& b) {
  if (!(a.ambient() == b.ambient())) throw PreconditionError("ambient groups differ");
  return SubAb(a.ambient(), hstack(a.generators(), b.generators()));
}

namespace {

std::vector<Int> nontrivial_diagonal(const SmithDecomposition& d) {
  std::vector<Int> out;
  for (const Int& x : d.diagonal())
    if (x >= 2) out.push_back(x);
  return out;
}

}  // namespace

std::vector<Int> quotient_invariants(const FinAb& ambient, const SubAb& s) {
  if (!(ambient == s.ambient())) throw PreconditionError("ambient groups differ");
  IntMatrix stacked = hstack(s.generators(), diagonal_matrix(ambient.invariants()));
  return nontrivial_diagonal(smith_normal_form(stacked));
}

std::vector<Int> subquotient_invariants(const SubAb& k, const SubAb& s) {
  if (!(k.ambient() == s.ambient())) throw PreconditionError("ambient groups differ");
  if (!k.contains(s)) throw PreconditionError("subquotient requires s <= k");
  const std::size_t r = k.ambient().rank();

  // basis of the lattice of k: columns of Uinv * diag(snf diagonal)
  IntMatrix kstack = hstack(k.generators(), diagonal_matrix(k.ambient().invariants()));
  SmithDecomposition kd = smith_normal_form(kstack);

  // express the generators (and ambient relations) of s in that basis:
  // solve B c = g, i.e. c_i = (U g)_i / d_i, exact because s <= k
  IntMatrix sstack = hstack(s.generators(), diagonal_matrix(s.ambient().invariants()));
  IntMatrix coords(r, sstack.cols());
  for (std::size_t c = 0; c < sstack.cols(); ++c) {
    std::vector<Int> g = matvec(kd.u, sstack.column(c));
    for (std::size_t i = 0; i < r; ++i) {
      if (g[i] % kd.s.at(i, i) != 0) throw PreconditionError("subquotient coordinate not integral");
      coords.at(i, c) = g[i] / kd.s.at(i, i);
    }
  }
  return nontrivial_diagonal(smith_normal_form(coords));
}

// ---------------------------------------------------------------------------
// AbHom

AbHom::AbHom(FinAb dom, FinAb cod, IntMatrix matrix)
    : dom_(std::move(dom)), cod_(std::move(cod)), m_(std::move(matrix)) {
  if (m_.rows() != cod_.rank() || m_.cols() != dom_.rank())
    throw PreconditionError("homomorphism matrix has wrong shape");
  for (std::size_t j = 0; j < dom_.rank(); ++j)
    for (std::size_t i = 0; i < cod_.rank(); ++i)
      if ((m_.at(i, j) * dom_.invariants()[j]) % cod_.invariants()[i] != 0)
        throw PreconditionError("ill-defined homomorphism: image order does not divide generator order");
}

std::vector<Int> AbHom::operator()(const std::vector<Int>& x) const {
  return cod_.reduce(matvec(m_, x));
}

SubAb kernel(const AbHom& f) {
  const std::size_t m = f.domain().rank();
  // integral solutions of M x = 0 (mod codomain invariants): project the
  // kernel lattice of [M | diag(cod)] onto the x block
  IntMatrix a = hstack(f.matrix(), diagonal_matrix(f.codomain().invariants()));
  IntMatrix basis = kernel_basis(a);  // (m+n) x k
  IntMatrix gens(m, basis.cols());
  for (std::size_t c = 0; c < basis.cols(); ++c)
    for (std::size_t r = 0; r < m; ++r) gens.at(r, c) = basis.at(r, c);
  return SubAb(f.domain(), std::move(gens));
}

SubAb image(const AbHom& f) { return SubAb(f.codomain(), f.matrix()); }

SubAb pushforward(const AbHom& f, const SubAb& s) {
  if (!(s.ambient() == f.domain())) throw PreconditionError("subgroup not inside the domain");
  return SubAb(f.codomain(), f.matrix() * s.generators());
}

// ---------------------------------------------------------------------------
// Direct sums

DirectSum direct_sum(const std::vector<FinAb>& parts) {
  std::vector<Int> raw;
  std::vector<std::size_t> offsets;
  for (const FinAb& p : parts) {
    offsets.push_back(raw.size());
    raw.insert(raw.end(), p.invariants().begin(), p.invariants().end());
  }
  const std::size_t total = raw.size();

  SmithDecomposition d = smith_normal_form(diagonal_matrix(raw));
  std::vector<std::size_t> kept;
  std::vector<Int> inv;
  for (std::size_t i = 0; i < total; ++i)
    if (d.s.at(i, i) >= 2) {
      kept.push_back(i);
      inv.push_back(d.s.at(i, i));
    }

  DirectSum out;
  out.sum = FinAb(std::move(inv));
  out.offsets = std::move(offsets);
  out.from_raw = IntMatrix(kept.size(), total);
  out.to_raw = IntMatrix(total, kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) {
    for (std::size_t c = 0; c < total; ++c) out.from_raw.at(k, c) = d.u.at(kept[k], c);
    for (std::size_t r = 0; r < total; ++r) out.to_raw.at(r, k) = d.uinv.at(r, kept[k]);
  }
  return out;
}

AbHom DirectSum::injection(std::size_t part, const std::vector<FinAb>& parts) const {
  const std::size_t m = parts[part].rank();
  IntMatrix block(from_raw.rows(), m);
  for (std::size_t r = 0; r < from_raw.rows(); ++r)
    for (std::size_t c = 0; c < m; ++c) block.at(r, c) = from_raw.at(r, offsets[part] + c);
  return AbHom(parts[part], sum, std::move(block));
}

AbHom hom_from_parts(const DirectSum& ds, FinAb cod, const std::vector<IntMatrix>& part_matrices) {
  const std::size_t total = ds.to_raw.rows();
  IntMatrix raw(cod.rank(), total);
  std::size_t off = 0;
  for (const IntMatrix& pm : part_matrices) {
    if (pm.rows() != cod.rank()) throw PreconditionError("part matrix codomain mismatch");
    for (std::size_t r = 0; r < pm.rows(); ++r)
      for (std::size_t c = 0; c < pm.cols(); ++c) raw.at(r, off + c) = pm.at(r, c);
    off += pm.cols();
  }
  if (off != total) throw PreconditionError("part matrices do not cover the sum");
  return AbHom(ds.sum, std::move(cod), raw * ds.to_raw);
}

// ---------------------------------------------------------------------------
// Abelianization

struct Abelianization::Impl {
  Subgroup h;
  FinAb ab;
  IntMatrix u;                      // SNF row transform of the relation lattice
  std::vector<std::size_t> kept;    // positions of invariants >= 2
  std::unordered_map<ElementIndex, std::size_t> coset_of;
  std::vector<std::vector<Int>> coset_vec;  // expression vector per coset
};

Abelianization::Abelianization(const Subgroup& h) {
  auto impl = std::make_shared<Impl>();
  impl->h = h;
  const Group& g = *h.parent();
  const std::vector<ElementIndex>& gens = h.witness_generators();
  const std::size_t m = gens.size();

  Subgroup der = derived_subgroup(h);

  // coset table of [H,H] in H, with one expression vector (in the witness
  // generators) per coset; breadth-first, hence deterministic
  std::vector<ElementIndex> reps;
  auto add_coset = [&](ElementIndex rep, std::vector<Int> vec) {
    std::size_t id = reps.size();
    reps.push_back(rep);
    impl->coset_vec.push_back(std::move(vec));
    for (ElementIndex d : der.members_list()) impl->coset_of.emplace(g.mul(d, rep), id);
  };
  add_coset(0, std::vector<Int>(m, 0));
  for (std::size_t head = 0; head < reps.size(); ++head) {
    for (std::size_t j = 0; j < m; ++j) {
      ElementIndex y = g.mul(reps[head], gens[j]);
      if (impl->coset_of.find(y) == impl->coset_of.end()) {
        std::vector<Int> vec = impl->coset_vec[head];
        vec[j] += 1;
        add_coset(y, std::move(vec));
      }
    }
  }

  // relation lattice: v_c + e_j - v_{c * g_j}, one column per (coset, gen)
  const std::size_t ncosets = reps.size();
  IntMatrix rel(m, ncosets * m);
  for (std::size_t c = 0; c < ncosets; ++c)
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t target = impl->coset_of.at(g.mul(reps[c], gens[j]));
      for (std::size_t i = 0; i < m; ++i) {
        Int val = impl->coset_vec[c][i] - impl->coset_vec[target][i];
        if (i == j) val += 1;
        rel.at(i, c * m + j) = val;
      }
    }

  SmithDecomposition d = smith_normal_form(rel);
  if (d.rank != m && m > 0) throw PreconditionError("abelianization relation lattice lost rank");
  std::vector<Int> inv;
  for (std::size_t i = 0; i < m; ++i)
    if (d.s.at(i, i) >= 2) {
      impl->kept.push_back(i);
      inv.push_back(d.s.at(i, i));
    }

  // lift of abstract generator k: the product prod_j gens[j] ^ Uinv[j, kept_k]
  std::vector<ElementIndex> lifts;
  for (std::size_t k = 0; k < impl->kept.size(); ++k) {
    ElementIndex e = 0;
    for (std::size_t j = 0; j < m; ++j) {
      Int expo = d.uinv.at(j, impl->kept[k]) % g.element_order(gens[j]);
      if (expo < 0) expo += g.element_order(gens[j]);
      e = g.mul(e, g.pow(gens[j], expo.convert_to<long long>()));
    }
    lifts.push_back(e);
  }

  impl->ab = FinAb(std::move(inv), h.parent(), std::move(lifts));
  impl->u = std::move(d.u);
  impl_ = std::move(impl);
}

const FinAb& Abelianization::group() const { return impl_->ab; }
const Subgroup& Abelianization::subgroup() const { return impl_->h; }

std::vector<Int> Abelianization::project(ElementIndex member) const {
  auto it = impl_->coset_of.find(member);
  if (it == impl_->coset_of.end()) throw PreconditionError("element is not a member of the subgroup");
  const std::vector<Int>& v = impl_->coset_vec[it->second];
  std::vector<Int> out(impl_->kept.size(), 0);
  for (std::size_t k = 0; k < impl_->kept.size(); ++k) {
    Int acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc += impl_->u.at(impl_->kept[k], j) * v[j];
    out[k] = acc;
  }
  return impl_->ab.reduce(std::move(out));
}

}  // namespace hnp
