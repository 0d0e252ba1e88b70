#include "coxstack/abelian.hpp"

#include <sstream>
#include <stdexcept>

namespace coxstack {

std::string GroupElement::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < coords.size(); ++i)
    out << (i ? ", " : "") << coords[i].str();
  out << ")";
  return out.str();
}

AbelianGroup::AbelianGroup(std::vector<Int> torsion, std::size_t free_rank)
    : torsion_(std::move(torsion)), free_rank_(free_rank) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2)
      throw std::invalid_argument("AbelianGroup: invariant factors must be >= 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      throw std::invalid_argument("AbelianGroup: divisibility chain violated");
  }
}

Int AbelianGroup::order() const {
  if (free_rank_ > 0) return 0;
  Int n = 1;
  for (const Int& d : torsion_) n *= d;
  return n;
}

GroupElement AbelianGroup::reduce(std::vector<Int> coords) const {
  if (coords.size() != dim())
    throw std::invalid_argument("GroupElement: coordinate length mismatch");
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    coords[i] %= torsion_[i];
    if (coords[i] < 0) coords[i] += torsion_[i];
  }
  return {std::move(coords)};
}

GroupElement AbelianGroup::add(const GroupElement& a,
                               const GroupElement& b) const {
  std::vector<Int> c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = a.coords[i] + b.coords[i];
  return reduce(std::move(c));
}

GroupElement AbelianGroup::negate(const GroupElement& a) const {
  std::vector<Int> c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = -a.coords[i];
  return reduce(std::move(c));
}

GroupElement AbelianGroup::scale(const Int& k, const GroupElement& a) const {
  std::vector<Int> c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = k * a.coords[i];
  return reduce(std::move(c));
}

bool AbelianGroup::is_zero(const GroupElement& a) const {
  GroupElement r = reduce(a.coords);
  for (const Int& c : r.coords)
    if (c != 0) return false;
  return true;
}

Int AbelianGroup::element_order(const GroupElement& a) const {
  GroupElement r = reduce(a.coords);
  for (std::size_t i = torsion_.size(); i < dim(); ++i)
    if (r.coords[i] != 0) return 0;
  Int ord = 1;
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (r.coords[i] == 0) continue;
    Int o = torsion_[i] / gcd_of(torsion_[i], r.coords[i]);
    ord = ord / gcd_of(ord, o) * o;
  }
  return ord;
}

IntMatrix AbelianGroup::relation_lattice() const {
  IntMatrix m(dim(), torsion_.size());
  for (std::size_t i = 0; i < torsion_.size(); ++i) m.at(i, i) = torsion_[i];
  return m;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Int& d : torsion_) {
    out << (first ? "" : " + ") << "Z/" << d.str();
    first = false;
  }
  if (free_rank_ == 1)
    out << (first ? "" : " + ") << "Z";
  else if (free_rank_ > 1)
    out << (first ? "" : " + ") << "Z^" << free_rank_;
  return out.str();
}

GroupElement GroupHom::apply(const GroupElement& x) const {
  if (x.coords.size() != source.dim())
    throw std::invalid_argument("GroupHom: element not in source coordinates");
  return target.reduce(matrix * x.coords);
}

bool GroupHom::is_well_defined() const {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
    return false;
  for (std::size_t i = 0; i < source.torsion().size(); ++i) {
    const Int& d = source.torsion()[i];
    for (std::size_t j = 0; j < target.dim(); ++j) {
      Int v = d * matrix.at(j, i);
      if (j < target.torsion().size()) {
        if (v % target.torsion()[j] != 0) return false;
      } else {
        if (v != 0) return false;
      }
    }
  }
  return true;
}

std::optional<GroupElement> GroupHom::preimage(const GroupElement& y) const {
  // Solve matrix * x = y modulo the target relation lattice.
  IntMatrix rel = target.relation_lattice();
  IntMatrix sys(target.dim(), source.dim() + rel.cols());
  for (std::size_t i = 0; i < target.dim(); ++i) {
    for (std::size_t j = 0; j < source.dim(); ++j)
      sys.at(i, j) = matrix.at(i, j);
    for (std::size_t j = 0; j < rel.cols(); ++j)
      sys.at(i, source.dim() + j) = rel.at(i, j);
  }
  auto sol = solve_linear(sys, y.coords);
  if (!sol) return std::nullopt;
  std::vector<Int> x(sol->begin(), sol->begin() + source.dim());
  return source.reduce(std::move(x));
}

std::string DiagonalizableGroupDescriptor::to_string() const {
  std::ostringstream out;
  if (torus_rank == 0 && roots_of_unity.empty()) return "1";
  bool first = true;
  if (torus_rank == 1) {
    out << "G_m";
    first = false;
  } else if (torus_rank > 1) {
    out << "G_m^" << torus_rank;
    first = false;
  }
  for (const Int& r : roots_of_unity) {
    out << (first ? "" : " x ") << "mu_" << r.str();
    first = false;
  }
  return out.str();
}

namespace {

// Inverse of a unimodular matrix; exact and integral.
IntMatrix unimodular_inverse(const IntMatrix& u) {
  SmithDecomposition d = smith_normal_form(u);
  for (const Int& e : d.diagonal())
    if (e != 1)
      throw std::invalid_argument("unimodular_inverse: matrix not unimodular");
  return d.v * d.u;
}

}  // namespace

CokernelResult cokernel(const IntMatrix& m) {
  SmithDecomposition d = smith_normal_form(m);
  const std::size_t ambient = m.rows();
  const std::size_t ndiag = std::min(m.rows(), m.cols());

  std::vector<std::size_t> torsion_pos, free_pos;
  std::vector<Int> factors;
  for (std::size_t i = 0; i < ambient; ++i) {
    if (i < ndiag && d.s.at(i, i) == 1) continue;
    if (i < ndiag && d.s.at(i, i) != 0) {
      torsion_pos.push_back(i);
      factors.push_back(d.s.at(i, i));
    } else {
      free_pos.push_back(i);
    }
  }

  AbelianGroup group(factors, free_pos.size());
  std::vector<std::size_t> kept = torsion_pos;
  kept.insert(kept.end(), free_pos.begin(), free_pos.end());

  IntMatrix proj(kept.size(), ambient);
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < ambient; ++j)
      proj.at(i, j) = d.u.at(kept[i], j);

  IntMatrix uinv = unimodular_inverse(d.u);
  IntMatrix section(ambient, kept.size());
  for (std::size_t i = 0; i < ambient; ++i)
    for (std::size_t j = 0; j < kept.size(); ++j)
      section.at(i, j) = uinv.at(i, kept[j]);

  group.set_presentation({m, proj});
  GroupHom projection{AbelianGroup::free(ambient), group, proj};
  return {std::move(group), std::move(projection), std::move(section)};
}

PushoutRootResult pushout_root(const AbelianGroup& a, const GroupElement& d,
                               const Int& r) {
  if (r < 1) throw std::invalid_argument("pushout_root: order must be >= 1");
  if (d.coords.size() != a.dim())
    throw std::invalid_argument("pushout_root: element not in group");
  const std::size_t n = a.dim();
  const std::size_t k = a.torsion().size();

  // Relations of (A + Z) / <(d, -r)>: the relations of A plus (d, -r).
  IntMatrix rel(n + 1, k + 1);
  for (std::size_t i = 0; i < k; ++i) rel.at(i, i) = a.torsion()[i];
  for (std::size_t i = 0; i < n; ++i) rel.at(i, k) = d.coords[i];
  rel.at(n, k) = -r;

  CokernelResult cok = cokernel(rel);
  IntMatrix incl(cok.group.dim(), n);
  for (std::size_t i = 0; i < cok.group.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      incl.at(i, j) = cok.projection.matrix.at(i, j);

  GroupElement t = cok.group.reduce(cok.projection.matrix.column(n));
  return {cok.group, GroupHom{a, cok.group, incl}, t};
}

DiagonalizableGroupDescriptor dual_group(const AbelianGroup& a) {
  return {a.free_rank(), a.torsion()};
}

SubgroupCokernelResult subgroup_cokernel(const AbelianGroup& a,
                                         const std::vector<GroupElement>& gens) {
  const std::size_t n = a.dim();
  const std::size_t k = a.torsion().size();
  const std::size_t g = gens.size();
  for (const GroupElement& e : gens)
    if (e.coords.size() != n)
      throw std::invalid_argument("subgroup_cokernel: element not in group");

  // Quotient A / <gens> = Z^n / (relation lattice + generator columns).
  IntMatrix joint(n, k + g);
  for (std::size_t i = 0; i < k; ++i) joint.at(i, i) = a.torsion()[i];
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t i = 0; i < n; ++i)
      joint.at(i, k + j) = gens[j].coords[i];
  CokernelResult q = cokernel(joint);

  std::vector<GroupElement> lifts;
  for (std::size_t j = 0; j < q.group.dim(); ++j)
    lifts.push_back(a.reduce(q.section.column(j)));

  // Kernel of Z^g -> A, x -> sum x_j gens_j: x-part of ker [G | R_A].
  IntMatrix ext(n, g + k);
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t i = 0; i < n; ++i) ext.at(i, j) = gens[j].coords[i];
  for (std::size_t i = 0; i < k; ++i) ext.at(i, g + i) = a.torsion()[i];
  std::vector<std::vector<Int>> ker = kernel_basis(ext);

  IntMatrix ker_cols(g, ker.size());
  for (std::size_t j = 0; j < ker.size(); ++j)
    for (std::size_t i = 0; i < g; ++i) ker_cols.at(i, j) = ker[j][i];
  CokernelResult sub = cokernel(ker_cols);

  std::vector<GroupElement> gen_images;
  for (std::size_t j = 0; j < g; ++j)
    gen_images.push_back(sub.group.reduce(sub.projection.matrix.column(j)));

  // Inclusion sends a canonical generator of the subgroup to the image in A
  // of any ambient preimage under the projection Z^g -> subgroup.
  IntMatrix gmat(n, g);
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t i = 0; i < n; ++i) gmat.at(i, j) = gens[j].coords[i];
  IntMatrix incl = gmat * sub.section;

  GroupHom quotient_map{a, q.group, q.projection.matrix};
  return {sub.group,
          GroupHom{sub.group, a, std::move(incl)},
          std::move(gen_images),
          q.group,
          std::move(quotient_map),
          std::move(lifts)};
}

AbelianGroup kernel_subgroup(const GroupHom& h) {
  const std::size_t ns = h.source.dim();
  const std::size_t kt = h.target.torsion().size();
  // x in ker iff matrix * x lies in the target relation lattice.
  IntMatrix ext(h.target.dim(), ns + kt);
  for (std::size_t i = 0; i < h.target.dim(); ++i)
    for (std::size_t j = 0; j < ns; ++j) ext.at(i, j) = h.matrix.at(i, j);
  for (std::size_t i = 0; i < kt; ++i)
    ext.at(i, ns + i) = h.target.torsion()[i];
  std::vector<GroupElement> gens;
  for (const auto& v : kernel_basis(ext))
    gens.push_back(h.source.reduce(std::vector<Int>(v.begin(), v.begin() + ns)));
  return subgroup_cokernel(h.source, gens).subgroup;
}

}  // namespace coxstack
