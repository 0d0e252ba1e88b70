#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxstack/matrix.hpp"

namespace coxstack {

class AbelianGroup;

/// Element of a group, written in that group's coordinates: one coordinate
/// per invariant factor (reduced into [0, d_i)) followed by one per free rank.
struct GroupElement {
  std::vector<Int> coords;

  bool operator==(const GroupElement& other) const = default;
  bool operator<(const GroupElement& other) const {
    return coords < other.coords;
  }
  std::string to_string() const;
};

/// Finitely generated abelian group in invariant-factor form:
///   Z/d_1 + ... + Z/d_k + Z^free_rank   with  d_i >= 2  and  d_i | d_{i+1}.
/// Torsion coordinates come first, then free coordinates. A group may carry
/// the presentation it was computed from (originating matrix plus the
/// projection of the ambient basis), so that degrees stated in ambient
/// coordinates stay addressable after the rewrite to canonical form.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  AbelianGroup(std::vector<Int> torsion, std::size_t free_rank);

  static AbelianGroup free(std::size_t rank) { return {{}, rank}; }
  static AbelianGroup trivial() { return {}; }

  const std::vector<Int>& torsion() const { return torsion_; }
  std::size_t free_rank() const { return free_rank_; }
  std::size_t dim() const { return torsion_.size() + free_rank_; }
  bool is_trivial() const { return dim() == 0; }
  bool is_finite() const { return free_rank_ == 0; }
  /// Group order; 0 means infinite.
  Int order() const;

  GroupElement zero() const { return {std::vector<Int>(dim())}; }
  GroupElement reduce(std::vector<Int> coords) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(const Int& c, const GroupElement& a) const;
  bool is_zero(const GroupElement& a) const;
  /// Order of an element; 0 means infinite.
  Int element_order(const GroupElement& a) const;

  /// Lattice of relations in coordinate space: columns d_i * e_i.
  IntMatrix relation_lattice() const;

  /// Structural description "Z/2 + Z/2 + Z^2".
  std::string to_string() const;

  bool same_structure(const AbelianGroup& other) const {
    return torsion_ == other.torsion_ && free_rank_ == other.free_rank_;
  }

  struct Presentation {
    IntMatrix matrix;      // relations presented in the ambient free group
    IntMatrix projection;  // ambient basis -> canonical coordinates
  };
  const std::optional<Presentation>& presentation() const {
    return presentation_;
  }
  void set_presentation(Presentation p) { presentation_ = std::move(p); }

 private:
  std::vector<Int> torsion_;
  std::size_t free_rank_ = 0;
  std::optional<Presentation> presentation_;
};

/// Homomorphism between groups, as a matrix acting on coordinates:
/// target coords = matrix * source coords.
struct GroupHom {
  AbelianGroup source;
  AbelianGroup target;
  IntMatrix matrix;

  GroupElement apply(const GroupElement& x) const;
  /// The matrix maps every source relation into the target relation lattice.
  bool is_well_defined() const;
  /// Some preimage of y, if one exists.
  std::optional<GroupElement> preimage(const GroupElement& y) const;
};

/// Structure of Hom(A, k^*): a torus of rank free_rank(A) times the product
/// of the groups of r_i-th roots of unity for the torsion factors of A.
struct DiagonalizableGroupDescriptor {
  std::size_t torus_rank = 0;
  std::vector<Int> roots_of_unity;

  bool operator==(const DiagonalizableGroupDescriptor&) const = default;
  std::string to_string() const;
};

struct CokernelResult {
  AbelianGroup group;
  GroupHom projection;  // ambient Z^rows -> group
  /// Columns are ambient preimages of the canonical generators of the group
  /// (a section of the projection).
  IntMatrix section;
};

/// Z^rows / (column span of m), in invariant-factor form.
CokernelResult cokernel(const IntMatrix& m);

struct PushoutRootResult {
  AbelianGroup group;            // A' = (A + Z) / <(d, -r)>
  GroupHom inclusion;            // A -> A', injective
  GroupElement tautological;     // class t of (0, 1); r * t = inclusion(d)
};

/// Pushout of A <- Z -(r)-> Z along d: adjoins an r-th root of d.
PushoutRootResult pushout_root(const AbelianGroup& a, const GroupElement& d,
                               const Int& r);

DiagonalizableGroupDescriptor dual_group(const AbelianGroup& a);

struct SubgroupCokernelResult {
  AbelianGroup subgroup;               // abstract structure of <gens>
  GroupHom inclusion;                  // subgroup -> A, injective
  std::vector<GroupElement> gen_images;  // generators rewritten in subgroup coords
  AbelianGroup quotient;               // A / <gens>
  GroupHom quotient_map;               // A -> quotient
  std::vector<GroupElement> lifts;     // elements of A over the canonical
                                       // generators of each quotient factor
};

/// Subgroup generated by gens inside A, together with A/<gens> and lifts of
/// the quotient's canonical generators back to A.
SubgroupCokernelResult subgroup_cokernel(const AbelianGroup& a,
                                         const std::vector<GroupElement>& gens);

/// Kernel of a homomorphism, as a subgroup structure of the source.
AbelianGroup kernel_subgroup(const GroupHom& h);

}  // namespace coxstack
