#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polyreal/char_table.hpp"
#include "polyreal/group.hpp"
#include "polyreal/realization.hpp"

namespace polyreal {

/// t^flip (u, v), where (u, v)^t = (v, u).
struct WreathElement {
  bool flip = false;
  Index u = 0;
  Index v = 0;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// U wr C2 as a permutation group on two copies of U's points: (u, v) acts
/// by u on the first copy and by v on the second, t swaps the copies.
class WreathGroup {
 public:
  WreathGroup(std::shared_ptr<const Group> base, std::size_t cap = Group::kDefaultCap);

  const Group& base() const noexcept { return *base_; }
  std::shared_ptr<const Group> shared_base() const noexcept { return base_; }
  const Group& group() const noexcept { return *group_; }
  std::shared_ptr<const Group> shared_group() const noexcept { return group_; }

  /// {1, t} {(u, u)}.
  const Subgroup& hhat() const noexcept { return hhat_; }
  const Subgroup& center() const noexcept { return center_; }
  /// Whether t is central in Hhat, outside the diagonal, and |Hhat| = 2|U|.
  bool hhat_is_c2_times_u() const noexcept { return hhat_product_; }

  WreathElement decompose(Index x) const;
  Index compose(const WreathElement& e) const;
  Index flip() const noexcept { return flip_; }

 private:
  std::shared_ptr<const Group> base_;
  std::shared_ptr<const Group> group_;
  Index flip_ = 0;
  Subgroup hhat_;
  Subgroup center_;
  bool hhat_product_ = false;
};

/// Throws CapExceeded when 2 |U|^2 exceeds `cap`.
WreathGroup wreath_c2(std::shared_ptr<const Group> base, std::size_t cap = Group::kDefaultCap);

/// The wreath product acting on the cosets of Hhat. Its kernel is the core
/// of Hhat; throws CrossCheckFailed unless that core is the center, so the
/// result is a faithful copy of Ghat / Z(Ghat).
struct VertexAction {
  std::shared_ptr<const Group> quotient;
  /// Ghat element mapping the base coset to each point.
  std::vector<Index> lifts;
};
VertexAction central_quotient_action(const WreathGroup& w);

/// Irr(U wr C2) from Irr(U): induced characters for unordered pairs phi != theta
/// and two extensions of phi x phi. `u_table` must be a table of w.base().
CharacterTable wreath_irreducibles(const WreathGroup& w, std::shared_ptr<const ConjugacyClasses> classes,
                                   const CharacterTable& u_table);

struct WreathConstituent {
  std::size_t phi = 0;
  std::optional<std::size_t> phi_bar;  // set for the induced (phi x conj phi)
  int sign = 0;                        // nu2(phi) for extensions
  ClassFunction values;                // on the classes of Ghat
  long degree = 0;
  long multiplicity = 0;
  std::string descriptor;
};

/// Constituents of (1_Hhat)^Ghat, one per pair {phi, conj phi}. Throws
/// MultiplicityMismatch if one does not occur exactly once or they do not
/// add up to the permutation character.
std::vector<WreathConstituent> wreath_vertex_constituents(const WreathGroup& w, const ConjugacyClasses& classes,
                                                          const CharacterTable& u_table);

/// phi(u) / phi(1) at the class `u_class` of U.
Cyclo wreath_cosine(const CharacterTable& u_table, std::size_t phi, std::size_t u_class);

/// Classes of U merged with their inverse classes, ordered by smallest class.
std::vector<std::vector<std::size_t>> symmetrized_classes(const ConjugacyClasses& cc);

struct SixHundredCellReport {
  std::size_t wreath_order = 0;
  std::size_t center_order = 0;
  std::size_t quotient_order = 0;
  std::size_t vertices = 0;
  std::size_t layers = 0;
  std::size_t symmetrized_classes = 0;
  std::size_t double_cosets = 0;
  std::vector<long> dimensions;  // sorted pure dimensions
  bool multiplicity_free = false;
  bool cosines_match = false;    // projection path == wreath formula
  bool spherical_match = false;  // chi(e_H g) on Ghat == wreath formula
  GelfandClass gelfand = GelfandClass::NotGelfand;
  std::vector<std::size_t> layer_class;  // U class attached to each layer
  std::vector<std::size_t> layer_sizes;
  /// Rows phi in Irr(U), columns layers.
  std::vector<std::vector<Cyclo>> cosine_table;
  ConeReport cone;
  /// Invariants of U compared against SL(2,5): order, center, classes, degrees.
  bool base_invariants = false;

  bool passes() const noexcept;
};

/// The 600-cell through SL(2,5) wr C2.
SixHundredCellReport sixhundred_cell_report(const TableOptions& options = {});

}  // namespace polyreal
