#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "polyreal/char_table.hpp"
#include "polyreal/gset.hpp"

namespace polyreal {

/// Layers of a G-set relative to its base point alpha: omega and omega' lie
/// in the same layer when {alpha, omega} and {alpha, omega'} are in the same
/// diagonal class. Each layer is an H-suborbit merged with its paired
/// suborbit.
struct LayerData {
  std::vector<Point> reps;          // smallest point of each layer; reps[0] = alpha
  std::vector<std::size_t> sizes;   // layer sizes
  std::vector<std::size_t> layer_of;  // per point
  /// H-suborbits: representative points and the layer they belong to.
  std::vector<Point> suborbit_reps;
  std::vector<std::size_t> suborbit_layer;

  std::size_t count() const noexcept { return reps.size(); }
};

/// A G-set together with its layers; shared by every invariant matrix on it.
class LayeredGSet {
 public:
  explicit LayeredGSet(GSet gset);

  const GSet& gset() const noexcept { return gset_; }
  const LayerData& layers() const noexcept { return layers_; }
  std::size_t size() const noexcept { return gset_.size(); }

  /// Layer of the diagonal class of {xi, eta}.
  std::size_t orbital(Point xi, Point eta) const;

  /// N[k][i][j] = #{zeta : layer(alpha, zeta) = i, layer(zeta, eta_k) = j}
  /// where eta_k runs over the H-suborbit representatives. Built on first use.
  const std::vector<std::uint32_t>& intersection_numbers() const;

 private:
  GSet gset_;
  LayerData layers_;
  mutable std::vector<std::uint32_t> intersections_;
};

/// A symmetric G-invariant matrix on a G-set, stored as one value per layer
/// (the row of the base point).
class InvariantMatrix {
 public:
  InvariantMatrix(std::shared_ptr<const LayeredGSet> space, std::vector<Cyclo> values);

  static InvariantMatrix identity(std::shared_ptr<const LayeredGSet> space);
  static InvariantMatrix zero(std::shared_ptr<const LayeredGSet> space);
  static InvariantMatrix constant(std::shared_ptr<const LayeredGSet> space, const Cyclo& c);

  const LayeredGSet& space() const noexcept { return *space_; }
  std::shared_ptr<const LayeredGSet> shared_space() const noexcept { return space_; }
  const std::vector<Cyclo>& values() const noexcept { return values_; }
  const Cyclo& layer_value(std::size_t i) const { return values_[i]; }
  Cyclo entry(Point xi, Point eta) const { return values_[space_->orbital(xi, eta)]; }
  std::size_t dimension() const noexcept { return space_->size(); }

  Cyclo trace() const;
  /// Row-major |Omega| x |Omega| expansion.
  std::vector<Cyclo> expand() const;

  friend bool operator==(const InvariantMatrix& a, const InvariantMatrix& b) {
    return a.space_ == b.space_ && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const LayeredGSet> space_;
  std::vector<Cyclo> values_;
};

/// Entrywise sum: the matrix of the blend of two realizations.
InvariantMatrix blend(const InvariantMatrix& a, const InvariantMatrix& b);
/// Matrix of the realization scaled by lambda, i.e. lambda^2 * a.
InvariantMatrix scale(const InvariantMatrix& a, const Rational& lambda);
/// Entrywise product: the matrix of the tensor product of two realizations.
InvariantMatrix hadamard(const InvariantMatrix& a, const InvariantMatrix& b);
/// Matrix product via intersection numbers. Throws NotInvariant if the
/// product is not symmetric (it is always G-invariant).
InvariantMatrix multiply(const InvariantMatrix& a, const InvariantMatrix& b);

/// (1/|Omega|) sum_i l_i a_i b_i.
Cyclo lambda_inner(const InvariantMatrix& a, const InvariantMatrix& b);
/// (1/|Omega|^2) tr(A B^t) from the expanded matrices.
Cyclo lambda_inner_trace(const InvariantMatrix& a, const InvariantMatrix& b);

enum class GelfandClass { NotGelfand, GelfandOverROnly, Gelfand };
const char* to_string(GelfandClass c);

/// Permutation character, multiplicities and layer data of a transitive G-set.
class GSetAnalysis {
 public:
  GSetAnalysis(std::shared_ptr<const LayeredGSet> space, std::shared_ptr<const CharacterTable> table);

  const LayeredGSet& space() const noexcept { return *space_; }
  std::shared_ptr<const LayeredGSet> shared_space() const noexcept { return space_; }
  const GSet& gset() const noexcept { return space_->gset(); }
  const LayerData& layers() const noexcept { return space_->layers(); }
  const CharacterTable& table() const noexcept { return *table_; }
  std::shared_ptr<const CharacterTable> shared_table() const noexcept { return table_; }

  const ClassFunction& permutation_character() const noexcept { return pi_; }
  /// m_chi = <pi, chi> for every row of the complex table.
  const std::vector<long>& complex_multiplicities() const noexcept { return m_chi_; }
  const std::vector<RealIrreducible>& real_irreducibles() const noexcept { return sigmas_; }
  /// m_sigma, indexed like real_irreducibles().
  const std::vector<long>& multiplicities() const noexcept { return m_sigma_; }

  /// counts[i][k] = #{g in H x_i : g in class k}, x_i mapping alpha to layer rep i.
  const std::vector<std::vector<std::uint32_t>>& layer_class_counts() const noexcept { return counts_; }

 private:
  std::shared_ptr<const LayeredGSet> space_;
  std::shared_ptr<const CharacterTable> table_;
  ClassFunction pi_;
  std::vector<long> m_chi_;
  std::vector<RealIrreducible> sigmas_;
  std::vector<long> m_sigma_;
  std::vector<std::vector<std::uint32_t>> counts_;
};

/// Throws NonIntegralMultiplicity if a multiplicity is not an integer.
GSetAnalysis analyze_gset(const GSet& gset, std::shared_ptr<const CharacterTable> table);
GSetAnalysis analyze_gset(std::shared_ptr<const LayeredGSet> space, std::shared_ptr<const CharacterTable> table);

/// Matrix of the central idempotent e_sigma on the permutation module.
InvariantMatrix homogeneous_projection(const GSetAnalysis& a, std::size_t sigma);

/// sigma(e_H g) / <sigma, sigma>.
Cyclo wythoff_cosine_sum(const GSetAnalysis& a, std::size_t sigma, Index g);
/// wythoff_cosine_sum at the layer representatives. Throws MultiplicityNotOne unless m_sigma = 1.
std::vector<Cyclo> cosine_vector_pure(const GSetAnalysis& a, std::size_t sigma);
/// Layer values of (|Omega| / (m sigma(1))) Q_sigma; defined for any m_sigma > 0.
std::vector<Cyclo> balanced_cosine_vector(const GSetAnalysis& a, std::size_t sigma);

/// chi(e_H g) = (1/|H|) sum_h chi(hg).
Cyclo spherical_function(const Group& g, const ConjugacyClasses& cc, const Subgroup& h, const ClassFunction& chi,
                         Index x);

GelfandClass gelfand_classify(const GSetAnalysis& a);

struct IntegralityEntry {
  std::size_t layer;
  Cyclo value;  // layer size times cosine entry
  bool is_integer;
};
/// Throws MultiplicityNotOne unless m_sigma = 1.
std::vector<IntegralityEntry> integrality_certificate(const GSetAnalysis& a, std::size_t sigma);

struct SubconeEntry {
  std::size_t sigma;  // index into GSetAnalysis::real_irreducibles()
  RealType type;
  long degree;
  int norm;
  long multiplicity;
  long subcone_dim;
  std::string cone;  // "PSD mxm over R|C|H"
};

struct ConeReport {
  std::vector<SubconeEntry> entries;
  std::vector<Point> layer_reps;
  std::vector<std::size_t> layer_sizes;
  long layer_count = 0;
  long total_dimension = 0;
  bool layer_identity_real = false;     // r+1 = sum m + sum m(m-1)/2 <s,s>
  bool layer_identity_complex = false;  // r+1 = 1/2 sum m_chi (m_chi + nu2)
  bool decomposition = false;           // sum Q_sigma = I, traces, Lambda-orthogonality
  bool subcone_dims = false;
  GelfandClass gelfand = GelfandClass::NotGelfand;

  bool all_checks_pass() const noexcept {
    return layer_identity_real && layer_identity_complex && decomposition && subcone_dims;
  }
};

ConeReport cone_report(const GSetAnalysis& a);

/// Q_sigma Q_tau = delta Q_sigma for all pairs with m > 0, checked exactly.
bool verify_idempotents(const GSetAnalysis& a);

}  // namespace polyreal
