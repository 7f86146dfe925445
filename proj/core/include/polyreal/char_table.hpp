#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <vector>

#include "polyreal/cyclo.hpp"
#include "polyreal/group.hpp"

namespace polyreal {

/// A class function: one value per conjugacy class, in class order.
using ClassFunction = std::vector<Cyclo>;

struct TableOptions {
  /// Directory for the JSON table cache; no caching when empty.
  std::optional<std::filesystem::path> cache_dir;
  /// Worker threads for the class-multiplication coefficients.
  unsigned threads = 1;
};

/// Reads POLYREAL_CACHE, falling back to ./.polyreal-cache.
std::filesystem::path default_cache_dir();

/// The complete table of irreducible complex characters of a group.
///
/// Rows are sorted by degree, then lexicographically on their value vectors
/// (using the total order on Cyclo), except that the trivial character is
/// always row 0. The table is a deterministic function of the enumerated group.
class CharacterTable {
 public:
  CharacterTable(std::shared_ptr<const ConjugacyClasses> classes, std::vector<ClassFunction> rows,
                 std::uint64_t prime);

  const ConjugacyClasses& classes() const noexcept { return *classes_; }
  std::shared_ptr<const ConjugacyClasses> shared_classes() const noexcept { return classes_; }

  std::size_t size() const noexcept { return rows_.size(); }
  const ClassFunction& operator[](std::size_t i) const { return rows_[i]; }
  const std::vector<ClassFunction>& irreducibles() const noexcept { return rows_; }

  long degree(std::size_t i) const;
  /// Row index of the complex conjugate character.
  std::size_t conjugate_of(std::size_t i) const { return conjugate_[i]; }
  /// Frobenius-Schur indicator of row i.
  int indicator(std::size_t i) const { return indicator_[i]; }

  /// The finite-field prime used by the construction.
  std::uint64_t prime() const noexcept { return prime_; }

 private:
  std::shared_ptr<const ConjugacyClasses> classes_;
  std::vector<ClassFunction> rows_;
  std::vector<std::size_t> conjugate_;
  std::vector<int> indicator_;
  std::uint64_t prime_;
};

/// Dixon-Schneider. Throws PrimeSearchFailed if no usable prime below 2^31.
CharacterTable character_table(const Group& g, std::shared_ptr<const ConjugacyClasses> classes,
                               const TableOptions& options = {});
CharacterTable character_table(const Group& g, const TableOptions& options = {});

/// (1/|G|) sum_g a(g) conj(b(g)).
Cyclo inner_product(const ConjugacyClasses& cc, const ClassFunction& a, const ClassFunction& b);
/// (1/|G|) sum_g chi(g^2); one of -1, 0, 1 for irreducible chi.
int frobenius_schur(const ConjugacyClasses& cc, const ClassFunction& chi);

/// Exact checks of both orthogonality relations and sum chi(1)^2 = |G|.
bool verify_orthogonality(const CharacterTable& table);

enum class RealType { R, C, H };
const char* to_string(RealType t);

/// A character of an irreducible real representation.
struct RealIrreducible {
  ClassFunction values;
  RealType type;
  /// One index (types R, H) or two (type C, chi then its conjugate).
  std::vector<std::size_t> constituents;
  int norm;  // <sigma, sigma>: 1, 2 or 4
  long degree;
};

/// One entry per pair {chi, conj chi}, in table row order of the first constituent.
std::vector<RealIrreducible> real_irreducibles(const CharacterTable& table);

/// (1_H)^G: pi(g) = |C_G(g)| |H cap g^G| / |H|.
ClassFunction induced_trivial_character(const ConjugacyClasses& cc, const Subgroup& h);
ClassFunction regular_character(const ConjugacyClasses& cc);
ClassFunction trivial_character(const ConjugacyClasses& cc);

}  // namespace polyreal
