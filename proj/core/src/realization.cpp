#include "polyreal/realization.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "polyreal/error.hpp"

namespace polyreal {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

LayerData compute_layers(const GSet& gset) {
  const Group& g = gset.group();
  const auto& h = gset.stabilizer();
  const std::size_t n = gset.size();

  std::vector<std::size_t> suborbit_of(n, kUnset);
  std::vector<Point> suborbit_reps;
  // Base suborbit first so that {alpha} becomes layer 0.
  std::vector<Point> order(n);
  std::iota(order.begin(), order.end(), Point{0});
  std::stable_partition(order.begin(), order.end(), [&](Point p) { return p == gset.base(); });
  for (Point p : order) {
    if (suborbit_of[p] != kUnset) continue;
    const std::size_t id = suborbit_reps.size();
    Point smallest = p;
    for (Index y : h.members()) {
      const Point q = gset.act(p, y);
      suborbit_of[q] = id;
      smallest = std::min(smallest, q);
    }
    suborbit_reps.push_back(smallest);
  }

  // Merge each suborbit with its paired suborbit, the one containing alpha^(x^-1).
  const std::size_t s = suborbit_reps.size();
  std::vector<std::size_t> paired(s);
  for (std::size_t k = 0; k < s; ++k) {
    paired[k] = suborbit_of[gset.point_of(g.inverse(gset.representative(suborbit_reps[k])))];
  }
  std::vector<std::size_t> layer_ids;  // suborbit -> provisional layer
  std::vector<Point> provisional_reps;
  std::vector<std::size_t> provisional(s, kUnset);
  for (std::size_t k = 0; k < s; ++k) {
    if (provisional[k] != kUnset) continue;
    const std::size_t id = provisional_reps.size();
    provisional[k] = id;
    provisional[paired[k]] = id;
    provisional_reps.push_back(std::min(suborbit_reps[k], suborbit_reps[paired[k]]));
  }
  // Layer 0 stays first; the rest are sorted by representative.
  std::vector<std::size_t> rank(provisional_reps.size());
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  std::sort(rank.begin() + 1, rank.end(),
            [&](std::size_t a, std::size_t b) { return provisional_reps[a] < provisional_reps[b]; });
  std::vector<std::size_t> final_id(rank.size());
  for (std::size_t i = 0; i < rank.size(); ++i) final_id[rank[i]] = i;

  LayerData data;
  data.reps.resize(rank.size());
  data.sizes.assign(rank.size(), 0);
  for (std::size_t i = 0; i < rank.size(); ++i) data.reps[i] = provisional_reps[rank[i]];
  data.layer_of.resize(n);
  for (Point p = 0; p < n; ++p) {
    const std::size_t layer = final_id[provisional[suborbit_of[p]]];
    data.layer_of[p] = layer;
    ++data.sizes[layer];
  }
  data.suborbit_reps = suborbit_reps;
  data.suborbit_layer.resize(s);
  for (std::size_t k = 0; k < s; ++k) data.suborbit_layer[k] = final_id[provisional[k]];
  return data;
}

Cyclo rational_cyclo(long long num, long long den) {
  return Cyclo(Rational(Integer(std::to_string(num)), Integer(std::to_string(den))));
}

void require_same_space(const InvariantMatrix& a, const InvariantMatrix& b) {
  if (&a.space() != &b.space()) {
    throw Error(ErrorCode::DimensionMismatch, "invariant matrices live on different G-sets");
  }
}

void require_sigma(const GSetAnalysis& a, std::size_t sigma) {
  if (sigma >= a.real_irreducibles().size()) throw Error(ErrorCode::InvalidArgument, "sigma index out of range");
}

// sum_k counts[i][k] sigma_k for every layer i.
std::vector<Cyclo> layer_sums(const GSetAnalysis& a, std::size_t sigma) {
  require_sigma(a, sigma);
  const auto& values = a.real_irreducibles()[sigma].values;
  std::vector<Cyclo> sums;
  sums.reserve(a.layer_class_counts().size());
  for (const auto& counts : a.layer_class_counts()) {
    Cyclo s;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] != 0 && !values[k].is_zero()) s += Cyclo(static_cast<long long>(counts[k])) * values[k];
    }
    sums.push_back(std::move(s));
  }
  return sums;
}

}  // namespace

LayeredGSet::LayeredGSet(GSet gset) : gset_(std::move(gset)), layers_(compute_layers(gset_)) {}

std::size_t LayeredGSet::orbital(Point xi, Point eta) const {
  const Group& g = gset_.group();
  const Index x = g.multiply(gset_.representative(eta), g.inverse(gset_.representative(xi)));
  return layers_.layer_of[gset_.point_of(x)];
}

const std::vector<std::uint32_t>& LayeredGSet::intersection_numbers() const {
  if (!intersections_.empty()) return intersections_;
  const std::size_t r = layers_.count();
  const std::size_t s = layers_.suborbit_reps.size();
  std::vector<std::uint32_t> numbers(s * r * r, 0);
  for (std::size_t k = 0; k < s; ++k) {
    const Point eta = layers_.suborbit_reps[k];
    for (Point zeta = 0; zeta < size(); ++zeta) {
      const std::size_t i = layers_.layer_of[zeta];
      const std::size_t j = orbital(zeta, eta);
      ++numbers[(k * r + i) * r + j];
    }
  }
  intersections_ = std::move(numbers);
  return intersections_;
}

InvariantMatrix::InvariantMatrix(std::shared_ptr<const LayeredGSet> space, std::vector<Cyclo> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_->layers().count()) {
    throw Error(ErrorCode::DimensionMismatch, "one value per layer expected");
  }
}

InvariantMatrix InvariantMatrix::identity(std::shared_ptr<const LayeredGSet> space) {
  std::vector<Cyclo> values(space->layers().count());
  values[0] = Cyclo(1);
  return InvariantMatrix(std::move(space), std::move(values));
}

InvariantMatrix InvariantMatrix::zero(std::shared_ptr<const LayeredGSet> space) {
  std::vector<Cyclo> values(space->layers().count());
  return InvariantMatrix(std::move(space), std::move(values));
}

InvariantMatrix InvariantMatrix::constant(std::shared_ptr<const LayeredGSet> space, const Cyclo& c) {
  std::vector<Cyclo> values(space->layers().count(), c);
  return InvariantMatrix(std::move(space), std::move(values));
}

Cyclo InvariantMatrix::trace() const { return Cyclo(static_cast<long long>(dimension())) * values_[0]; }

std::vector<Cyclo> InvariantMatrix::expand() const {
  const std::size_t n = dimension();
  std::vector<Cyclo> full(n * n);
  for (Point xi = 0; xi < n; ++xi) {
    for (Point eta = 0; eta < n; ++eta) full[xi * n + eta] = values_[space_->orbital(xi, eta)];
  }
  return full;
}

InvariantMatrix blend(const InvariantMatrix& a, const InvariantMatrix& b) {
  require_same_space(a, b);
  std::vector<Cyclo> values(a.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = a.values()[i] + b.values()[i];
  return InvariantMatrix(a.shared_space(), std::move(values));
}

InvariantMatrix scale(const InvariantMatrix& a, const Rational& lambda) {
  const Cyclo factor(lambda * lambda);
  std::vector<Cyclo> values(a.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = factor * a.values()[i];
  return InvariantMatrix(a.shared_space(), std::move(values));
}

InvariantMatrix hadamard(const InvariantMatrix& a, const InvariantMatrix& b) {
  require_same_space(a, b);
  std::vector<Cyclo> values(a.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = a.values()[i] * b.values()[i];
  return InvariantMatrix(a.shared_space(), std::move(values));
}

InvariantMatrix multiply(const InvariantMatrix& a, const InvariantMatrix& b) {
  require_same_space(a, b);
  const auto& space = a.space();
  const auto& layers = space.layers();
  const auto& numbers = space.intersection_numbers();
  const std::size_t r = layers.count();
  const std::size_t s = layers.suborbit_reps.size();
  std::vector<Cyclo> values(r);
  std::vector<bool> assigned(r, false);
  for (std::size_t k = 0; k < s; ++k) {
    Cyclo v;
    for (std::size_t i = 0; i < r; ++i) {
      if (a.values()[i].is_zero()) continue;
      Cyclo c;
      for (std::size_t j = 0; j < r; ++j) {
        const std::uint32_t count = numbers[(k * r + i) * r + j];
        if (count != 0 && !b.values()[j].is_zero()) c += Cyclo(static_cast<long long>(count)) * b.values()[j];
      }
      if (!c.is_zero()) v += a.values()[i] * c;
    }
    const std::size_t layer = layers.suborbit_layer[k];
    if (!assigned[layer]) {
      values[layer] = std::move(v);
      assigned[layer] = true;
    } else if (values[layer] != v) {
      throw Error(ErrorCode::NotInvariant, "matrix product is not symmetric");
    }
  }
  return InvariantMatrix(a.shared_space(), std::move(values));
}

Cyclo lambda_inner(const InvariantMatrix& a, const InvariantMatrix& b) {
  require_same_space(a, b);
  const auto& sizes = a.space().layers().sizes;
  Cyclo sum;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (a.values()[i].is_zero() || b.values()[i].is_zero()) continue;
    sum += Cyclo(static_cast<long long>(sizes[i])) * a.values()[i] * b.values()[i];
  }
  return sum * rational_cyclo(1, static_cast<long long>(a.dimension()));
}

Cyclo lambda_inner_trace(const InvariantMatrix& a, const InvariantMatrix& b) {
  require_same_space(a, b);
  const std::size_t n = a.dimension();
  // tr(A B^t) = sum over all entries of A_{xi,eta} B_{xi,eta}.
  std::vector<long long> pair_counts(a.values().size(), 0);
  for (Point xi = 0; xi < n; ++xi) {
    for (Point eta = 0; eta < n; ++eta) ++pair_counts[a.space().orbital(xi, eta)];
  }
  Cyclo sum;
  for (std::size_t i = 0; i < pair_counts.size(); ++i) {
    if (pair_counts[i] == 0 || a.values()[i].is_zero() || b.values()[i].is_zero()) continue;
    sum += Cyclo(pair_counts[i]) * a.values()[i] * b.values()[i];
  }
  return sum * rational_cyclo(1, static_cast<long long>(n * n));
}

const char* to_string(GelfandClass c) {
  switch (c) {
    case GelfandClass::NotGelfand: return "not_gelfand";
    case GelfandClass::GelfandOverROnly: return "gelfand_over_R_only";
    case GelfandClass::Gelfand: return "gelfand";
  }
  return "?";
}

GSetAnalysis::GSetAnalysis(std::shared_ptr<const LayeredGSet> space, std::shared_ptr<const CharacterTable> table)
    : space_(std::move(space)), table_(std::move(table)) {
  const GSet& gset = space_->gset();
  const Group& g = gset.group();
  const auto& cc = table_->classes();
  if (cc.group_order() != g.order()) {
    throw Error(ErrorCode::InvalidArgument, "character table belongs to a different group");
  }
  const auto& h = gset.stabilizer();
  pi_ = induced_trivial_character(cc, h);

  for (std::size_t i = 0; i < table_->size(); ++i) {
    const auto m = inner_product(cc, pi_, (*table_)[i]).as_rational();
    if (!m || !is_integer(*m)) {
      throw Error(ErrorCode::NonIntegralMultiplicity, "<pi, chi> is not an integer");
    }
    m_chi_.push_back(m->get_num().get_si());
  }
  sigmas_ = polyreal::real_irreducibles(*table_);
  for (const auto& sigma : sigmas_) {
    const long m = m_chi_[sigma.constituents.front()];
    if (sigma.type == RealType::H) {
      if (m % 2 != 0) throw Error(ErrorCode::NonIntegralMultiplicity, "odd multiplicity of a quaternionic character");
      m_sigma_.push_back(m / 2);
    } else {
      m_sigma_.push_back(m);
    }
  }

  const auto& layers = space_->layers();
  counts_.assign(layers.count(), std::vector<std::uint32_t>(cc.size(), 0));
  for (std::size_t i = 0; i < layers.count(); ++i) {
    const Index x = gset.representative(layers.reps[i]);
    for (Index y : h.members()) ++counts_[i][cc.class_of(g.multiply(y, x))];
  }
}

GSetAnalysis analyze_gset(const GSet& gset, std::shared_ptr<const CharacterTable> table) {
  return GSetAnalysis(std::make_shared<const LayeredGSet>(gset), std::move(table));
}

GSetAnalysis analyze_gset(std::shared_ptr<const LayeredGSet> space, std::shared_ptr<const CharacterTable> table) {
  return GSetAnalysis(std::move(space), std::move(table));
}

InvariantMatrix homogeneous_projection(const GSetAnalysis& a, std::size_t sigma) {
  const auto& s = a.real_irreducibles()[sigma];
  auto sums = layer_sums(a, sigma);
  const Cyclo factor = rational_cyclo(s.degree, static_cast<long long>(s.norm) *
                                                    static_cast<long long>(a.gset().group().order()));
  for (auto& v : sums) v *= factor;
  return InvariantMatrix(a.shared_space(), std::move(sums));
}

Cyclo wythoff_cosine_sum(const GSetAnalysis& a, std::size_t sigma, Index g) {
  require_sigma(a, sigma);
  const auto& s = a.real_irreducibles()[sigma];
  const auto& cc = a.table().classes();
  const auto& group = a.gset().group();
  const auto& h = a.gset().stabilizer();
  std::vector<std::uint32_t> counts(cc.size(), 0);
  for (Index y : h.members()) ++counts[cc.class_of(group.multiply(y, g))];
  Cyclo sum;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != 0) sum += Cyclo(static_cast<long long>(counts[k])) * s.values[k];
  }
  return sum * rational_cyclo(1, static_cast<long long>(s.norm) * static_cast<long long>(h.order()));
}

std::vector<Cyclo> cosine_vector_pure(const GSetAnalysis& a, std::size_t sigma) {
  require_sigma(a, sigma);
  if (a.multiplicities()[sigma] != 1) {
    throw Error(ErrorCode::MultiplicityNotOne,
                "pure cosine vectors need explicit representations when the multiplicity is not 1");
  }
  return balanced_cosine_vector(a, sigma);
}

std::vector<Cyclo> balanced_cosine_vector(const GSetAnalysis& a, std::size_t sigma) {
  require_sigma(a, sigma);
  const long m = a.multiplicities()[sigma];
  if (m <= 0) throw Error(ErrorCode::InvalidArgument, "sigma does not occur in the permutation character");
  const auto& s = a.real_irreducibles()[sigma];
  auto sums = layer_sums(a, sigma);
  const Cyclo factor =
      rational_cyclo(1, m * static_cast<long long>(s.norm) * static_cast<long long>(a.gset().stabilizer().order()));
  for (auto& v : sums) v *= factor;
  return sums;
}

Cyclo spherical_function(const Group& g, const ConjugacyClasses& cc, const Subgroup& h, const ClassFunction& chi,
                         Index x) {
  Cyclo sum;
  std::vector<std::uint32_t> counts(cc.size(), 0);
  for (Index y : h.members()) ++counts[cc.class_of(g.multiply(y, x))];
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != 0) sum += Cyclo(static_cast<long long>(counts[k])) * chi[k];
  }
  return sum * rational_cyclo(1, static_cast<long long>(h.order()));
}

GelfandClass gelfand_classify(const GSetAnalysis& a) {
  const auto& mc = a.complex_multiplicities();
  if (std::all_of(mc.begin(), mc.end(), [](long m) { return m <= 1; })) return GelfandClass::Gelfand;
  const auto& ms = a.multiplicities();
  if (std::all_of(ms.begin(), ms.end(), [](long m) { return m <= 1; })) return GelfandClass::GelfandOverROnly;
  return GelfandClass::NotGelfand;
}

std::vector<IntegralityEntry> integrality_certificate(const GSetAnalysis& a, std::size_t sigma) {
  const auto cosines = cosine_vector_pure(a, sigma);
  std::vector<IntegralityEntry> result;
  for (std::size_t i = 0; i < cosines.size(); ++i) {
    Cyclo value = Cyclo(static_cast<long long>(a.layers().sizes[i])) * cosines[i];
    const bool integral = value.is_algebraic_integer();
    result.push_back(IntegralityEntry{i, std::move(value), integral});
  }
  return result;
}

ConeReport cone_report(const GSetAnalysis& a) {
  ConeReport report;
  const auto& layers = a.layers();
  report.layer_reps = layers.reps;
  report.layer_sizes = layers.sizes;
  report.layer_count = static_cast<long>(layers.count());

  long real_side = 0;
  bool dims_ok = true;
  for (std::size_t i = 0; i < a.real_irreducibles().size(); ++i) {
    const long m = a.multiplicities()[i];
    if (m == 0) continue;
    const auto& s = a.real_irreducibles()[i];
    SubconeEntry e;
    e.sigma = i;
    e.type = s.type;
    e.degree = s.degree;
    e.norm = s.norm;
    e.multiplicity = m;
    e.subcone_dim = m + m * (m - 1) / 2 * s.norm;
    e.cone = "PSD " + std::to_string(m) + "x" + std::to_string(m) + " over " + to_string(s.type);
    // Hermitian m x m matrices over R, C or H have dimension m + m(m-1)/2 * dim D.
    dims_ok = dims_ok && (s.type != RealType::R || e.subcone_dim == m * (m + 1) / 2) &&
              (s.type != RealType::C || e.subcone_dim == m * m) &&
              (s.type != RealType::H || e.subcone_dim == m * (2 * m - 1));
    real_side += e.subcone_dim;
    report.total_dimension += e.subcone_dim;
    report.entries.push_back(std::move(e));
  }
  report.layer_identity_real = real_side == report.layer_count;

  long complex_side = 0;
  for (std::size_t i = 0; i < a.table().size(); ++i) {
    const long m = a.complex_multiplicities()[i];
    complex_side += m * (m + a.table().indicator(i));
  }
  report.layer_identity_complex = complex_side == 2 * report.layer_count;
  report.subcone_dims = dims_ok && report.total_dimension == report.layer_count;

  // Idempotent decomposition checked in compressed form.
  const auto n = static_cast<long long>(a.gset().size());
  bool decomposition = true;
  InvariantMatrix total = InvariantMatrix::zero(a.shared_space());
  std::vector<std::pair<std::size_t, InvariantMatrix>> projections;
  for (const auto& e : report.entries) {
    auto q = homogeneous_projection(a, e.sigma);
    decomposition = decomposition && q.trace() == Cyclo(e.multiplicity * e.degree);
    total = blend(total, q);
    projections.emplace_back(e.sigma, std::move(q));
  }
  decomposition = decomposition && total == InvariantMatrix::identity(a.shared_space());
  for (std::size_t i = 0; i < projections.size() && decomposition; ++i) {
    for (std::size_t j = i; j < projections.size() && decomposition; ++j) {
      const auto value = lambda_inner(projections[i].second, projections[j].second);
      const auto& e = report.entries[i];
      const Cyclo expected = i == j ? rational_cyclo(e.multiplicity * e.degree, n * n) : Cyclo();
      decomposition = value == expected;
    }
  }
  report.decomposition = decomposition;
  report.gelfand = gelfand_classify(a);
  return report;
}

bool verify_idempotents(const GSetAnalysis& a) {
  std::vector<InvariantMatrix> qs;
  for (std::size_t i = 0; i < a.real_irreducibles().size(); ++i) {
    if (a.multiplicities()[i] > 0) qs.push_back(homogeneous_projection(a, i));
  }
  const auto zero = InvariantMatrix::zero(a.shared_space());
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = i; j < qs.size(); ++j) {
      if (multiply(qs[i], qs[j]) != (i == j ? qs[i] : zero)) return false;
    }
  }
  return true;
}

}  // namespace polyreal
