#include "polyreal/wreath.hpp"

#include <algorithm>
#include <string>

#include "polyreal/error.hpp"
#include "polyreal/gset.hpp"
#include "polyreal/stringc.hpp"

namespace polyreal {

namespace {

Permutation wreath_perm(const Group& base, bool flip, Index u, Index v) {
  const std::size_t d = base.degree();
  const auto iu = base.images(u);
  const auto iv = base.images(v);
  std::vector<Point> images(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    if (flip) {
      images[i] = static_cast<Point>(d + iv[i]);
      images[d + i] = iu[i];
    } else {
      images[i] = iu[i];
      images[d + i] = static_cast<Point>(d + iv[i]);
    }
  }
  return Permutation(std::move(images));
}

Subgroup centralizer_of_generators(const Group& g) {
  std::vector<Index> members;
  for (Index x = 0; x < g.order(); ++x) {
    const bool central = std::all_of(g.generators().begin(), g.generators().end(),
                                     [&](Index s) { return g.multiply(x, s) == g.multiply(s, x); });
    if (central) members.push_back(x);
  }
  return Subgroup(g.order(), std::move(members), {});
}

Group enumerate_wreath(const Group& base, std::size_t cap) {
  if (2 * base.order() * base.order() > cap) {
    throw Error(ErrorCode::CapExceeded, "wreath product order " + std::to_string(2 * base.order() * base.order()) +
                                            " exceeds cap " + std::to_string(cap));
  }
  std::vector<Permutation> gens;
  for (Index s : base.generators()) gens.push_back(wreath_perm(base, false, s, Group::identity()));
  gens.push_back(wreath_perm(base, true, Group::identity(), Group::identity()));
  return Group::enumerate(gens, cap);
}

}  // namespace

WreathGroup::WreathGroup(std::shared_ptr<const Group> base, std::size_t cap)
    : base_(std::move(base)),
      group_(std::make_shared<const Group>(enumerate_wreath(*base_, cap))),
      flip_(group_->index_of(wreath_perm(*base_, true, Group::identity(), Group::identity()))),
      hhat_(group_->order(), {}, {}),
      center_(centralizer_of_generators(*group_)) {
  std::vector<Index> hgens;
  for (Index s : base_->generators()) hgens.push_back(compose({false, s, s}));
  const Subgroup diagonal = subgroup_generated(*group_, hgens);
  hgens.push_back(flip_);
  hhat_ = subgroup_generated(*group_, hgens);
  const bool t_central = std::all_of(hgens.begin(), hgens.end(), [&](Index s) {
    return group_->multiply(s, flip_) == group_->multiply(flip_, s);
  });
  hhat_product_ = t_central && !diagonal.contains(flip_) && hhat_.order() == 2 * base_->order();
}

WreathElement WreathGroup::decompose(Index x) const {
  const std::size_t d = base_->degree();
  const auto images = group_->images(x);
  std::vector<Point> u(d), v(d);
  const bool flip = images[0] >= d;
  for (std::size_t i = 0; i < d; ++i) {
    if (flip) {
      v[i] = static_cast<Point>(images[i] - d);
      u[i] = images[d + i];
    } else {
      u[i] = images[i];
      v[i] = static_cast<Point>(images[d + i] - d);
    }
  }
  auto iu = base_->find(u);
  auto iv = base_->find(v);
  if (!iu || !iv) throw Error(ErrorCode::InvalidArgument, "element is not in the wreath product");
  return {flip, *iu, *iv};
}

Index WreathGroup::compose(const WreathElement& e) const {
  return group_->index_of(wreath_perm(*base_, e.flip, e.u, e.v));
}

WreathGroup wreath_c2(std::shared_ptr<const Group> base, std::size_t cap) { return WreathGroup(std::move(base), cap); }

VertexAction central_quotient_action(const WreathGroup& w) {
  const GSet cosets = GSet::cosets(w.shared_group(), w.hhat());
  std::vector<Permutation> gens;
  for (Index s : w.group().generators()) {
    std::vector<Point> images(cosets.size());
    for (Point p = 0; p < cosets.size(); ++p) images[p] = cosets.act(p, s);
    gens.push_back(Permutation(std::move(images)));
  }
  auto quotient = std::make_shared<const Group>(Group::enumerate(gens));
  const bool center_in_hhat = std::all_of(w.center().members().begin(), w.center().members().end(),
                                          [&](Index z) { return w.hhat().contains(z); });
  if (!center_in_hhat || quotient->order() * w.center().order() != w.group().order()) {
    throw Error(ErrorCode::CrossCheckFailed, "the coset action of the wreath product is not faithful on Ghat/Z");
  }
  VertexAction action{std::move(quotient), {}};
  for (Point p = 0; p < cosets.size(); ++p) action.lifts.push_back(cosets.representative(p));
  return action;
}

CharacterTable wreath_irreducibles(const WreathGroup& w, std::shared_ptr<const ConjugacyClasses> classes,
                                   const CharacterTable& u_table) {
  const Group& u = w.base();
  const ConjugacyClasses& ucc = u_table.classes();
  if (ucc.group_order() != u.order()) throw Error(ErrorCode::DimensionMismatch, "table does not belong to the base group");
  struct Rep {
    bool flip;
    std::size_t cu, cv, cuv;
  };
  std::vector<Rep> reps;
  for (std::size_t k = 0; k < classes->size(); ++k) {
    const WreathElement e = w.decompose(classes->representative(k));
    reps.push_back({e.flip, ucc.class_of(e.u), ucc.class_of(e.v), ucc.class_of(u.multiply(e.u, e.v))});
  }
  const std::size_t n = u_table.size();
  std::vector<ClassFunction> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& phi = u_table[i];
    for (int sign : {1, -1}) {
      ClassFunction chi;
      for (const Rep& r : reps) {
        chi.push_back(r.flip ? phi[r.cuv] * Cyclo(sign) : phi[r.cu] * phi[r.cv]);
      }
      rows.push_back(std::move(chi));
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& theta = u_table[j];
      ClassFunction chi;
      for (const Rep& r : reps) {
        chi.push_back(r.flip ? Cyclo(0) : phi[r.cu] * theta[r.cv] + phi[r.cv] * theta[r.cu]);
      }
      rows.push_back(std::move(chi));
    }
  }
  return CharacterTable(std::move(classes), std::move(rows), 0);
}

std::vector<WreathConstituent> wreath_vertex_constituents(const WreathGroup& w, const ConjugacyClasses& classes,
                                                          const CharacterTable& u_table) {
  const Group& u = w.base();
  const ConjugacyClasses& ucc = u_table.classes();
  const ClassFunction pi = induced_trivial_character(classes, w.hhat());
  std::vector<WreathElement> reps;
  for (std::size_t k = 0; k < classes.size(); ++k) reps.push_back(w.decompose(classes.representative(k)));

  std::vector<WreathConstituent> out;
  ClassFunction total(classes.size(), Cyclo(0));
  for (std::size_t i = 0; i < u_table.size(); ++i) {
    const std::size_t j = u_table.conjugate_of(i);
    if (j < i) continue;
    const auto& phi = u_table[i];
    WreathConstituent c;
    c.phi = i;
    if (j == i) {
      c.sign = u_table.indicator(i);
      for (const auto& e : reps) {
        c.values.push_back(e.flip ? phi[ucc.class_of(u.multiply(e.u, e.v))] * Cyclo(c.sign)
                                  : phi[ucc.class_of(e.u)] * phi[ucc.class_of(e.v)]);
      }
      c.descriptor = "ext(" + std::to_string(i) + (c.sign > 0 ? ",+)" : ",-)");
    } else {
      c.phi_bar = j;
      const auto& theta = u_table[j];
      for (const auto& e : reps) {
        const std::size_t cu = ucc.class_of(e.u), cv = ucc.class_of(e.v);
        c.values.push_back(e.flip ? Cyclo(0) : phi[cu] * theta[cv] + phi[cv] * theta[cu]);
      }
      c.descriptor = "ind(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    c.degree = c.values[0].as_rational().value().get_num().get_si();
    const Cyclo m = inner_product(classes, pi, c.values);
    if (!(m == Cyclo(1))) {
      throw Error(ErrorCode::MultiplicityMismatch, c.descriptor + " occurs with multiplicity " + m.to_string());
    }
    c.multiplicity = 1;
    for (std::size_t k = 0; k < total.size(); ++k) total[k] = total[k] + c.values[k];
    out.push_back(std::move(c));
  }
  if (total != pi) throw Error(ErrorCode::MultiplicityMismatch, "constituents do not add up to the permutation character");
  return out;
}

Cyclo wreath_cosine(const CharacterTable& u_table, std::size_t phi, std::size_t u_class) {
  return u_table[phi][u_class] / u_table[phi][0];
}

std::vector<std::vector<std::size_t>> symmetrized_classes(const ConjugacyClasses& cc) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(cc.size(), false);
  for (std::size_t c = 0; c < cc.size(); ++c) {
    if (seen[c]) continue;
    const std::size_t inv = cc.inverse_class(c);
    seen[c] = seen[inv] = true;
    out.push_back(inv == c ? std::vector<std::size_t>{c} : std::vector<std::size_t>{c, inv});
  }
  return out;
}

bool SixHundredCellReport::passes() const noexcept {
  const std::vector<long> expected{1, 4, 4, 9, 9, 16, 16, 25, 36};
  return wreath_order == 28800 && center_order == 2 && quotient_order == 14400 && vertices == 120 && layers == 9 &&
         symmetrized_classes == 9 && double_cosets == 9 && dimensions == expected && multiplicity_free &&
         cosines_match && spherical_match && gelfand == GelfandClass::Gelfand && cone.all_checks_pass() &&
         base_invariants;
}

SixHundredCellReport sixhundred_cell_report(const TableOptions& options) {
  SixHundredCellReport report;
  auto u = std::make_shared<const Group>(sl2_group(5));
  auto ucc = std::make_shared<const ConjugacyClasses>(*u);
  const CharacterTable u_table = character_table(*u, ucc, options);
  {
    std::vector<long> degrees;
    for (std::size_t i = 0; i < u_table.size(); ++i) degrees.push_back(u_table.degree(i));
    std::vector<std::size_t> sizes;
    for (std::size_t c = 0; c < ucc->size(); ++c) sizes.push_back(ucc->class_size(c));
    std::sort(sizes.begin(), sizes.end());
    report.base_invariants = u->order() == 120 && centralizer_of_generators(*u).order() == 2 && ucc->size() == 9 &&
                             degrees == std::vector<long>{1, 2, 2, 3, 3, 4, 4, 5, 6} &&
                             sizes == std::vector<std::size_t>{1, 1, 12, 12, 12, 12, 20, 20, 30};
  }

  const WreathGroup w(u);
  report.wreath_order = w.group().order();
  report.center_order = w.center().order();
  auto gcc = std::make_shared<const ConjugacyClasses>(w.group());
  const auto constituents = wreath_vertex_constituents(w, *gcc, u_table);

  const VertexAction action = central_quotient_action(w);
  report.quotient_order = action.quotient->order();
  auto table = std::make_shared<const CharacterTable>(character_table(*action.quotient, options));
  const GSetAnalysis analysis = analyze_gset(GSet::orbit(action.quotient, 0), table);
  report.cone = cone_report(analysis);
  report.gelfand = gelfand_classify(analysis);
  report.vertices = analysis.gset().size();

  const auto& layers = analysis.layers();
  report.layers = layers.count();
  report.layer_sizes = layers.sizes;
  report.symmetrized_classes = symmetrized_classes(*ucc).size();
  report.double_cosets = double_cosets(w.group(), w.hhat(), w.hhat()).size();
  std::vector<Index> lifts;
  for (Point rep : layers.reps) {
    const Index g = action.lifts[rep];
    const WreathElement e = w.decompose(g);
    lifts.push_back(g);
    report.layer_class.push_back(ucc->class_of(u->multiply(u->inverse(e.u), e.v)));
  }
  for (std::size_t phi = 0; phi < u_table.size(); ++phi) {
    std::vector<Cyclo> row;
    for (std::size_t c : report.layer_class) row.push_back(wreath_cosine(u_table, phi, c));
    report.cosine_table.push_back(std::move(row));
  }

  report.multiplicity_free = true;
  std::vector<bool> used(u_table.size(), false);
  std::size_t matched = 0, pure = 0;
  const auto& sigmas = analysis.real_irreducibles();
  for (std::size_t s = 0; s < sigmas.size(); ++s) {
    const long m = analysis.multiplicities()[s];
    if (m > 1) report.multiplicity_free = false;
    if (m != 1) continue;
    ++pure;
    report.dimensions.push_back(sigmas[s].degree);
    const auto cosines = cosine_vector_pure(analysis, s);
    for (std::size_t phi = 0; phi < u_table.size(); ++phi) {
      const long d = u_table.degree(phi);
      if (!used[phi] && d * d == sigmas[s].degree && report.cosine_table[phi] == cosines) {
        used[phi] = true;
        ++matched;
        break;
      }
    }
  }
  std::sort(report.dimensions.begin(), report.dimensions.end());
  report.cosines_match = matched == pure && pure == u_table.size();

  report.spherical_match = !constituents.empty();
  for (const auto& c : constituents) {
    for (std::size_t i = 0; i < lifts.size(); ++i) {
      const Cyclo s = spherical_function(w.group(), *gcc, w.hhat(), c.values, lifts[i]);
      if (!(s == report.cosine_table[c.phi][i])) report.spherical_match = false;
    }
  }
  return report;
}

}  // namespace polyreal
