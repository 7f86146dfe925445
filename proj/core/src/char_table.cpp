#include "polyreal/char_table.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "polyreal/error.hpp"
#include "polyreal/json.hpp"

namespace polyreal {

namespace {

// Arithmetic in F_p for p < 2^31.
struct Fp {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
  std::uint64_t from(long long v) const {
    const long long m = static_cast<long long>(p);
    return static_cast<std::uint64_t>(((v % m) + m) % m);
  }
};

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t choose_prime(std::uint64_t exponent, std::uint64_t order) {
  constexpr std::uint64_t kBound = 1ULL << 31;
  for (std::uint64_t l = exponent + 1; l < kBound; l += exponent) {
    if (l * l > 4 * order && is_prime(l)) return l;
  }
  throw Error(ErrorCode::PrimeSearchFailed, "no prime = 1 mod exponent below 2^31");
}

std::uint64_t primitive_root(const Fp& f) {
  std::vector<std::uint64_t> factors;
  std::uint64_t m = f.p - 1;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2; g < f.p; ++g) {
    if (std::all_of(factors.begin(), factors.end(),
                    [&](std::uint64_t q) { return f.pow(g, (f.p - 1) / q) != 1; })) {
      return g;
    }
  }
  throw Error(ErrorCode::PrimeSearchFailed, "no primitive root");
}

// Characteristic polynomial via reduction to upper Hessenberg form.
// Coefficients low degree first; the result is monic of degree n.
Vec charpoly(Mat h, const Fp& f) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    const std::uint64_t inv = f.inv(h[m][m - 1]);
    for (i = m + 1; i < n; ++i) {
      const std::uint64_t u = f.mul(h[i][m - 1], inv);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(u, h[m][j]));
      for (std::size_t j = 0; j < n; ++j) h[j][m] = f.add(h[j][m], f.mul(u, h[j][i]));
    }
  }
  std::vector<Vec> polys(n + 1);
  polys[0] = Vec{1};
  for (std::size_t m = 1; m <= n; ++m) {
    // (x - h[m-1][m-1]) * p_{m-1}
    const Vec& prev = polys[m - 1];
    Vec cur(m + 1, 0);
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] = f.add(cur[k + 1], prev[k]);
      cur[k] = f.sub(cur[k], f.mul(h[m - 1][m - 1], prev[k]));
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h[m - i][m - i - 1]);
      const std::uint64_t c = f.mul(t, h[m - i - 1][m - 1]);
      const Vec& lower = polys[m - i - 1];
      for (std::size_t k = 0; k < lower.size(); ++k) cur[k] = f.sub(cur[k], f.mul(c, lower[k]));
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

std::uint64_t eval(const Vec& poly, std::uint64_t x, const Fp& f) {
  std::uint64_t r = 0;
  for (std::size_t k = poly.size(); k-- > 0;) r = f.add(f.mul(r, x), poly[k]);
  return r;
}

// Distinct roots of a polynomial that splits over F_p.
std::vector<std::uint64_t> split_roots(Vec poly, const Fp& f) {
  std::vector<std::uint64_t> roots;
  std::size_t remaining = poly.size() - 1;
  for (std::uint64_t x = 0; x < f.p && remaining > 0; ++x) {
    if (eval(poly, x, f) != 0) continue;
    roots.push_back(x);
    while (poly.size() > 1 && eval(poly, x, f) == 0) {
      // synthetic division by (t - x)
      Vec q(poly.size() - 1);
      std::uint64_t carry = 0;
      for (std::size_t k = poly.size(); k-- > 1;) {
        carry = f.add(poly[k], f.mul(carry, x));
        q[k - 1] = carry;
      }
      poly = std::move(q);
      --remaining;
    }
  }
  if (remaining != 0) {
    throw Error(ErrorCode::PrimeSearchFailed, "class matrix does not split over the chosen prime");
  }
  return roots;
}

// Rows of the returned matrix are in reduced row echelon form; pivots[t] is
// the leading column of row t.
void echelonize(Mat& rows, std::vector<std::size_t>& pivots, const Fp& f) {
  pivots.clear();
  if (rows.empty()) return;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    const std::uint64_t inv = f.inv(rows[rank][c]);
    for (auto& v : rows[rank]) v = f.mul(v, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint64_t u = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = f.sub(rows[r][k], f.mul(u, rows[rank][k]));
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
}

// Basis of the null space of a square matrix.
Mat nullspace(Mat a, const Fp& f) {
  const std::size_t n = a.size();
  std::vector<std::size_t> pivots;
  echelonize(a, pivots, f);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t t = 0; t < pivots.size(); ++t) v[pivots[t]] = f.sub(0, a[t][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct Space {
  Mat basis;  // reduced row echelon, each row a vector in F_p^r
  std::vector<std::size_t> pivots;
};

// coeff[j][i][k] = #{x in C_j : x^-1 z_k in C_i}, z_k the representative of class k.
std::vector<std::uint32_t> class_coefficients(const Group& g, const ConjugacyClasses& cc, unsigned threads) {
  const std::size_t r = cc.size();
  std::vector<std::uint32_t> coeff(r * r * r, 0);
  auto work = [&](std::size_t first, std::size_t step) {
    for (std::size_t k = first; k < r; k += step) {
      const Index z = cc.representative(k);
      for (Index x = 0; x < g.order(); ++x) {
        const std::size_t j = cc.class_of(x);
        const std::size_t i = cc.class_of(g.multiply(g.inverse(x), z));
        ++coeff[(j * r + i) * r + k];
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(r)));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  return coeff;
}

std::vector<ClassFunction> dixon_schneider(const Group& g, const ConjugacyClasses& cc, std::uint64_t prime,
                                           unsigned threads) {
  const std::size_t r = cc.size();
  const Fp f{prime};
  const auto coeff = class_coefficients(g, cc, threads);

  std::vector<Space> done;
  std::vector<Space> pending;
  {
    Space all;
    for (std::size_t i = 0; i < r; ++i) {
      Vec e(r, 0);
      e[i] = 1;
      all.basis.push_back(std::move(e));
      all.pivots.push_back(i);
    }
    (r == 1 ? done : pending).push_back(std::move(all));
  }

  for (std::size_t j = 1; j < r && !pending.empty(); ++j) {
    std::vector<Space> next;
    for (auto& space : pending) {
      const std::size_t d = space.basis.size();
      // Restriction of M_j, (M_j)_{ik} = coeff[j][i][k], in the coordinates of the space.
      Mat x(d, Vec(d, 0));
      for (std::size_t t = 0; t < d; ++t) {
        const Vec& b = space.basis[t];
        for (std::size_t s = 0; s < d; ++s) {
          const std::size_t i = space.pivots[s];
          std::uint64_t acc = 0;
          for (std::size_t k = 0; k < r; ++k) {
            if (b[k] != 0) acc += coeff[(j * r + i) * r + k] % prime * b[k] % prime;
          }
          x[s][t] = acc % prime;
        }
      }
      const auto roots = split_roots(charpoly(x, f), f);
      if (roots.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      for (std::uint64_t lambda : roots) {
        Mat shifted = x;
        for (std::size_t t = 0; t < d; ++t) shifted[t][t] = f.sub(shifted[t][t], lambda);
        Space sub;
        for (const auto& c : nullspace(std::move(shifted), f)) {
          Vec v(r, 0);
          for (std::size_t t = 0; t < d; ++t) {
            if (c[t] == 0) continue;
            for (std::size_t k = 0; k < r; ++k) v[k] = f.add(v[k], f.mul(c[t], space.basis[t][k]));
          }
          sub.basis.push_back(std::move(v));
        }
        echelonize(sub.basis, sub.pivots, f);
        (sub.basis.size() == 1 ? done : next).push_back(std::move(sub));
      }
    }
    pending = std::move(next);
  }
  if (!pending.empty() || done.size() != r) {
    throw Error(ErrorCode::PrimeSearchFailed, "class matrices failed to separate the characters");
  }

  const std::uint64_t order = g.order();
  const std::uint64_t e = cc.exponent();
  const std::uint64_t w_e = f.pow(primitive_root(f), (prime - 1) / e);

  std::vector<ClassFunction> rows;
  rows.reserve(r);
  for (auto& space : done) {
    Vec omega = space.basis.front();
    const std::uint64_t scale = f.inv(omega[0]);
    for (auto& v : omega) v = f.mul(v, scale);

    // |G| / chi(1)^2 = sum_k omega_k omega_{k'} / |C_k|
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      s = f.add(s, f.mul(f.mul(omega[k], omega[cc.inverse_class(k)]), f.inv(cc.class_size(k) % prime)));
    }
    const std::uint64_t target = f.mul(order % prime, f.inv(s));
    std::uint64_t degree = 0;
    for (std::uint64_t dd = 1; dd * dd <= order; ++dd) {
      if (dd * dd % prime == target) {
        degree = dd;
        break;
      }
    }
    if (degree == 0) throw Error(ErrorCode::PrimeSearchFailed, "degree recovery failed");

    Vec chi(r);
    for (std::size_t k = 0; k < r; ++k) {
      chi[k] = f.mul(f.mul(omega[k], degree), f.inv(cc.class_size(k) % prime));
    }

    ClassFunction row(r);
    for (std::size_t k = 0; k < r; ++k) {
      const std::uint32_t n = cc.element_order(k);
      const std::uint64_t w_n = f.pow(w_e, e / n);
      const std::uint64_t inv_n = f.inv(n);
      std::vector<long long> mult(n);
      for (std::uint32_t jj = 0; jj < n; ++jj) {
        std::uint64_t acc = 0;
        for (std::uint32_t t = 0; t < n; ++t) {
          const std::uint64_t root = f.pow(w_n, (n - (static_cast<std::uint64_t>(jj) * t) % n) % n);
          acc = f.add(acc, f.mul(chi[cc.power_class(k, t)], root));
        }
        const std::uint64_t m = f.mul(acc, inv_n);
        if (m > degree) throw Error(ErrorCode::PrimeSearchFailed, "eigenvalue multiplicity out of range");
        mult[jj] = static_cast<long long>(m);
      }
      row[k] = Cyclo::from_integer_powers(n, mult);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string hex(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << v;
  return out.str();
}

std::optional<std::vector<ClassFunction>> load_cached(const std::filesystem::path& file, const Group& g,
                                                      const ConjugacyClasses& cc, std::uint64_t prime) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("group_hash").get<std::string>() != hex(g.fingerprint()) ||
        j.at("prime").get<std::uint64_t>() != prime || j.at("exponent").get<std::uint64_t>() != cc.exponent()) {
      return std::nullopt;
    }
    std::vector<ClassFunction> rows;
    for (const auto& row : j.at("irreducibles")) {
      ClassFunction values;
      for (const auto& v : row) values.push_back(cyclo_from_json(v));
      if (values.size() != cc.size()) return std::nullopt;
      rows.push_back(std::move(values));
    }
    if (rows.size() != cc.size()) return std::nullopt;
    return rows;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_cached(const std::filesystem::path& dir, const std::filesystem::path& file, const Group& g,
                  const ConjugacyClasses& cc, std::uint64_t prime, const std::vector<ClassFunction>& rows) {
  nlohmann::json j;
  j["group_hash"] = hex(g.fingerprint());
  j["prime"] = prime;
  j["exponent"] = cc.exponent();
  auto& irr = j["irreducibles"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : row) values.push_back(cyclo_to_json(v));
    irr.push_back(std::move(values));
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  // Write-then-rename keeps concurrent readers from seeing partial files.
  const auto tmp = file.string() + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("POLYREAL_CACHE"); env != nullptr && *env != '\0') return env;
  return ".polyreal-cache";
}

CharacterTable::CharacterTable(std::shared_ptr<const ConjugacyClasses> classes, std::vector<ClassFunction> rows,
                               std::uint64_t prime)
    : classes_(std::move(classes)), rows_(std::move(rows)), prime_(prime) {
  std::sort(rows_.begin(), rows_.end(), [](const ClassFunction& a, const ClassFunction& b) {
    const auto da = *a.front().as_rational();
    const auto db = *b.front().as_rational();
    if (da != db) return da < db;
    const bool ta = std::all_of(a.begin(), a.end(), [](const Cyclo& v) { return v == Cyclo(1); });
    const bool tb = std::all_of(b.begin(), b.end(), [](const Cyclo& v) { return v == Cyclo(1); });
    if (ta != tb) return ta;
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end()) < 0;
  });
  conjugate_.assign(rows_.size(), rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    ClassFunction conj(rows_[i].size());
    std::transform(rows_[i].begin(), rows_[i].end(), conj.begin(), [](const Cyclo& v) { return v.conj(); });
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (rows_[k] == conj) {
        conjugate_[i] = k;
        break;
      }
    }
    if (conjugate_[i] == rows_.size()) {
      throw Error(ErrorCode::InvalidArgument, "table is not closed under complex conjugation");
    }
    indicator_.push_back(frobenius_schur(*classes_, rows_[i]));
  }
}

long CharacterTable::degree(std::size_t i) const { return rows_[i].front().as_rational()->get_num().get_si(); }

CharacterTable character_table(const Group& g, std::shared_ptr<const ConjugacyClasses> classes,
                               const TableOptions& options) {
  const std::uint64_t prime = choose_prime(classes->exponent(), g.order());
  std::optional<std::filesystem::path> file;
  if (options.cache_dir) {
    file = *options.cache_dir / ("chartable-" + hex(g.fingerprint()) + ".json");
    if (auto rows = load_cached(*file, g, *classes, prime)) {
      return CharacterTable(std::move(classes), std::move(*rows), prime);
    }
  }
  auto rows = dixon_schneider(g, *classes, prime, options.threads);
  if (file) store_cached(*options.cache_dir, *file, g, *classes, prime, rows);
  return CharacterTable(std::move(classes), std::move(rows), prime);
}

CharacterTable character_table(const Group& g, const TableOptions& options) {
  return character_table(g, std::make_shared<const ConjugacyClasses>(g), options);
}

Cyclo inner_product(const ConjugacyClasses& cc, const ClassFunction& a, const ClassFunction& b) {
  if (a.size() != cc.size() || b.size() != cc.size()) {
    throw Error(ErrorCode::DimensionMismatch, "class function length does not match the class count");
  }
  Cyclo sum;
  for (std::size_t k = 0; k < cc.size(); ++k) {
    if (a[k].is_zero() || b[k].is_zero()) continue;
    sum += Cyclo(static_cast<long long>(cc.class_size(k))) * a[k] * b[k].conj();
  }
  return sum * Cyclo(Rational(1, static_cast<unsigned long>(cc.group_order())));
}

int frobenius_schur(const ConjugacyClasses& cc, const ClassFunction& chi) {
  Cyclo sum;
  for (std::size_t k = 0; k < cc.size(); ++k) {
    sum += Cyclo(static_cast<long long>(cc.class_size(k))) * chi[cc.power_class(k, 2)];
  }
  const auto value = (sum * Cyclo(Rational(1, static_cast<unsigned long>(cc.group_order())))).as_rational();
  if (!value || !is_integer(*value)) {
    throw Error(ErrorCode::InvalidArgument, "indicator is not an integer; argument is not a character");
  }
  return static_cast<int>(value->get_num().get_si());
}

bool verify_orthogonality(const CharacterTable& table) {
  const auto& cc = table.classes();
  const std::size_t r = table.size();
  if (r != cc.size()) return false;
  Integer degree_sum = 0;
  for (std::size_t i = 0; i < r; ++i) {
    degree_sum += table.degree(i) * table.degree(i);
    for (std::size_t j = i; j < r; ++j) {
      if (inner_product(cc, table[i], table[j]) != Cyclo(i == j ? 1 : 0)) return false;
    }
  }
  if (degree_sum != static_cast<unsigned long>(cc.group_order())) return false;
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = k; l < r; ++l) {
      Cyclo sum;
      for (std::size_t i = 0; i < r; ++i) sum += table[i][k] * table[i][l].conj();
      const long long expected = k == l ? static_cast<long long>(cc.centralizer_order(k)) : 0;
      if (sum != Cyclo(expected)) return false;
    }
  }
  return true;
}

const char* to_string(RealType t) {
  switch (t) {
    case RealType::R: return "R";
    case RealType::C: return "C";
    case RealType::H: return "H";
  }
  return "?";
}

std::vector<RealIrreducible> real_irreducibles(const CharacterTable& table) {
  std::vector<RealIrreducible> result;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::size_t c = table.conjugate_of(i);
    if (c < i) continue;
    RealIrreducible sigma;
    sigma.degree = table.degree(i);
    if (c != i) {
      sigma.type = RealType::C;
      sigma.norm = 2;
      sigma.constituents = {i, c};
      sigma.degree *= 2;
      sigma.values.resize(table[i].size());
      for (std::size_t k = 0; k < table[i].size(); ++k) sigma.values[k] = table[i][k] + table[c][k];
    } else if (table.indicator(i) == 1) {
      sigma.type = RealType::R;
      sigma.norm = 1;
      sigma.constituents = {i};
      sigma.values = table[i];
    } else {
      sigma.type = RealType::H;
      sigma.norm = 4;
      sigma.constituents = {i};
      sigma.degree *= 2;
      sigma.values.resize(table[i].size());
      for (std::size_t k = 0; k < table[i].size(); ++k) sigma.values[k] = Cyclo(2) * table[i][k];
    }
    result.push_back(std::move(sigma));
  }
  return result;
}

ClassFunction induced_trivial_character(const ConjugacyClasses& cc, const Subgroup& h) {
  if (h.parent_order() != cc.group_order()) {
    throw Error(ErrorCode::InvalidArgument, "subgroup belongs to a different group");
  }
  std::vector<std::size_t> meet(cc.size(), 0);
  for (Index x : h.members()) ++meet[cc.class_of(x)];
  ClassFunction pi(cc.size());
  for (std::size_t k = 0; k < cc.size(); ++k) {
    pi[k] = Cyclo(static_cast<long long>(cc.centralizer_order(k) * meet[k] / h.order()));
  }
  return pi;
}

ClassFunction regular_character(const ConjugacyClasses& cc) {
  ClassFunction reg(cc.size(), Cyclo());
  reg[0] = Cyclo(static_cast<long long>(cc.group_order()));
  return reg;
}

ClassFunction trivial_character(const ConjugacyClasses& cc) { return ClassFunction(cc.size(), Cyclo(1)); }

}  // namespace polyreal
