#include "polyreal/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "polyreal/error.hpp"

namespace polyreal {

namespace {

struct PrimePart {
  std::uint32_t p;         // prime
  std::uint32_t q;         // p^a exactly dividing n
  std::uint32_t inv;       // (n/q)^{-1} mod q
  std::uint32_t digit;     // q / p
  std::uint32_t step;      // n / p
};

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(m), new_r = static_cast<long long>(a % m);
  while (new_r != 0) {
    long long quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<std::uint64_t>(t);
}

const std::vector<PrimePart>& prime_parts(std::uint32_t n) {
  thread_local std::unordered_map<std::uint32_t, std::vector<PrimePart>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<PrimePart> parts;
  std::uint32_t rest = n;
  for (std::uint32_t p = 2; p * p <= rest || rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p != 0) continue;
    std::uint32_t q = 1;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
    }
    const std::uint32_t cofactor = n / q;
    parts.push_back(PrimePart{p, q, static_cast<std::uint32_t>(q == 1 ? 0 : inverse_mod(cofactor % q, q)),
                              q / p, n / p});
  }
  return cache.emplace(n, std::move(parts)).first->second;
}

// Position of the p-component of zeta_n^k on the Zumbroich digit: the
// component is zeta_q^m with m = k * (n/q)^{-1} mod q, digit = m / (q/p).
inline std::uint32_t digit_of(std::uint32_t k, const PrimePart& part) {
  const std::uint64_t m = (static_cast<std::uint64_t>(k % part.q) * part.inv) % part.q;
  return static_cast<std::uint32_t>(m / part.digit);
}

inline bool is_good(std::uint32_t k, const PrimePart& part) {
  const std::uint32_t d = digit_of(k, part);
  return part.p == 2 ? d == 0 : d != 0;
}

}  // namespace

// Dense scratch space over Z/n with a touched-index list so that reuse does
// not reallocate the GMP limbs.
class CycloWorkspace {
 public:
  void reset(std::uint32_t n) {
    if (n > Cyclo::kMaxOrder) {
      throw Error(ErrorCode::InvalidArgument,
                  "cyclotomic order " + std::to_string(n) + " exceeds the supported maximum");
    }
    n_ = n;
    if (coef_.size() < n) {
      coef_.resize(n);
      used_.resize(n, 0);
    }
  }

  void add(std::uint32_t k, const Rational& c) {
    touch(k);
    coef_[k] += c;
  }
  void add_product(std::uint32_t k, const Rational& a, const Rational& b) {
    touch(k);
    mpq_mul(tmp_.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    coef_[k] += tmp_;
  }

  void reduce() {
    for (const auto& part : prime_parts(n_)) {
      const std::size_t count = touched_.size();
      for (std::size_t i = 0; i < count; ++i) {
        const std::uint32_t k = touched_[i];
        if (sgn(coef_[k]) == 0 || is_good(k, part)) continue;
        if (part.p == 2) {
          const std::uint32_t t = static_cast<std::uint32_t>((k + n_ / 2) % n_);
          touch(t);
          coef_[t] -= coef_[k];
        } else {
          for (std::uint32_t j = 1; j < part.p; ++j) {
            const std::uint32_t t =
                static_cast<std::uint32_t>((k + static_cast<std::uint64_t>(j) * part.step) % n_);
            touch(t);
            coef_[t] -= coef_[k];
          }
        }
        coef_[k] = 0;
      }
    }
  }

  // Collects the reduced value and clears the workspace.
  Cyclo extract() {
    std::sort(touched_.begin(), touched_.end());
    std::vector<Cyclo::Term> terms;
    for (std::uint32_t k : touched_) {
      if (sgn(coef_[k]) != 0) {
        terms.push_back(Cyclo::Term{k, coef_[k]});
        coef_[k] = 0;
      }
      used_[k] = 0;
    }
    touched_.clear();
    return minimize(n_, std::move(terms));
  }

  static Cyclo minimize(std::uint32_t n, std::vector<Cyclo::Term> terms);

 private:
  void touch(std::uint32_t k) {
    if (!used_[k]) {
      used_[k] = 1;
      touched_.push_back(k);
    }
  }

  std::uint32_t n_ = 1;
  std::vector<Rational> coef_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint32_t> touched_;
  Rational tmp_;
};

namespace {

CycloWorkspace& workspace() {
  thread_local CycloWorkspace ws;
  return ws;
}

}  // namespace

// Descends to the conductor by removing one prime factor at a time.
Cyclo CycloWorkspace::minimize(std::uint32_t n, std::vector<Cyclo::Term> terms) {
  if (terms.empty()) return Cyclo();
  bool changed = true;
  while (changed && n > 1) {
    changed = false;
    for (const auto& part : prime_parts(n)) {
      const std::uint32_t p = part.p;
      if (part.q > p || p == 2) {
        // Square factor (or 2 exactly dividing n): the subfield is spanned by
        // the basis elements with exponent divisible by p.
        const bool all_divisible = std::all_of(terms.begin(), terms.end(),
                                               [p](const auto& t) { return t.exponent % p == 0; });
        if (!all_divisible) continue;
        for (auto& t : terms) t.exponent /= p;
        n /= p;
        changed = true;
        break;
      }
      // p exactly divides n: elements of Q(zeta_{n/p}) appear as complete
      // fibers {k0 + j n/p : j = 1..p-1} with one shared coefficient.
      const std::uint32_t m = n / p;
      std::map<std::uint32_t, std::vector<const Cyclo::Term*>> fibers;
      for (const auto& t : terms) fibers[t.exponent % m].push_back(&t);
      bool ok = true;
      for (const auto& [key, members] : fibers) {
        if (members.size() != p - 1) {
          ok = false;
          break;
        }
        for (const auto* t : members) {
          if (t->coeff != members.front()->coeff) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) continue;
      std::vector<Cyclo::Term> descended;
      descended.reserve(fibers.size());
      for (const auto& [key, members] : fibers) {
        // k0 is the residue class member divisible by p.
        std::uint32_t k0 = key;
        while (k0 % p != 0) k0 += m;
        descended.push_back(Cyclo::Term{k0 / p, -members.front()->coeff});
      }
      std::sort(descended.begin(), descended.end(),
                [](const auto& a, const auto& b) { return a.exponent < b.exponent; });
      terms = std::move(descended);
      n = m;
      changed = true;
      break;
    }
  }
  return Cyclo(n, std::move(terms));
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (const auto& part : prime_parts(n)) result = result / part.p * (part.p - 1);
  return result;
}

std::vector<std::uint32_t> zumbroich_basis(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  std::vector<std::uint32_t> basis;
  const auto& parts = prime_parts(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    if (std::all_of(parts.begin(), parts.end(), [k](const auto& part) { return is_good(k, part); })) {
      basis.push_back(k);
    }
  }
  return basis;
}

Cyclo::Cyclo(long long value) {
  if (value != 0) terms_.push_back(Term{0, Rational(static_cast<long>(value))});
}

Cyclo::Cyclo(const Rational& value) {
  if (sgn(value) != 0) {
    terms_.push_back(Term{0, value});
    terms_.back().coeff.canonicalize();
  }
}

Cyclo Cyclo::root_of_unity(std::uint32_t n, long long k) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  const long long nn = n;
  auto& ws = workspace();
  ws.reset(n);
  ws.add(static_cast<std::uint32_t>(((k % nn) + nn) % nn), Rational(1));
  ws.reduce();
  return ws.extract();
}

Cyclo Cyclo::from_powers(std::uint32_t n, std::span<const Rational> coeffs) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  auto& ws = workspace();
  ws.reset(n);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (sgn(coeffs[j]) != 0) ws.add(static_cast<std::uint32_t>(j % n), coeffs[j]);
  }
  ws.reduce();
  return ws.extract();
}

Cyclo Cyclo::from_integer_powers(std::uint32_t n, std::span<const long long> coeffs) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  auto& ws = workspace();
  ws.reset(n);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] != 0) ws.add(static_cast<std::uint32_t>(j % n), Rational(static_cast<long>(coeffs[j])));
  }
  ws.reduce();
  return ws.extract();
}

Cyclo Cyclo::from_basis_coeffs(std::uint32_t n, std::span<const Rational> coeffs) {
  const auto basis = zumbroich_basis(n);
  if (basis.size() != coeffs.size()) {
    throw Error(ErrorCode::InvalidArgument, "coefficient count does not match the field degree");
  }
  std::vector<Term> terms;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (sgn(coeffs[i]) != 0) terms.push_back(Term{basis[i], coeffs[i]});
  }
  return CycloWorkspace::minimize(n, std::move(terms));
}

std::vector<Rational> Cyclo::basis_coeffs() const {
  const auto basis = zumbroich_basis(order_);
  std::vector<Rational> dense(basis.size());
  std::size_t pos = 0;
  for (const auto& t : terms_) {
    while (basis[pos] != t.exponent) ++pos;
    dense[pos] = t.coeff;
  }
  return dense;
}

bool Cyclo::is_real() const {
  if (order_ <= 2) return true;
  return conj() == *this;
}

std::optional<Rational> Cyclo::as_rational() const {
  if (order_ != 1) return std::nullopt;
  if (terms_.empty()) return Rational(0);
  return terms_.front().coeff;
}

bool Cyclo::is_algebraic_integer() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.coeff.get_den() == 1; });
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> sum = 0.0;
  for (const auto& t : terms_) {
    const double angle = 2.0 * std::numbers::pi * t.exponent / order_;
    sum += t.coeff.get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

Cyclo Cyclo::galois(long long a) const {
  if (order_ <= 2) return *this;
  const long long n = order_;
  const long long aa = ((a % n) + n) % n;
  if (std::gcd(aa, n) != 1) throw Error(ErrorCode::InvalidArgument, "galois exponent not coprime to order");
  auto& ws = workspace();
  ws.reset(order_);
  for (const auto& t : terms_) {
    ws.add(static_cast<std::uint32_t>((aa * t.exponent) % n), t.coeff);
  }
  ws.reduce();
  return ws.extract();
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (order_ == 1) return Cyclo(Rational(1) / terms_.front().coeff);
  // x^{-1} = (product of the other Galois conjugates) / norm(x).
  Cyclo others(1);
  for (std::uint32_t a = 2; a < order_; ++a) {
    if (std::gcd(a, order_) == 1) others *= galois(a);
  }
  const auto norm = (*this * others).as_rational();
  if (!norm) throw Error(ErrorCode::InvalidArgument, "norm is not rational");
  return others.scale(Rational(1) / *norm);
}

Cyclo& Cyclo::scale(const Rational& q) {
  if (sgn(q) == 0) {
    terms_.clear();
    order_ = 1;
    return *this;
  }
  for (auto& t : terms_) t.coeff *= q;
  return *this;
}

Cyclo Cyclo::operator-() const {
  Cyclo result = *this;
  for (auto& t : result.terms_) t.coeff = -t.coeff;
  return result;
}

Cyclo& Cyclo::operator+=(const Cyclo& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (order_ == other.order_) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
      if (b == other.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
        merged.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->exponent < a->exponent) {
        merged.push_back(*b++);
      } else {
        Rational sum = a->coeff + b->coeff;
        if (sgn(sum) != 0) merged.push_back(Term{a->exponent, std::move(sum)});
        ++a;
        ++b;
      }
    }
    *this = CycloWorkspace::minimize(order_, std::move(merged));
    return *this;
  }
  const std::uint64_t lcm = std::lcm<std::uint64_t>(order_, other.order_);
  if (lcm > kMaxOrder) throw Error(ErrorCode::InvalidArgument, "cyclotomic lift too large");
  const auto n = static_cast<std::uint32_t>(lcm);
  auto& ws = workspace();
  ws.reset(n);
  for (const auto& t : terms_) ws.add(t.exponent * (n / order_), t.coeff);
  for (const auto& t : other.terms_) ws.add(t.exponent * (n / other.order_), t.coeff);
  ws.reduce();
  return *this = ws.extract();
}

Cyclo& Cyclo::operator-=(const Cyclo& other) { return *this += -other; }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  if (a.is_zero() || b.is_zero()) return Cyclo();
  if (b.order_ == 1) {
    Cyclo result = a;
    return result.scale(b.terms_.front().coeff);
  }
  if (a.order_ == 1) {
    Cyclo result = b;
    return result.scale(a.terms_.front().coeff);
  }
  const std::uint64_t lcm = std::lcm<std::uint64_t>(a.order_, b.order_);
  if (lcm > Cyclo::kMaxOrder) throw Error(ErrorCode::InvalidArgument, "cyclotomic lift too large");
  const auto n = static_cast<std::uint32_t>(lcm);
  const std::uint64_t fa = n / a.order_;
  const std::uint64_t fb = n / b.order_;
  auto& ws = workspace();
  ws.reset(n);
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      const auto k = static_cast<std::uint32_t>((s.exponent * fa + t.exponent * fb) % n);
      ws.add_product(k, s.coeff, t.coeff);
    }
  }
  ws.reduce();
  return ws.extract();
}

Cyclo& Cyclo::operator*=(const Cyclo& other) { return *this = *this * other; }

std::strong_ordering operator<=>(const Cyclo& a, const Cyclo& b) {
  if (a.order_ != b.order_) return a.order_ <=> b.order_;
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.exponent != t.exponent) return s.exponent <=> t.exponent;
    const int c = cmp(s.coeff, t.coeff);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::string Cyclo::to_string() const {
  if (terms_.empty()) return "0";
  if (order_ == 1) return terms_.front().coeff.get_str();
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = sgn(t.coeff) < 0;
    const Rational magnitude = abs(t.coeff);
    if (negative) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    if (magnitude != 1) out << magnitude.get_str() << '*';
    out << "E(" << order_ << ')';
    if (t.exponent != 1) out << '^' << t.exponent;
    first = false;
  }
  return out.str();
}

}  // namespace polyreal
