#include "hopf/polymap.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace hopf {

namespace {

std::vector<Complex> powers(Complex x, int n) {
  std::vector<Complex> out(static_cast<size_t>(std::max(n, 0)) + 1);
  out[0] = 1.0;
  for (int k = 1; k <= n; ++k) out[k] = out[k - 1] * x;
  return out;
}

// Component-wise polynomial powers with memoization; index k holds base^k.
class PowerCache {
 public:
  explicit PowerCache(Polynomial base) : cache_{Polynomial::constant(1.0), std::move(base)} {}
  const Polynomial& get(int k) {
    while (static_cast<int>(cache_.size()) <= k) cache_.push_back(cache_.back() * cache_[1]);
    return cache_[k];
  }

 private:
  std::vector<Polynomial> cache_;
};

Polynomial substitute(const Polynomial& g, PowerCache& zp, PowerCache& wp) {
  Polynomial out;
  for (const auto& [e, c] : g.terms()) out = out + (zp.get(e.p) * wp.get(e.q)).scaled(c);
  return out;
}

int nominal_degree(const Polynomial& g, int dz, int dw) {
  int d = -1;
  for (const auto& [e, c] : g.terms()) d = std::max(d, e.p * std::max(dz, 0) + e.q * std::max(dw, 0));
  return d;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::NotInvertibleShape: return "NotInvertibleShape";
    case ErrorCode::NotWehlerForm: return "NotWehlerForm";
    case ErrorCode::NotContraction: return "NotContraction";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotDeckPower: return "NotDeckPower";
    case ErrorCode::NoSuchStructure: return "NoSuchStructure";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::NumericallySingular: return "NumericallySingular";
    case ErrorCode::NotOddSquare: return "NotOddSquare";
    case ErrorCode::NoAntiholomorphic: return "NoAntiholomorphic";
    case ErrorCode::NotPositiveDiagonal: return "NotPositiveDiagonal";
    case ErrorCode::NotRealCoefficients: return "NotRealCoefficients";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::NotRealZeta: return "NotRealZeta";
    case ErrorCode::NotQuaternionicShape: return "NotQuaternionicShape";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(Terms terms) : terms_(std::move(terms)) { prune(); }

Polynomial Polynomial::monomial(Exponent e, Complex c) {
  if (e.p < 0 || e.q < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  return Polynomial(Terms{{e, c}});
}

void Polynomial::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (!std::isfinite(it->second.real()) || !std::isfinite(it->second.imag()))
      throw Error(ErrorCode::InvalidArgument, "non-finite coefficient");
    if (std::abs(it->second) < kDedupEpsilon)
      it = terms_.erase(it);
    else
      ++it;
  }
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

Complex Polynomial::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Complex{} : it->second;
}

Complex Polynomial::evaluate(Complex z, Complex w) const {
  int pz = 0, pw = 0;
  for (const auto& [e, c] : terms_) {
    pz = std::max(pz, e.p);
    pw = std::max(pw, e.q);
  }
  const auto zs = powers(z, pz);
  const auto ws = powers(w, pw);
  Complex acc{};
  for (const auto& [e, c] : terms_) acc += c * zs[e.p] * ws[e.q];
  return acc;
}

Polynomial Polynomial::conj_coefficients() const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e, std::conj(c));
  return Polynomial(std::move(t));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Terms t = terms_;
  for (const auto& [e, c] : o.terms_) t[e] += c;
  return Polynomial(std::move(t));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Terms t;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) t[{e1.p + e2.p, e1.q + e2.q}] += c1 * c2;
  return Polynomial(std::move(t));
}

Polynomial Polynomial::scaled(Complex s) const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e, s * c);
  return Polynomial(std::move(t));
}

// ------------------------------------------------------------------- PolyMap

PolyMap PolyMap::identity() { return diagonal(1.0, 1.0); }

PolyMap PolyMap::conjugation() { return diagonal(1.0, 1.0, true); }

PolyMap PolyMap::swap_conjugation() {
  return PolyMap(true, Polynomial::monomial({0, 1}, 1.0), Polynomial::monomial({1, 0}, 1.0));
}

PolyMap PolyMap::quaternionic() {
  return PolyMap(true, Polynomial::monomial({0, 1}, -1.0), Polynomial::monomial({1, 0}, 1.0));
}

PolyMap PolyMap::linear(const Eigen::Matrix2cd& m, bool anti) {
  Polynomial p({{{1, 0}, m(0, 0)}, {{0, 1}, m(0, 1)}});
  Polynomial q({{{1, 0}, m(1, 0)}, {{0, 1}, m(1, 1)}});
  return PolyMap(anti, std::move(p), std::move(q));
}

PolyMap PolyMap::diagonal(Complex a, Complex d, bool anti) {
  return PolyMap(anti, Polynomial::monomial({1, 0}, a), Polynomial::monomial({0, 1}, d));
}

PolyMap PolyMap::triangular(Complex a, Complex b, int r, Complex d, bool anti) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "triangular exponent must be >= 1");
  Polynomial p = Polynomial::monomial({1, 0}, a) + Polynomial::monomial({0, r}, b);
  return PolyMap(anti, std::move(p), Polynomial::monomial({0, 1}, d));
}

int PolyMap::degree() const { return std::max(p_.degree(), q_.degree()); }

bool PolyMap::is_linear() const {
  auto lin = [](const Polynomial& poly) {
    return std::all_of(poly.terms().begin(), poly.terms().end(),
                       [](const auto& t) { return t.first.degree() == 1; });
  };
  return lin(p_) && lin(q_);
}

Eigen::Matrix2cd PolyMap::linear_part() const {
  Eigen::Matrix2cd m;
  m << p_.coeff({1, 0}), p_.coeff({0, 1}), q_.coeff({1, 0}), q_.coeff({0, 1});
  return m;
}

Point PolyMap::evaluate(Point z) const {
  if (z.z == Complex{} && z.w == Complex{})
    throw Error(ErrorCode::DomainError, "evaluation at the origin");
  const Point in = anti_ ? conj(z) : z;
  const Point out{p_.evaluate(in.z, in.w), q_.evaluate(in.z, in.w)};
  if (automorphism_ && norm(out) <= std::numeric_limits<double>::min())
    throw Error(ErrorCode::DomainError, "automorphism of W sent a point to 0");
  return out;
}

// ---------------------------------------------------------------- operations

PolyMap compose(const PolyMap& g, const PolyMap& h, int degree_cap) {
  // An anti-holomorphic outer map sees conj(h(Z)); conjugating h's
  // coefficients turns that into a polynomial in Z or conj(Z) again.
  Polynomial hp = g.anti() ? h.p().conj_coefficients() : h.p();
  Polynomial hq = g.anti() ? h.q().conj_coefficients() : h.q();

  const int nominal = std::max(nominal_degree(g.p(), hp.degree(), hq.degree()),
                               nominal_degree(g.q(), hp.degree(), hq.degree()));
  if (nominal > 4 * degree_cap)
    throw Error(ErrorCode::DegreeOverflow,
                "composed degree " + std::to_string(nominal) + " exceeds cap " +
                    std::to_string(degree_cap));

  PowerCache zp(hp), wp(hq);
  PolyMap out(g.anti() != h.anti(), substitute(g.p(), zp, wp), substitute(g.q(), zp, wp));
  if (out.degree() > degree_cap)
    throw Error(ErrorCode::DegreeOverflow,
                "composed degree " + std::to_string(out.degree()) + " exceeds cap " +
                    std::to_string(degree_cap));
  out.mark_automorphism(g.marked_automorphism() && h.marked_automorphism());
  return out;
}

PolyMap invert(const PolyMap& m) {
  if (m.is_linear()) {
    const Eigen::Matrix2cd a = m.linear_part();
    const Complex det = a.determinant();
    if (std::abs(det) < 1e-300) throw Error(ErrorCode::NotInvertibleShape, "singular linear map");
    Eigen::Matrix2cd inv;
    inv << a(1, 1), -a(0, 1), -a(1, 0), a(0, 0);
    inv /= det;
    // Y = A conj(Z)  =>  Z = conj(A^-1) conj(Y).
    return PolyMap::linear(m.anti() ? Eigen::Matrix2cd(inv.conjugate()) : inv, m.anti())
        .mark_automorphism(m.marked_automorphism());
  }

  // Triangular shape (a z + b w^r, d w) with r >= 2.
  const auto& pt = m.p().terms();
  const auto& qt = m.q().terms();
  const bool q_ok = qt.size() == 1 && qt.begin()->first == Exponent{0, 1};
  int r = 0;
  bool p_ok = !pt.empty() && pt.size() <= 2 && m.p().coeff({1, 0}) != Complex{};
  for (const auto& [e, c] : pt) {
    if (e == Exponent{1, 0}) continue;
    if (e.p == 0 && e.q >= 2)
      r = e.q;
    else
      p_ok = false;
  }
  if (!q_ok || !p_ok) throw Error(ErrorCode::NotInvertibleShape, "unsupported shape " + to_string(m));

  const Complex a = m.p().coeff({1, 0});
  const Complex b = r > 0 ? m.p().coeff({0, r}) : Complex{};
  const Complex d = m.q().coeff({0, 1});
  const Complex ia = 1.0 / a;
  const Complex ib = -b / (a * std::pow(d, r));
  const Complex id = 1.0 / d;
  PolyMap inv = m.anti() ? PolyMap::triangular(std::conj(ia), std::conj(ib), r, std::conj(id), true)
                         : PolyMap::triangular(ia, ib, r, id, false);
  return inv.mark_automorphism(m.marked_automorphism());
}

PolyMap power(const PolyMap& f, int n, int degree_cap) {
  if (n == 0) return PolyMap::identity().mark_automorphism(f.marked_automorphism());
  const PolyMap base = n > 0 ? f : invert(f);
  PolyMap acc = base;
  for (int k = 1; k < std::abs(n); ++k) acc = compose(base, acc, degree_cap);
  return acc;
}

double max_coefficient_difference(const PolyMap& a, const PolyMap& b) {
  if (a.anti() != b.anti()) return std::numeric_limits<double>::infinity();
  auto diff = [](const Polynomial& x, const Polynomial& y) {
    double worst = 0.0;
    for (const auto& [e, c] : x.terms()) worst = std::max(worst, std::abs(c - y.coeff(e)));
    for (const auto& [e, c] : y.terms()) worst = std::max(worst, std::abs(c - x.coeff(e)));
    return worst;
  };
  return std::max(diff(a.p(), b.p()), diff(a.q(), b.q()));
}

bool maps_equal(const PolyMap& a, const PolyMap& b, double tol) {
  return max_coefficient_difference(a, b) <= tol;
}

bool maps_w_to_w(const PolyMap& m, std::span<const Point> samples) {
  for (const Point& s : samples) {
    if (norm(s) == 0.0) continue;
    if (norm(m.evaluate(s)) <= std::numeric_limits<double>::min()) return false;
  }
  return true;
}

std::string to_string(const PolyMap& m) {
  auto poly = [&](const Polynomial& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
      const char* z = m.anti() ? "zb" : "z";
      const char* w = m.anti() ? "wb" : "w";
      if (e.p > 0) os << "*" << z << (e.p > 1 ? "^" + std::to_string(e.p) : "");
      if (e.q > 0) os << "*" << w << (e.q > 1 ? "^" + std::to_string(e.q) : "");
    }
    if (first) os << "0";
    return os.str();
  };
  return "(" + poly(m.p()) + ", " + poly(m.q()) + ")";
}

}  // namespace hopf
