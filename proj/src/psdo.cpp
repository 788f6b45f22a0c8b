#include "kptau/psdo.hpp"

#include <atomic>
#include <vector>

#include "kptau/error.hpp"

namespace kptau {

PseudoDiffOp PseudoDiffOp::d(int order) { return monomial(RationalFunction::one(), order); }

PseudoDiffOp PseudoDiffOp::monomial(RationalFunction coeff, int order) {
  PseudoDiffOp p;
  if (!coeff.is_zero()) p.coeffs_[order] = std::move(coeff);
  return p;
}

int PseudoDiffOp::max_order() const { return coeffs_.empty() ? floor_ : coeffs_.begin()->first; }

int PseudoDiffOp::min_order() const { return coeffs_.empty() ? floor_ : coeffs_.rbegin()->first; }

RationalFunction PseudoDiffOp::coeff(int order) const {
  if (order < floor_)
    fail(Errc::floor_too_high, "coefficient below the truncation floor requested");
  auto it = coeffs_.find(order);
  return it == coeffs_.end() ? RationalFunction{} : it->second;
}

void PseudoDiffOp::set_coeff(int order, RationalFunction f) {
  if (f.is_zero())
    coeffs_.erase(order);
  else
    coeffs_[order] = std::move(f);
}

void PseudoDiffOp::set_floor(int floor) {
  floor_ = floor;
  if (floor_ != kExactFloor)
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
      it = (it->first < floor_) ? coeffs_.erase(it) : std::next(it);
}

PseudoDiffOp PseudoDiffOp::truncated(int floor) const {
  PseudoDiffOp out = *this;
  if (floor > out.floor_ || out.floor_ == kExactFloor) out.set_floor(floor);
  return out;
}

PseudoDiffOp PseudoDiffOp::operator-() const {
  PseudoDiffOp out = *this;
  for (auto& [o, c] : out.coeffs_) c = -c;
  return out;
}

PseudoDiffOp PseudoDiffOp::operator+(const PseudoDiffOp& other) const {
  PseudoDiffOp out;
  out.floor_ = std::max(floor_, other.floor_);
  bool finite = out.floor_ != kExactFloor;
  for (const auto& [o, c] : coeffs_)
    if (!finite || o >= out.floor_) out.coeffs_.emplace(o, c);
  for (const auto& [o, c] : other.coeffs_) {
    if (finite && o < out.floor_) continue;
    auto it = out.coeffs_.find(o);
    if (it == out.coeffs_.end()) {
      out.coeffs_.emplace(o, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.coeffs_.erase(it);
    }
  }
  return out;
}

PseudoDiffOp PseudoDiffOp::operator-(const PseudoDiffOp& other) const { return *this + (-other); }

PseudoDiffOp PseudoDiffOp::scaled(const RationalFunction& f) const {
  PseudoDiffOp out;
  out.floor_ = floor_;
  if (f.is_zero()) {
    // the zero function kills every coefficient; exactness is preserved
    return out;
  }
  for (const auto& [o, c] : coeffs_) out.coeffs_[o] = f * c;
  return out;
}

std::string PseudoDiffOp::to_string() const {
  if (coeffs_.empty()) return floor_ == kExactFloor ? "0" : "0 + O(d^" + std::to_string(floor_ - 1) + ")";
  std::string s;
  for (const auto& [o, c] : coeffs_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    if (o != 0) s += "*d^" + std::to_string(o);
  }
  if (floor_ != kExactFloor) s += " + O(d^" + std::to_string(floor_ - 1) + ")";
  return s;
}

namespace {
std::atomic<int> g_tail_depth{6};
}

int default_tail_depth() { return g_tail_depth.load(); }
void set_default_tail_depth(int k) { g_tail_depth.store(k); }

Rational generalized_binomial(int k, int i) {
  Rational c(1);
  for (int m = 0; m < i; ++m) c = c * Rational(k - m) / Rational(m + 1);
  return c;
}

PseudoDiffOp compose(const PseudoDiffOp& a, const PseudoDiffOp& b, std::optional<int> work_floor) {
  PseudoDiffOp out;
  if (a.empty() && a.is_exact()) return out;
  if (b.empty() && b.is_exact()) return out;

  // Guaranteed-exact floor of the product (see module notes): coefficients of
  // the true product at order m receive contributions from unknown a-orders
  // k < a.floor only when m <= k + b.maxorder, and symmetrically for b. The
  // working floor only truncates products that would otherwise be exact with
  // an infinite tail (negative orders on the left factor); it never shallows
  // a finite exactness bound unless the caller asked for that cap.
  int floor = PseudoDiffOp::kExactFloor;
  if (!a.is_exact()) floor = std::max(floor, a.floor() + b.max_order());
  if (!b.is_exact()) floor = std::max(floor, b.floor() + a.max_order());
  if (work_floor) floor = std::max(floor, *work_floor);
  bool infinite_tail = !a.empty() && a.min_order() < 0 && !b.empty();
  if (floor == PseudoDiffOp::kExactFloor && infinite_tail)
    floor = work_floor ? *work_floor
                       : -(default_tail_depth() + std::max(a.max_order() + b.max_order(), 0));
  out.set_floor(floor);
  if (a.empty() || b.empty()) return out;

  // A d^k o B d^l = sum_i C(k,i) A (d^i B) d^{k+l-i}: the derivatives fall on
  // the right operand's coefficients. Chains of t_1-derivatives of each B_l
  // are grown lazily and shared across the k-loop.
  std::map<int, std::vector<RationalFunction>> b_derivs;
  auto deriv_of = [&](int l, const RationalFunction& bl, int i) -> const RationalFunction& {
    auto& vec = b_derivs[l];
    if (vec.empty()) vec.push_back(bl);
    while (static_cast<int>(vec.size()) <= i) vec.push_back(vec.back().diff(1));
    return vec[static_cast<size_t>(i)];
  };

  for (const auto& [k, ak] : a.coeffs()) {
    for (const auto& [l, bl] : b.coeffs()) {
      int max_i = (k >= 0) ? k : std::numeric_limits<int>::max();
      if (floor != PseudoDiffOp::kExactFloor) max_i = std::min(max_i, k + l - floor);
      else if (k < 0)
        fail(Errc::internal, "infinite composition tail without a working floor");
      Rational binom(1);
      for (int i = 0; i <= max_i; ++i) {
        if (i > 0) binom = binom * Rational(k - i + 1) / Rational(i);
        const RationalFunction& db = deriv_of(l, bl, i);
        if (db.is_zero()) break;  // further derivatives stay zero
        int order = k + l - i;
        RationalFunction term = ak * db;
        if (binom != 1) term = term * binom;
        if (!term.is_zero()) out.set_coeff(order, out.coeff(order) + term);
      }
    }
  }
  return out;
}

PseudoDiffOp psdo_power(const PseudoDiffOp& a, int j, std::optional<int> work_floor) {
  if (j < 0) fail(Errc::invalid_input, "psdo_power wants a non-negative exponent");
  PseudoDiffOp out = PseudoDiffOp::identity();
  for (int i = 0; i < j; ++i) out = compose(out, a, work_floor);
  return out;
}

PseudoDiffOp adjoint(const PseudoDiffOp& a, std::optional<int> work_floor) {
  PseudoDiffOp out;
  int floor = a.floor();
  bool infinite_tail = !a.empty() && a.min_order() < 0;
  if (a.is_exact() && infinite_tail)
    floor = work_floor ? *work_floor : -(default_tail_depth() + std::max(a.max_order(), 0));
  else if (work_floor)
    floor = std::max(floor, *work_floor);
  out.set_floor(floor);

  for (const auto& [j, pj] : a.coeffs()) {
    // (-d)^j o P_j = (-1)^j sum_i binom(j,i) P_j^{(i)} d^{j-i}
    int max_i = (j >= 0) ? j : std::numeric_limits<int>::max();
    if (floor != PseudoDiffOp::kExactFloor) max_i = std::min(max_i, j - floor);
    RationalFunction deriv = pj;
    Rational binom(1);
    bool neg = (j % 2 != 0);
    for (int i = 0; i <= max_i; ++i) {
      if (i > 0) {
        deriv = deriv.diff(1);
        binom = binom * Rational(j - i + 1) / Rational(i);
      }
      if (deriv.is_zero()) break;
      RationalFunction term = deriv * binom;
      if (neg) term = -term;
      int order = j - i;
      if (!term.is_zero()) out.set_coeff(order, out.coeff(order) + term);
    }
  }
  return out;
}

PseudoDiffOp project(const PseudoDiffOp& a, OpPart part) {
  PseudoDiffOp out;
  if (part == OpPart::plus) {
    // the differential part is fully known as soon as the floor is <= 0
    out.set_floor(a.floor() <= 0 ? PseudoDiffOp::kExactFloor : a.floor());
    for (const auto& [o, c] : a.coeffs())
      if (o >= 0) out.set_coeff(o, c);
  } else {
    out.set_floor(a.floor());
    for (const auto& [o, c] : a.coeffs())
      if (o < 0) out.set_coeff(o, c);
  }
  return out;
}

RationalFunction psdo_residue(const PseudoDiffOp& a) {
  if (!a.is_exact() && a.floor() > -1)
    fail(Errc::floor_too_high, "residue needs the d^-1 coefficient, floor is too high");
  return a.coeff(-1);
}

PseudoDiffOp psdo_inverse(const PseudoDiffOp& a, int target_floor) {
  if (a.empty()) fail(Errc::not_monic, "cannot invert the zero operator");
  int n = a.max_order();
  if (!a.coeff(n).is_one()) fail(Errc::not_monic, "inverse wants a monic operator");

  PseudoDiffOp x = PseudoDiffOp::d(-n);
  x.set_floor(target_floor);
  // residual r = a o x - 1; the topmost defect is killed by a correction at
  // order (top - n), which only disturbs lower orders.
  PseudoDiffOp r = compose(a, x, target_floor) - PseudoDiffOp::identity();
  while (true) {
    int top = PseudoDiffOp::kExactFloor;
    for (const auto& [o, c] : r.coeffs()) {
      top = o;  // coeffs are kept in descending order
      break;
    }
    if (top == PseudoDiffOp::kExactFloor) break;
    int fix_order = top - n;
    if (fix_order < target_floor) break;
    PseudoDiffOp delta = PseudoDiffOp::monomial(-r.coeff(top), fix_order);
    x = x + delta;
    r = r + compose(a, delta, target_floor);
  }
  x.set_floor(target_floor);
  return x;
}

PseudoDiffOp psdo_nth_root(const PseudoDiffOp& a, int n, int target_floor) {
  if (n <= 0) fail(Errc::invalid_input, "nth_root wants n >= 1");
  if (a.empty() || a.max_order() != n || !a.coeff(n).is_one())
    fail(Errc::not_normalizable, "nth_root wants a monic operator of order n");

  PseudoDiffOp root = PseudoDiffOp::d(1);
  root.set_floor(target_floor);
  while (true) {
    PseudoDiffOp err = a - psdo_power(root, n, target_floor);
    int top = PseudoDiffOp::kExactFloor;
    for (const auto& [o, c] : err.coeffs()) {
      top = o;
      break;
    }
    if (top == PseudoDiffOp::kExactFloor) break;
    int fix_order = top - n + 1;
    if (fix_order < target_floor) break;
    // (root + delta)^n = root^n + n*delta*d^{n-1} + lower corrections
    PseudoDiffOp delta = PseudoDiffOp::monomial(err.coeff(top) * Rational(1, n), fix_order);
    root = root + delta;
  }
  root.set_floor(target_floor);
  return root;
}

PseudoDiffOp psdo_diff_t(const PseudoDiffOp& a, int j) {
  PseudoDiffOp out;
  out.set_floor(a.floor());
  for (const auto& [o, c] : a.coeffs()) out.set_coeff(o, c.diff(j));
  return out;
}

RationalFunction psdo_apply(const PseudoDiffOp& a, const RationalFunction& f) {
  if (!a.empty() && a.min_order() < 0)
    fail(Errc::invalid_input, "psdo_apply wants a differential operator");
  RationalFunction out;
  if (a.empty()) return out;
  std::vector<RationalFunction> derivs{f};
  for (int i = 1; i <= a.max_order(); ++i) derivs.push_back(derivs.back().diff(1));
  for (const auto& [o, c] : a.coeffs()) out += c * derivs[static_cast<size_t>(o)];
  return out;
}

bool zero_to_floor(const PseudoDiffOp& a, int floor) {
  if (!a.is_exact() && a.floor() > floor)
    fail(Errc::floor_too_high, "operator not exact down to the requested floor");
  for (const auto& [o, c] : a.coeffs())
    if (o >= floor && !c.is_zero()) return false;
  return true;
}

bool equal_to_floor(const PseudoDiffOp& a, const PseudoDiffOp& b, int floor) {
  return zero_to_floor(a - b, floor);
}

}  // namespace kptau
