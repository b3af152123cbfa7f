#include "qmasd/frobenius.hpp"

#include <optional>
#include <string>

#include "qmasd/arith.hpp"
#include "qmasd/error.hpp"
#include "qmasd/golden.hpp"
#include "qmasd/padic.hpp"

namespace qmasd {

FiniteField::FiniteField(std::uint64_t p, unsigned degree, std::uint64_t r) : p_(p), degree_(degree) {
  require_good_prime(p);
  if (degree != 1 && degree != 2) throw Error(ErrorCode::kInvalidArgument, "field degree must be 1 or 2");
  if (p > 65521) throw Error(ErrorCode::kInvalidArgument, "naive point counting is limited to small p");
  q_ = degree == 1 ? p : p * p;
  if (degree == 2) {
    if (r == 0) {
      for (r = 2; legendre(static_cast<std::int64_t>(r), p) != -1; ++r) {
      }
    } else if (legendre(static_cast<std::int64_t>(r % p), p) != -1) {
      throw Error(ErrorCode::kInvalidArgument, std::to_string(r) + " is not a nonresidue mod " + std::to_string(p));
    }
    r_ = r % p;
  }
  chi_.assign(q_, -1);
  chi_[0] = 0;
  for (std::uint64_t i = 1; i < q_; ++i) {
    const FqElem z = element(i);
    chi_[index(mul(z, z))] = 1;
  }
}

FqElem FiniteField::from_int(std::int64_t a) const {
  return {static_cast<std::uint32_t>(from_signed(a, p_)), 0};
}

FqElem FiniteField::from_rat(const Rat& a) const {
  if (mpz_divisible_ui_p(a.get_den().get_mpz_t(), p_)) {
    throw Error(ErrorCode::kNonIntegralAtP, to_string(a) + " has p in its denominator");
  }
  const std::uint64_t num = from_integer(a.get_num(), p_);
  const std::uint64_t den = from_integer(a.get_den(), p_);
  return {static_cast<std::uint32_t>(mulmod(num, invmod(den, p_), p_)), 0};
}

FqElem FiniteField::element(std::uint64_t index) const {
  return {static_cast<std::uint32_t>(index % p_), static_cast<std::uint32_t>(index / p_)};
}

FqElem FiniteField::add(const FqElem& a, const FqElem& b) const {
  return {static_cast<std::uint32_t>(addmod(a.x, b.x, p_)), static_cast<std::uint32_t>(addmod(a.y, b.y, p_))};
}

FqElem FiniteField::sub(const FqElem& a, const FqElem& b) const {
  return {static_cast<std::uint32_t>(submod(a.x, b.x, p_)), static_cast<std::uint32_t>(submod(a.y, b.y, p_))};
}

FqElem FiniteField::mul(const FqElem& a, const FqElem& b) const {
  const std::uint64_t x = (std::uint64_t{a.x} * b.x + std::uint64_t{a.y} * b.y % p_ * r_) % p_;
  const std::uint64_t y = (std::uint64_t{a.x} * b.y + std::uint64_t{a.y} * b.x) % p_;
  return {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)};
}

FqElem FiniteField::pow(FqElem a, std::uint64_t e) const {
  FqElem r{1, 0};
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FqElem FiniteField::inv(const FqElem& a) const {
  if (is_zero(a)) throw Error(ErrorCode::kDivisionByZero, "inverse of 0 in F_q");
  // (x + y w)^-1 = (x - y w) / (x^2 - r y^2)
  const std::uint64_t norm = submod(std::uint64_t{a.x} * a.x % p_, std::uint64_t{a.y} * a.y % p_ * r_ % p_, p_);
  const std::uint64_t ni = invmod(norm, p_);
  return {static_cast<std::uint32_t>(a.x * ni % p_), static_cast<std::uint32_t>(submod(0, a.y, p_) * ni % p_)};
}

std::int64_t count_points(const FiniteField& field, const FqElem& a2, const FqElem& a4) {
  std::int64_t count = 1;  // point at infinity
  for (std::uint64_t i = 0; i < field.q(); ++i) {
    const FqElem x = field.element(i);
    const FqElem v = field.mul(x, field.add(field.mul(x, field.add(x, a2)), a4));
    count += 1 + field.chi(v);
  }
  return count;
}

std::string reduction_name(ReductionType t) {
  switch (t) {
    case ReductionType::kGood: return "good";
    case ReductionType::kSplitMultiplicative: return "split";
    case ReductionType::kNonsplitMultiplicative: return "nonsplit";
    case ReductionType::kAdditive: return "additive";
  }
  return "?";
}

ReductionType reduction_type(const FiniteField& field, const FqElem& a, const FqElem& b) {
  const FqElem disc = field.sub(field.mul(a, a), field.mul(field.from_int(4), b));
  if (!field.is_zero(b) && !field.is_zero(disc)) return ReductionType::kGood;
  // Node at x0 with tangent slopes +-sqrt(c): X^3 + aX^2 + bX = (X - x0)^2 (X - x0 + c).
  FqElem c;
  if (field.is_zero(b)) {
    if (field.is_zero(a)) return ReductionType::kAdditive;
    c = a;
  } else {
    c = field.mul(a, field.inv(field.from_int(-2)));
  }
  return field.chi(c) == 1 ? ReductionType::kSplitMultiplicative : ReductionType::kNonsplitMultiplicative;
}

std::pair<FqElem, FqElem> surface_coefficients(const FiniteField& field, const FqElem& B) {
  const FqElem B2 = field.mul(B, B);
  FqElem a = field.from_rat(Rat(2, 27));
  a = field.sub(a, field.mul(field.from_rat(Rat(5, 27)), B));
  a = field.sub(a, field.mul(field.from_rat(Rat(1, 108)), B2));
  const FqElem one_b = field.add(field.from_int(1), B);
  const FqElem b = field.mul(field.from_rat(Rat(1, 729)), field.mul(one_b, field.mul(one_b, one_b)));
  return {a, b};
}

namespace {

void require_cover(int d) {
  if (d != 1 && d != 2 && d != 3 && d != 6) throw Error(ErrorCode::kInvalidArgument, "cover degree must divide 6");
}

FiberCount fiber_from_coefficients(const FiniteField& field, const FqElem& a, const FqElem& b) {
  FiberCount f;
  f.type = reduction_type(field, a, b);
  f.singular = f.type != ReductionType::kGood;
  f.count = count_points(field, a, b);
  f.trace = static_cast<std::int64_t>(field.q()) + 1 - f.count;
  return f;
}

}  // namespace

FiberCount fiber_at(const FiniteField& field, const FqElem& t, int d) {
  require_cover(d);
  const FqElem B = field.pow(t, static_cast<std::uint64_t>(d));
  const auto [a, b] = surface_coefficients(field, B);
  FiberCount f = fiber_from_coefficients(field, a, b);
  f.t = t;
  f.B = B;
  return f;
}

FiberCount fiber_at_infinity(const FiniteField& field) {
  return fiber_from_coefficients(field, field.from_rat(Rat(-1, 108)), FqElem{});
}

namespace {

// Fibers depend only on B = t^d; cache them by the index of B.
class FiberCache {
 public:
  explicit FiberCache(const FiniteField& field) : field_(field), cache_(field.q()) {}

  const FiberCount& at_B(const FqElem& B) {
    auto& slot = cache_[field_.index(B)];
    if (!slot) {
      const auto [a, b] = surface_coefficients(field_, B);
      slot = fiber_from_coefficients(field_, a, b);
      slot->B = B;
    }
    return *slot;
  }

 private:
  const FiniteField& field_;
  std::vector<std::optional<FiberCount>> cache_;
};

CoverData cover_data(const FiniteField& field, FiberCache& cache, int d) {
  CoverData c;
  c.d = d;
  for (std::uint64_t i = 1; i < field.q(); ++i) {
    const FiberCount& f = cache.at_B(field.pow(field.element(i), static_cast<std::uint64_t>(d)));
    switch (f.type) {
      case ReductionType::kGood: c.s_sum += f.trace; break;
      case ReductionType::kSplitMultiplicative: ++c.split; break;
      case ReductionType::kNonsplitMultiplicative: ++c.nonsplit; break;
      case ReductionType::kAdditive: ++c.additive; break;
    }
  }
  c.at_zero = cache.at_B(FqElem{}).type;
  c.at_infinity = fiber_at_infinity(field).type;
  return c;
}

}  // namespace

std::int64_t s_sum(const FiniteField& field, int d) {
  require_cover(d);
  FiberCache cache(field);
  return cover_data(field, cache, d).s_sum;
}

CorrectionPolicy CorrectionPolicy::lefschetz() { return CorrectionPolicy{}; }

int CorrectionPolicy::contribution(ReductionType t) const {
  switch (t) {
    case ReductionType::kGood: return 0;
    case ReductionType::kSplitMultiplicative: return split;
    case ReductionType::kNonsplitMultiplicative: return nonsplit;
    case ReductionType::kAdditive: return additive;
  }
  return 0;
}

nlohmann::json CorrectionPolicy::to_json() const {
  return {{"id", id},
          {"rules", {{"split", split}, {"nonsplit", nonsplit}, {"additive", additive}}},
          {"cusps", cusps_by_type ? "by-type" : "zero"},
          {"calibrated", calibrated}};
}

CorrectionPolicy CorrectionPolicy::from_json(const nlohmann::json& j) {
  CorrectionPolicy p;
  p.id = j.at("id").get<std::string>();
  const auto& rules = j.at("rules");
  p.split = rules.at("split").get<int>();
  p.nonsplit = rules.at("nonsplit").get<int>();
  p.additive = rules.at("additive").get<int>();
  const std::string cusps = j.at("cusps").get<std::string>();
  if (cusps != "by-type" && cusps != "zero") throw Error(ErrorCode::kInvalidArgument, "cusps must be by-type or zero");
  p.cusps_by_type = cusps == "by-type";
  p.calibrated = j.value("calibrated", false);
  return p;
}

std::int64_t CoverData::total(const CorrectionPolicy& policy) const {
  std::int64_t t = s_sum + split * policy.split + nonsplit * policy.nonsplit + additive * policy.additive;
  if (policy.cusps_by_type) t += policy.contribution(at_zero) + policy.contribution(at_infinity);
  return t;
}

std::int64_t TraceData::new_trace(const CorrectionPolicy& policy) const {
  std::int64_t s = 0;
  for (const auto& c : covers) {
    const int sign = (c.d == 6 || c.d == 1) ? 1 : -1;
    s += sign * c.total(policy);
  }
  return -s;
}

TraceData trace_data(std::uint64_t p, unsigned r) {
  const FiniteField field(p, r);
  FiberCache cache(field);
  TraceData t;
  t.p = p;
  t.r = r;
  for (int d : {1, 2, 3, 6}) t.covers.push_back(cover_data(field, cache, d));
  return t;
}

std::int64_t new_trace(std::uint64_t p, unsigned r, const CorrectionPolicy& policy) {
  return trace_data(p, r).new_trace(policy);
}

namespace {

CharPoly4 charpoly_from_traces(std::uint64_t p, std::int64_t s1, std::int64_t s2) {
  const std::int64_t twice_c2 = s1 * s1 - s2;
  if (twice_c2 % 2 != 0) {
    throw Error(ErrorCode::kWeilBoundViolation, "odd s1^2 - s2 at p = " + std::to_string(p));
  }
  return CharPoly4::from_c1_c2(p, Integer(static_cast<long>(-s1)), Integer(static_cast<long>(twice_c2 / 2)));
}

}  // namespace

CharPoly4 assemble_charpoly(std::uint64_t p, const CorrectionPolicy& policy) {
  const CharPoly4 h = charpoly_from_traces(p, new_trace(p, 1, policy), new_trace(p, 2, policy));
  if (!h.weil_bounds_hold()) {
    throw Error(ErrorCode::kWeilBoundViolation, h.to_string() + " breaks the Weil bounds");
  }
  return h;
}

PolicyCalibration calibrate_policy() {
  struct PrimeData {
    const GoldenRow* row;
    TraceData t1, t2;
  };
  std::vector<PrimeData> data;
  for (const auto& row : golden_table()) data.push_back({&row, trace_data(row.p, 1), trace_data(row.p, 2)});

  const auto outcome = [&](const CorrectionPolicy& pol) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& d : data) out.emplace_back(d.t1.new_trace(pol), d.t2.new_trace(pol));
    return out;
  };
  const auto matches = [&](const CorrectionPolicy& pol) {
    for (const auto& d : data) {
      const CharPoly4 h = charpoly_from_traces(d.row->p, d.t1.new_trace(pol), d.t2.new_trace(pol));
      if (h.c1 != d.row->c1 || h.c2 != d.row->c2) return false;
    }
    return true;
  };

  PolicyCalibration cal;
  for (int s = -1; s <= 1; ++s) {
    for (int n = -1; n <= 1; ++n) {
      for (int a = -1; a <= 1; ++a) {
        for (bool cusps : {true, false}) {
          CorrectionPolicy pol;
          pol.split = s;
          pol.nonsplit = n;
          pol.additive = a;
          pol.cusps_by_type = cusps;
          const bool is_default = s == 1 && n == -1 && a == 0 && cusps;
          pol.id = is_default ? "lefschetz-v1"
                              : "candidate(" + std::to_string(s) + "," + std::to_string(n) + "," +
                                    std::to_string(a) + "," + (cusps ? "by-type" : "zero") + ")";
          pol.calibrated = false;
          if (matches(pol)) cal.consistent.push_back(pol);
        }
      }
    }
  }
  for (auto& pol : cal.consistent) pol.calibrated = true;

  const CorrectionPolicy base = CorrectionPolicy::lefschetz();
  const auto reference = outcome(base);
  const auto differs = [&](CorrectionPolicy pol) { return outcome(pol) != reference; };
  CorrectionPolicy v = base;
  v.split = 0;
  if (differs(v)) cal.observable.push_back("split");
  v = base;
  v.nonsplit = 0;
  if (differs(v)) cal.observable.push_back("nonsplit");
  v = base;
  v.additive = 1;
  if (differs(v)) cal.observable.push_back("additive");
  v = base;
  v.cusps_by_type = false;
  if (differs(v)) cal.observable.push_back("cusps");
  return cal;
}

}  // namespace qmasd
