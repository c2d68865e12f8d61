#include "unfold/sharkovsky.hpp"

namespace unfold {

SharkValue SharkValue::of(std::uint64_t v) {
  if (v < 1) throw std::invalid_argument("Sharkovsky value must be >= 1");
  return SharkValue{false, v};
}

bool operator==(const SharkValue& a, const SharkValue& b) {
  return a.two_inf == b.two_inf && (a.two_inf || a.n == b.n);
}

namespace {

// n = 2^a * b with b odd.
struct Decomp {
  std::uint64_t a;
  std::uint64_t b;
};

Decomp decompose(std::uint64_t n) {
  Decomp d{0, n};
  while (d.b % 2 == 0) {
    d.b /= 2;
    ++d.a;
  }
  return d;
}

}  // namespace

bool sharkovsky_ge(const SharkValue& a, const SharkValue& b) {
  if (a == b) return true;
  if (a.two_inf) {
    // 2^inf forces exactly the powers of two.
    return !b.two_inf && decompose(b.n).b == 1;
  }
  if (b.two_inf) {
    // Only non-powers-of-two force 2^inf.
    return decompose(a.n).b > 1;
  }
  const Decomp da = decompose(a.n);
  const Decomp db = decompose(b.n);
  const bool pa = da.b == 1;  // power of two
  const bool pb = db.b == 1;
  if (pa && pb) return da.a > db.a;  // ... > 8 > 4 > 2 > 1
  if (pa != pb) return pb;           // non-powers force all powers of two
  if (da.a != db.a) return da.a < db.a;
  return da.b < db.b;
}

MSpaceMark MSpaceMark::finite(std::uint64_t v) {
  if (v < 1) throw std::invalid_argument("finite mark must be >= 1");
  return MSpaceMark{Kind::Finite, v};
}

bool operator==(const MSpaceMark& a, const MSpaceMark& b) {
  return a.kind == b.kind && (a.kind != MSpaceMark::Kind::Finite || a.n == b.n);
}

MSpaceHull make_hull(MSpaceMarker lo, MSpaceMarker hi) {
  if (lo.t > hi.t) throw std::invalid_argument("hull endpoints out of order");
  return MSpaceHull{std::move(lo), std::move(hi)};
}

namespace {

SharkValue to_shark(const MSpaceMark& m) {
  if (m.kind == MSpaceMark::Kind::TwoInf) return SharkValue::inf();
  return SharkValue::of(m.n);
}

}  // namespace

bool hull_contains(const MSpaceHull& h, const MSpaceMarker& x) {
  if (x.mark.kind == MSpaceMark::Kind::Zero) return false;
  if (h.lo.t < x.t && x.t < h.hi.t) return true;
  const auto at_endpoint = [&](const MSpaceMarker& end) {
    if (x.t != end.t) return false;
    if (end.mark.kind == MSpaceMark::Kind::Zero) return false;
    return sharkovsky_ge(to_shark(end.mark), to_shark(x.mark));
  };
  return at_endpoint(h.lo) || at_endpoint(h.hi);
}

}  // namespace unfold
