#include "chiro/enumerate.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <string>

namespace chiro {

namespace {

struct Mask {
  std::array<std::uint64_t, 4> w{};

  void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U; }
  bool any() const { return (w[0] | w[1] | w[2] | w[3]) != 0; }

  Mask& operator|=(const Mask& o) {
    for (std::size_t k = 0; k < 4; ++k) w[k] |= o.w[k];
    return *this;
  }
  Mask& operator&=(const Mask& o) {
    for (std::size_t k = 0; k < 4; ++k) w[k] &= o.w[k];
    return *this;
  }
  Mask operator~() const {
    Mask m;
    for (std::size_t k = 0; k < 4; ++k) m.w[k] = ~w[k];
    return m;
  }
  friend Mask operator&(Mask a, const Mask& b) { return a &= b; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < 4; ++k)
      for (std::uint64_t x = w[k]; x; x &= x - 1) f(static_cast<int>(k * 64) + std::countr_zero(x));
  }
};

// Segments plus their pairwise crossing masks.
struct SegmentSystem {
  std::vector<Segment> segs;
  std::vector<Mask> cross;
  std::vector<Mask> from;  // indices >= i
};

template <class CrossFn>
SegmentSystem make_system(std::vector<Segment> segs, CrossFn&& crosses) {
  SegmentSystem sys;
  const int s = static_cast<int>(segs.size());
  sys.cross.assign(segs.size(), Mask{});
  sys.from.assign(segs.size(), Mask{});
  for (int i = 0; i < s; ++i) {
    for (int j = i; j < s; ++j) sys.from[static_cast<std::size_t>(i)].set(j);
    for (int j = i + 1; j < s; ++j) {
      const Segment a = segs[static_cast<std::size_t>(i)], b = segs[static_cast<std::size_t>(j)];
      if (a.a == b.a || a.a == b.b || a.b == b.a || a.b == b.b) continue;
      if (crosses(a, b)) {
        sys.cross[static_cast<std::size_t>(i)].set(j);
        sys.cross[static_cast<std::size_t>(j)].set(i);
      }
    }
  }
  sys.segs = std::move(segs);
  return sys;
}

class Backtracker {
 public:
  Backtracker(const SegmentSystem& sys, const EdgeVisitor& visit) : sys_(sys), visit_(visit) {}

  void run() { step(0, Mask{}, Mask{}); }

 private:
  // blocked: segments crossing a chosen one. pending: skipped segments not
  // yet crossed by a chosen one; each needs a later unblocked partner.
  void step(int i, Mask blocked, Mask pending) {
    const int s = static_cast<int>(sys_.segs.size());
    while (i < s && blocked.test(i)) ++i;
    if (i == s) {
      if (!pending.any()) visit_(current_);
      return;
    }
    const std::size_t ui = static_cast<std::size_t>(i);

    bool viable = true;
    const Mask open = ~blocked & sys_.from[ui];
    pending.for_each([&](int e) {
      if (viable && !(sys_.cross[static_cast<std::size_t>(e)] & open).any()) viable = false;
    });
    if (!viable) return;

    current_.push_back(sys_.segs[ui]);
    Mask b2 = blocked;
    b2 |= sys_.cross[ui];
    step(i + 1, b2, pending & ~sys_.cross[ui]);
    current_.pop_back();

    if ((sys_.cross[ui] & open).any()) {
      Mask p2 = pending;
      p2.set(i);
      step(i + 1, blocked, p2);
    }
  }

  const SegmentSystem& sys_;
  const EdgeVisitor& visit_;
  EdgeSet current_;
};

void check_size(int n, int ground, EnumOptions opt) {
  if (n > opt.oracle_cap)
    fail(Errc::OracleTooLarge, std::to_string(n) + " elements exceed the oracle cap of " +
                                   std::to_string(opt.oracle_cap));
  if (ground > kOracleHardLimit + 1)
    fail(Errc::OracleTooLarge, "enumeration supports at most " + std::to_string(kOracleHardLimit) + " elements");
}

}  // namespace

void enumerate_triangulations(const Chirotope& chi, const EdgeVisitor& visit, EnumOptions opt) {
  const int n = chi.size();
  check_size(n, n, opt);
  std::vector<Segment> segs;
  for (Label a = 0; a < n; ++a)
    for (Label b = a + 1; b < n; ++b) segs.push_back({a, b});
  const SegmentSystem sys = make_system(std::move(segs), [&](Segment x, Segment y) {
    return chi.at(x.a, x.b, y.a) != chi.at(x.a, x.b, y.b) && chi.at(y.a, y.b, x.a) != chi.at(y.a, y.b, x.b);
  });
  Backtracker(sys, visit).run();
}

void enumerate_weak(const RootedChirotope& rc, const EdgeVisitor& visit, EnumOptions opt) {
  const Chirotope& chi = rc.chi();
  const int n = chi.size();
  const Label u = rc.root(), v = n;
  check_size(n, n + 1, opt);

  // Orientation on X + {v}; never asked for a triple holding both u and v.
  const auto sgn = [&](Label x, Label y, Label z) {
    if (x == v) return -chi.at(y, z, u);
    if (y == v) return -chi.at(z, x, u);
    if (z == v) return -chi.at(x, y, u);
    return chi.at(x, y, z);
  };
  std::vector<Segment> segs;
  for (Label a = 0; a <= n; ++a)
    for (Label b = a + 1; b <= n; ++b)
      if (!(a == u && b == v)) segs.push_back({a, b});
  const SegmentSystem sys = make_system(std::move(segs), [&](Segment x, Segment y) {
    const bool xu = x.a == u || x.b == u, xv = x.b == v;
    const bool yu = y.a == u || y.b == u, yv = y.b == v;
    if ((xu && yv) || (xv && yu)) return false;
    return sgn(x.a, x.b, y.a) != sgn(x.a, x.b, y.b) && sgn(y.a, y.b, x.a) != sgn(y.a, y.b, x.b);
  });
  Backtracker(sys, visit).run();
}

mpz_class count_triangulations(const Chirotope& chi, EnumOptions opt) {
  mpz_class count = 0;
  enumerate_triangulations(chi, [&](const EdgeSet&) { ++count; }, opt);
  return count;
}

mpz_class count_weak(const RootedChirotope& rc, EnumOptions opt) {
  mpz_class count = 0;
  enumerate_weak(rc, [&](const EdgeSet&) { ++count; }, opt);
  return count;
}

namespace {
unsigned degree(const EdgeSet& es, Label x) {
  unsigned d = 0;
  for (const Segment& s : es) d += (s.a == x || s.b == x);
  return d;
}
}  // namespace

UnivarPoly brute_Q(const RootedChirotope& rc, EnumOptions opt) {
  UnivarPoly q;
  enumerate_triangulations(rc.chi(), [&](const EdgeSet& es) { q.add(degree(es, rc.root()), 1); }, opt);
  return q;
}

BivarPoly brute_P(const RootedChirotope& rc, EnumOptions opt) {
  BivarPoly p;
  const Label v = rc.size();
  enumerate_weak(rc, [&](const EdgeSet& es) { p.add(degree(es, rc.root()), degree(es, v), 1); }, opt);
  return p;
}

}  // namespace chiro
